#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strands/rational.hpp"

namespace strands {

enum class QuiverKind { TypeA, TypeATilde };

using Sign = char;  // '+' or '-'

struct OrientationVector {
    QuiverKind kind = QuiverKind::TypeA;
    std::vector<Sign> eps;  // epsilon_0 .. epsilon_n
};

struct Arrow {
    int label = 0;  // alpha_label
    int source = 0;
    int target = 0;
};

// Quivers of type A_n (vertices 1..n, arrows alpha_1..alpha_{n-1}) and
// A~_n (vertices 1..n+1, arrows alpha_1..alpha_n plus alpha_0 joining
// n+1 and 1). Arrow directions come from the orientation vector:
// alpha_i points i -> i+1 when eps_i = '+', and alpha_0 points
// n+1 -> 1 when eps_0 = '+'.
struct Quiver {
    QuiverKind kind = QuiverKind::TypeA;
    std::vector<Sign> eps;

    int vertex_count() const {
        return kind == QuiverKind::TypeA ? static_cast<int>(eps.size()) - 1
                                         : static_cast<int>(eps.size());
    }

    // Period of the strand cover: 0 for type A (no translates).
    int period() const { return kind == QuiverKind::TypeATilde ? vertex_count() : 0; }

    bool straight() const {
        const int n = static_cast<int>(eps.size()) - 1;
        if (kind == QuiverKind::TypeA) {
            for (int i = 1; i <= n - 1; ++i)
                if (eps[i] != '+') return false;
            return true;
        }
        if (eps[0] != '-') return false;
        for (int i = 1; i <= n; ++i)
            if (eps[i] != '+') return false;
        return true;
    }

    // Sign at a cover point. For A~ the cover is periodic; points congruent
    // to 0 mod |Q_0| carry eps_0 (the inner boundary for straight orientation).
    Sign sign_at(long x) const {
        if (kind == QuiverKind::TypeA) {
            if (x < 0 || x >= static_cast<long>(eps.size()))
                throw std::out_of_range("sign_at: point outside the marked line");
            return eps[x];
        }
        const int N = vertex_count();
        long r = x % N;
        if (r < 0) r += N;
        return eps[r];
    }

    // Vertex carried by cover point x (1-based; points = 0 mod N are vertex N).
    int vertex_at(long x) const {
        if (kind == QuiverKind::TypeA) return static_cast<int>(x);
        const int N = vertex_count();
        long r = x % N;
        if (r < 0) r += N;
        return r == 0 ? N : static_cast<int>(r);
    }

    std::vector<Arrow> arrows() const {
        std::vector<Arrow> out;
        const int n = static_cast<int>(eps.size()) - 1;
        if (kind == QuiverKind::TypeA) {
            for (int i = 1; i <= n - 1; ++i)
                out.push_back(eps[i] == '+' ? Arrow{i, i, i + 1} : Arrow{i, i + 1, i});
        } else {
            out.push_back(eps[0] == '+' ? Arrow{0, n + 1, 1} : Arrow{0, 1, n + 1});
            for (int i = 1; i <= n; ++i)
                out.push_back(eps[i] == '+' ? Arrow{i, i, i + 1} : Arrow{i, i + 1, i});
        }
        return out;
    }
};

inline Quiver build_quiver(const OrientationVector& ov) {
    const int n = static_cast<int>(ov.eps.size()) - 1;
    if (n < 1) throw std::invalid_argument("orientation vector too short");
    for (Sign s : ov.eps)
        if (s != '+' && s != '-') throw std::invalid_argument("orientation entries must be +/-");
    if (ov.kind == QuiverKind::TypeATilde) {
        bool all_equal = true;
        for (Sign s : ov.eps)
            if (s != ov.eps[0]) all_equal = false;
        if (all_equal)
            throw std::invalid_argument(
                "type A~ needs mixed signs (equal signs give an oriented cycle)");
    }
    return Quiver{ov.kind, ov.eps};
}

inline Quiver straight_a(int n) {
    return Quiver{QuiverKind::TypeA, std::vector<Sign>(n + 1, '+')};
}

inline Quiver straight_a_tilde(int n) {
    std::vector<Sign> e(n + 1, '+');
    e[0] = '-';
    return Quiver{QuiverKind::TypeATilde, e};
}

enum class ComponentClass { Preprojective, Preinjective, LeftRegular, RightRegular, Homogeneous };

inline const char* to_string(ComponentClass c) {
    switch (c) {
        case ComponentClass::Preprojective: return "preprojective";
        case ComponentClass::Preinjective: return "preinjective";
        case ComponentClass::LeftRegular: return "left-regular";
        case ComponentClass::RightRegular: return "right-regular";
        case ComponentClass::Homogeneous: return "homogeneous";
    }
    return "?";
}

// A string module, stored as its fundamental-lift interval [lo, hi] on the
// cover. The walk visits points lo+1 .. hi, one visit per point, moving in
// the counterclockwise direction. For type A this is M_{lo,hi}; for A~ the
// canonical window depends on the component class (lo in [1,N-1] for
// preprojectives and left regulars, hi in [1,N] for the rest).
//
// Band modules carry no interval; they exist only so classify_component can
// name the homogeneous class.
struct StringModule {
    long lo = 0;
    long hi = 1;
    bool band = false;

    long length() const { return hi - lo; }

    friend bool operator==(const StringModule& a, const StringModule& b) {
        return a.lo == b.lo && a.hi == b.hi && a.band == b.band;
    }
    friend bool operator<(const StringModule& a, const StringModule& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        if (a.hi != b.hi) return a.hi < b.hi;
        return a.band < b.band;
    }
};

inline StringModule interval_module(long x, long y) {
    if (!(x < y)) throw std::invalid_argument("interval module needs x < y");
    return StringModule{x, y, false};
}

inline StringModule band_module() { return StringModule{0, 0, true}; }

inline ComponentClass classify_component(const Quiver& q, const StringModule& m) {
    if (m.band) return ComponentClass::Homogeneous;
    if (q.kind != QuiverKind::TypeATilde)
        throw std::invalid_argument("component classes exist for type A~ only");
    const Sign left = q.sign_at(m.lo), right = q.sign_at(m.hi);
    if (left == '+' && right == '-') return ComponentClass::Preprojective;
    if (left == '-' && right == '+') return ComponentClass::Preinjective;
    if (left == '+' && right == '+') return ComponentClass::LeftRegular;
    return ComponentClass::RightRegular;
}

// Slide an arbitrary cover interval into the canonical window of its class.
inline StringModule canonical_module(const Quiver& q, long lo, long hi) {
    if (!(lo < hi)) throw std::invalid_argument("empty walk");
    if (q.kind == QuiverKind::TypeA) {
        if (lo < 0 || hi > q.vertex_count())
            throw std::out_of_range("interval outside the type A line");
        return StringModule{lo, hi, false};
    }
    const int N = q.vertex_count();
    StringModule m{lo, hi, false};
    const ComponentClass c = classify_component(q, m);
    long shift = 0;
    if (c == ComponentClass::Preprojective || c == ComponentClass::LeftRegular) {
        long r = lo % N;
        if (r < 0) r += N;
        if (r == 0) r = N;  // cannot happen for straight orientation
        shift = r - lo;
    } else {
        long r = hi % N;
        if (r <= 0) r += N;  // end vertex representative in [1, N]
        shift = r - hi;
    }
    return StringModule{lo + shift, hi + shift, false};
}

// String module from the paper's ij_k data: walk of length k starting at
// vertex i+1 (i is a vertex label 1..N, taken mod N).
inline StringModule module_from_ijk(const Quiver& q, int i, long k) {
    if (k < 1) throw std::invalid_argument("string length must be >= 1");
    return canonical_module(q, i, i + k);
}

struct WindingForm {
    int i = 0, j = 0;
    long l = 0;
};

// (i,j;l) name: l full counterclockwise loops then on to j. l is maximal.
inline WindingForm winding_form(const Quiver& q, const StringModule& m) {
    if (q.kind != QuiverKind::TypeATilde || m.band)
        throw std::invalid_argument("winding form is for A~ string modules");
    const int N = q.vertex_count();
    return WindingForm{q.vertex_at(m.lo), q.vertex_at(m.hi), (m.length() - 1) / N};
}

inline StringModule module_from_winding(const Quiver& q, int i, int j, long l) {
    if (q.kind != QuiverKind::TypeATilde)
        throw std::invalid_argument("winding form is for A~ string modules");
    if (l < 0) throw std::invalid_argument("winding l must be >= 0");
    const int N = q.vertex_count();
    long r = ((static_cast<long>(j) - i - 1) % N + N) % N;
    return module_from_ijk(q, i, l * N + r + 1);
}

struct IjkForm {
    int i = 0, j = 0;
    long k = 0;
};

inline IjkForm ijk_form(const Quiver& q, const StringModule& m) {
    if (m.band) throw std::invalid_argument("band modules have no ij_k name");
    return IjkForm{q.vertex_at(m.lo), q.vertex_at(m.hi), m.length()};
}

inline std::vector<int> dimension_vector(const Quiver& q, const StringModule& m) {
    if (m.band) throw std::invalid_argument("band modules are out of scope for realize");
    std::vector<int> dims(q.vertex_count(), 0);
    for (long x = m.lo + 1; x <= m.hi; ++x) ++dims[q.vertex_at(x) - 1];
    return dims;
}

struct Representation {
    std::vector<int> dims;            // per vertex, 1-based vertices at index v-1
    std::vector<RatMatrix> matrices;  // aligned with Quiver::arrows()
};

// Walk step between cover points x and x+1: which arrow, and does the arrow
// point rightward (in the counterclockwise walk direction)?
struct WalkStep {
    int arrow_index = 0;  // index into Quiver::arrows()
    bool rightward = true;
};

inline std::vector<WalkStep> walk_steps(const Quiver& q, const StringModule& m) {
    if (m.band) throw std::invalid_argument("band modules are out of scope");
    std::vector<WalkStep> steps;
    const auto arrows = q.arrows();
    for (long x = m.lo + 1; x < m.hi; ++x) {
        int slot;
        if (q.kind == QuiverKind::TypeA) {
            slot = static_cast<int>(x);
        } else {
            const int N = q.vertex_count();
            long r = x % N;
            if (r < 0) r += N;
            slot = static_cast<int>(r);
        }
        int idx = -1;
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].label == slot) idx = static_cast<int>(a);
        assert(idx >= 0);
        steps.push_back(WalkStep{idx, q.eps[slot] == '+'});
    }
    return steps;
}

// Explicit matrices of the walk, drawn with the head of each arrow at the
// bottom: basis vectors at a vertex are its walk visits in reverse order.
inline Representation realize(const Quiver& q, const StringModule& m) {
    if (m.band) throw std::invalid_argument("realize rejects band modules");
    const auto arrows = q.arrows();
    Representation rep;
    rep.dims = dimension_vector(q, m);

    // basis index of the visit at cover point x within its vertex
    auto basis_index = [&](long x) {
        int idx = 0;
        for (long y = x + 1; y <= m.hi; ++y)
            if (q.vertex_at(y) == q.vertex_at(x)) ++idx;
        return idx;
    };

    rep.matrices.resize(arrows.size());
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int rows = rep.dims[arrows[a].target - 1];
        const int cols = rep.dims[arrows[a].source - 1];
        rep.matrices[a].assign(rows, std::vector<Rat>(cols, Rat(0)));
    }
    const auto steps = walk_steps(q, m);
    for (std::size_t s = 0; s < steps.size(); ++s) {
        const long x = m.lo + 1 + static_cast<long>(s);  // step joins x and x+1
        const auto& st = steps[s];
        if (st.rightward)
            rep.matrices[st.arrow_index][basis_index(x + 1)][basis_index(x)] = Rat(1);
        else
            rep.matrices[st.arrow_index][basis_index(x)][basis_index(x + 1)] = Rat(1);
    }
    return rep;
}

inline long euler_form(const Quiver& q, const std::vector<int>& x, const std::vector<int>& y) {
    const std::size_t n = q.vertex_count();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("euler_form: dimension vector length mismatch");
    long v = 0;
    for (std::size_t i = 0; i < n; ++i) v += static_cast<long>(x[i]) * y[i];
    for (const Arrow& a : q.arrows()) v -= static_cast<long>(x[a.source - 1]) * y[a.target - 1];
    return v;
}

inline std::string module_name(const Quiver& q, const StringModule& m) {
    if (m.band) return "band";
    if (q.kind == QuiverKind::TypeA)
        return "M_{" + std::to_string(m.lo) + "," + std::to_string(m.hi) + "}";
    const auto f = ijk_form(q, m);
    return std::to_string(f.i) + std::to_string(f.j) + "_" + std::to_string(f.k);
}

// P_i / I_j / S_v names where applicable, for cluster displays.
inline std::string pretty_name(const Quiver& q, const StringModule& m) {
    if (m.band) return "band";
    const int N = q.vertex_count();
    if (q.kind == QuiverKind::TypeA) {
        if (m.lo == 0 && m.hi == N) return "P_1";
        if (m.hi - m.lo == 1) return "S_" + std::to_string(m.hi);
        if (m.lo == 0) return "I_" + std::to_string(m.hi);
        if (m.hi == N) return "P_" + std::to_string(m.lo + 1);
        return module_name(q, m);
    }
    if (!q.straight()) return module_name(q, m);
    if (m.length() == 1) {
        const int v = q.vertex_at(m.hi);
        if (v == N) return "P_" + std::to_string(N);
        if (v == 1) return "I_1";
        return "S_" + std::to_string(v);
    }
    if (m.lo == N - 1 && m.hi == 2 * N) return "P_1";
    if (m.hi == N && m.lo >= 1) return "P_" + std::to_string(m.lo + 1);
    if (m.lo == 0 && m.hi <= N - 1) return "I_" + std::to_string(m.hi);
    return module_name(q, m);
}

}  // namespace strands
