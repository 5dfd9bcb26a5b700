#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strands/bigint.hpp"

namespace strands {

// binom(n, k) by the multiplicative formula; every intermediate division is
// exact because C(n,i) = C(n,i-1)*(n-i+1)/i.
inline BigUInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigUInt(0);
    if (k > n - k) k = n - k;
    BigUInt c(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        c *= (n - k + i);
        c.exact_div(i);
    }
    return c;
}

// Rothe number A_n(a,b) = a/(a+bn) * C(a+bn, n).
inline BigUInt rothe(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    BigUInt r = binomial(a + b * n, n);
    r *= a;
    r.exact_div(a + b * n);  // throws if the closed form were not integral
    return r;
}

inline BigUInt catalan(std::uint64_t n) { return rothe(1, 2, n); }

// k-Catalan C_n^k = 1/(kn+1) * C(kn+1, n).
inline BigUInt k_catalan(std::uint64_t k, std::uint64_t n) { return rothe(1, k, n); }

// Number of complete exceptional sets of straight A_n.
inline BigUInt exceptional_count(std::uint64_t n) { return rothe(1, 3, n); }

namespace detail {

// Coefficients of f*g up to degree max_n.
inline std::vector<BigUInt> convolve(const std::vector<BigUInt>& f,
                                     const std::vector<BigUInt>& g,
                                     std::size_t max_n) {
    std::vector<BigUInt> h(max_n + 1);
    for (std::size_t i = 0; i <= max_n && i < f.size(); ++i)
        for (std::size_t j = 0; i + j <= max_n && j < g.size(); ++j)
            h[i + j] += f[i] * g[j];
    return h;
}

}  // namespace detail

struct RecursionReport {
    bool ok = true;
    std::string detail;
};

// A_n(1,k) satisfies the k-fold self-convolution recursion
// A_n = sum over compositions a_1+...+a_k = n-1 of prod A_{a_i}.
inline RecursionReport check_k_fold_recursion(std::uint64_t k, std::uint64_t max_n) {
    std::vector<BigUInt> a(max_n + 1);
    a[0] = BigUInt(1);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        std::vector<BigUInt> power{BigUInt(1)};
        for (std::uint64_t rep = 0; rep < k; ++rep) power = detail::convolve(power, a, n - 1);
        a[n] = power[n - 1];
    }
    for (std::uint64_t n = 0; n <= max_n; ++n)
        if (a[n] != rothe(1, k, n))
            return {false, "A_" + std::to_string(n) + "(1," + std::to_string(k) +
                               ") recursion mismatch: " + a[n].str()};
    return {true, "A_n(1," + std::to_string(k) + ") recursion matches closed form up to n=" +
                      std::to_string(max_n)};
}

// A_m(4,3) equals the 4-fold convolution of A(1,3) at index m, i.e. the
// double-sum recursion written with n = m+1.
inline RecursionReport check_four_three_recursion(std::uint64_t max_m) {
    std::vector<BigUInt> e(4 * max_m + 1);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = rothe(1, 3, i);
    for (std::uint64_t m = 0; m <= max_m; ++m) {
        BigUInt sum;
        const std::uint64_t n = m + 1;
        for (std::uint64_t k = 0; k + 1 <= n; ++k) {
            BigUInt left, right;
            for (std::uint64_t i = 0; i <= k; ++i) left += e[i] * e[k - i];
            for (std::uint64_t j = 0; j + k + 1 <= n; ++j) right += e[j] * e[n - k - j - 1];
            sum += left * right;
        }
        if (sum != rothe(4, 3, m))
            return {false, "A_" + std::to_string(m) + "(4,3) recursion mismatch: " + sum.str()};
    }
    return {true, "A_m(4,3) recursion matches closed form up to m=" + std::to_string(max_m)};
}

// g = 1 + z*g^3 coefficient extraction; must reproduce A_n(1,3).
inline RecursionReport check_generating_function(std::uint64_t max_n) {
    std::vector<BigUInt> g(max_n + 1);
    g[0] = BigUInt(1);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        auto cube = detail::convolve(detail::convolve(g, g, n - 1), g, n - 1);
        g[n] = cube[n - 1];
    }
    for (std::uint64_t n = 0; n <= max_n; ++n)
        if (g[n] != rothe(1, 3, n))
            return {false, "g=1+zg^3 coefficient mismatch at n=" + std::to_string(n)};
    return {true, "g=1+zg^3 coefficients equal A_n(1,3) up to n=" + std::to_string(max_n)};
}

}  // namespace strands
