#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace strands {

// Exact rational on 64-bit words. All matrices in this project are tiny
// 0/1 incidence matrices, so reduced fractions stay far below the overflow
// guard; the guard turns a silent wrap into a hard failure.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }

    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rat overflow");
        return r;
    }
    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rat overflow");
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                   checked_mul(a.den, b.den));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)),
                   checked_mul(a.den, b.den));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
};

using RatMatrix = std::vector<std::vector<Rat>>;

// Row rank by Gaussian elimination over the rationals.
inline int matrix_rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        const Rat inv = Rat(1) / m[pivot_row][c];
        for (std::size_t j = c; j < cols; ++j) m[pivot_row][j] = m[pivot_row][j] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][c].is_zero()) continue;
            const Rat f = m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[r][j] = m[r][j] - f * m[pivot_row][j];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

// Dimension of the kernel of m (as a map out of a cols-dimensional space).
inline int kernel_dim(const RatMatrix& m, int cols) {
    if (m.empty()) return cols;
    return cols - matrix_rank(m);
}

}  // namespace strands
