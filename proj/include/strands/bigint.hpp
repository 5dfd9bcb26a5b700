#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace strands {

// Unsigned arbitrary-precision integer, base 1e9 limbs.
// Supports exactly what the counting formulas need: +, *, small division
// with remainder check, comparison, decimal printing.
class BigUInt {
  public:
    BigUInt() = default;
    BigUInt(unsigned long long v) {
        while (v) { limbs_.push_back(static_cast<std::uint32_t>(v % kBase)); v /= kBase; }
    }

    bool is_zero() const { return limbs_.empty(); }

    friend bool operator==(const BigUInt& a, const BigUInt& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUInt& a, const BigUInt& b) { return !(a == b); }
    friend bool operator<(const BigUInt& a, const BigUInt& b) {
        if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
        return false;
    }

    BigUInt& operator+=(const BigUInt& o) {
        std::uint64_t carry = 0;
        const std::size_t n = std::max(limbs_.size(), o.limbs_.size());
        limbs_.resize(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint32_t>(s % kBase);
            carry = s / kBase;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }
    friend BigUInt operator+(BigUInt a, const BigUInt& b) { return a += b; }

    friend BigUInt operator*(const BigUInt& a, const BigUInt& b) {
        if (a.is_zero() || b.is_zero()) return BigUInt();
        BigUInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size() || carry; ++j) {
                std::uint64_t cur = r.limbs_[i + j] + carry;
                if (j < b.limbs_.size())
                    cur += static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
        }
        r.trim();
        return r;
    }

    BigUInt& operator*=(std::uint64_t m) {
        if (m == 0) { limbs_.clear(); return *this; }
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t cur = limb * m + carry;
            limb = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry) { limbs_.push_back(static_cast<std::uint32_t>(carry % kBase)); carry /= kBase; }
        return *this;
    }

    // Exact division by a small integer; throws if a remainder is left.
    BigUInt& exact_div(std::uint64_t d) {
        if (d == 0) throw std::domain_error("BigUInt: division by zero");
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = rem * kBase + limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        if (rem != 0) throw std::domain_error("BigUInt: division not exact");
        trim();
        return *this;
    }

    std::string str() const {
        if (limbs_.empty()) return "0";
        std::string s = std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    unsigned long long to_ull() const {
        unsigned long long v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (v > (~0ULL - limbs_[i]) / kBase) throw std::overflow_error("BigUInt::to_ull");
            v = v * kBase + limbs_[i];
        }
        return v;
    }

  private:
    static constexpr std::uint64_t kBase = 1000000000;
    std::vector<std::uint32_t> limbs_;  // little-endian

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
};

}  // namespace strands
