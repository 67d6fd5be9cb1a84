#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "qchar/errors.hpp"

namespace qchar {

/// An exponent entry: a reduced fraction num/den with den > 0. Integer and
/// half-integer exponents are the common case; the variant character rings
/// use denominators up to the coset denominator bound.
class Frac {
  public:
    constexpr Frac() = default;
    constexpr Frac(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers

    Frac(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw DomainError("exponent denominator is zero");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_even_integer() const { return den_ == 1 && num_ % 2 == 0; }

    Frac operator-() const {
        Frac r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        const __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        const __int128 den = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(num, den);
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }

    Frac& operator+=(const Frac& o) { return *this = *this + o; }

    friend bool operator==(const Frac&, const Frac&) = default;

    friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::int64_t floor() const {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }

    /// Fractional part in [0, 1); the coset class of the exponent.
    Frac frac_part() const {
        Frac r;
        r.num_ = num_ - floor() * den_;
        r.den_ = den_;
        return r;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    static Frac from_wide(__int128 num, __int128 den) {
        constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
        if (num < lo || num > hi || den < lo || den > hi) throw DomainError("exponent overflow");
        return Frac(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace qchar
