#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "error.hpp"

namespace graphdot {

/// Exact rational on int64, kept normalized (den > 0, gcd(|num|, den) = 1).
/// Dot-product magnitudes are tiny, so int64 with __int128 cross-products is ample.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) fail(errc::invalid_input, "rational: zero denominator");
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

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool operator==(const Rational& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const noexcept { return !(*this == o); }
    bool operator<(const Rational& o) const noexcept {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator>(const Rational& o) const noexcept { return o < *this; }
    bool operator<=(const Rational& o) const noexcept { return !(o < *this); }
    bool operator>=(const Rational& o) const noexcept { return !(*this < o); }

    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
    Rational operator-() const { return Rational(-num_, den_); }

    bool positive() const noexcept { return num_ > 0; }
    bool negative() const noexcept { return num_ < 0; }

    /// Rendered as "p/q" in lowest terms, denominator always shown ("1/1", "-2/3").
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace graphdot
