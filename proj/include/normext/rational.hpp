#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <iosfwd>

namespace normext {

/// Exact rational number on a checked 64-bit numerator/denominator.
///
/// Invariants: den > 0, gcd(|num|, den) = 1, zero is 0/1. Intermediate
/// products are evaluated in 128-bit arithmetic; results whose reduced
/// numerator or denominator do not fit in 64 bits throw overflow_error.
/// Value magnitudes in this project are tiny (norm tables, matching
/// potentials), so the check is a tripwire, not an expected path.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// "7", "-3/4". Denominator omitted when 1.
    std::string str() const;

    /// Parses "n" or "p/q" with optional sign. Throws std::invalid_argument
    /// on malformed or zero-denominator input.
    static Rational parse(const std::string& text);

    /// Exact conversion for reporting; not used in any exact computation.
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
    static Rational make_reduced(__int128 n, __int128 d);
    std::int64_t num_;
    std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace normext
