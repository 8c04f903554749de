#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <string>
#include <string_view>

#include "alphamod/errors.hpp"

namespace alphamod {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Intermediate products are formed in 128-bit arithmetic and reduced; a result
/// that does not fit back into 64 bits throws DomainError instead of wrapping.
/// The denominator is always positive and gcd(num, den) == 1.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "3", "-2/7", "0.125", "1e-3" (decimal literals are converted exactly).
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

/// Uniform access to scalar properties for the templated index calculus.
template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr double tolerance = 1e-12;
    static double to_double(double v) { return v; }
    static double from_ratio(std::int64_t num, std::int64_t den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static double to_double(const Rational& v) { return v.to_double(); }
    static Rational from_ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }
};

/// Equality used for argmax ties and verdict comparisons: exact for rationals,
/// absolute tolerance 1e-12 for doubles.
template <typename Scalar>
bool nearly_equal(const Scalar& a, const Scalar& b) {
    if constexpr (ScalarTraits<Scalar>::exact) {
        return a == b;
    } else {
        const Scalar d = a - b;
        return (d < 0 ? -d : d) <= ScalarTraits<Scalar>::tolerance;
    }
}

/// a >= b with the scalar's comparison tolerance.
template <typename Scalar>
bool at_least(const Scalar& a, const Scalar& b) {
    if constexpr (ScalarTraits<Scalar>::exact) {
        return a >= b;
    } else {
        return a >= b - ScalarTraits<Scalar>::tolerance;
    }
}

/// a > b, strict beyond the scalar's comparison tolerance.
template <typename Scalar>
bool strictly_greater(const Scalar& a, const Scalar& b) {
    if constexpr (ScalarTraits<Scalar>::exact) {
        return a > b;
    } else {
        return a > b + ScalarTraits<Scalar>::tolerance;
    }
}

}  // namespace alphamod
