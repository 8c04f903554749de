#pragma once

#include <string>
#include <string_view>
#include <type_traits>

#include "alphamod/errors.hpp"
#include "alphamod/rational.hpp"

namespace alphamod {

/// One α-modulation space M^{s,α}_{p,q}(R^n).
///
/// Lebesgue and summation exponents are stored as reciprocals: rp = 1/p,
/// rq = 1/q. rp = 0 encodes p = ∞ and rp > 1 the quasi-Banach range p < 1.
/// alpha = 1 denotes the inhomogeneous Besov space B^s_{p,q}.
template <typename Scalar>
struct SpaceParams {
    Scalar rp{0};
    Scalar rq{0};
    Scalar s{0};
    Scalar alpha{0};
    int n = 1;

    void validate() const {
        if (rp < Scalar(0)) throw ParameterError("reciprocal exponent 1/p must be >= 0");
        if (rq < Scalar(0)) throw ParameterError("reciprocal exponent 1/q must be >= 0");
        if (alpha < Scalar(0) || alpha > Scalar(1)) throw ParameterError("alpha must lie in [0,1]");
        if (n < 1) throw ParameterError("dimension n must be >= 1");
    }

    friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

using ExactSpace = SpaceParams<Rational>;
using Space = SpaceParams<double>;

template <typename To, typename From>
SpaceParams<To> convert(const SpaceParams<From>& p) {
    if constexpr (std::is_same_v<To, From>) {
        return p;
    } else {
        static_assert(std::is_same_v<To, double> && std::is_same_v<From, Rational>,
                      "only Rational -> double conversion is supported");
        return {p.rp.to_double(), p.rq.to_double(), p.s.to_double(), p.alpha.to_double(), p.n};
    }
}

/// Parses an exponent "inf", "2", "1/3", "0.5" and returns its reciprocal.
Rational parse_reciprocal_exponent(std::string_view text);

/// Parses "p=2,q=inf,s=1/2,alpha=0.5,n=1". Missing keys keep their defaults
/// (p = q = 2, s = 0, alpha = 0, n = 1). Keys rp / rq set reciprocals directly.
ExactSpace parse_space(std::string_view spec);

/// Inverse of parse_space, with exponents written back as p / q.
std::string format_space(const ExactSpace& space);

/// Human form of a reciprocal exponent: rp = 0 -> "inf", rp = 1/2 -> "2".
std::string format_exponent(const Rational& reciprocal);

}  // namespace alphamod
