#include <doctest.h>

#include <random>
#include <sstream>

#include "alphamod/params.hpp"
#include "alphamod/rational.hpp"

using alphamod::Rational;

TEST_CASE("rational arithmetic stays reduced") {
    const Rational a(6, -8);
    CHECK(a.num() == -3);
    CHECK(a.den() == 4);
    CHECK(a + Rational(3, 4) == Rational(0));
    CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(5).str() == "5");
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-2/7") == Rational(-2, 7));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("1e-3") == Rational(1, 1000));
    CHECK(Rational::parse("2.5e1") == Rational(25));
    CHECK_THROWS_AS(Rational::parse("abc"), alphamod::ParameterError);
    CHECK_THROWS_AS(Rational::parse("1/0"), alphamod::Error);
}

TEST_CASE("overflow is reported instead of wrapping") {
    const Rational big(std::int64_t(1) << 62);
    CHECK_THROWS_AS(big * big, alphamod::DomainError);
}

TEST_CASE("field identities on random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
    for (int i = 0; i < 2000; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (b != Rational(0)) CHECK((a / b) * b == a);
        CHECK(std::abs((a + b).to_double() - (a.to_double() + b.to_double())) < 1e-12);
    }
}

TEST_CASE("space specs parse and round-trip") {
    const auto s = alphamod::parse_space("p=4,q=inf,s=1/2,alpha=0.25,n=2");
    CHECK(s.rp == Rational(1, 4));
    CHECK(s.rq == Rational(0));
    CHECK(s.s == Rational(1, 2));
    CHECK(s.alpha == Rational(1, 4));
    CHECK(s.n == 2);
    CHECK(alphamod::parse_space(alphamod::format_space(s)) == s);

    const auto d = alphamod::parse_space("");
    CHECK(d.rp == Rational(1, 2));
    CHECK(d.rq == Rational(1, 2));
    CHECK(d.n == 1);

    CHECK(alphamod::parse_space("rp=3/2").rp == Rational(3, 2));
    CHECK(alphamod::format_exponent(Rational(0)) == "inf");
    CHECK(alphamod::format_exponent(Rational(2, 3)) == "3/2");
    CHECK_THROWS_AS(alphamod::parse_space("p=0"), alphamod::ParameterError);
    CHECK_THROWS_AS(alphamod::parse_space("alpha=2"), alphamod::ParameterError);
    CHECK_THROWS_AS(alphamod::parse_space("bogus=1"), alphamod::ParameterError);
    CHECK_THROWS_AS(alphamod::parse_space("p"), alphamod::ParameterError);
}
