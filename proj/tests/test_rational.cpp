#include <doctest.h>

#include "modquot/interval.hpp"
#include "modquot/rational.hpp"

#include <random>

using namespace modquot;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse and print round trip") {
    CHECK(Rational::parse("13/2") == Rational(13, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(!Rational::parse("1.5"));
    CHECK(!Rational::parse(""));
    CHECK(!Rational::parse("a/b"));
    CHECK(Rational(13, 2).str() == "13/2");
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK(Rational(5).str() == "5");

    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        long den = d(rng);
        if (den == 0) den = 1;
        Rational q(d(rng), den);
        CHECK(Rational::parse(q.str()) == q);
    }
}

TEST_CASE("field arithmetic is exact") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 300; ++i) {
        long bd = d(rng), cd = d(rng);
        Rational a(d(rng), 7), b(d(rng), bd ? bd : 3), c(d(rng), cd ? cd : 11);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
    CHECK(positive_part(Rational(-3, 2)) == Rational(0));
    CHECK(positive_part(Rational(3, 2)) == Rational(3, 2));
}

TEST_CASE("binomials") {
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, 8) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(40, 20) == Integer("137846528820"));
}

TEST_CASE("interval arithmetic tracks exactness and bounds") {
    auto exact = CoefInterval::exact(Rational(3, 2));
    CHECK(exact.is_exact());
    CHECK(exact.exact_value() == Rational(3, 2));

    auto bounded = CoefInterval::at_most(Rational(-2));
    CHECK(!bounded.is_exact());
    CHECK(bounded.lo().kind == Bound::NegInf);
    CHECK(bounded.hi().value == Rational(-2));

    // [-inf,-2] scaled by -1/2 becomes [1, +inf]
    auto flipped = bounded.scaled(Rational(-1, 2));
    CHECK(flipped.lo().value == Rational(1));
    CHECK(flipped.hi().kind == Bound::PosInf);
    CHECK(flipped.nonnegative());

    auto sum = exact + bounded;
    CHECK(sum.lo().kind == Bound::NegInf);
    CHECK(sum.hi().value == Rational(-1, 2));
    CHECK(!sum.nonnegative());

    CHECK(bounded.scaled(Rational(0)).is_exact_zero());
    CHECK((exact + exact).exact_value() == Rational(3));
    CHECK(bounded.lo().str() == "-inf");
    CHECK(flipped.hi().str() == "+inf");
}
