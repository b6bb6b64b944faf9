#include <doctest.h>

#include "modquot/divisor.hpp"
#include "modquot/errors.hpp"

#include <random>

using namespace modquot;

TEST_CASE("boundary canonicalization identifies (i,S) with (g-i,S^c)") {
    // (g=5, n=3, i=4, S={1}) -> (1, {2,3})
    auto a = canonical_boundary(5, 3, 4, subset_of({1}));
    REQUIRE(a);
    CHECK(a->i == 1);
    CHECK(a->set == subset_of({2, 3}));

    // a genus-0 side with one point is the zero class
    CHECK(!canonical_boundary(5, 3, 0, subset_of({1})));
    CHECK(!canonical_boundary(5, 3, 0, 0));
    CHECK(!canonical_boundary(5, 3, 5, subset_of({2, 3})));  // flips to (0, {1})

    // already canonical stays put
    auto c = canonical_boundary(5, 3, 2, subset_of({1, 2}));
    REQUIRE(c);
    CHECK(c->i == 2);
    CHECK(c->set == subset_of({1, 2}));

    CHECK_THROWS_AS(canonical_boundary(5, 3, 6, 0), DomainError);
    CHECK_THROWS_AS(canonical_boundary(5, 3, 1, subset_of({4})), DomainError);
}

TEST_CASE("canonicalization is an involution-respecting projection") {
    for (int g = 2; g <= 8; ++g)
        for (int n = 0; n <= 6; ++n)
            for (int i = 0; i <= g; ++i)
                for (Subset s = 0;; ++s) {
                    auto a = canonical_boundary(g, n, i, s);
                    auto b = canonical_boundary(g, n, g - i, complement(s, n));
                    CHECK(a == b);
                    if (a) CHECK(canonical_boundary(g, n, a->i, a->set) == a);
                    if (s == full_subset(n)) break;
                }
}

TEST_CASE("even-genus middle index tie-break keeps label 1") {
    auto a = canonical_boundary(4, 3, 2, subset_of({2}));
    REQUIRE(a);
    CHECK(a->set == subset_of({1, 3}));
    auto b = canonical_boundary(4, 3, 2, subset_of({1, 2}));
    REQUIRE(b);
    CHECK(b->set == subset_of({1, 2}));
    // n = 0 keeps the middle index as-is
    auto c = canonical_boundary(4, 0, 2, 0);
    REQUIRE(c);
    CHECK(c->i == 2);
    CHECK(c->set == 0);
}

TEST_CASE("linear_combine is exact and algebraic") {
    SpaceId space{5, 3};
    auto x = Rational(2) * lambda_class(space) + psi_class(space, 1);

    CHECK(linear_combine({{Rational(1), x}, {Rational(-1), x}}).is_zero());
    CHECK(linear_combine({{Rational(2), lambda_class(space)}, {Rational(3), lambda_class(space)}})
              .lambda == Rational(5));
    CHECK(linear_combine({{Rational(1, 3), Rational(3) * psi_class(space, 1)}}) ==
          psi_class(space, 1));

    FullDivisorClass other(SpaceId{5, 4});
    CHECK_THROWS_AS(linear_combine({{Rational(1), x}, {Rational(1), other}}), DomainError);

    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-9, 9);
    auto random_class = [&]() {
        FullDivisorClass r(space);
        r.lambda = Rational(d(rng), 4);
        r.irr = Rational(d(rng));
        for (int l = 1; l <= 3; ++l) r.add_psi(l, Rational(d(rng), 3));
        for (const auto& b : all_boundary_indices(space))
            if (d(rng) > 4) r.add_boundary(b.i, b.set, Rational(d(rng)));
        return r;
    };
    for (int t = 0; t < 40; ++t) {
        auto a = random_class(), b = random_class(), c = random_class();
        Rational s(d(rng), 7);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(s * (a + b) == s * a + s * b);
    }
}

TEST_CASE("zero-dropping keeps representations canonical") {
    SpaceId space{5, 3};
    FullDivisorClass x(space);
    x.add_boundary(1, subset_of({1}), Rational(2));
    x.add_boundary(4, subset_of({2, 3}), Rational(-2));  // same class after canonicalization
    CHECK(x.is_zero());
    x.add_psi(2, Rational(1, 2));
    x.add_psi(2, Rational(-1, 2));
    CHECK(x.psi.empty());
    // accumulating on the zero class is a no-op
    x.add_boundary(0, subset_of({3}), Rational(5));
    CHECK(x.is_zero());
}

TEST_CASE("canonical class has 13 lambda + psi - 2 delta") {
    auto k = canonical_class(SpaceId{5, 2});
    CHECK(k.lambda == Rational(13));
    CHECK(k.psi_coeff(1) == Rational(1));
    CHECK(k.psi_coeff(2) == Rational(1));
    CHECK(k.irr == Rational(-2));
    CHECK(k.boundary_coeff(0, subset_of({1, 2})) == Rational(-2));
    for (const auto& b : all_boundary_indices(SpaceId{5, 2}))
        CHECK(k.boundary_coeff(b) == Rational(-2));
}
