#include <doctest.h>

#include "modquot/catalog.hpp"
#include "modquot/errors.hpp"
#include "modquot/selfcheck.hpp"

using namespace modquot;

TEST_CASE("minimal slopes") {
    auto s10 = slope_min(10);
    CHECK(s10.slope == Rational(7));
    CHECK(s10.provenance == SlopeProvenance::Sporadic);

    auto s23 = slope_min(23);  // 24 composite
    CHECK(s23.slope == Rational(13, 2));
    CHECK(s23.provenance == SlopeProvenance::BrillNoether);

    auto s22 = slope_min(22);  // 23 prime
    CHECK(s22.slope == Rational(145, 22));
    CHECK(s22.provenance == SlopeProvenance::GiesekerPetri);

    CHECK(slope_min(12).slope == Rational(6) + Rational(563, 642));
    CHECK(slope_min(16).slope == Rational(6) + Rational(41, 61));
    CHECK(slope_min(21).slope == Rational(6) + Rational(197, 377));
    CHECK_THROWS_AS(slope_min(3), DomainError);

    for (int g = 4; g <= 50; ++g) {
        auto e = slope_min(g);
        if ((g + 1) % 2 == 0)  // even g+1 is composite here
            CHECK(e.slope <= Rational(6) + Rational(12, g + 1));
        if ((g + 1) % 2 == 1)
            CHECK(e.slope <= Rational(6) + Rational(14L * g + 4, long(g) * g + 2L * g));
    }
}

TEST_CASE("weierstrass weight vectors") {
    auto p = weierstrass_params(23, 2);
    CHECK(p.k == 11);
    CHECK(p.r == 1);
    CHECK(p.weights == std::vector<int>{12, 11});

    auto q = weierstrass_params(20, 8);
    CHECK(q.k == 2);
    CHECK(q.r == 4);
    CHECK(q.weights == std::vector<int>{3, 3, 3, 3, 2, 2, 2, 2});

    auto r = weierstrass_params(5, 5);
    CHECK(r.k == 1);
    CHECK(r.r == 0);
    CHECK(r.weights == std::vector<int>(5, 1));

    CHECK_THROWS_AS(weierstrass_params(5, 6), DomainError);
}

TEST_CASE("weierstrass factor divisor") {
    // m = 1: the classical pointed divisor -lambda + (g(g+1)/2) omega_1
    auto w1 = weierstrass_factor(6, 1);
    CHECK(w1.cls.lambda.exact_value() == Rational(-1));
    CHECK(w1.cls.psi_block[0].exact_value() == Rational(21));  // 6*7/2, no pair correction on (g,1)
    CHECK(w1.cls.irr.is_exact_zero());

    // (5,3): weights (2,2,1); the heavy-heavy pair term before base change is -(k+1)^2 = -4
    auto w53 = weierstrass_factor(5, 3);
    CHECK(w53.pair_hh == Rational(4));
    CHECK(w53.cls.irr.is_exact_zero());
    // in the psi basis the heavy-heavy pair coefficient is -((k+1)^2 + (k+1)(k+2))
    auto key = canonical_profile(5, {2, 1}, 0, {2, 0});
    CHECK(w53.cls.profile_coeff(*key).exact_value() == Rational(-(4 + 6)));
    auto mixed = canonical_profile(5, {2, 1}, 0, {1, 1});
    CHECK(w53.cls.profile_coeff(*mixed).exact_value() == -(Rational(2) + Rational(3) + Rational(1)));
}

TEST_CASE("summed weierstrass coefficients against the projection oracle") {
    // frozen from the brute-force (S,T) summation
    auto s533 = weierstrass_summed(5, 3, 3);
    CHECK(s533.w_lambda == Rational(3));
    CHECK(s533.w_psi == Rational(7));
    CHECK(s533.w_2 == Rational(22));

    auto b533 = weierstrass_summed_bruteforce(5, 3, 3);
    CHECK(b533.w_lambda == Rational(3));
    CHECK(b533.w_psi == Rational(7));
    CHECK(b533.w_2 == Rational(22));

    // the two projections of (23,2,2); the oracle forces 144/552, consistent
    // with a(23,2) = 1/72 and b(23,2) = 23/6
    auto s23 = weierstrass_summed(23, 2, 2);
    auto b23 = weierstrass_summed_bruteforce(23, 2, 2);
    CHECK(s23.w_lambda == b23.w_lambda);
    CHECK(s23.w_psi == b23.w_psi);
    CHECK(s23.w_2 == b23.w_2);
    CHECK(b23.w_lambda == Rational(2));
    CHECK(b23.w_psi == Rational(144));
    CHECK(b23.w_2 == Rational(552));

    // r = 0: only the all-light weight assignment, one subset choice
    CHECK(weierstrass_summed(6, 5, 3).w_lambda == Rational(binomial(5, 3), Integer(1)));
}

TEST_CASE("normalized coefficients and their closed forms") {
    auto w232 = weierstrass_normalized(23, 2);
    CHECK(w232.a == Rational(1, 72));
    CHECK(*w232.b == Rational(23, 6));
    CHECK(w232.cls.lambda.exact_value() == Rational(-1, 72));  // stored sign is negative
    CHECK(w232.cls.psi_block[0].exact_value() == Rational(1));

    CHECK(weierstrass_normalized(10, 12).a == Rational(6, 5));
    CHECK(weierstrass_a(10, 12) == Rational(6, 5));
    CHECK(*weierstrass_normalized(24, 23).b == Rational(3));

    for (int g = 5; g <= 40; ++g) {
        CHECK(weierstrass_b(g, g - 1) == Rational(3));
        CHECK(weierstrass_b(g, g) == Rational(3));
    }
    // epsilon positivity: b > 3 exactly in the range 2..g-2
    for (int g = 5; g <= 24; ++g) {
        for (int n = 2; n <= g - 2; ++n) CHECK(weierstrass_b(g, n) > Rational(3));
        for (int n = g + 1; n <= g + 6; ++n) CHECK(weierstrass_b(g, n) < Rational(3));
    }
}

TEST_CASE("closed forms match the summed ratios on a grid") {
    for (int g = 2; g <= 16; ++g)
        for (int n = 1; n <= 16; ++n) {
            auto sums = weierstrass_summed(g, n, std::min(g, n));
            CHECK(weierstrass_a(g, n) * sums.w_psi == sums.w_lambda);
            if (n >= 2) CHECK(weierstrass_b(g, n) * sums.w_psi == sums.w_2);
        }
}

TEST_CASE("catalog entries") {
    auto t24 = catalog_entry("T", 24);
    CHECK(t24.space.n == 23);
    CHECK(t24.a == Rational(-17, 22));
    CHECK(t24.b_irr == Rational(1, 44));
    CHECK(t24.epsilon_part() == Rational(1, 44));

    auto f = catalog_entry("F", 20, 8);
    CHECK(f.space.n == 4);
    CHECK(f.a == Rational(103, 27));
    CHECK(*f.b_pair == Rational(3) + Rational(10, 9));
    CHECK(f.b_irr == Rational(16, 27));

    auto ft = catalog_entry("Ftilde", 22, 9);
    CHECK(ft.space.n == 5);
    CHECK(*ft.b_pair == Rational(3) + Rational(8, 13));
    CHECK(ft.b_irr == Rational(45, 60));

    CHECK_THROWS_AS(catalog_entry("F", 20, 10), DomainError);   // n = 0
    CHECK_THROWS_AS(catalog_entry("Ftilde", 20, 10), DomainError);
    CHECK_THROWS_AS(catalog_entry("T", 2), DomainError);
    CHECK_THROWS_AS(catalog_entry("X", 20, 1), DomainError);
}

TEST_CASE("every catalog entry normalizes psi to one and declares its tails") {
    for (const CatalogEntry& e :
         {catalog_entry("T", 24), catalog_entry("F", 20, 8), catalog_entry("Ftilde", 22, 9),
          weierstrass_entry(23, 2)}) {
        auto cls = e.single_block_class();
        CHECK(cls.psi_block[0].exact_value() == Rational(1));
        CHECK(cls.lambda.exact_value() == e.a);
        if (e.b_pair) {
            auto pair = canonical_profile(e.space.g, {e.space.n}, 0, {2});
            CHECK(cls.profile_coeff(*pair).exact_value() == -*e.b_pair);
        }
        // subsets of size >= 3 and higher-genus families are bounded, not exact
        if (e.space.n >= 3) {
            auto triple = canonical_profile(e.space.g, {e.space.n}, 0, {3});
            Rational expect = e.kind == CatalogEntry::Kind::Weierstrass ? Rational(-3) : Rational(-2);
            CHECK(cls.profile_coeff(*triple).hi().value == expect);
            CHECK(cls.profile_coeff(*triple).lo().kind == Bound::NegInf);
        }
    }
}

TEST_CASE("ambient weierstrass class is block-blind") {
    auto part = BlockPartition::consecutive({2, 2});
    auto w = ambient_weierstrass(23, part);
    auto b = *weierstrass_normalized(23, 4).b;
    CHECK(w.profile_coeff(*canonical_profile(23, {2, 2}, 0, {1, 1})).exact_value() == -b);
    CHECK(w.profile_coeff(*canonical_profile(23, {2, 2}, 0, {2, 0})).exact_value() == -b);
    CHECK(w.profile_coeff(*canonical_profile(23, {2, 2}, 0, {2, 1})).hi().value == Rational(-3));
}

TEST_CASE("slope pullback carries the declared tail assumption") {
    auto part = BlockPartition::consecutive({2, 2});
    auto d = ambient_slope_pullback(slope_min(21), part, 21);
    CHECK(d.lambda.exact_value() == slope_min(21).slope);
    CHECK(d.irr.exact_value() == Rational(-1));
    auto key = canonical_profile(21, {2, 2}, 1, {0, 0});
    CHECK(d.profile_coeff(*key).hi().value == Rational(-1));
    CHECK(d.bound_tags.at(*key).count(kTagSlopeTail) == 1);
    CHECK(d.bound_tags.at(*key).count(kTagSporadicTail) == 1);  // slope(21) is sporadic
}
