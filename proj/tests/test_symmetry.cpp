#include <doctest.h>

#include "modquot/errors.hpp"
#include "modquot/profile.hpp"

#include <numeric>
#include <random>

using namespace modquot;

TEST_CASE("parse_group grammar") {
    auto bp = parse_group("prod:3,3,2", 8);
    CHECK(bp.kind == GroupKind::BlockProduct);
    CHECK(bp.block_sizes == std::vector<int>{3, 3, 2});

    auto alt = parse_group("An", 5);
    CHECK(alt.kind == GroupKind::Alternating);
    CHECK(parse_group("S12", 12).kind == GroupKind::FullSymmetric);
    CHECK(parse_group("trivial", 3).kind == GroupKind::Trivial);

    auto gen = parse_group("gen:(1 2)(3 4)", 4);
    CHECK(gen.kind == GroupKind::Generated);
    CHECK(group_order(gen) == 2);
    CHECK(group_order(parse_group("gen:(1 2); (3 4)", 4)) == 4);

    CHECK_THROWS_AS(parse_group("prod:3,3", 8), ParseError);
    CHECK_THROWS_AS(parse_group("S11", 12), ParseError);
    CHECK_THROWS_AS(parse_group("gen:(1 9)", 4), ParseError);
    CHECK_THROWS_AS(parse_group("gen:(1 1 2)", 4), ParseError);
    CHECK_THROWS_AS(parse_group("nonsense", 4), ParseError);
}

TEST_CASE("transpositions of the structured kinds") {
    auto ts = transpositions(GroupSpec::block_product({3, 2}));
    CHECK(ts.size() == 4);  // C(3,2) + C(2,2)
    CHECK(ts.count({1, 2}) == 1);
    CHECK(ts.count({1, 3}) == 1);
    CHECK(ts.count({2, 3}) == 1);
    CHECK(ts.count({4, 5}) == 1);
    CHECK(ts.count({3, 4}) == 0);

    CHECK(transpositions(GroupSpec::alternating(7)).empty());
    CHECK(transpositions(GroupSpec::trivial(5)).empty());
    CHECK(transpositions(parse_group("gen:(1 2)(3 4)", 4)).empty());
    CHECK(transpositions(GroupSpec::full_symmetric(5)).size() == 10);
}

TEST_CASE("generated-group transpositions agree with a brute-force scan") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + trial % 4;
        std::vector<Permutation> gens;
        for (int j = 0; j < 2; ++j) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            std::shuffle(img.begin(), img.end(), rng);
            gens.push_back(Permutation{img});
        }
        auto g = GroupSpec::generated(n, gens);
        auto fast = transpositions(g);
        std::set<std::pair<int, int>> slow;
        for (const auto& p : enumerate_elements(g))
            if (auto t = p.as_transposition()) slow.insert(*t);
        CHECK(fast == slow);
    }
}

TEST_CASE("enumeration cap raises GroupTooLarge") {
    CHECK_THROWS_AS(enumerate_elements(GroupSpec::full_symmetric(10), 1000), GroupTooLarge);
    std::vector<Permutation> gens;
    std::vector<int> img{1, 2, 3, 4, 5, 6, 7, 8, 9, 0};
    gens.push_back(Permutation{img});
    CHECK_THROWS_AS(transpositions(GroupSpec::generated(10, gens), 5), GroupTooLarge);
}

TEST_CASE("orbit partitions") {
    CHECK(orbit_partition(parse_group("gen:(1 2 3)", 5)).sizes() == std::vector<int>{3, 1, 1});
    CHECK(orbit_partition(GroupSpec::full_symmetric(4)).sizes() == std::vector<int>{4});
    CHECK(orbit_partition(GroupSpec::trivial(3)).sizes() == std::vector<int>{1, 1, 1});
    auto blocks = orbit_partition(parse_group("gen:(2 4); (1 5)", 5)).blocks;
    CHECK(blocks == std::vector<std::vector<int>>{{1, 5}, {2, 4}, {3}});
}

TEST_CASE("profile canonicalization and orbit sizes") {
    // (i, c) ~ (g - i, sizes - c)
    auto p = canonical_profile(5, {2, 2}, 4, {0, 1});
    REQUIRE(p);
    CHECK(p->i == 1);
    CHECK(p->counts == std::vector<int>{2, 1});
    CHECK(!canonical_profile(5, {2, 2}, 0, {1, 0}));
    CHECK(!canonical_profile(5, {2, 2}, 5, {2, 1}));  // flips to (0, {0,1})

    // tie-break at i = g/2: lexicographically larger counts
    auto q = canonical_profile(4, {2, 2}, 2, {0, 1});
    REQUIRE(q);
    CHECK(q->counts == std::vector<int>{2, 1});
    auto self = canonical_profile(4, {2, 2}, 2, {1, 1});
    REQUIRE(self);
    CHECK(self->counts == std::vector<int>{1, 1});
    CHECK(orbit_class_count(4, {2, 2}, *self) == 2);  // C(2,1)^2 / 2, self-complementary
    CHECK(orbit_class_count(5, {2, 2}, Profile{0, {1, 1}}) == 4);
    CHECK(orbit_class_count(5, {3, 1}, Profile{0, {2, 0}}) == 3);
}

TEST_CASE("profile orbit sizes sum to the subset count") {
    for (const auto& sizes :
         std::vector<std::vector<int>>{{5, 4, 3}, {6, 6}, {12}, {2, 2, 2, 2, 2, 2}}) {
        int n = std::accumulate(sizes.begin(), sizes.end(), 0);
        const int g = 9;  // odd: no tie-break ambiguity away from i = 0
        Integer total_i1 = 0, total_i0 = 0;
        for (const auto& p : enumerate_profiles(g, sizes)) {
            if (p.i == 1) total_i1 += orbit_class_count(g, sizes, p);
            if (p.i == 0) total_i0 += orbit_class_count(g, sizes, p);
        }
        Integer two_n = Integer(1) << n;
        CHECK(total_i1 == two_n);
        CHECK(total_i0 == two_n - 1 - n);  // zero classes excluded
    }
}

TEST_CASE("ramification class of structured groups") {
    // block product (2,2): coefficient 1 on both within-block pair profiles
    auto r = ramification_class(5, GroupSpec::block_product({2, 2}));
    CHECK(r.profile_coeff(*canonical_profile(5, {2, 2}, 0, {2, 0})).exact_value() == Rational(1));
    CHECK(r.profile_coeff(*canonical_profile(5, {2, 2}, 0, {0, 2})).exact_value() == Rational(1));
    CHECK(r.profile_coeff(*canonical_profile(5, {2, 2}, 0, {1, 1})).is_exact_zero());

    CHECK(ramification_class(5, GroupSpec::alternating(4)).profiles.empty());

    auto s2 = ramification_class(5, GroupSpec::full_symmetric(2));
    CHECK(expand(s2) == boundary_class(SpaceId{5, 2}, 0, subset_of({1, 2})));

    // partial transposition sets are not block-symmetric over the orbits
    auto dihedral = parse_group("gen:(1 2); (3 4); (1 3)(2 4)", 4);
    CHECK_THROWS_AS(ramification_class(5, dihedral), DomainError);
}

TEST_CASE("canonical class of the quotient: K_G = K - R") {
    auto kg = canonical_class_KG(5, GroupSpec::full_symmetric(2));
    CHECK(kg.lambda.exact_value() == Rational(13));
    CHECK(kg.profile_coeff(*canonical_profile(5, {2}, 0, {2})).exact_value() == Rational(-3));

    auto kg22 = canonical_class_KG(5, GroupSpec::block_product({2, 2}));
    CHECK(kg22.lambda.exact_value() == Rational(13));
    CHECK(kg22.irr.exact_value() == Rational(-2));
    CHECK(kg22.profile_coeff(*canonical_profile(5, {2, 2}, 0, {1, 1})).exact_value() ==
          Rational(-2));
    CHECK(kg22.profile_coeff(*canonical_profile(5, {2, 2}, 0, {2, 0})).exact_value() ==
          Rational(-3));
    for (const auto& c : kg22.psi_block) CHECK(c.exact_value() == Rational(1));

    // subset-level identity for a small case
    auto part = BlockPartition::consecutive({2, 2});
    auto expected = symmetrize(canonical_class(SpaceId{5, 4}), part);
    expected.add_scaled(Rational(-1), ramification_class(5, GroupSpec::block_product({2, 2})));
    CHECK(expand(kg22) == expand(expected));
}

TEST_CASE("symmetrize averages over the group orbit") {
    SpaceId space{5, 3};
    auto part = BlockPartition::consecutive({3});
    auto x = boundary_class(space, 0, subset_of({1, 2}));
    auto sym = symmetrize(x, part);
    CHECK(sym.profile_coeff(*canonical_profile(5, {3}, 0, {2})).exact_value() == Rational(1, 3));

    // explicit six-element group average as the oracle
    CHECK(expand(sym) == group_average(x, GroupSpec::full_symmetric(3)));

    // lambda is invariant
    auto lam = symmetrize(lambda_class(space), part);
    CHECK(lam.lambda.exact_value() == Rational(1));
    CHECK(lam.profiles.empty());
}

TEST_CASE("expand spreads profile coefficients over the orbit") {
    ProfileDivisorClass p(SpaceId{5, 3}, BlockPartition::consecutive({3}));
    p.add_profile(0, {2}, CoefInterval::exact(Rational(1)));
    auto full = expand(p);
    auto expected = boundary_class(SpaceId{5, 3}, 0, subset_of({1, 2})) +
                    boundary_class(SpaceId{5, 3}, 0, subset_of({1, 3})) +
                    boundary_class(SpaceId{5, 3}, 0, subset_of({2, 3}));
    CHECK(full == expected);

    ProfileDivisorClass bounded(SpaceId{5, 3}, BlockPartition::consecutive({3}));
    bounded.add_profile(1, {0}, CoefInterval::at_most(Rational(0)));
    CHECK_THROWS_AS(expand(bounded), DomainError);
}

TEST_CASE("expand after symmetrize equals the brute-force group average") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> d(-5, 5);
    for (const auto& sizes : std::vector<std::vector<int>>{{2, 2}, {3, 2}, {4, 1}, {2, 2, 2}}) {
        int n = std::accumulate(sizes.begin(), sizes.end(), 0);
        SpaceId space{4, n};
        auto part = BlockPartition::consecutive(sizes);
        auto group = GroupSpec::block_product(sizes);
        for (int t = 0; t < 6; ++t) {
            FullDivisorClass x(space);
            x.lambda = Rational(d(rng));
            x.irr = Rational(d(rng), 2);
            for (int l = 1; l <= n; ++l) x.add_psi(l, Rational(d(rng)));
            for (const auto& b : all_boundary_indices(space))
                if (d(rng) > 2) x.add_boundary(b.i, b.set, Rational(d(rng), 3));
            auto avg = group_average(x, group);
            CHECK(expand(symmetrize(x, part)) == avg);
            // idempotent on invariant classes
            CHECK(expand(symmetrize(avg, part)) == avg);
        }
    }
}
