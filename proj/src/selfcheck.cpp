#include "modquot/selfcheck.hpp"

#include "modquot/errors.hpp"
#include "modquot/pullback.hpp"
#include "modquot/tables.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace modquot {

namespace {

std::string check_boundary_canonicalization() {
    for (int g = 2; g <= 6; ++g)
        for (int n = 0; n <= 5; ++n)
            for (int i = 0; i <= g; ++i)
                for (Subset s = 0; s <= full_subset(n); ++s) {
                    auto a = canonical_boundary(g, n, i, s);
                    auto b = canonical_boundary(g, n, g - i, complement(s, n));
                    if (a != b) return "identification (i,S)~(g-i,S^c) broken";
                    if (i == 0 && subset_size(s) <= 1 && a) return "zero convention broken";
                    if (a) {
                        auto again = canonical_boundary(g, n, a->i, a->set);
                        if (!again || *again != *a) return "canonical form is not a projection";
                    }
                    if (n == 0) break;
                }
    return "";
}

std::string check_linear_ops() {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-6, 6);
    SpaceId space{5, 4};
    auto random_class = [&]() {
        FullDivisorClass x(space);
        x.lambda = Rational(coef(rng));
        x.irr = Rational(coef(rng), 3);
        for (int l = 1; l <= space.n; ++l) x.add_psi(l, Rational(coef(rng), 2));
        for (const auto& b : all_boundary_indices(space))
            if (coef(rng) > 2) x.add_boundary(b.i, b.set, Rational(coef(rng)));
        return x;
    };
    for (int trial = 0; trial < 50; ++trial) {
        FullDivisorClass x = random_class(), y = random_class(), z = random_class();
        Rational c(coef(rng), 5);
        if ((x + y) + z != x + (y + z)) return "associativity failed";
        if (x + y != y + x) return "commutativity failed";
        if (c * (x + y) != c * x + c * y) return "distributivity failed";
        if (!linear_combine({{Rational(1), x}, {Rational(-1), x}}).is_zero())
            return "x - x is not zero";
    }
    if (linear_combine({{Rational(1, 3), Rational(3) * psi_class(space, 1)}}) != psi_class(space, 1))
        return "scaling failed";
    return "";
}

std::string check_canonical_class() {
    for (int g : {2, 5, 8})
        for (int n : {0, 2, 5}) {
            auto k = canonical_class(SpaceId{g, n});
            if (k.lambda != Rational(13)) return "lambda coefficient of K is not 13";
            if (k.irr != Rational(-2)) return "irr coefficient of K is not -2";
            for (int l = 1; l <= n; ++l)
                if (k.psi_coeff(l) != Rational(1)) return "psi coefficient of K is not 1";
            for (const auto& b : all_boundary_indices(SpaceId{g, n}))
                if (k.boundary_coeff(b) != Rational(-2)) return "boundary coefficient of K is not -2";
        }
    return "";
}

std::string check_group_basics() {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> sizes;
        int n = 0;
        std::uniform_int_distribution<int> block(1, 9);
        int m = 1 + trial % 5;
        for (int k = 0; k < m; ++k) {
            sizes.push_back(block(rng));
            n += sizes.back();
        }
        long expected = 0;
        for (int s : sizes) expected += long(s) * (s - 1) / 2;
        auto ts = transpositions(GroupSpec::block_product(sizes));
        if (static_cast<long>(ts.size()) != expected) return "block-product transposition count";
    }
    if (!transpositions(GroupSpec::alternating(7)).empty()) return "A_7 has no transpositions";
    auto gen = parse_group("gen:(1 2)(3 4)", 4);
    if (!transpositions(gen).empty()) return "<(12)(34)> has no transpositions";
    if (group_order(gen) != 2) return "<(12)(34)> has order 2";
    auto orbits = orbit_partition(parse_group("gen:(1 2 3)", 5));
    if (orbits.sizes() != std::vector<int>{3, 1, 1}) return "orbit partition of <(123)>";
    return "";
}

std::string check_kg_identity() {
    for (const auto& sizes : std::vector<std::vector<int>>{{2, 2}, {3, 1}, {2, 2, 2}, {4}}) {
        int n = std::accumulate(sizes.begin(), sizes.end(), 0);
        int g = 5;
        auto group = GroupSpec::block_product(sizes);
        auto part = BlockPartition::consecutive(sizes);
        auto kg = canonical_class_KG(g, group);
        // profile-level: KG = symmetrize(K) - R
        auto k_profile = symmetrize(canonical_class(SpaceId{g, n}), part);
        k_profile.add_scaled(Rational(-1), ramification_class(g, group));
        if (!(expand(kg) == expand(k_profile))) return "KG != K - R";
        if (!kg.lambda.is_exact() || kg.lambda.exact_value() != Rational(13)) return "KG lambda != 13";
        // within-block pairs carry -3, cross pairs -2
        for (std::size_t a = 0; a < sizes.size(); ++a)
            for (std::size_t b = a; b < sizes.size(); ++b) {
                std::vector<int> counts(sizes.size(), 0);
                if (a == b) {
                    if (sizes[a] < 2) continue;
                    counts[a] = 2;
                } else {
                    counts[a] = 1;
                    counts[b] = 1;
                }
                auto key = canonical_profile(g, sizes, 0, counts);
                Rational expected(a == b ? -3 : -2);
                if (kg.profile_coeff(*key).exact_value() != expected) return "KG pair coefficient";
            }
    }
    return "";
}

std::string check_closed_forms() {
    for (int g = 2; g <= 30; ++g)
        for (int n = 1; n <= 30; ++n) {
            auto sums = weierstrass_summed(g, n, std::min(g, n));
            if (weierstrass_a(g, n) * sums.w_psi != sums.w_lambda) {
                std::ostringstream os;
                os << "a(" << g << "," << n << ") * w_psi != w_lambda";
                return os.str();
            }
            if (n >= 2 && weierstrass_b(g, n) * sums.w_psi != sums.w_2) {
                std::ostringstream os;
                os << "b(" << g << "," << n << ") * w_psi != w_2";
                return os.str();
            }
        }
    return "";
}

std::string check_boundary_b() {
    for (int g = 5; g <= 40; ++g) {
        if (weierstrass_b(g, g - 1) != Rational(3)) return "b(g,g-1) != 3";
        if (weierstrass_b(g, g) != Rational(3)) return "b(g,g) != 3";
        for (int n = 2; n <= g - 2; ++n)
            if (!(weierstrass_b(g, n) > Rational(3))) return "b(g,n) <= 3 in 2..g-2";
        for (int n = g + 1; n <= 45; ++n)
            if (!(weierstrass_b(g, n) < Rational(3))) return "b(g,n) >= 3 for n > g";
    }
    return "";
}

std::string check_slopes() {
    struct Row {
        int g;
        Rational s;
        SlopeProvenance p;
    };
    const std::vector<Row> rows = {
        {10, Rational(7), SlopeProvenance::Sporadic},
        {12, Rational(6) + Rational(563, 642), SlopeProvenance::Sporadic},
        {16, Rational(6) + Rational(41, 61), SlopeProvenance::Sporadic},
        {21, Rational(6) + Rational(197, 377), SlopeProvenance::Sporadic},
        {23, Rational(13, 2), SlopeProvenance::BrillNoether},
        {22, Rational(145, 22), SlopeProvenance::GiesekerPetri},
    };
    for (const auto& r : rows) {
        auto e = slope_min(r.g);
        if (e.slope != r.s || e.provenance != r.p) return "slope_min(" + std::to_string(r.g) + ")";
    }
    for (int g = 4; g <= 40; ++g) {
        auto e = slope_min(g);
        if ((g + 1) % 2 == 0 && e.slope > Rational(6) + Rational(12, g + 1)) return "min above BN";
        if ((g + 1) % 2 == 1 &&
            e.slope > Rational(6) + Rational(14L * g + 4, long(g) * g + 2L * g))
            return "min above GP";
    }
    return "";
}

std::string check_catalog_entries() {
    auto t24 = catalog_entry("T", 24);
    if (t24.a != Rational(-17, 22)) return "T(24) lambda";
    if (*t24.b_pair - Rational(3) != Rational(1, 44)) return "T(24) epsilon part";
    auto f208 = catalog_entry("F", 20, 8);
    if (f208.a != Rational(103, 27) || f208.b_irr != Rational(16, 27) ||
        *f208.b_pair != Rational(3) + Rational(10, 9))
        return "F(20,8) coefficients";
    auto ft229 = catalog_entry("Ftilde", 22, 9);
    if (*ft229.b_pair != Rational(3) + Rational(8, 13)) return "Ftilde(22,9) pair";
    // every entry is normalized with psi coefficient one
    for (const auto* e : {&t24, &f208, &ft229})
        if (!(e->single_block_class().psi_block[0] == CoefInterval::exact(Rational(1))))
            return "entry psi coefficient != 1";
    return "";
}

std::string check_spot_f() {
    if (f_closed(23, {2, 2}) != Rational(13) - Rational(11, 396)) return "f(23;2,2)";
    if (f_closed(10, {7, 7}) != Rational(13) - Rational(13, 175)) return "f(10;7,7)";
    if (f_closed(23, {23}) != Rational(12)) return "f(23;23)";
    auto t = catalog_entry("T", 24);
    auto cert = build_certificate({24, {23, 23}, {t, t}});
    if (cert.epsilon != Rational(1, 44)) return "T certificate epsilon";
    if (cert.mult_D != Rational(88, 45)) return "T certificate D multiplier";
    if (cert.slope.slope != Rational(162, 25)) return "slope(24)";
    if (!(cert.f_value <= Rational(13))) return "f(24;23,23;T,T) > 13";
    return "";
}

std::string check_certificate_zeros() {
    auto cert = build_certificate(CertificateInput::closed(23, {2, 2}));
    if (cert.grade != Certificate::Grade::GeneralType) return "grade of (23;2,2)";
    if (cert.remainder.lambda.exact_value() != Rational(11, 396)) return "lambda remainder";
    if (!cert.remainder.irr.is_exact_zero()) return "irr remainder";
    auto cross = canonical_profile(23, {2, 2}, 0, {1, 1});
    if (!cert.remainder.profile_coeff(*cross).is_exact_zero()) return "cross pair remainder";
    for (const auto& c : cert.remainder.psi_block)
        if (!c.is_exact_zero()) return "psi remainder";
    return "";
}

std::string check_table_snapshots() {
    const std::vector<std::pair<int, int>> t1 = {{4, 16}, {5, 15}, {6, 16}, {7, 15}, {8, 14},
                                                 {9, 13}, {10, 11}, {11, 12}, {12, 11}, {13, 11},
                                                 {14, 10}, {15, 10}, {16, 9}, {17, 9}, {18, 9},
                                                 {19, 7}, {20, 6}, {21, 4}, {22, 4}};
    for (auto [g, v] : t1)
        if (table1_nmin(g) != v) return "table1 row g=" + std::to_string(g);
    const std::vector<std::pair<int, int>> t2 = {{12, 10}, {13, 11}, {14, 10}, {15, 10},
                                                 {16, 9}, {17, 9}, {18, 10}, {19, 7},
                                                 {20, 6}, {21, 4}, {22, 7}, {23, 1}};
    for (auto [g, v] : t2)
        if (table2_nmin(g) != v) return "table2 row g=" + std::to_string(g);
    return "";
}

std::string check_weierstrass_bruteforce() {
    for (int g = 2; g <= 30; ++g)
        for (int n = 1; n <= 7; ++n)
            for (int m = 1; m <= std::min(n, g); ++m) {
                auto closed = weierstrass_summed(g, n, m);
                auto brute = weierstrass_summed_bruteforce(g, n, m);
                if (closed.w_lambda != brute.w_lambda || closed.w_psi != brute.w_psi ||
                    (n >= 2 && closed.w_2 != brute.w_2)) {
                    std::ostringstream os;
                    os << "mismatch at g=" << g << " n=" << n << " m=" << m;
                    return os.str();
                }
            }
    return "";
}

std::string check_pullback_oracle() {
    for (int g = 2; g <= 5; ++g)
        for (int n = 2; n <= 6; ++n)
            for (Subset kept_mask = 1; kept_mask <= full_subset(n); ++kept_mask) {
                auto kept = subset_labels(kept_mask);
                std::string why;
                if (!pullback_matches_oracle(g, n, kept, &why)) return why;
            }
    return "";
}

std::string check_symmetrize_expand() {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (const auto& sizes : std::vector<std::vector<int>>{{3}, {2, 2}, {3, 2, 1}, {2, 1, 1}}) {
        int n = std::accumulate(sizes.begin(), sizes.end(), 0);
        SpaceId space{4, n};
        auto group = GroupSpec::block_product(sizes);
        auto part = BlockPartition::consecutive(sizes);
        for (int trial = 0; trial < 8; ++trial) {
            FullDivisorClass x(space);
            x.lambda = Rational(coef(rng));
            for (int l = 1; l <= n; ++l) x.add_psi(l, Rational(coef(rng)));
            for (const auto& b : all_boundary_indices(space))
                if (coef(rng) > 1) x.add_boundary(b.i, b.set, Rational(coef(rng), 3));
            if (!(expand(symmetrize(x, part)) == group_average(x, group)))
                return "expand(symmetrize(X)) != group average";
        }
        // invariants are fixed points
        auto inv = group_average(psi_class(space, 1) + boundary_class(space, 1, subset_of({1})), group);
        if (!(expand(symmetrize(inv, part)) == inv)) return "symmetrize not idempotent on invariants";
    }
    return "";
}

std::string check_bound_sampling() {
    if (int bad = sample_bound_soundness(23, {2, 2}, 600, 12345); bad != 0)
        return std::to_string(bad) + " negative remainder coordinates at (23;2,2)";
    if (int bad = sample_bound_soundness(23, {2, 2, 2}, 400, 54321); bad != 0)
        return std::to_string(bad) + " negative remainder coordinates at (23;2,2,2)";
    return "";
}

}  // namespace

std::vector<CheckResult> run_selfcheck(bool full) {
    using Entry = std::pair<const char*, std::function<std::string()>>;
    std::vector<Entry> checks = {
        {"boundary-canonicalization", check_boundary_canonicalization},
        {"linear-ops", check_linear_ops},
        {"canonical-class", check_canonical_class},
        {"group-basics", check_group_basics},
        {"kg-identity", check_kg_identity},
        {"closed-forms", check_closed_forms},
        {"boundary-b", check_boundary_b},
        {"slopes", check_slopes},
        {"catalog-entries", check_catalog_entries},
        {"spot-f", check_spot_f},
        {"certificate-zeros", check_certificate_zeros},
        {"table-snapshots", check_table_snapshots},
    };
    if (full) {
        checks.emplace_back("weierstrass-bruteforce", check_weierstrass_bruteforce);
        checks.emplace_back("pullback-oracle", check_pullback_oracle);
        checks.emplace_back("symmetrize-expand", check_symmetrize_expand);
        checks.emplace_back("bound-sampling", check_bound_sampling);
    }
    std::vector<CheckResult> results;
    for (auto& [name, fn] : checks) {
        CheckResult r;
        r.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            r.detail = fn();
            r.ok = r.detail.empty();
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

WeierstrassSums weierstrass_summed_bruteforce(int g, int n, int m) {
    auto factor = weierstrass_factor(g, m);
    const int r = factor.params.r;
    const SpaceId target{g, m};

    // tracked part of the factor divisor for one weight assignment: positions
    // high[j] get the heavy weight
    auto tracked = [&](const std::vector<bool>& high) {
        FullDivisorClass w(target);
        w.lambda = Rational(-1);
        for (int j = 1; j <= m; ++j) w.add_psi(j, high[j - 1] ? factor.omega_high : factor.omega_low);
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b) {
                Rational pair = high[a - 1] && high[b - 1] ? factor.pair_hh
                                : (!high[a - 1] && !high[b - 1] ? factor.pair_ll : factor.pair_hl);
                w.add_boundary(0, subset_of({a, b}), -pair);
            }
        return omega_base_change(w);
    };

    FullDivisorClass sum(SpaceId{g, n});
    // all ordered pairs (S, T) of disjoint subsets with |S| = r, |T| = m - r
    for (Subset s = 0; s <= full_subset(n); ++s) {
        if (subset_size(s) != r) continue;
        for (Subset t = 0; t <= full_subset(n); ++t) {
            if (subset_size(t) != m - r || (s & t)) continue;
            Subset u = s | t;
            auto labels = subset_labels(u);
            std::vector<bool> high(m, false);
            for (int j = 0; j < m; ++j) high[j] = subset_contains(s, labels[j]);
            ForgetfulMap map{SpaceId{g, n}, labels};
            sum.add_scaled(Rational(1), pullback_oracle(tracked(high), map));
            if (t == full_subset(n)) break;
        }
        if (s == full_subset(n)) break;
    }

    WeierstrassSums out;
    out.w_lambda = -sum.lambda;
    out.w_psi = sum.psi_coeff(1);
    for (int l = 1; l <= n; ++l)
        if (sum.psi_coeff(l) != out.w_psi) throw std::logic_error("bruteforce: psi coefficients differ");
    if (n >= 2) {
        out.w_2 = -sum.boundary_coeff(0, subset_of({1, 2}));
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (-sum.boundary_coeff(0, subset_of({a, b})) != out.w_2)
                    throw std::logic_error("bruteforce: pair coefficients differ");
    }
    return out;
}

bool pullback_matches_oracle(int g, int n, const std::vector<int>& kept, std::string* why) {
    const int m = static_cast<int>(kept.size());
    const SpaceId target{g, m};
    ForgetfulMap map{SpaceId{g, n}, kept};

    // ambient partition: the kept block first, then singletons
    BlockPartition ambient;
    ambient.n = n;
    ambient.blocks.push_back(kept);
    for (int l = 1; l <= n; ++l)
        if (!std::binary_search(kept.begin(), kept.end(), l)) ambient.blocks.push_back({l});

    auto fail = [&](const std::string& what) {
        if (why) {
            std::ostringstream os;
            os << what << " at g=" << g << " n=" << n << " kept={";
            for (std::size_t i = 0; i < kept.size(); ++i) os << (i ? "," : "") << kept[i];
            os << "}";
            *why = os.str();
        }
        return false;
    };

    auto check = [&](const ProfileDivisorClass& block_form, const FullDivisorClass& subset_form,
                     const std::string& name) {
        auto aggregate = expand(pullback_aggregate(block_form, 0, ambient));
        auto oracle = pullback_oracle(subset_form, map);
        return aggregate == oracle || !fail(name + " pullback mismatch");
    };

    ProfileDivisorClass lam(target, BlockPartition::consecutive({m}));
    lam.lambda = CoefInterval::exact(Rational(1));
    if (!check(lam, lambda_class(target), "lambda")) return false;

    ProfileDivisorClass irr(target, BlockPartition::consecutive({m}));
    irr.irr = CoefInterval::exact(Rational(1));
    if (!check(irr, irr_class(target), "irr")) return false;

    ProfileDivisorClass psi(target, BlockPartition::consecutive({m}));
    psi.psi_block[0] = CoefInterval::exact(Rational(1));
    FullDivisorClass psi_subsets(target);
    for (int l = 1; l <= m; ++l) psi_subsets.add_psi(l, Rational(1));
    if (!check(psi, psi_subsets, "psi")) return false;

    for (const auto& profile : enumerate_profiles(g, {m})) {
        ProfileDivisorClass block_form(target, BlockPartition::consecutive({m}));
        block_form.add_profile(profile.i, profile.counts, CoefInterval::exact(Rational(1)));
        FullDivisorClass subset_form(target);
        for (const auto& key : all_boundary_indices(target)) {
            auto keyp = canonical_profile(g, {m}, key.i, {subset_size(key.set)});
            if (keyp && *keyp == profile) subset_form.add_boundary(key.i, key.set, Rational(1));
        }
        std::ostringstream os;
        os << "delta(" << profile.i << ";" << profile.counts[0] << ")";
        if (!check(block_form, subset_form, os.str())) return false;
    }
    return true;
}

int sample_bound_soundness(int g, const std::vector<int>& blocks, int samples, unsigned seed) {
    CertificateInput in = CertificateInput::closed(g, blocks);
    Certificate cert = build_certificate(in);
    if (!cert.all_proved()) throw std::logic_error("sample_bound_soundness: certificate not proved");

    BlockPartition part = BlockPartition::consecutive(blocks);
    auto kg = expand(canonical_class_KG(g, GroupSpec::block_product(blocks)));

    std::vector<ProfileDivisorClass> components;
    std::vector<Rational> multipliers;
    components.push_back(ambient_slope_pullback(cert.slope, part, g));
    multipliers.push_back(cert.mult_D);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        components.push_back(
            pullback_aggregate(in.entries[k].single_block_class(), static_cast<int>(k), part));
        multipliers.push_back(cert.mult_L);
    }
    components.push_back(ambient_weierstrass(g, part));
    multipliers.push_back(cert.mult_W);

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> numer(0, 160);
    int failures = 0;
    for (int trial = 0; trial < samples; ++trial) {
        FullDivisorClass remainder = kg;
        for (std::size_t c = 0; c < components.size(); ++c) {
            ProfileDivisorClass sampled = components[c];
            for (auto& [key, value] : sampled.profiles) {
                if (value.is_exact()) continue;
                Rational hi = value.hi().value;  // every declared bound here is [-inf, hi]
                value = CoefInterval::exact(hi - Rational(numer(rng), 16));
            }
            remainder.add_scaled(-multipliers[c], expand(sampled));
        }
        for (std::size_t k = 0; k < part.blocks.size(); ++k)
            for (int label : part.blocks[k]) remainder.add_psi(label, -cert.eta);

        bool bad = remainder.lambda < Rational(0) || remainder.irr < Rational(0);
        for (int l = 1; l <= part.n && !bad; ++l)
            if (remainder.psi_coeff(l) < Rational(0)) bad = true;
        for (const auto& [key, c] : remainder.boundary)
            if (c < Rational(0)) bad = true;
        if (bad) ++failures;
    }
    return failures;
}

}  // namespace modquot
