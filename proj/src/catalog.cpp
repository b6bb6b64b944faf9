#include "modquot/catalog.hpp"

#include "modquot/errors.hpp"

#include <numeric>

namespace modquot {

namespace {

bool is_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

Integer ibinom(int n, int k) { return binomial(n, k); }

}  // namespace

const char* provenance_name(SlopeProvenance p) {
    switch (p) {
        case SlopeProvenance::BrillNoether: return "brill-noether";
        case SlopeProvenance::GiesekerPetri: return "gieseker-petri";
        case SlopeProvenance::Sporadic: return "sporadic";
    }
    return "?";
}

SlopeEntry slope_min(int g) {
    if (g < 4) throw DomainError("slope_min: unsupported genus (need g >= 4)");
    static const std::map<int, Rational> sporadic = {
        {10, Rational(7)},
        {12, Rational(6) + Rational(563, 642)},
        {16, Rational(6) + Rational(41, 61)},
        {21, Rational(6) + Rational(197, 377)},
    };
    std::optional<SlopeEntry> best;
    auto offer = [&](Rational s, SlopeProvenance p) {
        if (!best || s < best->slope) best = SlopeEntry{g, s, p};
    };
    // preference on ties follows the offer order
    auto it = sporadic.find(g);
    if (it != sporadic.end()) offer(it->second, SlopeProvenance::Sporadic);
    if (!is_prime(g + 1)) offer(Rational(6) + Rational(12, g + 1), SlopeProvenance::BrillNoether);
    if ((g + 1) % 2 == 1)
        offer(Rational(6) + Rational(14L * g + 4, long(g) * g + 2L * g), SlopeProvenance::GiesekerPetri);
    return *best;
}

WeierstrassParams weierstrassParamsChecked(int g, int m) {
    if (g < 2) throw DomainError("weierstrass_params: genus must be >= 2");
    if (m < 1) throw DomainError("weierstrass_params: need m >= 1");
    if (m > g) throw DomainError("weierstrass_params: unsupported (weights require m <= g)");
    WeierstrassParams p;
    p.g = g;
    p.m = m;
    p.k = g / m;
    p.r = g % m;
    p.weights.assign(m, p.k);
    for (int j = 0; j < p.r; ++j) p.weights[j] = p.k + 1;
    return p;
}

WeierstrassParams weierstrass_params(int g, int m) { return weierstrassParamsChecked(g, m); }

WeierstrassFactor weierstrass_factor(int g, int m) {
    WeierstrassFactor f;
    f.params = weierstrassParamsChecked(g, m);
    const long k = f.params.k, r = f.params.r;
    f.omega_high = Rational((k + 1) * (k + 2), 2);
    f.omega_low = Rational(k * (k + 1), 2);
    f.pair_hh = Rational((k + 1) * (k + 1));
    f.pair_hl = Rational(k * (k + 1));
    f.pair_ll = Rational(k * k);

    BlockPartition part = (r == 0 || r == m) ? BlockPartition::consecutive({m})
                                             : BlockPartition::consecutive({int(r), int(m - r)});
    ProfileDivisorClass cls(SpaceId{g, m}, part);
    cls.lambda = CoefInterval::exact(Rational(-1));
    const bool split = part.blocks.size() == 2;
    cls.psi_block[0] = CoefInterval::exact(r > 0 ? f.omega_high : f.omega_low);
    if (split) cls.psi_block[1] = CoefInterval::exact(f.omega_low);

    auto omega_sum = [&](const std::vector<int>& counts) {
        Rational high = Rational(counts[0]) * (r > 0 ? f.omega_high : f.omega_low);
        Rational low = split ? Rational(counts[1]) * f.omega_low : Rational(0);
        return high + low;
    };
    auto pair_term = [&](const std::vector<int>& counts) {
        if (!split) return r > 0 ? f.pair_hh : f.pair_ll;
        if (counts[0] == 2) return f.pair_hh;
        if (counts[0] == 1) return f.pair_hl;
        return f.pair_ll;
    };

    for (const auto& p : enumerate_profiles(g, cls.sizes())) {
        int total = std::accumulate(p.counts.begin(), p.counts.end(), 0);
        if (p.i == 0 && total == 2) {
            cls.add_profile(p.i, p.counts, CoefInterval::exact(-(pair_term(p.counts) + omega_sum(p.counts))));
        } else if (p.i == 0 && total >= 3) {
            cls.add_profile(p.i, p.counts, CoefInterval::at_most(-omega_sum(p.counts)));
        } else if (p.i >= 1) {
            cls.add_profile(p.i, p.counts, CoefInterval::at_most(Rational(0)), {kTagWeierstrassHigher});
        }
    }
    f.cls = std::move(cls);
    return f;
}

WeierstrassSums weierstrass_summed(int g, int n, int m) {
    if (m > n) throw DomainError("weierstrass_summed: need m <= n");
    auto p = weierstrassParamsChecked(g, m);
    const long k = p.k, r = p.r;
    Integer high = Integer((k + 1) * (k + 2)) / 2;
    Integer low = Integer(k * (k + 1)) / 2;

    Integer wl = ibinom(n, r) * ibinom(n - r, m - r);
    Integer wp = ibinom(n - 1, r - 1) * ibinom(n - r, m - r) * high +
                 ibinom(n - 1, r) * ibinom(n - r - 1, m - r - 1) * low;
    Integer w2 = 2 * wp + ibinom(n - 2, r - 2) * ibinom(n - r, m - r) * Integer((k + 1) * (k + 1)) +
                 2 * ibinom(n - 2, r - 1) * ibinom(n - r - 1, m - r - 1) * Integer(k * (k + 1)) +
                 ibinom(n - 2, r) * ibinom(n - r - 2, m - r - 2) * Integer(k * k);
    return WeierstrassSums{Rational(wl, Integer(1)), Rational(wp, Integer(1)), Rational(w2, Integer(1))};
}

Rational weierstrass_a(int g, int n) {
    if (n < 1) throw DomainError("weierstrass_a: need n >= 1");
    if (n > g) return Rational(n, g);
    int k = g / n, r = g % n;
    return Rational(2L * n, long(k + 1) * (g + r));
}

Rational weierstrass_b(int g, int n) {
    if (n < 2) throw DomainError("weierstrass_b: need n >= 2");
    if (n > g) return Rational(2) + Rational(g - 1, n - 1);
    long k = g / n, r = g % n;
    // middle term is 2r(n-r)k(k+1); the analogous binomial sum in w_2 forces it
    Rational num = Rational(r * (r - 1)) * Rational((k + 1) * (k + 1)) +
                   Rational(2 * r * (n - r)) * Rational(k * (k + 1)) +
                   Rational((n - r) * (n - r - 1)) * Rational(k * k);
    Rational den = Rational(r) * Rational((k + 1) * (k + 2)) + Rational(n - r) * Rational(k * (k + 1));
    return Rational(2) + Rational(2, n - 1) * num / den;
}

namespace {

/// Fills pair/tail entries of a normalized single-block class.
void fill_normalized_tail(ProfileDivisorClass& cls, const Rational& b_pair, bool weierstrass_tails) {
    const int g = cls.space.g;
    for (const auto& p : enumerate_profiles(g, cls.sizes())) {
        int total = std::accumulate(p.counts.begin(), p.counts.end(), 0);
        if (p.i == 0 && total == 2) {
            cls.add_profile(p.i, p.counts, CoefInterval::exact(-b_pair));
        } else if (p.i == 0 && total >= 3) {
            cls.add_profile(p.i, p.counts,
                            CoefInterval::at_most(weierstrass_tails ? Rational(-total) : Rational(-2)));
        } else if (p.i >= 1) {
            if (weierstrass_tails)
                cls.add_profile(p.i, p.counts, CoefInterval::at_most(Rational(0)), {kTagWeierstrassHigher});
            else
                cls.add_profile(p.i, p.counts, CoefInterval::at_most(Rational(-2)));
        }
    }
}

}  // namespace

WeierstrassNormalized weierstrass_normalized(int g, int n) {
    if (n < 1) throw DomainError("weierstrass_normalized: need n >= 1");
    auto sums = weierstrass_summed(g, n, std::min(g, n));
    WeierstrassNormalized w;
    w.a = sums.w_lambda / sums.w_psi;
    if (n >= 2) w.b = sums.w_2 / sums.w_psi;

    ProfileDivisorClass cls(SpaceId{g, n}, BlockPartition::consecutive({n}));
    cls.lambda = CoefInterval::exact(-w.a);
    cls.psi_block[0] = CoefInterval::exact(Rational(1));
    fill_normalized_tail(cls, w.b.value_or(Rational(0)), /*weierstrass_tails=*/true);
    w.cls = std::move(cls);
    return w;
}

std::string CatalogEntry::name() const {
    switch (kind) {
        case Kind::Weierstrass: return "W";
        case Kind::T: return "T";
        case Kind::F: return "F:" + std::to_string(m);
        case Kind::Ftilde: return "Ftilde:" + std::to_string(m);
    }
    return "?";
}

Rational CatalogEntry::epsilon_part() const {
    if (!b_pair) throw DomainError("CatalogEntry: no pair coefficient on a one-point block");
    return *b_pair - Rational(3);
}

ProfileDivisorClass CatalogEntry::single_block_class() const {
    ProfileDivisorClass cls(space, BlockPartition::consecutive({space.n}));
    cls.lambda = CoefInterval::exact(a);
    cls.psi_block[0] = CoefInterval::exact(Rational(1));
    cls.irr = CoefInterval::exact(-b_irr);
    fill_normalized_tail(cls, b_pair.value_or(Rational(0)), kind == Kind::Weierstrass);
    return cls;
}

CatalogEntry weierstrass_entry(int g, int nk) {
    auto w = weierstrass_normalized(g, nk);
    CatalogEntry e;
    e.kind = CatalogEntry::Kind::Weierstrass;
    e.space = SpaceId{g, nk};
    e.a = -w.a;
    e.b_irr = Rational(0);
    e.b_pair = w.b;
    return e;
}

CatalogEntry catalog_entry(const std::string& name, int g, int m) {
    CatalogEntry e;
    if (name == "T") {
        if (g < 3) throw DomainError("catalog_entry: T_g needs g >= 3");
        e.kind = CatalogEntry::Kind::T;
        e.space = SpaceId{g, g - 1};
        e.a = -Rational(g - 7, g - 2);
        e.b_irr = Rational(1, 2L * g - 4);
        e.b_pair = Rational(3) + Rational(1, 2L * g - 4);
        return e;
    }
    if (name == "F" || name == "Ftilde") {
        bool tilde = name == "Ftilde";
        int n = tilde ? g - 2 * m + 1 : g - 2 * m;
        if (m < 1 || 2 * m > g) throw DomainError("catalog_entry: need 1 <= m <= g/2");
        if (!tilde && n < 2) throw DomainError("catalog_entry: F needs n = g-2m >= 2");
        if (tilde && n < 3) throw DomainError("catalog_entry: Ftilde needs n = g-2m+1 >= 3");
        e.kind = tilde ? CatalogEntry::Kind::Ftilde : CatalogEntry::Kind::F;
        e.space = SpaceId{g, n};
        e.m = m;
        long norm = tilde ? n - 2 : n - 1;
        e.a = Rational(n, norm) * (Rational(10L * m, g - 2) + Rational(1L - g, long(g) - m));
        e.b_irr = Rational(long(n) * m, (long(g) - 2) * norm);
        e.b_pair = tilde ? Rational(3) + Rational(long(g) - n - 1, long(g) + n - 1)
                         : Rational(3) + Rational((long(g) - n) * (n + 1), (long(g) + n) * (n - 1));
        return e;
    }
    throw DomainError("catalog_entry: unknown name (expected T, F or Ftilde)");
}

ProfileDivisorClass ambient_weierstrass(int g, const BlockPartition& partition) {
    const int n = partition.n;
    auto w = weierstrass_normalized(g, n);
    ProfileDivisorClass cls(SpaceId{g, n}, partition);
    cls.lambda = CoefInterval::exact(-w.a);
    for (auto& c : cls.psi_block) c = CoefInterval::exact(Rational(1));
    for (const auto& p : enumerate_profiles(g, cls.sizes())) {
        int total = std::accumulate(p.counts.begin(), p.counts.end(), 0);
        if (p.i == 0 && total == 2)
            cls.add_profile(p.i, p.counts, CoefInterval::exact(-*w.b));
        else if (p.i == 0 && total >= 3)
            cls.add_profile(p.i, p.counts, CoefInterval::at_most(Rational(-total)));
        else if (p.i >= 1)
            cls.add_profile(p.i, p.counts, CoefInterval::at_most(Rational(0)), {kTagWeierstrassHigher});
    }
    return cls;
}

ProfileDivisorClass ambient_slope_pullback(const SlopeEntry& d, const BlockPartition& partition, int g) {
    ProfileDivisorClass cls(SpaceId{g, partition.n}, partition);
    cls.lambda = CoefInterval::exact(d.slope);
    cls.irr = CoefInterval::exact(Rational(-1));
    std::set<std::string> tags{kTagSlopeTail};
    if (d.provenance == SlopeProvenance::Sporadic) tags.insert(kTagSporadicTail);
    for (const auto& p : enumerate_profiles(g, cls.sizes()))
        if (p.i >= 1) cls.add_profile(p.i, p.counts, CoefInterval::at_most(Rational(-1)), tags);
    return cls;
}

}  // namespace modquot
