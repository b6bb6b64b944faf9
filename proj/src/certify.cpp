#include "modquot/certify.hpp"

#include "modquot/errors.hpp"
#include "modquot/pullback.hpp"
#include "modquot/tables.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace modquot {

namespace {

std::string profile_label(const Profile& p) {
    std::ostringstream os;
    os << "delta(" << p.i << ";";
    for (std::size_t k = 0; k < p.counts.size(); ++k) {
        if (k) os << ",";
        os << p.counts[k];
    }
    os << ")";
    return os.str();
}

ProfileDivisorClass psi_total_class(int g, const BlockPartition& part) {
    ProfileDivisorClass cls(SpaceId{g, part.n}, part);
    for (auto& c : cls.psi_block) c = CoefInterval::exact(Rational(1));
    return cls;
}

struct FParts {
    SlopeEntry slope;
    Rational epsilon, eta;
    Rational a_total, b_total;
    Rational sum_a, sum_birr;
    Rational mult_D, mult_L, mult_W;
    Rational f;
};

FParts f_parts(int g, const std::vector<int>& blocks, const std::vector<CatalogEntry>& entries) {
    if (blocks.empty()) throw DomainError("certificate: empty partition");
    if (entries.size() != blocks.size()) throw DomainError("certificate: one entry per block required");
    int maxnk = 0, n = 0;
    for (int nk : blocks) {
        if (nk < 1) throw DomainError("certificate: block sizes must be positive");
        maxnk = std::max(maxnk, nk);
        n += nk;
    }
    if (maxnk > g)
        throw CriterionInapplicable("certificate: a block exceeds the genus (quotient is uniruled)");
    if (maxnk < 2)
        throw CriterionInapplicable("certificate: all blocks are singletons (trivial group route)");

    FParts p;
    p.slope = slope_min(g);
    bool have_eps = false;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const CatalogEntry& e = entries[k];
        if (e.space.g != g || e.space.n != blocks[k])
            throw DomainError("certificate: entry " + e.name() + " does not live on its block's space");
        p.sum_a += e.a;
        p.sum_birr += e.b_irr;
        if (blocks[k] >= 2) {
            Rational part = e.epsilon_part();
            if (!have_eps || part < p.epsilon) p.epsilon = part;
            have_eps = true;
        }
    }
    if (p.epsilon < Rational(0))
        throw CriterionInapplicable("certificate: an entry has pair coefficient below 3");

    p.a_total = weierstrass_a(g, n);
    p.b_total = weierstrass_b(g, n);
    Rational one_plus = Rational(1) + p.epsilon;
    p.mult_L = Rational(1) / one_plus;
    p.mult_D = positive_part(Rational(2) - p.mult_L * p.sum_birr);
    p.mult_W = Rational(2) * p.epsilon / (p.b_total * one_plus);
    p.eta = (p.epsilon / one_plus) * (Rational(1) - Rational(2) / p.b_total);
    p.f = p.mult_D * p.slope.slope + p.mult_L * p.sum_a - p.mult_W * p.a_total;
    return p;
}

std::vector<CatalogEntry> weierstrass_entries(int g, const std::vector<int>& blocks) {
    std::vector<CatalogEntry> out;
    out.reserve(blocks.size());
    for (int nk : blocks) out.push_back(weierstrass_entry(g, nk));
    return out;
}

}  // namespace

CertificateInput CertificateInput::closed(int g, std::vector<int> blocks) {
    CertificateInput in;
    in.g = g;
    in.blocks = std::move(blocks);
    in.entries = weierstrass_entries(g, in.blocks);
    return in;
}

int CertificateInput::n() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

Rational f_closed(int g, const std::vector<int>& blocks) {
    return f_parts(g, blocks, weierstrass_entries(g, blocks)).f;
}

Rational f_general(int g, const std::vector<int>& blocks, const std::vector<CatalogEntry>& entries) {
    return f_parts(g, blocks, entries).f;
}

bool Certificate::all_proved() const {
    for (const auto& c : coordinates)
        if (c.status == CoordStatus::Unproved) return false;
    return true;
}

std::vector<const CoordinateReport*> Certificate::unproved() const {
    std::vector<const CoordinateReport*> out;
    for (const auto& c : coordinates)
        if (c.status == CoordStatus::Unproved) out.push_back(&c);
    return out;
}

Certificate build_certificate(const CertificateInput& input) {
    Certificate cert;
    cert.input = input;
    if (cert.input.entries.empty()) cert.input.entries = weierstrass_entries(input.g, input.blocks);
    FParts parts = f_parts(input.g, cert.input.blocks, cert.input.entries);
    cert.slope = parts.slope;
    cert.epsilon = parts.epsilon;
    cert.eta = parts.eta;
    cert.f_value = parts.f;
    cert.mult_D = parts.mult_D;
    cert.mult_L = parts.mult_L;
    cert.mult_W = parts.mult_W;

    const int g = input.g;
    BlockPartition part = BlockPartition::consecutive(cert.input.blocks);
    ProfileDivisorClass rem = canonical_class_KG(g, GroupSpec::block_product(cert.input.blocks));
    rem.add_scaled(-parts.mult_D, ambient_slope_pullback(parts.slope, part, g));
    for (std::size_t k = 0; k < cert.input.blocks.size(); ++k)
        rem.add_scaled(-parts.mult_L,
                       pullback_aggregate(cert.input.entries[k].single_block_class(),
                                          static_cast<int>(k), part));
    rem.add_scaled(-parts.mult_W, ambient_weierstrass(g, part));
    rem.add_scaled(-parts.eta, psi_total_class(g, part));

    // structural identities of the decomposition
    if (!rem.lambda.is_exact() || rem.lambda.exact_value() != Rational(13) - parts.f)
        throw std::logic_error("certificate: lambda remainder does not equal 13 - f");
    for (const auto& c : rem.psi_block)
        if (!c.is_exact_zero()) throw std::logic_error("certificate: psi remainder is not zero");

    auto report = [&cert, &rem](std::string name, const CoefInterval& value,
                                const Profile* key) {
        CoordinateReport r;
        r.coordinate = std::move(name);
        r.remainder = value;
        if (key) {
            auto it = rem.bound_tags.find(*key);
            if (it != rem.bound_tags.end()) r.assumptions.assign(it->second.begin(), it->second.end());
        }
        if (value.nonnegative())
            r.status = value.is_exact() ? CoordStatus::ProvedExact : CoordStatus::ProvedByBound;
        else
            r.status = CoordStatus::Unproved;
        cert.coordinates.push_back(std::move(r));
    };

    report("lambda", rem.lambda, nullptr);
    for (std::size_t k = 0; k < rem.psi_block.size(); ++k)
        report("psi[" + std::to_string(k + 1) + "]", rem.psi_block[k], nullptr);
    report("irr", rem.irr, nullptr);
    for (const auto& p : enumerate_profiles(g, rem.sizes()))
        report(profile_label(p), rem.profile_coeff(p), &p);

    std::set<std::string> used;
    for (const auto& c : cert.coordinates)
        if (c.status == CoordStatus::ProvedByBound)
            used.insert(c.assumptions.begin(), c.assumptions.end());
    cert.assumptions.assign(used.begin(), used.end());

    cert.remainder = std::move(rem);
    if (cert.all_proved())
        cert.grade = cert.epsilon > Rational(0) ? Certificate::Grade::GeneralType
                                                : Certificate::Grade::NonNegativeKodaira;
    else
        cert.grade = Certificate::Grade::Fail;
    return cert;
}

const char* classification_name(Verdict::Classification c) {
    switch (c) {
        case Verdict::Classification::GeneralType: return "general type";
        case Verdict::Classification::NonNegativeKodaira: return "non-negative Kodaira dimension";
        case Verdict::Classification::IntermediateKodaira: return "intermediate Kodaira dimension";
        case Verdict::Classification::Uniruled: return "uniruled";
        case Verdict::Classification::Unirational: return "unirational";
        case Verdict::Classification::Unknown: return "unknown";
    }
    return "?";
}

namespace {

using Classification = Verdict::Classification;

Verdict make_verdict(Classification c, std::vector<std::string> just, long kappa = 0) {
    Verdict v;
    v.classification = c;
    v.kodaira = kappa;
    v.justification = std::move(just);
    return v;
}

/// GT when the ramification divisor vanishes: the canonical classes of the
/// quotient and the cover coincide, so known pointed-space ranges apply.
std::optional<Verdict> rule_transposition_free(int g, int n) {
    std::vector<std::string> just{"group contains no transposition: quotient map is unramified in codimension one"};
    if (g >= 23) {
        just.push_back("pointed space is of general type for g >= 23");
        return make_verdict(Classification::GeneralType, std::move(just));
    }
    auto t1 = table1_nmin(g);
    if (t1 && n >= *t1) {
        just.push_back("pointed space is of general type: n >= nmin(g) from the minimal-n table");
        return make_verdict(Classification::GeneralType, std::move(just));
    }
    return std::nullopt;
}

/// The documented catalog supplements for blocks where the closed route is
/// unavailable or known to be improvable.
std::optional<CatalogEntry> supplement_entry(int g, int nk) {
    if (nk == g - 1 && g >= 4) return catalog_entry("T", g);
    if (g == 20 && nk == 4) return catalog_entry("F", 20, 8);
    if (g == 22 && nk == 5) return catalog_entry("Ftilde", 22, 9);
    return std::nullopt;
}

Verdict classify_block_product(int g, const std::vector<int>& sizes);

Verdict classify_symmetric(int g, int n) {
    if (n > g)
        return make_verdict(Classification::Uniruled,
                            {"n > g: every degree-n effective divisor moves in a pencil, so the "
                             "symmetric fibers are uniruled"});
    if ((g == 10 || g == 11) && n != g)
        return make_verdict(Classification::Uniruled,
                            {"known uniruledness of the symmetric quotient for g in {10,11}, n != g"});
    if (g < 10)
        return make_verdict(Classification::Unirational,
                            {"known unirationality of the symmetric quotient for g < 10, n <= g"});
    if (n == g && g >= 12)
        return make_verdict(Classification::IntermediateKodaira,
                            {"Kodaira dimension of the symmetric quotient at n = g equals 3g-3"},
                            3L * g - 3);
    if (g >= 24)
        return make_verdict(Classification::GeneralType,
                            {"g >= 24, n <= g-1: weak additivity over the genus-g base with "
                             "general-type symmetric fiber powers"});
    auto t2 = table2_nmin(g);
    if (t2 && n >= *t2) {
        std::vector<std::string> just{"symmetric-quotient minimal-n table: nmin(g) <= n <= g-1"};
        if (g == 12)
            just.push_back("table row g=12 lies outside the stated range 13 <= g <= 23; the row is trusted");
        return make_verdict(Classification::GeneralType, std::move(just));
    }
    // fall through to the one-block certificate
    return classify_block_product(g, {n});
}

Verdict classify_block_product(int g, const std::vector<int>& sizes) {
    const int maxnk = *std::max_element(sizes.begin(), sizes.end());
    if (maxnk > g)
        return make_verdict(Classification::Uniruled,
                            {"a block exceeds the genus: that symmetric factor is uniruled, hence "
                             "so is the quotient"});
    if (g >= 24 && maxnk <= g - 1)
        return make_verdict(Classification::GeneralType,
                            {"g >= 24 with every block of size <= g-1: weak additivity over the "
                             "genus-g base"});
    if (g < 4 || maxnk < 2) return make_verdict(Classification::Unknown, {});

    std::optional<Rational> f_closed_value;
    try {
        f_closed_value = f_closed(g, sizes);
    } catch (const CriterionInapplicable&) {
    }

    if (maxnk <= g - 2 && f_closed_value && *f_closed_value <= Rational(13)) {
        Verdict v = make_verdict(
            Classification::GeneralType,
            {"block-product certificate: every block of size <= g-2, f = " +
             f_closed_value->str() + " <= 13"});
        v.certificate = build_certificate(CertificateInput::closed(g, sizes));
        return v;
    }

    // catalog supplements (T on blocks of size g-1 etc.)
    bool any_supplement = false, usable = true;
    std::vector<CatalogEntry> entries;
    for (int nk : sizes) {
        if (auto e = supplement_entry(g, nk)) {
            entries.push_back(*e);
            any_supplement = true;
        } else if (nk <= g - 2) {
            entries.push_back(weierstrass_entry(g, nk));
        } else {
            usable = false;  // a block of size g-1/g without a catalog entry
            break;
        }
    }
    if (any_supplement && usable) {
        Rational f = f_general(g, sizes, entries);
        if (f <= Rational(13)) {
            std::string names;
            for (const auto& e : entries) names += (names.empty() ? "" : ",") + e.name();
            Verdict v = make_verdict(Classification::GeneralType,
                                     {"block-product certificate with entries " + names +
                                      ": f = " + f.str() + " <= 13"});
            CertificateInput in;
            in.g = g;
            in.blocks = sizes;
            in.entries = std::move(entries);
            v.certificate = build_certificate(in);
            if (!v.certificate->all_proved())
                v.justification.push_back(
                    "some tail coordinates rely on coefficients steeper than the quoted -2 bound "
                    "(see certificate report)");
            return v;
        }
    }

    if (f_closed_value && *f_closed_value <= Rational(13)) {
        Verdict v = make_verdict(Classification::NonNegativeKodaira,
                                 {"a block of size g-1 or g forces eta = 0; f = " +
                                  f_closed_value->str() + " <= 13 still bounds the Kodaira "
                                  "dimension below by zero"});
        v.certificate = build_certificate(CertificateInput::closed(g, sizes));
        return v;
    }
    std::vector<std::string> just;
    if (f_closed_value) just.push_back("certificate value f = " + f_closed_value->str() + " exceeds 13");
    return make_verdict(Classification::Unknown, std::move(just));
}

Verdict via_subgroup(const Verdict& super, std::string container) {
    if (super.classification != Classification::GeneralType)
        return make_verdict(Classification::Unknown,
                            {"containing product " + container + " not classified as general type"});
    Verdict v = super;
    v.justification.insert(v.justification.begin(),
                           "subgroup of " + container + ", which gives a general-type quotient; "
                           "general type descends to subgroup quotients");
    return v;
}

std::string partition_name(const std::vector<int>& sizes) {
    std::string s = "S(";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(sizes[i]);
    }
    return s + ")";
}

}  // namespace

Verdict classify(int g, int n, const GroupSpec& group) {
    if (group.n != n) throw DomainError("classify: group degree does not match the point count");
    SpaceId{g, n}.validate();

    auto trivial_route = [&]() {
        if (auto v = rule_transposition_free(g, n)) return *v;
        return make_verdict(Classification::Unknown,
                            {"no applicable rule for the trivial-action range"});
    };

    switch (group.kind) {
        case GroupKind::Trivial:
            return trivial_route();
        case GroupKind::Alternating: {
            if (n < 3) return trivial_route();
            if (auto v = rule_transposition_free(g, n)) return *v;
            Verdict sym = classify_symmetric(g, n);
            if (sym.classification == Classification::GeneralType)
                return via_subgroup(sym, "the full symmetric group");
            return make_verdict(Classification::Unknown,
                                {"transposition-free rules inconclusive and the full symmetric "
                                 "quotient is not known to be of general type"});
        }
        case GroupKind::FullSymmetric:
            if (n < 2) return trivial_route();
            return classify_symmetric(g, n);
        case GroupKind::BlockProduct: {
            const auto& sizes = group.block_sizes;
            int maxnk = *std::max_element(sizes.begin(), sizes.end());
            if (maxnk < 2) return trivial_route();
            if (sizes.size() == 1) return classify_symmetric(g, n);
            return classify_block_product(g, sizes);
        }
        case GroupKind::Generated: {
            auto ts = transpositions(group);
            auto orbits = orbit_partition(group);
            auto sizes = orbits.sizes();
            int maxnk = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
            if (ts.empty()) {
                if (auto v = rule_transposition_free(g, n)) return *v;
                if (maxnk < 2)
                    return make_verdict(Classification::Unknown, {"trivial group, no applicable rule"});
                Verdict super = sizes.size() == 1 ? classify_symmetric(g, n)
                                                  : classify_block_product(g, sizes);
                return via_subgroup(super, partition_name(sizes));
            }
            Integer product_order = 1;
            for (int s : sizes) product_order *= factorial(s);
            if (group_order(group) == product_order) {
                // the group is exactly the symmetric product over its orbits
                if (maxnk < 2) return trivial_route();
                if (sizes.size() == 1) return classify_symmetric(g, n);
                return classify_block_product(g, sizes);
            }
            Verdict super = sizes.size() == 1 ? classify_symmetric(g, n)
                                              : classify_block_product(g, sizes);
            return via_subgroup(super, partition_name(sizes));
        }
    }
    throw DomainError("classify: bad group kind");
}

NminResult nmin_search(int g, int m, SearchMode mode) {
    if (g < 4) throw DomainError("nmin_search: need g >= 4");
    if (m < 1) throw DomainError("nmin_search: need at least one block");
    const int top = mode == SearchMode::Closed ? g - 2 : g - 1;
    for (int n = 2; n <= top; ++n) {
        std::vector<int> blocks(m, n);
        if (n <= g - 2) {
            if (f_closed(g, blocks) <= Rational(13)) return {n, "closed"};
        }
        if (mode == SearchMode::General) {
            if (auto e = supplement_entry(g, n)) {
                std::vector<CatalogEntry> entries(m, *e);
                if (f_general(g, blocks, entries) <= Rational(13)) return {n, e->name()};
            }
        }
    }
    return {std::nullopt, ""};
}

std::vector<DiffRow> reproduce_diff(int gmin, int gmax) {
    std::vector<DiffRow> rows;
    for (int g = std::max(gmin, 10); g <= std::min(gmax, 23); ++g) {
        DiffRow row;
        row.g = g;
        row.stored = *table3_nmin(g);
        auto closed = nmin_search(g, 2, SearchMode::Closed);
        auto general = nmin_search(g, 2, SearchMode::General);
        row.closed = closed.n;
        row.general = general.n;
        row.general_route = general.route;
        row.match = row.closed == row.stored || row.general == row.stored;
        if (g == 13) {
            row.annotation = "stored value was sourced from an external construction; the closed "
                             "route reaches it directly";
        } else if (g == 20) {
            row.annotation = "closed route gives 5; the F-entry certifies the stored 4";
        } else if (g == 22) {
            row.annotation = "closed route gives 6; the Ftilde-entry certifies the stored 5";
        } else if (!row.match) {
            std::string c = row.closed ? std::to_string(*row.closed) : "none";
            row.annotation = "recomputed value " + c + " differs from the stored table";
            if (row.closed && *row.closed < row.stored) row.annotation += " (improves on it)";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace modquot
