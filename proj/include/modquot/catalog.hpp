#pragma once

#include "modquot/profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modquot {

// Audit tags attached to interval-bounded coefficient families. Declared
// bounds (not quoted from the sources) surface in certificate assumption
// lists so a reader can see where a proof leaned on them.
inline constexpr const char* kTagSlopeTail = "slope-tail<=-1 (declared)";
inline constexpr const char* kTagSporadicTail = "sporadic-slope-tail (declared)";
inline constexpr const char* kTagWeierstrassHigher = "weierstrass-higher-order<=0";

enum class SlopeProvenance { BrillNoether, GiesekerPetri, Sporadic };

/// Minimal known slope of an effective symmetric divisor on the unpointed
/// space of genus g.
struct SlopeEntry {
    int g = 0;
    Rational slope;
    SlopeProvenance provenance = SlopeProvenance::BrillNoether;
};

const char* provenance_name(SlopeProvenance p);

/// Minimum over the applicable slope formulas; g >= 4.
SlopeEntry slope_min(int g);

/// Weight vector for the pointed Weierstrass divisor: g = k*m + r with
/// weights k+1 (first r points) and k (the rest), the most balanced split.
struct WeierstrassParams {
    int g = 0, m = 0, k = 0, r = 0;
    std::vector<int> weights;
};

WeierstrassParams weierstrass_params(int g, int m);

/// The Weierstrass divisor on (g, m) over the weight partition (r, m-r):
/// tracked lambda/psi/pair coefficients plus bounded tails.
struct WeierstrassFactor {
    WeierstrassParams params;
    Rational omega_high, omega_low;      // omega coefficients by weight class
    Rational pair_hh, pair_hl, pair_ll;  // explicit pair terms before base change
    ProfileDivisorClass cls;             // psi basis, with tail bounds
};

WeierstrassFactor weierstrass_factor(int g, int m);

/// Sum over all (S, T) projections to (g, m): tracked coefficients of
/// -w_lambda*lambda + w_psi*psi - sum_s w_s*delta_{0,s} - tails.
struct WeierstrassSums {
    Rational w_lambda, w_psi, w_2;
};

WeierstrassSums weierstrass_summed(int g, int n, int m);

/// Closed forms for the normalized coefficients (m = min(g, n)).
Rational weierstrass_a(int g, int n);  // n >= 1
Rational weierstrass_b(int g, int n);  // n >= 2

/// Normalized class W_{g,n} with psi coefficient 1: stored lambda coefficient
/// is -a (a > 0), delta_{0,2} coefficient -b, delta_{0,s>=3} in [-inf,-s],
/// higher-genus families in [-inf,0].
struct WeierstrassNormalized {
    Rational a;
    std::optional<Rational> b;  // absent when n == 1 (no pairs)
    ProfileDivisorClass cls;    // single block on (g, n)
};

WeierstrassNormalized weierstrass_normalized(int g, int n);

/// A per-block effective divisor template in the normalized shape
/// a*lambda + psi - b_irr*delta_irr - b_pair*delta_{0,2} + bounded tail.
struct CatalogEntry {
    enum class Kind { Weierstrass, T, F, Ftilde };
    Kind kind = Kind::Weierstrass;
    SpaceId space;
    int m = 0;                      // parameter of F / Ftilde
    Rational a;                     // lambda coefficient as stored (signed)
    Rational b_irr;                 // subtracted on delta_irr
    std::optional<Rational> b_pair; // subtracted on delta_{0,2}

    std::string name() const;
    /// b_pair - 3, the entry's contribution to the minimum in epsilon.
    Rational epsilon_part() const;
    /// The class over the single-block profile basis of its own space.
    ProfileDivisorClass single_block_class() const;
};

CatalogEntry weierstrass_entry(int g, int nk);

/// name in {"T", "F", "Ftilde"}; m is required for F / Ftilde.
/// T_g lives on n = g-1, F_{g,m} on n = g-2m >= 2, Ftilde_{g,m} on n = g-2m+1 >= 3.
CatalogEntry catalog_entry(const std::string& name, int g, int m = 0);

/// W_{g,n} written over an ambient block partition (it is fully symmetric, so
/// only the total count of a profile matters).
ProfileDivisorClass ambient_weierstrass(int g, const BlockPartition& partition);

/// Pullback of the minimal-slope divisor from the unpointed space:
/// s*lambda - delta_irr, with every higher-genus family bounded by -1
/// (declared assumption, tagged).
ProfileDivisorClass ambient_slope_pullback(const SlopeEntry& d, const BlockPartition& partition, int g);

}  // namespace modquot
