#pragma once

#include "modquot/divisor.hpp"
#include "modquot/profile.hpp"

#include <vector>

namespace modquot {

/// Forgetful map (g, n) -> (g, |kept|) dropping all labels outside `kept`.
struct ForgetfulMap {
    SpaceId source;
    std::vector<int> kept;  // strictly increasing labels of the source

    SpaceId target() const { return SpaceId{source.g, static_cast<int>(kept.size())}; }
    void validate() const;
};

/// One-point pullback along the map (g, n+1) -> (g, n) forgetting the point at
/// position `new_label`; old labels >= new_label shift up by one.
/// lambda -> lambda, delta_irr -> delta_irr, psi_i -> psi_i - delta_{0,{i,new}},
/// delta_{i,T} -> delta_{i,T} + delta_{i,T+new}. Subset-basis, test-oracle path.
FullDivisorClass pullback_onepoint_oracle(const FullDivisorClass& target_class, int new_label);

/// Iterated one-point pullback realizing a full forgetful map: the input lives
/// on the target (labels 1..|kept|), the result on the source.
FullDivisorClass pullback_oracle(const FullDivisorClass& target_class, const ForgetfulMap& map);

/// Aggregate pullback of a block-symmetric class along the forgetful map onto
/// one ambient block (the production path, polynomial in n):
///   pi* lambda = lambda, pi* delta_irr = delta_irr,
///   pi* psi = sum_{i in S} psi_i - sum delta^{S,1}_{0,s},
///   pi* delta_{i,s} = sum_{l >= 0} delta^{S,s}_{i,s+l}.
/// Interval coefficients transfer to every image profile.
ProfileDivisorClass pullback_aggregate(const ProfileDivisorClass& target_class, int block_index,
                                       const BlockPartition& ambient);

/// Convenience overload: kept must coincide with one ambient block.
ProfileDivisorClass pullback_aggregate(const ProfileDivisorClass& target_class,
                                       const ForgetfulMap& map, const BlockPartition& ambient);

/// Reinterprets the psi slots of `x` as omega coefficients
/// (omega_i = psi_i - sum_{S containing i} delta_{0,S}) and rewrites the class
/// over the psi basis.
FullDivisorClass omega_base_change(const FullDivisorClass& x);

/// Inverse rewrite, psi basis -> omega coefficients; round trip is the identity.
FullDivisorClass psi_to_omega(const FullDivisorClass& x);

}  // namespace modquot
