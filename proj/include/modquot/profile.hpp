#pragma once

#include "modquot/divisor.hpp"
#include "modquot/group.hpp"
#include "modquot/interval.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace modquot {

/// Orbit of boundary classes under a block product: node order i plus the
/// number of carried labels per block. Identified with (g-i, sizes-counts);
/// canonical form has i <= g/2 with the lexicographically larger counts
/// vector at i = g/2.
struct Profile {
    int i = 0;
    std::vector<int> counts;

    friend bool operator==(const Profile&, const Profile&) = default;
    friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// Canonical representative, or nullopt for the zero class (genus-0 side with
/// at most one point).
std::optional<Profile> canonical_profile(int g, const std::vector<int>& sizes, int i,
                                         std::vector<int> counts);

/// Number of distinct boundary classes in the profile's orbit.
Integer orbit_class_count(int g, const std::vector<int>& sizes, const Profile& p);

/// All canonical nonzero profiles of (g, partition), sorted.
std::vector<Profile> enumerate_profiles(int g, const std::vector<int>& sizes);

/// G-invariant divisor class over the profile basis. Coefficients are
/// intervals: exact classes have degenerate entries, bounded higher-order
/// families carry [-inf, hi]. The coefficient stored for a profile is the
/// per-class coefficient of each boundary class in its orbit.
struct ProfileDivisorClass {
    SpaceId space;
    BlockPartition partition;
    CoefInterval lambda = CoefInterval::exact(Rational(0));
    CoefInterval irr = CoefInterval::exact(Rational(0));
    std::vector<CoefInterval> psi_block;                  // per-point coefficient, one per block
    std::map<Profile, CoefInterval> profiles;             // canonical keys; exact zeros dropped
    std::map<Profile, std::set<std::string>> bound_tags;  // audit tags for non-exact entries

    ProfileDivisorClass() = default;
    ProfileDivisorClass(SpaceId s, BlockPartition part);

    const std::vector<int>& sizes() const { return sizes_; }

    CoefInterval profile_coeff(const Profile& key) const {
        auto it = profiles.find(key);
        return it == profiles.end() ? CoefInterval::exact(Rational(0)) : it->second;
    }

    /// Accumulates on the canonical representative of (i, counts); zero-class
    /// targets are dropped.
    void add_profile(int i, std::vector<int> counts, const CoefInterval& c,
                     const std::set<std::string>& tags = {});

    ProfileDivisorClass& add_scaled(const Rational& c, const ProfileDivisorClass& x);

    bool all_exact() const;

private:
    std::vector<int> sizes_;
};

/// Group average (1/|G|) sum of sigma.X over the symmetric block product of
/// the partition, written in the profile basis. Exact on the nose for
/// already-invariant classes.
ProfileDivisorClass symmetrize(const FullDivisorClass& x, const BlockPartition& partition);

/// Inverse of symmetrize on invariant classes: every boundary class receives
/// its profile's coefficient. Requires all intervals degenerate and a small
/// subset basis.
FullDivisorClass expand(const ProfileDivisorClass& p);

/// sigma.X: relabels psi and boundary coefficients.
FullDivisorClass apply_permutation(const FullDivisorClass& x, const Permutation& sigma);

/// Brute-force (1/|G|) sum over all group elements; test oracle for symmetrize.
FullDivisorClass group_average(const FullDivisorClass& x, const GroupSpec& g);

/// The canonical class 13 lambda + psi - 2 delta over the profile basis.
ProfileDivisorClass canonical_class_profile(int g, const BlockPartition& partition);

/// Ramification class of the quotient map: one delta_{0,{i,j}} per
/// transposition of G, over the orbit partition. Throws DomainError when the
/// transposition set is not block-symmetric (only possible for Generated).
ProfileDivisorClass ramification_class(int g, const GroupSpec& group);

/// K_G = K - R: 13 lambda + psi - 2 delta - sum of within-group pair classes.
ProfileDivisorClass canonical_class_KG(int g, const GroupSpec& group);

}  // namespace modquot
