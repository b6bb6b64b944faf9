#pragma once

#include "modquot/errors.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace modquot {

/// The moduli space of n-pointed genus-g stable curves.
struct SpaceId {
    int g = 2;
    int n = 0;

    void validate() const {
        if (g < 2) throw DomainError("SpaceId: genus must be >= 2");
        if (n < 0 || n > 62) throw DomainError("SpaceId: marked points out of range");
    }

    friend bool operator==(const SpaceId&, const SpaceId&) = default;
    friend auto operator<=>(const SpaceId&, const SpaceId&) = default;
};

/// Subsets of the label set {1..n} as bit masks (bit l-1 <-> label l).
using Subset = std::uint64_t;

inline int subset_size(Subset s) { return std::popcount(s); }

inline Subset full_subset(int n) { return n == 0 ? 0 : (~Subset(0) >> (64 - n)); }

inline Subset complement(Subset s, int n) { return full_subset(n) & ~s; }

inline bool subset_contains(Subset s, int label) { return (s >> (label - 1)) & 1u; }

inline Subset subset_of(const std::vector<int>& labels) {
    Subset s = 0;
    for (int l : labels) {
        if (l < 1 || l > 62) throw DomainError("subset label out of range");
        s |= Subset(1) << (l - 1);
    }
    return s;
}

inline std::vector<int> subset_labels(Subset s) {
    std::vector<int> out;
    for (int l = 1; s; ++l, s >>= 1)
        if (s & 1u) out.push_back(l);
    return out;
}

/// Canonical index of a boundary divisor: node order i and the label set S
/// carried by the genus-i side, with (i, S) ~ (g-i, complement of S).
struct BoundaryIndex {
    int i = 0;
    Subset set = 0;

    friend bool operator==(const BoundaryIndex&, const BoundaryIndex&) = default;
    friend auto operator<=>(const BoundaryIndex&, const BoundaryIndex&) = default;
};

/// Canonical representative of (i, S) on the space (g, n), or nullopt for the
/// zero class (a genus-0 side carrying at most one marked point).
/// Canonical form: i <= g/2; for even g at i = g/2 the representative with
/// label 1 on the genus-i side is chosen (for n = 0 both representatives
/// coincide and the index is kept as-is).
inline std::optional<BoundaryIndex> canonical_boundary(int g, int n, int i, Subset set) {
    SpaceId{g, n}.validate();
    if (i < 0 || i > g) throw DomainError("canonical_boundary: node order out of range");
    if ((set & ~full_subset(n)) != 0) throw DomainError("canonical_boundary: label set out of range");

    if (2 * i > g) {
        i = g - i;
        set = complement(set, n);
    } else if (2 * i == g && n > 0 && !subset_contains(set, 1)) {
        set = complement(set, n);
    }
    if (i == 0 && subset_size(set) <= 1) return std::nullopt;
    return BoundaryIndex{i, set};
}

}  // namespace modquot
