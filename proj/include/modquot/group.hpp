#pragma once

#include "modquot/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modquot {

/// Permutation of {1..n}, stored as 0-based images: image(l) = perm[l-1]+1.
struct Permutation {
    std::vector<int> images;  // 0-based

    static Permutation identity(int n);
    int degree() const { return static_cast<int>(images.size()); }
    int apply(int label) const { return images[label - 1] + 1; }
    Permutation compose(const Permutation& then) const;  // this first, `then` second
    bool is_identity() const;
    /// nullopt unless the permutation is a single 2-cycle.
    std::optional<std::pair<int, int>> as_transposition() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

enum class GroupKind { Trivial, FullSymmetric, Alternating, BlockProduct, Generated };

/// Ordered partition of {1..n} into disjoint blocks covering everything.
struct BlockPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;  // each sorted ascending

    std::vector<int> sizes() const {
        std::vector<int> s;
        s.reserve(blocks.size());
        for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
        return s;
    }
    /// block index (0-based) containing the label
    int block_of(int label) const;
    static BlockPartition consecutive(const std::vector<int>& sizes);
    static BlockPartition singletons(int n);
};

/// The subgroup of S_n acting on the marked-point labels.
struct GroupSpec {
    int n = 0;
    GroupKind kind = GroupKind::Trivial;
    std::vector<int> block_sizes;          // BlockProduct: consecutive blocks of these sizes
    std::vector<Permutation> generators;   // Generated

    static GroupSpec trivial(int n) { return {n, GroupKind::Trivial, {}, {}}; }
    static GroupSpec full_symmetric(int n) { return {n, GroupKind::FullSymmetric, {}, {}}; }
    static GroupSpec alternating(int n) { return {n, GroupKind::Alternating, {}, {}}; }
    static GroupSpec block_product(std::vector<int> sizes);
    static GroupSpec generated(int n, std::vector<Permutation> gens);
};

/// Grammar: `Sn | An | trivial | prod:n1,n2,... | gen:(a b ...)(...) ; ...`
/// where the literal n in Sn/An must equal the ambient degree.
GroupSpec parse_group(std::string_view text, int n);

/// Default enumeration cap for generator-presented groups; the environment
/// variable MODQUOT_GROUP_CAP overrides it.
std::size_t group_enumeration_cap();

/// All elements of the group (BFS closure for Generated). Throws GroupTooLarge
/// past the cap.
std::vector<Permutation> enumerate_elements(const GroupSpec& g,
                                            std::size_t cap = group_enumeration_cap());

Integer group_order(const GroupSpec& g, std::size_t cap = group_enumeration_cap());

/// The exact set of transpositions contained in the group, as pairs i < j.
std::set<std::pair<int, int>> transpositions(const GroupSpec& g,
                                             std::size_t cap = group_enumeration_cap());

/// Partition of {1..n} into orbits; the group embeds in the symmetric block
/// product over these blocks. Blocks are ordered by smallest member
/// (BlockProduct keeps its given block order).
BlockPartition orbit_partition(const GroupSpec& g);

}  // namespace modquot
