#include "modquot/profile.hpp"

#include "modquot/errors.hpp"

#include <algorithm>
#include <numeric>

namespace modquot {

namespace {

std::vector<int> flip_counts(const std::vector<int>& sizes, const std::vector<int>& counts) {
    std::vector<int> out(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) out[k] = sizes[k] - counts[k];
    return out;
}

int total(const std::vector<int>& counts) {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

/// Odometer over all count vectors 0 <= c_k <= n_k; returns false when done.
bool next_counts(std::vector<int>& c, const std::vector<int>& sizes) {
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < sizes[k]) {
            ++c[k];
            std::fill(c.begin(), c.begin() + k, 0);
            return true;
        }
    }
    return false;
}

std::vector<int> counts_of_subset(const BlockPartition& part, Subset s) {
    std::vector<int> c(part.blocks.size(), 0);
    for (std::size_t k = 0; k < part.blocks.size(); ++k)
        for (int label : part.blocks[k])
            if (subset_contains(s, label)) ++c[k];
    return c;
}

}  // namespace

std::optional<Profile> canonical_profile(int g, const std::vector<int>& sizes, int i,
                                         std::vector<int> counts) {
    if (i < 0 || i > g) throw DomainError("canonical_profile: node order out of range");
    if (counts.size() != sizes.size()) throw DomainError("canonical_profile: counts/blocks mismatch");
    for (std::size_t k = 0; k < counts.size(); ++k)
        if (counts[k] < 0 || counts[k] > sizes[k])
            throw DomainError("canonical_profile: count out of range");

    if (2 * i > g) {
        i = g - i;
        counts = flip_counts(sizes, counts);
    } else if (2 * i == g) {
        auto flipped = flip_counts(sizes, counts);
        if (std::lexicographical_compare(counts.begin(), counts.end(), flipped.begin(), flipped.end()))
            counts = std::move(flipped);
    }
    if (i == 0 && total(counts) <= 1) return std::nullopt;
    return Profile{i, std::move(counts)};
}

Integer orbit_class_count(int g, const std::vector<int>& sizes, const Profile& p) {
    Integer count = 1;
    for (std::size_t k = 0; k < sizes.size(); ++k) count *= binomial(sizes[k], p.counts[k]);
    if (2 * p.i == g && p.counts == flip_counts(sizes, p.counts)) count /= 2;
    return count;
}

std::vector<Profile> enumerate_profiles(int g, const std::vector<int>& sizes) {
    std::vector<Profile> out;
    for (int i = 0; 2 * i <= g; ++i) {
        std::vector<int> c(sizes.size(), 0);
        do {
            auto p = canonical_profile(g, sizes, i, c);
            if (p && p->i == i && p->counts == c) out.push_back(*p);
        } while (next_counts(c, sizes));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ProfileDivisorClass::ProfileDivisorClass(SpaceId s, BlockPartition part)
    : space(s), partition(std::move(part)) {
    space.validate();
    if (partition.n != space.n) throw DomainError("ProfileDivisorClass: partition does not cover the space");
    sizes_ = partition.sizes();
    psi_block.assign(sizes_.size(), CoefInterval::exact(Rational(0)));
}

void ProfileDivisorClass::add_profile(int i, std::vector<int> counts, const CoefInterval& c,
                                      const std::set<std::string>& tags) {
    auto key = canonical_profile(space.g, sizes_, i, std::move(counts));
    if (!key) return;
    auto it = profiles.find(*key);
    if (it == profiles.end()) {
        if (!c.is_exact_zero()) profiles.emplace(*key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_exact_zero()) profiles.erase(it);
    }
    if (!tags.empty() && !c.is_exact()) bound_tags[*key].insert(tags.begin(), tags.end());
}

ProfileDivisorClass& ProfileDivisorClass::add_scaled(const Rational& c, const ProfileDivisorClass& x) {
    if (x.space != space || x.sizes_ != sizes_)
        throw DomainError("ProfileDivisorClass: mixed spaces or partitions");
    if (c.is_zero()) return *this;
    lambda = lambda + x.lambda.scaled(c);
    irr = irr + x.irr.scaled(c);
    for (std::size_t k = 0; k < psi_block.size(); ++k)
        psi_block[k] = psi_block[k] + x.psi_block[k].scaled(c);
    for (const auto& [key, v] : x.profiles) {
        auto it = profiles.find(key);
        if (it == profiles.end()) {
            auto scaled = v.scaled(c);
            if (!scaled.is_exact_zero()) profiles.emplace(key, scaled);
        } else {
            it->second = it->second + v.scaled(c);
            if (it->second.is_exact_zero()) profiles.erase(it);
        }
        if (!v.is_exact()) {
            auto tag_it = x.bound_tags.find(key);
            if (tag_it != x.bound_tags.end())
                bound_tags[key].insert(tag_it->second.begin(), tag_it->second.end());
        }
    }
    return *this;
}

bool ProfileDivisorClass::all_exact() const {
    if (!lambda.is_exact() || !irr.is_exact()) return false;
    for (const auto& p : psi_block)
        if (!p.is_exact()) return false;
    for (const auto& [key, v] : profiles)
        if (!v.is_exact()) return false;
    return true;
}

ProfileDivisorClass symmetrize(const FullDivisorClass& x, const BlockPartition& partition) {
    ProfileDivisorClass out(x.space, partition);
    out.lambda = CoefInterval::exact(x.lambda);
    out.irr = CoefInterval::exact(x.irr);
    for (std::size_t k = 0; k < partition.blocks.size(); ++k) {
        Rational sum(0);
        for (int label : partition.blocks[k]) sum += x.psi_coeff(label);
        out.psi_block[k] =
            CoefInterval::exact(sum / Rational(static_cast<long>(partition.blocks[k].size())));
    }
    std::map<Profile, Rational> sums;
    for (const auto& [key, c] : x.boundary) {
        auto p = canonical_profile(x.space.g, out.sizes(), key.i, counts_of_subset(partition, key.set));
        if (!p) throw DomainError("symmetrize: stored zero class");
        sums[*p] += c;
    }
    for (auto& [p, sum] : sums) {
        Integer orbit = orbit_class_count(x.space.g, out.sizes(), p);
        out.add_profile(p.i, p.counts, CoefInterval::exact(sum / Rational(orbit, Integer(1))));
    }
    return out;
}

FullDivisorClass expand(const ProfileDivisorClass& p) {
    if (!p.all_exact()) throw DomainError("expand: class has non-degenerate intervals");
    FullDivisorClass out(p.space);
    out.lambda = p.lambda.exact_value();
    out.irr = p.irr.exact_value();
    for (std::size_t k = 0; k < p.partition.blocks.size(); ++k)
        for (int label : p.partition.blocks[k]) out.add_psi(label, p.psi_block[k].exact_value());
    for (const auto& key : all_boundary_indices(p.space)) {
        auto prof = canonical_profile(p.space.g, p.sizes(), key.i, counts_of_subset(p.partition, key.set));
        if (!prof) continue;
        Rational c = p.profile_coeff(*prof).exact_value();
        if (!c.is_zero()) out.boundary.emplace(key, c);
    }
    return out;
}

FullDivisorClass apply_permutation(const FullDivisorClass& x, const Permutation& sigma) {
    if (sigma.degree() != x.space.n) throw DomainError("apply_permutation: degree mismatch");
    FullDivisorClass out(x.space);
    out.lambda = x.lambda;
    out.irr = x.irr;
    for (const auto& [label, c] : x.psi) out.add_psi(sigma.apply(label), c);
    for (const auto& [key, c] : x.boundary) {
        Subset image = 0;
        for (int label : subset_labels(key.set)) image |= Subset(1) << (sigma.apply(label) - 1);
        out.add_boundary(key.i, image, c);
    }
    return out;
}

FullDivisorClass group_average(const FullDivisorClass& x, const GroupSpec& g) {
    auto elements = enumerate_elements(g);
    FullDivisorClass sum(x.space);
    for (const auto& sigma : elements) sum.add_scaled(Rational(1), apply_permutation(x, sigma));
    return Rational(1, static_cast<long>(elements.size())) * sum;
}

ProfileDivisorClass canonical_class_profile(int g, const BlockPartition& partition) {
    ProfileDivisorClass out(SpaceId{g, partition.n}, partition);
    out.lambda = CoefInterval::exact(Rational(13));
    out.irr = CoefInterval::exact(Rational(-2));
    for (auto& c : out.psi_block) c = CoefInterval::exact(Rational(1));
    for (const auto& p : enumerate_profiles(g, out.sizes()))
        out.profiles.emplace(p, CoefInterval::exact(Rational(-2)));
    return out;
}

ProfileDivisorClass ramification_class(int g, const GroupSpec& group) {
    BlockPartition part = orbit_partition(group);
    ProfileDivisorClass out(SpaceId{g, group.n}, part);
    auto pairs = transpositions(group);
    std::vector<long> per_block(part.blocks.size(), 0);
    for (const auto& [a, b] : pairs) {
        int ka = part.block_of(a), kb = part.block_of(b);
        if (ka != kb) throw DomainError("ramification_class: transposition across orbits");
        ++per_block[ka];
    }
    for (std::size_t k = 0; k < part.blocks.size(); ++k) {
        long size = static_cast<long>(part.blocks[k].size());
        long all_pairs = size * (size - 1) / 2;
        if (per_block[k] == 0) continue;
        if (per_block[k] != all_pairs)
            throw DomainError("ramification_class: transposition set is not block-symmetric over the orbit partition");
        std::vector<int> counts(part.blocks.size(), 0);
        counts[k] = 2;
        out.add_profile(0, counts, CoefInterval::exact(Rational(1)));
    }
    return out;
}

ProfileDivisorClass canonical_class_KG(int g, const GroupSpec& group) {
    ProfileDivisorClass r = ramification_class(g, group);
    ProfileDivisorClass kg = canonical_class_profile(g, r.partition);
    kg.add_scaled(Rational(-1), r);
    return kg;
}

}  // namespace modquot
