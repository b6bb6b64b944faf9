#include "modquot/pullback.hpp"

#include "modquot/errors.hpp"

#include <algorithm>
#include <numeric>

namespace modquot {

void ForgetfulMap::validate() const {
    source.validate();
    if (kept.empty()) throw DomainError("ForgetfulMap: kept set must be nonempty");
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] < 1 || kept[i] > source.n) throw DomainError("ForgetfulMap: label out of range");
        if (i > 0 && kept[i] <= kept[i - 1])
            throw DomainError("ForgetfulMap: kept labels must be strictly increasing");
    }
}

FullDivisorClass pullback_onepoint_oracle(const FullDivisorClass& target_class, int new_label) {
    const int n = target_class.space.n;
    if (new_label < 1 || new_label > n + 1)
        throw DomainError("pullback_onepoint_oracle: position out of range");
    SpaceId src{target_class.space.g, n + 1};
    src.validate();

    auto relabel = [new_label](int l) { return l < new_label ? l : l + 1; };
    auto relabel_set = [&](Subset s) {
        Subset out = 0;
        for (int l : subset_labels(s)) out |= Subset(1) << (relabel(l) - 1);
        return out;
    };

    FullDivisorClass out(src);
    out.lambda = target_class.lambda;
    out.irr = target_class.irr;
    const Subset new_bit = Subset(1) << (new_label - 1);
    for (const auto& [label, c] : target_class.psi) {
        int l = relabel(label);
        out.add_psi(l, c);
        out.add_boundary(0, (Subset(1) << (l - 1)) | new_bit, -c);
    }
    for (const auto& [key, c] : target_class.boundary) {
        Subset t = relabel_set(key.set);
        out.add_boundary(key.i, t, c);
        out.add_boundary(key.i, t | new_bit, c);
    }
    return out;
}

FullDivisorClass pullback_oracle(const FullDivisorClass& target_class, const ForgetfulMap& map) {
    map.validate();
    if (target_class.space.g != map.source.g ||
        target_class.space.n != static_cast<int>(map.kept.size()))
        throw DomainError("pullback_oracle: class does not live on the target");

    std::vector<int> forgotten;
    for (int l = 1; l <= map.source.n; ++l)
        if (!std::binary_search(map.kept.begin(), map.kept.end(), l)) forgotten.push_back(l);

    FullDivisorClass cur = target_class;
    std::vector<int> present = map.kept;  // final labels currently realized, sorted
    for (int v : forgotten) {
        auto pos = std::upper_bound(present.begin(), present.end(), v) - present.begin();
        cur = pullback_onepoint_oracle(cur, static_cast<int>(pos) + 1);
        present.insert(present.begin() + pos, v);
    }
    return cur;
}

ProfileDivisorClass pullback_aggregate(const ProfileDivisorClass& target_class, int block_index,
                                       const BlockPartition& ambient) {
    const auto sizes = ambient.sizes();
    if (block_index < 0 || block_index >= static_cast<int>(sizes.size()))
        throw DomainError("pullback_aggregate: bad block index");
    if (target_class.sizes().size() != 1 || target_class.sizes()[0] != sizes[block_index])
        throw DomainError("pullback_aggregate: target class must be single-block over the kept block");
    const int g = target_class.space.g;

    ProfileDivisorClass out(SpaceId{g, ambient.n}, ambient);
    out.lambda = target_class.lambda;
    out.irr = target_class.irr;
    out.psi_block[block_index] = target_class.psi_block[0];

    const CoefInterval psi_correction = target_class.psi_block[0].scaled(Rational(-1));
    const std::vector<int> target_sizes = target_class.sizes();

    for (const auto& p : enumerate_profiles(g, sizes)) {
        int total = std::accumulate(p.counts.begin(), p.counts.end(), 0);
        if (p.i == 0 && p.counts[block_index] == 1 && total >= 2)
            out.add_profile(p.i, p.counts, psi_correction);
        auto target_key = canonical_profile(g, target_sizes, p.i, {p.counts[block_index]});
        if (!target_key) continue;
        auto it = target_class.profiles.find(*target_key);
        if (it == target_class.profiles.end()) continue;
        std::set<std::string> tags;
        auto tag_it = target_class.bound_tags.find(*target_key);
        if (tag_it != target_class.bound_tags.end()) tags = tag_it->second;
        out.add_profile(p.i, p.counts, it->second, tags);
    }
    return out;
}

ProfileDivisorClass pullback_aggregate(const ProfileDivisorClass& target_class,
                                       const ForgetfulMap& map, const BlockPartition& ambient) {
    map.validate();
    for (std::size_t k = 0; k < ambient.blocks.size(); ++k)
        if (ambient.blocks[k] == map.kept)
            return pullback_aggregate(target_class, static_cast<int>(k), ambient);
    throw DomainError("pullback_aggregate: kept set is not a block of the partition");
}

FullDivisorClass omega_base_change(const FullDivisorClass& x) {
    FullDivisorClass out = x;
    const int n = x.space.n;
    if (n > 22) throw SizeCapExceeded("omega_base_change: subset basis too large");
    const Subset all = full_subset(n);
    if (x.psi.empty()) return out;
    for (Subset s = 3; s <= all; ++s) {
        if (subset_size(s) < 2) continue;
        Rational total(0);
        for (const auto& [label, c] : x.psi)
            if (subset_contains(s, label)) total += c;
        out.add_boundary(0, s, -total);
    }
    return out;
}

FullDivisorClass psi_to_omega(const FullDivisorClass& x) {
    FullDivisorClass out = x;
    const int n = x.space.n;
    if (n > 22) throw SizeCapExceeded("psi_to_omega: subset basis too large");
    const Subset all = full_subset(n);
    if (x.psi.empty()) return out;
    for (Subset s = 3; s <= all; ++s) {
        if (subset_size(s) < 2) continue;
        Rational total(0);
        for (const auto& [label, c] : x.psi)
            if (subset_contains(s, label)) total += c;
        out.add_boundary(0, s, total);
    }
    return out;
}

}  // namespace modquot
