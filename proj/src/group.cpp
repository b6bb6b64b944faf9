#include "modquot/group.hpp"

#include "modquot/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>

namespace modquot {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation Permutation::compose(const Permutation& then) const {
    Permutation out;
    out.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) out.images[i] = then.images[images[i]];
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] != static_cast<int>(i)) return false;
    return true;
}

std::optional<std::pair<int, int>> Permutation::as_transposition() const {
    int a = -1, b = -1;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] == static_cast<int>(i)) continue;
        if (a < 0) a = static_cast<int>(i);
        else if (b < 0) b = static_cast<int>(i);
        else return std::nullopt;
    }
    if (a < 0 || b < 0) return std::nullopt;
    if (images[a] != b || images[b] != a) return std::nullopt;
    return std::make_pair(a + 1, b + 1);
}

int BlockPartition::block_of(int label) const {
    for (std::size_t k = 0; k < blocks.size(); ++k)
        if (std::binary_search(blocks[k].begin(), blocks[k].end(), label)) return static_cast<int>(k);
    throw DomainError("BlockPartition: label not covered");
}

BlockPartition BlockPartition::consecutive(const std::vector<int>& sizes) {
    BlockPartition p;
    int next = 1;
    for (int s : sizes) {
        if (s < 1) throw DomainError("BlockPartition: block sizes must be positive");
        std::vector<int> block(s);
        std::iota(block.begin(), block.end(), next);
        next += s;
        p.blocks.push_back(std::move(block));
    }
    p.n = next - 1;
    return p;
}

BlockPartition BlockPartition::singletons(int n) {
    return consecutive(std::vector<int>(n, 1));
}

GroupSpec GroupSpec::block_product(std::vector<int> sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw DomainError("GroupSpec: block sizes must be positive");
        n += s;
    }
    return {n, GroupKind::BlockProduct, std::move(sizes), {}};
}

GroupSpec GroupSpec::generated(int n, std::vector<Permutation> gens) {
    for (const auto& p : gens)
        if (p.degree() != n) throw DomainError("GroupSpec: generator degree mismatch");
    return {n, GroupKind::Generated, {}, std::move(gens)};
}

namespace {

std::vector<Permutation> parse_cycles(std::string_view text, int n) {
    std::vector<Permutation> gens;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        // one generator: a product of cycles "(a b c)(d e)..."
        Permutation perm = Permutation::identity(n);
        bool saw_cycle = false;
        while (true) {
            skip_ws();
            if (pos >= text.size() || text[pos] != '(') break;
            ++pos;
            std::vector<int> cycle;
            while (true) {
                skip_ws();
                if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
                if (pos >= text.size()) throw ParseError("group: unterminated cycle");
                if (text[pos] == ')') { ++pos; break; }
                if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw ParseError("group: expected label in cycle");
                int v = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    v = v * 10 + (text[pos++] - '0');
                if (v < 1 || v > n) throw ParseError("group: cycle label out of range");
                cycle.push_back(v);
            }
            if (std::set<int>(cycle.begin(), cycle.end()).size() != cycle.size())
                throw ParseError("group: repeated label in cycle");
            Permutation c = Permutation::identity(n);
            for (std::size_t i = 0; i < cycle.size(); ++i)
                c.images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
            perm = perm.compose(c);
            saw_cycle = true;
        }
        if (!saw_cycle) throw ParseError("group: expected '(' in generator");
        gens.push_back(std::move(perm));
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ';') throw ParseError("group: expected ';' between generators");
            ++pos;
        }
    }
    if (gens.empty()) throw ParseError("group: no generators");
    return gens;
}

}  // namespace

GroupSpec parse_group(std::string_view text, int n) {
    if (n < 0) throw DomainError("parse_group: negative degree");
    auto number_suffix = [&](std::string_view s) -> std::optional<int> {
        if (s.empty()) return std::nullopt;
        int v = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return v;
    };
    if (text == "trivial") return GroupSpec::trivial(n);
    if (!text.empty() && (text[0] == 'S' || text[0] == 'A')) {
        // literal degree ("S12") or the schematic letter n ("Sn")
        auto rest = text.substr(1);
        auto v = rest == "n" ? std::optional<int>(n) : number_suffix(rest);
        if (v) {
            if (*v != n) throw ParseError("group: degree does not match --points");
            return text[0] == 'S' ? GroupSpec::full_symmetric(n) : GroupSpec::alternating(n);
        }
    }
    if (text.rfind("prod:", 0) == 0) {
        std::vector<int> sizes;
        std::string_view rest = text.substr(5);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            auto v = number_suffix(tok);
            if (!v || *v < 1) throw ParseError("group: bad block size");
            sizes.push_back(*v);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (sizes.empty()) throw ParseError("group: empty partition");
        if (std::accumulate(sizes.begin(), sizes.end(), 0) != n)
            throw ParseError("group: partition does not sum to the degree");
        return GroupSpec::block_product(std::move(sizes));
    }
    if (text.rfind("gen:", 0) == 0) return GroupSpec::generated(n, parse_cycles(text.substr(4), n));
    throw ParseError("group: unrecognized specification");
}

std::size_t group_enumeration_cap() {
    if (const char* env = std::getenv("MODQUOT_GROUP_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 10'000'000;
}

namespace {

std::vector<Permutation> closure(const std::vector<Permutation>& gens, int n, std::size_t cap) {
    std::set<Permutation> seen;
    std::queue<Permutation> todo;
    seen.insert(Permutation::identity(n));
    todo.push(Permutation::identity(n));
    while (!todo.empty()) {
        Permutation cur = std::move(todo.front());
        todo.pop();
        for (const auto& g : gens) {
            Permutation next = cur.compose(g);
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw GroupTooLarge("group enumeration exceeded cap");
                todo.push(std::move(next));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

void emit_symmetric(std::vector<int> labels, std::vector<Permutation>& out, Permutation base,
                    std::size_t cap) {
    // all permutations of `labels` within the fixed base permutation
    std::sort(labels.begin(), labels.end());
    std::vector<int> perm = labels;
    do {
        Permutation p = base;
        for (std::size_t i = 0; i < labels.size(); ++i) p.images[labels[i] - 1] = perm[i] - 1;
        out.push_back(std::move(p));
        if (out.size() > cap) throw GroupTooLarge("group enumeration exceeded cap");
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::vector<Permutation> enumerate_elements(const GroupSpec& g, std::size_t cap) {
    switch (g.kind) {
        case GroupKind::Trivial:
            return {Permutation::identity(g.n)};
        case GroupKind::FullSymmetric: {
            std::vector<Permutation> out;
            std::vector<int> all(g.n);
            std::iota(all.begin(), all.end(), 1);
            emit_symmetric(all, out, Permutation::identity(g.n), cap);
            return out;
        }
        case GroupKind::Alternating: {
            std::vector<Permutation> out;
            for (auto& p : enumerate_elements(GroupSpec::full_symmetric(g.n), cap)) {
                // parity via cycle count
                std::vector<bool> visited(g.n, false);
                int transposition_count = 0;
                for (int i = 0; i < g.n; ++i) {
                    if (visited[i]) continue;
                    int len = 0;
                    for (int j = i; !visited[j]; j = p.images[j]) {
                        visited[j] = true;
                        ++len;
                    }
                    transposition_count += len - 1;
                }
                if (transposition_count % 2 == 0) out.push_back(std::move(p));
            }
            return out;
        }
        case GroupKind::BlockProduct: {
            std::vector<Permutation> out{Permutation::identity(g.n)};
            auto part = BlockPartition::consecutive(g.block_sizes);
            for (const auto& block : part.blocks) {
                std::vector<Permutation> next;
                for (const auto& base : out) emit_symmetric(block, next, base, cap);
                out = std::move(next);
            }
            return out;
        }
        case GroupKind::Generated:
            return closure(g.generators, g.n, cap);
    }
    throw DomainError("enumerate_elements: bad kind");
}

Integer group_order(const GroupSpec& g, std::size_t cap) {
    switch (g.kind) {
        case GroupKind::Trivial:
            return 1;
        case GroupKind::FullSymmetric:
            return factorial(g.n);
        case GroupKind::Alternating:
            return g.n < 2 ? Integer(1) : factorial(g.n) / 2;
        case GroupKind::BlockProduct: {
            Integer o = 1;
            for (int s : g.block_sizes) o *= factorial(s);
            return o;
        }
        case GroupKind::Generated:
            return Integer(static_cast<unsigned long>(enumerate_elements(g, cap).size()));
    }
    throw DomainError("group_order: bad kind");
}

std::set<std::pair<int, int>> transpositions(const GroupSpec& g, std::size_t cap) {
    std::set<std::pair<int, int>> out;
    switch (g.kind) {
        case GroupKind::Trivial:
        case GroupKind::Alternating:
            return out;
        case GroupKind::FullSymmetric:
            for (int i = 1; i <= g.n; ++i)
                for (int j = i + 1; j <= g.n; ++j) out.emplace(i, j);
            return out;
        case GroupKind::BlockProduct: {
            int base = 0;
            for (int s : g.block_sizes) {
                for (int i = 1; i <= s; ++i)
                    for (int j = i + 1; j <= s; ++j) out.emplace(base + i, base + j);
                base += s;
            }
            return out;
        }
        case GroupKind::Generated: {
            for (const auto& p : enumerate_elements(g, cap))
                if (auto t = p.as_transposition()) out.insert(*t);
            return out;
        }
    }
    throw DomainError("transpositions: bad kind");
}

BlockPartition orbit_partition(const GroupSpec& g) {
    switch (g.kind) {
        case GroupKind::Trivial:
            return BlockPartition::singletons(g.n);
        case GroupKind::FullSymmetric:
            return BlockPartition::consecutive({g.n});
        case GroupKind::Alternating:
            // A_n is transitive for n >= 3, trivial below
            return g.n >= 3 ? BlockPartition::consecutive({g.n}) : BlockPartition::singletons(g.n);
        case GroupKind::BlockProduct:
            return BlockPartition::consecutive(g.block_sizes);
        case GroupKind::Generated: {
            // union-find over the generators; no enumeration needed
            std::vector<int> parent(g.n);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            for (const auto& p : g.generators)
                for (int i = 0; i < g.n; ++i) {
                    int a = find(i), b = find(p.images[i]);
                    if (a != b) parent[b] = a;
                }
            std::map<int, std::vector<int>> groups;
            for (int i = 0; i < g.n; ++i) groups[find(i)].push_back(i + 1);
            BlockPartition part;
            part.n = g.n;
            for (auto& [root, members] : groups) part.blocks.push_back(std::move(members));
            std::sort(part.blocks.begin(), part.blocks.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
            return part;
        }
    }
    throw DomainError("orbit_partition: bad kind");
}

}  // namespace modquot
