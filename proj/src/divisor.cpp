#include "modquot/divisor.hpp"

#include "modquot/errors.hpp"

namespace modquot {

namespace {
constexpr long kSubsetBasisCap = 1u << 22;  // 2^n * g guard for subset-basis work
}

Rational FullDivisorClass::boundary_coeff(int i, Subset set) const {
    auto key = canonical_boundary(space.g, space.n, i, set);
    if (!key) return Rational(0);
    return boundary_coeff(*key);
}

void FullDivisorClass::add_psi(int label, const Rational& c) {
    if (label < 1 || label > space.n) throw DomainError("psi label out of range");
    if (c.is_zero()) return;
    auto [it, inserted] = psi.emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) psi.erase(it);
    }
}

void FullDivisorClass::add_boundary(int i, Subset set, const Rational& c) {
    if (c.is_zero()) return;
    auto key = canonical_boundary(space.g, space.n, i, set);
    if (!key) return;
    auto [it, inserted] = boundary.emplace(*key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) boundary.erase(it);
    }
}

FullDivisorClass& FullDivisorClass::add_scaled(const Rational& c, const FullDivisorClass& x) {
    if (x.space != space) throw DomainError("linear_combine: mixed spaces");
    if (c.is_zero()) return *this;
    lambda += c * x.lambda;
    irr += c * x.irr;
    for (const auto& [label, q] : x.psi) add_psi(label, c * q);
    for (const auto& [key, q] : x.boundary) {
        auto [it, inserted] = boundary.emplace(key, c * q);
        if (!inserted) {
            it->second += c * q;
            if (it->second.is_zero()) boundary.erase(it);
        }
    }
    return *this;
}

FullDivisorClass operator+(FullDivisorClass a, const FullDivisorClass& b) {
    return a.add_scaled(Rational(1), b);
}

FullDivisorClass operator-(FullDivisorClass a, const FullDivisorClass& b) {
    return a.add_scaled(Rational(-1), b);
}

FullDivisorClass operator*(const Rational& c, const FullDivisorClass& x) {
    FullDivisorClass out(x.space);
    out.add_scaled(c, x);
    return out;
}

FullDivisorClass linear_combine(const std::vector<std::pair<Rational, FullDivisorClass>>& terms) {
    if (terms.empty()) throw DomainError("linear_combine: no terms");
    FullDivisorClass out(terms.front().second.space);
    for (const auto& [c, x] : terms) out.add_scaled(c, x);
    return out;
}

std::vector<BoundaryIndex> all_boundary_indices(SpaceId space) {
    space.validate();
    const int g = space.g, n = space.n;
    if (n > 22 || (long(1) << n) * (g / 2 + 1) > kSubsetBasisCap)
        throw SizeCapExceeded("all_boundary_indices: subset basis too large");
    std::vector<BoundaryIndex> out;
    const Subset all = full_subset(n);
    for (int i = 0; 2 * i <= g; ++i) {
        for (Subset s = 0;; ++s) {
            auto key = canonical_boundary(g, n, i, s);
            if (key && key->i == i && key->set == s) out.push_back(*key);
            if (s == all) break;
        }
    }
    return out;
}

FullDivisorClass canonical_class(SpaceId space) {
    FullDivisorClass k(space);
    k.lambda = Rational(13);
    k.irr = Rational(-2);
    for (int l = 1; l <= space.n; ++l) k.add_psi(l, Rational(1));
    for (const auto& b : all_boundary_indices(space)) k.boundary.emplace(b, Rational(-2));
    return k;
}

FullDivisorClass lambda_class(SpaceId space) {
    FullDivisorClass x(space);
    x.lambda = Rational(1);
    return x;
}

FullDivisorClass irr_class(SpaceId space) {
    FullDivisorClass x(space);
    x.irr = Rational(1);
    return x;
}

FullDivisorClass psi_class(SpaceId space, int label) {
    FullDivisorClass x(space);
    x.add_psi(label, Rational(1));
    return x;
}

FullDivisorClass boundary_class(SpaceId space, int i, Subset set) {
    FullDivisorClass x(space);
    x.add_boundary(i, set, Rational(1));
    return x;
}

}  // namespace modquot
