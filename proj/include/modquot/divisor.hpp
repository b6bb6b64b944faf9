#pragma once

#include "modquot/rational.hpp"
#include "modquot/space.hpp"

#include <map>
#include <utility>
#include <vector>

namespace modquot {

/// A divisor class on (g, n) with exact rational coefficients over the basis
/// {lambda, psi_1..psi_n, delta_irr, delta_{i,S}}. Boundary keys are always
/// canonical and zero entries are dropped, so equality is map equality.
struct FullDivisorClass {
    SpaceId space;
    Rational lambda;
    Rational irr;
    std::map<int, Rational> psi;                   // label -> coefficient
    std::map<BoundaryIndex, Rational> boundary;    // canonical, sparse

    explicit FullDivisorClass(SpaceId s = SpaceId{}) : space(s) { space.validate(); }

    Rational psi_coeff(int label) const {
        auto it = psi.find(label);
        return it == psi.end() ? Rational(0) : it->second;
    }
    Rational boundary_coeff(int i, Subset set) const;
    Rational boundary_coeff(const BoundaryIndex& b) const {
        auto it = boundary.find(b);
        return it == boundary.end() ? Rational(0) : it->second;
    }

    void add_lambda(const Rational& c) { lambda += c; }
    void add_irr(const Rational& c) { irr += c; }
    void add_psi(int label, const Rational& c);
    /// Accumulates c on the canonical representative of (i, S); adding to the
    /// zero class is a no-op.
    void add_boundary(int i, Subset set, const Rational& c);

    FullDivisorClass& add_scaled(const Rational& c, const FullDivisorClass& x);
    bool is_zero() const { return lambda.is_zero() && irr.is_zero() && psi.empty() && boundary.empty(); }

    friend bool operator==(const FullDivisorClass&, const FullDivisorClass&) = default;
};

FullDivisorClass operator+(FullDivisorClass a, const FullDivisorClass& b);
FullDivisorClass operator-(FullDivisorClass a, const FullDivisorClass& b);
FullDivisorClass operator*(const Rational& c, const FullDivisorClass& x);

/// Exact linear combination; all terms must live on one space.
FullDivisorClass linear_combine(const std::vector<std::pair<Rational, FullDivisorClass>>& terms);

/// All canonical boundary indices of (g, n), sorted. Exponential in n; guarded
/// by the same cap as subset-basis expansion.
std::vector<BoundaryIndex> all_boundary_indices(SpaceId space);

/// 13*lambda + sum psi_i - 2*(delta_irr + every boundary class).
FullDivisorClass canonical_class(SpaceId space);

/// Basis classes, for building test inputs.
FullDivisorClass lambda_class(SpaceId space);
FullDivisorClass irr_class(SpaceId space);
FullDivisorClass psi_class(SpaceId space, int label);
FullDivisorClass boundary_class(SpaceId space, int i, Subset set);

}  // namespace modquot
