#pragma once

#include "modquot/rational.hpp"

#include <stdexcept>
#include <string>

namespace modquot {

/// One endpoint of a coefficient interval: finite rational or an infinity.
struct Bound {
    enum Kind { NegInf, Finite, PosInf };
    Kind kind = Finite;
    Rational value;

    static Bound neg_inf() { return {NegInf, Rational(0)}; }
    static Bound pos_inf() { return {PosInf, Rational(0)}; }
    static Bound finite(Rational q) { return {Finite, std::move(q)}; }

    bool is_finite() const { return kind == Finite; }

    std::string str() const {
        if (kind == NegInf) return "-inf";
        if (kind == PosInf) return "+inf";
        return value.str();
    }

    friend Bound operator+(const Bound& a, const Bound& b) {
        if (a.kind == Finite && b.kind == Finite) return finite(a.value + b.value);
        // mixed infinities of opposite sign never arise: lower ends stay in
        // {-inf, finite}, upper ends in {finite, +inf}, and addition is endpoint-wise
        if (a.kind == NegInf || b.kind == NegInf) {
            if (a.kind == PosInf || b.kind == PosInf)
                throw std::domain_error("Bound: -inf + +inf");
            return neg_inf();
        }
        return pos_inf();
    }

    /// Multiplication by a finite rational; sign flips infinities.
    Bound scaled(const Rational& c) const {
        if (kind == Finite) return finite(value * c);
        if (c.is_zero()) return finite(Rational(0));
        bool neg = (kind == NegInf);
        if (c.sign() < 0) neg = !neg;
        return neg ? neg_inf() : pos_inf();
    }

    friend bool operator==(const Bound& a, const Bound& b) {
        if (a.kind != b.kind) return false;
        return a.kind != Finite || a.value == b.value;
    }
};

/// Closed interval [lo, hi] of possible values for one divisor coefficient.
/// Exactly known coefficients are degenerate intervals [q, q]; higher-order
/// boundary tails, tracked only through an upper bound, are stored as
/// [-inf, hi].
class CoefInterval {
public:
    CoefInterval() : lo_(Bound::finite(Rational(0))), hi_(Bound::finite(Rational(0))) {}
    CoefInterval(Bound lo, Bound hi) : lo_(std::move(lo)), hi_(std::move(hi)) { check(); }

    static CoefInterval exact(Rational q) {
        return CoefInterval(Bound::finite(q), Bound::finite(q));
    }
    static CoefInterval at_most(Rational hi) {
        return CoefInterval(Bound::neg_inf(), Bound::finite(std::move(hi)));
    }
    static CoefInterval at_least(Rational lo) {
        return CoefInterval(Bound::finite(std::move(lo)), Bound::pos_inf());
    }

    const Bound& lo() const { return lo_; }
    const Bound& hi() const { return hi_; }

    bool is_exact() const { return lo_.kind == Bound::Finite && lo_ == hi_; }
    bool is_exact_zero() const { return is_exact() && lo_.value.is_zero(); }

    Rational exact_value() const {
        if (!is_exact()) throw std::domain_error("CoefInterval: not exact");
        return lo_.value;
    }

    /// Whole interval provably >= 0.
    bool nonnegative() const { return lo_.kind == Bound::PosInf || (lo_.kind == Bound::Finite && lo_.value >= Rational(0)); }

    CoefInterval operator+(const CoefInterval& o) const {
        return CoefInterval(lo_ + o.lo_, hi_ + o.hi_);
    }

    CoefInterval scaled(const Rational& c) const {
        if (c.sign() >= 0) return CoefInterval(lo_.scaled(c), hi_.scaled(c));
        return CoefInterval(hi_.scaled(c), lo_.scaled(c));
    }

    friend bool operator==(const CoefInterval& a, const CoefInterval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    void check() const {
        if (lo_.kind == Bound::Finite && hi_.kind == Bound::Finite && lo_.value > hi_.value)
            throw std::domain_error("CoefInterval: lo > hi");
        if (lo_.kind == Bound::PosInf || hi_.kind == Bound::NegInf)
            throw std::domain_error("CoefInterval: inverted infinities");
    }

    Bound lo_, hi_;
};

}  // namespace modquot
