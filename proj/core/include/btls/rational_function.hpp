#pragma once

#include <string>

#include "btls/polynomial.hpp"

namespace btls {

/// Reduced ratio of two polynomials in t. Canonical form: gcd(num, den) is
/// constant and den is monic, so value equality is structural equality.
class RationalFunction {
  public:
    RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
    /// Reduces and normalizes; throws ZeroDenominator when den is zero.
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction constant(Rational r) {
        return RationalFunction(Polynomial::constant(std::move(r)),
                                Polynomial::constant(Rational(1)));
    }
    static RationalFunction t() {
        return RationalFunction(Polynomial::t(), Polynomial::constant(Rational(1)));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// num(0)/den(0); throws SingularAtZero when den(0) = 0.
    Rational eval_at_zero() const {
        const Rational d0 = den_.at_zero();
        if (d0.is_zero()) throw SingularAtZero();
        return num_.at_zero() / d0;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        return RationalFunction(-a.num_, a.den_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    /// "(num) / (den)", or just "num" for a polynomial.
    std::string str() const;

  private:
    Polynomial num_, den_;
};

}  // namespace btls
