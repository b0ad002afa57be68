#pragma once

#include <string>
#include <utility>
#include <vector>

#include "btls/rational.hpp"

namespace btls {

/// Dense univariate polynomial in the symbol t over Rational, coefficients
/// stored in ascending powers. Canonical form: no trailing zero coefficients;
/// the zero polynomial is the empty coefficient list.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Rational r);
    /// The monomial t.
    static Polynomial t();

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
    }
    const Rational& leading() const { return c_.back(); }
    Rational at_zero() const { return c_.empty() ? Rational(0) : c_[0]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& a);
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Euclidean division: returns {quotient, remainder}. divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

    /// e.g. "8154227t + 12067595", "t^2 - 1", "0".
    std::string str() const;

  private:
    void trim();

    std::vector<Rational> c_;
};

/// Monic greatest common divisor via the Euclidean algorithm.
/// gcd(P, 0) = monic(P); gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial p, Polynomial q);

}  // namespace btls
