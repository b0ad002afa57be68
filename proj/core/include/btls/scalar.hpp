#pragma once

#include <cmath>
#include <string>
#include <variant>

#include "btls/rational_function.hpp"

namespace btls {

enum class ScalarMode { ExactRational, Float64 };

/// Exact-mode scalar. Stays a plain Rational until a symbolic t enters the
/// computation; only then is it lifted into a RationalFunction. Results that
/// reduce back to a constant are demoted, so equality stays structural.
class ExactScalar {
  public:
    ExactScalar() : v_(Rational(0)) {}
    ExactScalar(Rational r) : v_(std::move(r)) {}
    ExactScalar(long n) : v_(Rational(n)) {}
    ExactScalar(RationalFunction f);

    static ExactScalar symbol_t() { return ExactScalar(RationalFunction::t()); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_zero() const;

    const Rational& rational() const { return std::get<Rational>(v_); }
    RationalFunction as_function() const;

    /// Substitutes t = 0; throws SingularAtZero on a pole.
    Rational eval_at_zero() const;

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
    friend ExactScalar operator-(const ExactScalar& a);
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    std::string str() const;

  private:
    std::variant<Rational, RationalFunction> v_;
};

/// Relative zero test for float mode. `scale` tracks the running magnitude
/// of the computation (inputs and pivots seen so far).
struct FloatZeroTest {
    double tau = 0x1p-40;
    double scale = 1.0;

    void observe(double v) { scale = std::max(scale, std::abs(v)); }
    bool is_zero(double s) const { return std::abs(s) <= tau * std::max(1.0, scale); }
};

inline bool scalar_is_zero(const ExactScalar& s) { return s.is_zero(); }
inline bool scalar_is_zero(double s, const FloatZeroTest& test) { return test.is_zero(s); }

}  // namespace btls
