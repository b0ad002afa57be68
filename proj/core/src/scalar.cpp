#include "btls/scalar.hpp"

namespace btls {

ExactScalar::ExactScalar(RationalFunction f) {
    if (f.is_constant())
        v_ = f.num().at_zero();  // den is monic, so a constant den is exactly 1
    else
        v_ = std::move(f);
}

bool ExactScalar::is_zero() const {
    if (is_rational()) return rational().is_zero();
    return std::get<RationalFunction>(v_).is_zero();
}

RationalFunction ExactScalar::as_function() const {
    if (is_rational()) return RationalFunction::constant(rational());
    return std::get<RationalFunction>(v_);
}

Rational ExactScalar::eval_at_zero() const {
    if (is_rational()) return rational();
    return std::get<RationalFunction>(v_).eval_at_zero();
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_rational() && b.is_rational()) return ExactScalar(a.rational() + b.rational());
    return ExactScalar(a.as_function() + b.as_function());
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_rational() && b.is_rational()) return ExactScalar(a.rational() - b.rational());
    return ExactScalar(a.as_function() - b.as_function());
}

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_rational() && b.is_rational()) return ExactScalar(a.rational() * b.rational());
    return ExactScalar(a.as_function() * b.as_function());
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_rational() && b.is_rational()) return ExactScalar(a.rational() / b.rational());
    return ExactScalar(a.as_function() / b.as_function());
}

ExactScalar operator-(const ExactScalar& a) {
    if (a.is_rational()) return ExactScalar(-a.rational());
    return ExactScalar(-a.as_function());
}

std::string ExactScalar::str() const {
    if (is_rational()) return rational().str();
    return std::get<RationalFunction>(v_).str();
}

}  // namespace btls
