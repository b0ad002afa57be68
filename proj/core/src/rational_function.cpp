#include "btls/rational_function.hpp"

namespace btls {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    const Polynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = Polynomial::divmod(num, g).first;
        den = Polynomial::divmod(den, g).first;
    }
    const Rational lead = den.leading();
    den_ = den.monic();
    num_ = (Rational(1) / lead) * num;
}

std::string RationalFunction::str() const {
    if (den_ == Polynomial::constant(Rational(1))) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace btls
