#include "btls/polynomial.hpp"

namespace btls {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(Rational r) {
    Polynomial p;
    if (!r.is_zero()) p.c_.push_back(std::move(r));
    return p;
}

Polynomial Polynomial::t() {
    Polynomial p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    const Rational lead = p.c_.back();
    for (auto& coeff : p.c_) coeff /= lead;
    return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> out = a.c_;
    for (auto& coeff : out) coeff *= s;
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num,
                                                     const Polynomial& den) {
    if (den.is_zero()) throw DivisionByZero();
    std::vector<Rational> rem = num.c_;
    std::vector<Rational> quot;
    if (num.degree() >= den.degree())
        quot.assign(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Rational(0));
    int rdeg = num.degree();
    while (rdeg >= den.degree()) {
        while (rdeg >= 0 && rem[static_cast<std::size_t>(rdeg)].is_zero()) --rdeg;
        if (rdeg < den.degree()) break;
        const int shift = rdeg - den.degree();
        const Rational factor = rem[static_cast<std::size_t>(rdeg)] / den.leading();
        quot[static_cast<std::size_t>(shift)] = factor;
        for (int k = 0; k <= den.degree(); ++k)
            rem[static_cast<std::size_t>(k + shift)] -= factor * den.coeff(k);
        --rdeg;
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial p, Polynomial q) {
    while (!q.is_zero()) {
        Polynomial r = Polynomial::divmod(p, q).second;
        p = std::move(q);
        q = std::move(r);
    }
    return p.monic();
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational coeff = Polynomial::coeff(k);
        if (coeff.is_zero()) continue;
        if (!out.empty()) {
            out += coeff.sign() < 0 ? " - " : " + ";
            coeff = coeff.abs();
        } else if (coeff.sign() < 0) {
            out += "-";
            coeff = coeff.abs();
        }
        if (k == 0) {
            out += coeff.str();
        } else {
            if (coeff != Rational(1)) out += coeff.str();
            out += k == 1 ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace btls
