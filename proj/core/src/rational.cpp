#include "btls/rational.hpp"

#include <cctype>

namespace btls {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw BadScalar("unparseable scalar: '" + std::string(text) + "'");

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw BadScalar("unparseable fraction: '" + std::string(text) + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0) throw BadScalar("zero denominator in scalar: '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac))
            throw BadScalar("unparseable decimal: '" + std::string(text) + "'");
        mpz_class num(std::string(whole) + std::string(frac), 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        value = mpq_class(num, den);
    } else {
        if (!all_digits(s)) throw BadScalar("unparseable scalar: '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(s), 10));
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rational(std::move(value));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace btls
