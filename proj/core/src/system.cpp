#include "btls/system.hpp"

namespace btls {

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(Rational::parse(t));
    return out;
}

}  // namespace

ExactSystem validate_system(const RawSystem& raw) {
    ExactSystem sys;
    sys.n = raw.n;
    sys.a = parse_all(raw.a);
    sys.b = parse_all(raw.b);
    sys.c = parse_all(raw.c);
    sys.p = parse_all(raw.p);
    sys.q = parse_all(raw.q);
    sys.y = parse_all(raw.y);
    check_dimensions(sys);
    return sys;
}

FloatSystem to_float(const ExactSystem& sys) {
    FloatSystem out;
    out.n = sys.n;
    auto conv = [](const std::vector<Rational>& v) {
        std::vector<double> d;
        d.reserve(v.size());
        for (const auto& r : v) d.push_back(r.to_double());
        return d;
    };
    out.a = conv(sys.a);
    out.b = conv(sys.b);
    out.c = conv(sys.c);
    out.p = conv(sys.p);
    out.q = conv(sys.q);
    out.y = conv(sys.y);
    return out;
}

BorderedSystem<ExactScalar> to_exact_scalars(const ExactSystem& sys) {
    BorderedSystem<ExactScalar> out;
    out.n = sys.n;
    auto conv = [](const std::vector<Rational>& v) {
        return std::vector<ExactScalar>(v.begin(), v.end());
    };
    out.a = conv(sys.a);
    out.b = conv(sys.b);
    out.c = conv(sys.c);
    out.p = conv(sys.p);
    out.q = conv(sys.q);
    out.y = conv(sys.y);
    return out;
}

}  // namespace btls
