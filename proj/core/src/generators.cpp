#include "btls/generators.hpp"

#include <string>

#include "btls/oracle.hpp"

namespace btls {

Family parse_family(std::string_view name) {
    if (name == "example31") return Family::Example31;
    if (name == "example32") return Family::Example32;
    if (name == "example33") return Family::Example33;
    if (name == "random") return Family::Random;
    if (name == "pertri") return Family::Pertri;
    throw BadSpec("unknown family: '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Example31: return "example31";
        case Family::Example32: return "example32";
        case Family::Example33: return "example33";
        case Family::Random: return "random";
        case Family::Pertri: return "pertri";
    }
    return "?";
}

namespace {

std::vector<Rational> row(std::initializer_list<long> xs) {
    return std::vector<Rational>(xs.begin(), xs.end());
}

ExactSystem example31() {
    ExactSystem s;
    s.n = 7;
    s.a = row({32, 26, 63, 12, 61, 68, 33});
    s.b = row({3, 52, 39, 24, 51, 42});
    s.c = row({27, 55, 99, 74, 1, 59});
    s.p = row({9, 62, 35, 71, 53});
    s.q = row({29, 65, 9, 45, 72});
    s.y = row({90, 24, 43, 97, 51, 52, 56});
    return s;
}

ExactSystem example32() {
    ExactSystem s;
    s.n = 10;
    s.a = row({0, 2, 1, 15, 3, 1, 2, 1, 2, 5});
    s.b = row({2, 12, 5, 1, 20, 2, 2, 1, 4});
    s.c = row({13, 9, 3, 2, 7, -5, 2, 5, 1});
    s.p = row({5, 3, 2, 1, 5, 2, 7, 12});
    s.q = row({3, 2, 1, 7, 5, -2, 4, 2});
    s.y = row({7, 30, 17, 20, 30, 12, 6, 16, 11, 28});
    return s;
}

ExactSystem example33(int n) {
    if (n <= 3) throw BadSpec("example33 needs n > 3");
    const auto m = static_cast<std::size_t>(n);
    ExactSystem s;
    s.n = n;
    s.a.assign(m, Rational(2));
    s.b.assign(m - 1, Rational(3));
    s.c.assign(m - 1, Rational(1));
    s.p.assign(m - 2, Rational(4));
    s.q.assign(m - 2, Rational(5));
    s.y.assign(m, Rational(10));
    s.y[0] = Rational(9);
    s.y[m - 2] = Rational(6);
    s.y[m - 1] = Rational(5L * n - 7);
    return s;
}

ExactSystem random_system(const FamilySpec& spec, bool pertri) {
    if (spec.n <= 3) throw BadSpec("random family needs n > 3");
    if (spec.entry_range < 1) throw BadSpec("entry_range must be >= 1");
    const auto m = static_cast<std::size_t>(spec.n);
    const long range = spec.entry_range;
    SplitMix64 rng(spec.seed);

    for (;;) {
        ExactSystem s;
        s.n = spec.n;
        auto draw = [&](std::size_t count) {
            std::vector<Rational> out;
            out.reserve(count);
            for (std::size_t i = 0; i < count; ++i) out.emplace_back(rng.uniform(-range, range));
            return out;
        };
        s.a = draw(m);
        s.b = draw(m - 1);
        s.c = draw(m - 1);
        s.p = draw(m - 2);
        s.q = draw(m - 2);
        if (pertri)
            for (std::size_t i = 1; i < m - 2; ++i) {
                s.p[i] = Rational(0);
                s.q[i] = Rational(0);
            }
        s.y.assign(m, Rational(0));

        try {
            bareiss_determinant(DenseMatrix<Rational>::from_rows(dense_matrix(s)));
        } catch (const SingularError&) {
            continue;  // resample
        }
        s.y = multiply(s, std::vector<Rational>(m, Rational(1)));
        return s;
    }
}

}  // namespace

ExactSystem generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Example31: return example31();
        case Family::Example32: return example32();
        case Family::Example33: return example33(spec.n);
        case Family::Random: return random_system(spec, false);
        case Family::Pertri: return random_system(spec, true);
    }
    throw BadSpec("unknown family");
}

}  // namespace btls
