#include <doctest.h>

#include "btls/generators.hpp"
#include "btls/oracle.hpp"
#include "btls/sbtls.hpp"

using namespace btls;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) {
    return std::vector<Rational>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("example33 at n=5 matches the family definition") {
    FamilySpec spec{Family::Example33, 5};
    const ExactSystem s = generate(spec);
    CHECK(s.a == rationals({2, 2, 2, 2, 2}));
    CHECK(s.b == rationals({3, 3, 3, 3}));
    CHECK(s.c == rationals({1, 1, 1, 1}));
    CHECK(s.p == rationals({4, 4, 4}));
    CHECK(s.q == rationals({5, 5, 5}));
    CHECK(s.y == rationals({9, 10, 10, 6, 18}));
}

TEST_CASE("example33 has the all-ones exact solution at any n") {
    for (int n : {4, 7, 33, 150}) {
        FamilySpec spec{Family::Example33, n};
        const ExactSystem s = generate(spec);
        CHECK(multiply(s, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))) == s.y);
    }
}

TEST_CASE("example31 entries follow the border split of the system template") {
    const ExactSystem s = generate({Family::Example31});
    CHECK(s.n == 7);
    CHECK(s.a.front() == Rational(32));
    CHECK(s.a.back() == Rational(33));
    CHECK(s.p == rationals({9, 62, 35, 71, 53}));
    CHECK(s.b.back() == Rational(42));  // (6,7) entry belongs to b, not p
    CHECK(s.q == rationals({29, 65, 9, 45, 72}));
    CHECK(s.c.back() == Rational(59));  // (7,6) entry belongs to c, not q
    CHECK(s.y == rationals({90, 24, 43, 97, 51, 52, 56}));
}

TEST_CASE("example32 has the zero leading entry and printed borders") {
    const ExactSystem s = generate({Family::Example32});
    CHECK(s.n == 10);
    CHECK(s.a.front() == Rational(0));
    CHECK(s.a.back() == Rational(5));
    CHECK(s.p == rationals({5, 3, 2, 1, 5, 2, 7, 12}));
    CHECK(s.q == rationals({3, 2, 1, 7, 5, -2, 4, 2}));
    CHECK(s.c.back() == Rational(1));
    CHECK(s.b.back() == Rational(4));
    // The printed rhs is A * ones.
    CHECK(multiply(s, std::vector<Rational>(10, Rational(1))) == s.y);
}

TEST_CASE("random family is deterministic in (n, seed)") {
    FamilySpec spec{Family::Random, 6, 42};
    const ExactSystem first = generate(spec);
    const ExactSystem second = generate(spec);
    CHECK(first.a == second.a);
    CHECK(first.b == second.b);
    CHECK(first.c == second.c);
    CHECK(first.p == second.p);
    CHECK(first.q == second.q);
    CHECK(first.y == second.y);
}

TEST_CASE("random family is nonsingular with known all-ones solution") {
    SplitMix64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        FamilySpec spec{Family::Random, static_cast<int>(rng.uniform(4, 12)), rng.next()};
        const ExactSystem s = generate(spec);
        CHECK_FALSE(
            bareiss_determinant(DenseMatrix<Rational>::from_rows(dense_matrix(s))).is_zero());
        const auto sol = solve_sbtls(s);
        CHECK(sol.x == std::vector<Rational>(static_cast<std::size_t>(s.n), Rational(1)));
    }
}

TEST_CASE("pertri family zeroes the interior borders only") {
    FamilySpec spec{Family::Pertri, 9, 5};
    const ExactSystem s = generate(spec);
    for (std::size_t i = 1; i < s.p.size(); ++i) {
        CHECK(s.p[i] == Rational(0));
        CHECK(s.q[i] == Rational(0));
    }
    const auto sol = solve_sbtls(s);
    CHECK(sol.x == std::vector<Rational>(9, Rational(1)));
}

TEST_CASE("bad specs are rejected") {
    CHECK_THROWS_AS(generate({Family::Example33, 3}), BadSpec);
    CHECK_THROWS_AS(generate({Family::Random, 2, 0}), BadSpec);
    CHECK_THROWS_AS(parse_family("example34"), BadSpec);
    CHECK(parse_family("pertri") == Family::Pertri);
}
