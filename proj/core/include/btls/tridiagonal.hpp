#pragma once

#include <vector>

#include "btls/policies.hpp"
#include "btls/errors.hpp"

namespace btls {

template <class S>
struct TridiagonalSystem {
    int m = 0;
    std::vector<S> diag;   // length m
    std::vector<S> upper;  // length m-1
    std::vector<S> lower;  // length m-1
    std::vector<S> rhs;    // length m
};

template <class S>
void check_dimensions(const TridiagonalSystem<S>& t) {
    if (t.m < 1) throw BadDimensions("tridiagonal size must be >= 1");
    const auto m = static_cast<std::size_t>(t.m);
    if (t.diag.size() != m || t.upper.size() != m - 1 || t.lower.size() != m - 1 ||
        t.rhs.size() != m)
        throw BadDimensions("tridiagonal array lengths inconsistent with m");
}

/// Thomas sweep with the same zero-pivot -> t discipline as the bordered
/// factorization. Returns the solution without substituting t = 0, so SMW can
/// keep combining symbolically; 1-based substitution indices go into subs.
template <class P, class S = typename P::scalar>
std::vector<S> thomas_sweep(const TridiagonalSystem<S>& t, P& pol, std::vector<int>& subs) {
    check_dimensions(t);
    const std::size_t m = static_cast<std::size_t>(t.m);
    for (const auto* vec : {&t.diag, &t.upper, &t.lower})
        for (const auto& s : *vec) pol.observe(s);

    std::vector<S> d;
    d.reserve(m);
    S d1 = t.diag[0];
    pol.fix_pivot(d1, 1, subs);
    d.push_back(std::move(d1));
    for (std::size_t i = 1; i < m; ++i) {
        S di = t.diag[i] - t.lower[i - 1] * t.upper[i - 1] / d[i - 1];
        pol.flops += 3;
        pol.fix_pivot(di, static_cast<int>(i) + 1, subs);
        d.push_back(std::move(di));
    }

    std::vector<S> g;
    g.reserve(m);
    g.push_back(t.rhs[0]);
    for (std::size_t i = 1; i < m; ++i) {
        g.push_back(t.rhs[i] - t.lower[i - 1] * g[i - 1] / d[i - 1]);
        pol.flops += 3;
    }

    std::vector<S> x(m, S(0));
    x[m - 1] = g[m - 1] / d[m - 1];
    pol.flops += 1;
    for (std::size_t k = m - 1; k-- > 0;) {
        x[k] = (g[k] - t.upper[k] * x[k + 1]) / d[k];
        pol.flops += 2;
    }
    return x;
}

/// Exact Thomas solve with t substituted out of the result.
/// Throws SingularError when a component has a pole at t = 0.
std::vector<Rational> thomas_solve(const TridiagonalSystem<Rational>& t);

/// Float Thomas solve; throws ZeroPivotError on a numerically zero pivot.
std::vector<double> thomas_solve(const TridiagonalSystem<double>& t);

}  // namespace btls
