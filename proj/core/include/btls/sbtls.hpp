#pragma once

#include "btls/factor.hpp"

namespace btls {

struct ExactSolution {
    std::vector<Rational> x;
    Rational determinant;
    int subs_count = 0;
    long flops = 0;
    /// The solution components before the final t = 0 substitution.
    std::vector<ExactScalar> x_symbolic;
};

struct FloatSolution {
    std::vector<double> x;
    double determinant = 0.0;
    int subs_count = 0;
    long flops = 0;
};

/// Forward sweep and back-substitution against an existing factorization
/// (algorithm steps 6-9). Returns the symbolic solution in exact mode.
template <class P, class S = typename P::scalar>
std::vector<S> back_solve(const BorderedSystem<S>& sys, const Factorization<S>& f, P& pol) {
    const std::size_t n = static_cast<std::size_t>(sys.n);
    std::vector<S> z;
    z.reserve(n);
    // z_1 = y_1; z_i = y_i - c_i z_{i-1} / d_{i-1}, i = 2..n-1.
    z.push_back(sys.y[0]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        z.push_back(sys.y[i] - sys.c[i - 1] * z[i - 1] / f.d[i - 1]);
        pol.flops += 3;
    }
    // z_n = y_n - sum_{j=1}^{n-1} alpha_j z_j.
    S zn = sys.y[n - 1];
    for (std::size_t j = 0; j + 1 < n; ++j) {
        zn = zn - f.alpha[j] * z[j];
        pol.flops += 2;
    }
    z.push_back(std::move(zn));

    std::vector<S> x(n, S(0));
    x[n - 1] = z[n - 1] / f.d[n - 1];
    pol.flops += 1;
    x[n - 2] = (z[n - 2] - f.beta[n - 2] * x[n - 1]) / f.d[n - 2];
    pol.flops += 3;
    for (std::size_t k = n - 2; k-- > 0;) {
        x[k] = (z[k] - sys.b[k] * x[k + 1] - f.beta[k] * x[n - 1]) / f.d[k];
        pol.flops += 5;
    }
    return x;
}

/// Symbolic LU solver for the bordered system. Exact zero pivots are carried
/// as the symbol t and substituted out of the final expressions.
/// Throws SingularError when the determinant is zero.
ExactSolution solve_sbtls(const ExactSystem& sys);

/// Float variant: no t trick; throws ZeroPivotError on a numerically zero
/// pivot and SingularError on a numerically zero determinant.
FloatSolution solve_sbtls_f64(const FloatSystem& sys);

}  // namespace btls
