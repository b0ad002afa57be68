#include "btls/tridiagonal.hpp"

namespace btls {

std::vector<Rational> thomas_solve(const TridiagonalSystem<Rational>& t) {
    TridiagonalSystem<ExactScalar> lifted;
    lifted.m = t.m;
    lifted.diag.assign(t.diag.begin(), t.diag.end());
    lifted.upper.assign(t.upper.begin(), t.upper.end());
    lifted.lower.assign(t.lower.begin(), t.lower.end());
    lifted.rhs.assign(t.rhs.begin(), t.rhs.end());

    ExactPolicy pol;
    std::vector<int> subs;
    const auto x_symbolic = thomas_sweep(lifted, pol, subs);
    std::vector<Rational> x;
    x.reserve(x_symbolic.size());
    try {
        for (const auto& xi : x_symbolic) x.push_back(xi.eval_at_zero());
    } catch (const SingularAtZero&) {
        throw SingularError("tridiagonal matrix is singular");
    }
    return x;
}

std::vector<double> thomas_solve(const TridiagonalSystem<double>& t) {
    FloatPolicy pol;
    std::vector<int> subs;
    return thomas_sweep(t, pol, subs);
}

}  // namespace btls
