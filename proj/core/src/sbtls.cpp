#include "btls/sbtls.hpp"

namespace btls {

Rational determinant(const Factorization<ExactScalar>& f) {
    ExactPolicy pol;
    const ExactScalar det = pivot_product(f, pol);
    try {
        return det.eval_at_zero();
    } catch (const SingularAtZero&) {
        return Rational(0);
    }
}

double determinant(const Factorization<double>& f) {
    FloatPolicy pol;
    return pivot_product(f, pol);
}

ExactSolution solve_sbtls(const ExactSystem& sys) {
    const auto lifted = to_exact_scalars(sys);
    ExactPolicy pol;
    const auto f = factor(lifted, pol);

    const ExactScalar det_symbolic = pivot_product(f, pol);
    Rational det;
    try {
        det = det_symbolic.eval_at_zero();
    } catch (const SingularAtZero&) {
        det = Rational(0);
    }
    if (det.is_zero()) throw SingularError();

    ExactSolution out;
    out.x_symbolic = back_solve(lifted, f, pol);
    out.x.reserve(out.x_symbolic.size());
    for (const auto& xi : out.x_symbolic) out.x.push_back(xi.eval_at_zero());
    out.determinant = std::move(det);
    out.subs_count = static_cast<int>(f.subs.size());
    out.flops = pol.flops;
    return out;
}

FloatSolution solve_sbtls_f64(const FloatSystem& sys) {
    FloatPolicy pol;
    const auto f = factor(sys, pol);
    const double det = pivot_product(f, pol);
    if (pol.is_zero(det)) throw SingularError();

    FloatSolution out;
    out.x = back_solve(sys, f, pol);
    out.determinant = det;
    out.subs_count = 0;
    out.flops = pol.flops;
    return out;
}

}  // namespace btls
