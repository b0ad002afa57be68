#include "btls/smw.hpp"

#include <future>

namespace btls {

namespace {

template <class P, class S = typename P::scalar>
S dot(const std::vector<S>& a, const std::vector<S>& b, P& pol) {
    S acc = a[0] * b[0];
    pol.flops += 1;
    for (std::size_t i = 1; i < a.size(); ++i) {
        acc = acc + a[i] * b[i];
        pol.flops += 2;
    }
    return acc;
}

struct SubSolve {
    std::vector<ExactScalar> x;
    long flops = 0;
    std::vector<int> subs;
};

SubSolve run_exact(const TridiagonalSystem<ExactScalar>& t) {
    ExactPolicy pol;
    SubSolve out;
    out.x = thomas_sweep(t, pol, out.subs);
    out.flops = pol.flops;
    return out;
}

}  // namespace

Partition<ExactScalar> partition(const BorderedSystem<ExactScalar>& sys) {
    ExactPolicy pol;
    auto part = detail::fill_partition(sys, pol);
    if (part.m2.is_zero()) {
        part.m2 = ExactScalar::symbol_t();
        part.corner_substituted = true;
    }
    detail::compute_y_hat(part, pol);
    return part;
}

Partition<double> partition(const FloatSystem& sys) {
    FloatPolicy pol;
    for (const auto* vec : {&sys.a, &sys.b, &sys.c, &sys.p, &sys.q})
        for (double s : *vec) pol.observe(s);
    auto part = detail::fill_partition(sys, pol);
    if (pol.is_zero(part.m2)) throw ZeroCornerError();
    detail::compute_y_hat(part, pol);
    return part;
}

ExactSolution solve_smw(const ExactSystem& sys, SmwExecution exec) {
    const auto lifted = to_exact_scalars(sys);

    // Determinant via the LU route, which also gates the singular case.
    Rational det;
    {
        ExactPolicy dpol;
        det = determinant(factor(lifted, dpol));
    }
    if (det.is_zero()) throw SingularError();

    ExactPolicy pol;
    auto part = detail::fill_partition(lifted, pol);
    int corner_subs = 0;
    if (part.m2.is_zero()) {
        part.m2 = ExactScalar::symbol_t();
        part.corner_substituted = true;
        corner_subs = 1;
    }
    detail::compute_y_hat(part, pol);

    TridiagonalSystem<ExactScalar> sys_r = part.m1;
    sys_r.rhs = part.y_hat;
    TridiagonalSystem<ExactScalar> sys_q = part.m1;
    sys_q.rhs = part.v;

    SubSolve r, qbar;
    if (exec == SmwExecution::Concurrent) {
        auto pending = std::async(std::launch::async, run_exact, std::cref(sys_q));
        r = run_exact(sys_r);
        qbar = pending.get();
    } else {
        r = run_exact(sys_r);
        qbar = run_exact(sys_q);
    }
    pol.flops += r.flops + qbar.flops;

    // Capacitance scalar m2 - u . qbar; its inverse is the 1-by-1 SMW block.
    const ExactScalar capacitance = part.m2 - dot(part.u, qbar.x, pol);
    pol.flops += 1;
    if (capacitance.is_zero()) throw SingularError();
    const ExactScalar gain = dot(part.u, r.x, pol) / capacitance;
    pol.flops += 1;

    std::vector<ExactScalar> x_head(r.x.size(), ExactScalar(0));
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        x_head[i] = r.x[i] + qbar.x[i] * gain;
        pol.flops += 2;
    }
    const ExactScalar x_tail = (part.y_tail - dot(part.u, x_head, pol)) / part.m2;
    pol.flops += 2;

    ExactSolution out;
    out.x_symbolic = std::move(x_head);
    out.x_symbolic.push_back(x_tail);
    out.x.reserve(out.x_symbolic.size());
    for (const auto& xi : out.x_symbolic) out.x.push_back(xi.eval_at_zero());
    out.determinant = std::move(det);
    out.subs_count = static_cast<int>(r.subs.size()) + corner_subs;
    out.flops = pol.flops;
    return out;
}

FloatSolution solve_smw_f64(const FloatSystem& sys, SmwExecution exec) {
    double det;
    {
        FloatPolicy dpol;
        const auto f = factor(sys, dpol);
        det = determinant(f);
        if (dpol.is_zero(det)) throw SingularError();
    }

    FloatPolicy pol;
    for (const auto* vec : {&sys.a, &sys.b, &sys.c, &sys.p, &sys.q})
        for (double s : *vec) pol.observe(s);
    auto part = detail::fill_partition(sys, pol);
    if (pol.is_zero(part.m2)) throw ZeroCornerError();
    detail::compute_y_hat(part, pol);

    TridiagonalSystem<double> sys_r = part.m1;
    sys_r.rhs = part.y_hat;
    TridiagonalSystem<double> sys_q = part.m1;
    sys_q.rhs = part.v;

    auto run = [](const TridiagonalSystem<double>& t) {
        FloatPolicy p;
        std::vector<int> subs;
        auto x = thomas_sweep(t, p, subs);
        return std::pair<std::vector<double>, long>(std::move(x), p.flops);
    };
    std::pair<std::vector<double>, long> r, qbar;
    if (exec == SmwExecution::Concurrent) {
        auto pending = std::async(std::launch::async, run, std::cref(sys_q));
        r = run(sys_r);
        qbar = pending.get();
    } else {
        r = run(sys_r);
        qbar = run(sys_q);
    }
    pol.flops += r.second + qbar.second;

    const double capacitance = part.m2 - dot(part.u, qbar.first, pol);
    pol.flops += 1;
    if (pol.is_zero(capacitance)) throw SingularError();
    const double gain = dot(part.u, r.first, pol) / capacitance;
    pol.flops += 1;

    FloatSolution out;
    out.x = r.first;
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        out.x[i] += qbar.first[i] * gain;
        pol.flops += 2;
    }
    out.x.push_back((part.y_tail - dot(part.u, out.x, pol)) / part.m2);
    pol.flops += 2;
    out.determinant = det;
    out.subs_count = 0;
    out.flops = pol.flops;
    return out;
}

}  // namespace btls
