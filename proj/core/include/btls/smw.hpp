#pragma once

#include "btls/sbtls.hpp"
#include "btls/tridiagonal.hpp"

namespace btls {

/// Block splitting of the bordered system: the leading (n-1)-square
/// tridiagonal block M1, the corner scalar m2 = a_n, the border columns
/// u = [q_1..q_{n-2}, c_n] and v = [p_1..p_{n-2}, b_{n-1}], and the reduced
/// right-hand side y_hat = y_head - v * (y_tail / m2).
template <class S>
struct Partition {
    TridiagonalSystem<S> m1;  // shape only, rhs left empty
    S m2 = S(0);
    std::vector<S> u, v;
    std::vector<S> y_head;
    S y_tail = S(0);
    std::vector<S> y_hat;
    bool corner_substituted = false;  // exact mode: a_n was zero, m2 := t
};

namespace detail {

template <class P, class S = typename P::scalar>
Partition<S> fill_partition(const BorderedSystem<S>& sys, P& pol) {
    check_dimensions(sys);
    const std::size_t n = static_cast<std::size_t>(sys.n);
    Partition<S> part;
    part.m1.m = static_cast<int>(n) - 1;
    part.m1.diag.assign(sys.a.begin(), sys.a.end() - 1);
    part.m1.upper.assign(sys.b.begin(), sys.b.end() - 1);
    part.m1.lower.assign(sys.c.begin(), sys.c.end() - 1);
    part.m1.rhs.assign(n - 1, S(0));
    part.m2 = sys.a[n - 1];
    part.u = sys.q;
    part.u.push_back(sys.c[n - 2]);
    part.v = sys.p;
    part.v.push_back(sys.b[n - 2]);
    part.y_head.assign(sys.y.begin(), sys.y.end() - 1);
    part.y_tail = sys.y[n - 1];
    return part;
}

template <class P, class S = typename P::scalar>
void compute_y_hat(Partition<S>& part, P& pol) {
    const S w = part.y_tail / part.m2;
    pol.flops += 1;
    part.y_hat.reserve(part.y_head.size());
    for (std::size_t i = 0; i < part.y_head.size(); ++i) {
        part.y_hat.push_back(part.y_head[i] - part.v[i] * w);
        pol.flops += 2;
    }
}

}  // namespace detail

/// Exact partition; a zero corner a_n is replaced by the symbol t.
Partition<ExactScalar> partition(const BorderedSystem<ExactScalar>& sys);
inline Partition<ExactScalar> partition(const ExactSystem& sys) {
    return partition(to_exact_scalars(sys));
}

/// Float partition; throws ZeroCornerError when a_n is numerically zero.
Partition<double> partition(const FloatSystem& sys);

enum class SmwExecution { Sequential, Concurrent };

/// Sherman-Morrison-Woodbury block solver: two tridiagonal sub-solves against
/// M1 (optionally run concurrently), a scalar capacitance inverse, then the
/// t = 0 substitution. The determinant is reported via the LU factorization
/// so reports are uniform across methods.
ExactSolution solve_smw(const ExactSystem& sys, SmwExecution exec = SmwExecution::Sequential);

FloatSolution solve_smw_f64(const FloatSystem& sys, SmwExecution exec = SmwExecution::Sequential);

}  // namespace btls
