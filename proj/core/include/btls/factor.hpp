#pragma once

#include <vector>

#include "btls/policies.hpp"
#include "btls/system.hpp"

namespace btls {

/// LU data of the bordered system: pivots d_1..d_n, last-row multipliers
/// alpha_1..alpha_{n-1}, last-column fill-ins beta_1..beta_{n-1}, and the
/// 1-based pivot indices where t was substituted for an exact zero.
template <class S>
struct Factorization {
    std::vector<S> d, alpha, beta;
    std::vector<int> subs;
    BorderedSystem<S> source;
};

template <class P, class S = typename P::scalar>
Factorization<S> factor(const BorderedSystem<S>& sys, P& pol) {
    check_dimensions(sys);
    const std::size_t n = static_cast<std::size_t>(sys.n);
    for (const auto* vec : {&sys.a, &sys.b, &sys.c, &sys.p, &sys.q})
        for (const auto& s : *vec) pol.observe(s);

    Factorization<S> f;
    f.source = sys;
    f.d.reserve(n);
    f.alpha.resize(n - 1, S(0));
    f.beta.resize(n - 1, S(0));

    // d_1 = a_1, then d_i = a_i - b_{i-1} c_i / d_{i-1}.
    S d1 = sys.a[0];
    pol.fix_pivot(d1, 1, f.subs);
    f.d.push_back(std::move(d1));
    for (std::size_t i = 1; i + 1 < n; ++i) {
        S d = sys.a[i] - sys.b[i - 1] * sys.c[i - 1] / f.d[i - 1];
        pol.flops += 3;
        pol.fix_pivot(d, static_cast<int>(i) + 1, f.subs);
        f.d.push_back(std::move(d));
    }

    // alpha_1 = q_1 / d_1, beta_1 = p_1.
    f.alpha[0] = sys.q[0] / f.d[0];
    pol.flops += 1;
    f.beta[0] = sys.p[0];
    // alpha_i = (q_i - alpha_{i-1} b_{i-1}) / d_i, beta_i = p_i - beta_{i-1} c_i / d_{i-1},
    // i = 2..n-2.
    for (std::size_t i = 1; i + 2 < n; ++i) {
        f.alpha[i] = (sys.q[i] - f.alpha[i - 1] * sys.b[i - 1]) / f.d[i];
        f.beta[i] = sys.p[i] - f.beta[i - 1] * sys.c[i - 1] / f.d[i - 1];
        pol.flops += 6;
    }
    // alpha_{n-1} = (c_n - alpha_{n-2} b_{n-2}) / d_{n-1},
    // beta_{n-1} = b_{n-1} - beta_{n-2} c_{n-1} / d_{n-2}.
    f.alpha[n - 2] = (sys.c[n - 2] - f.alpha[n - 3] * sys.b[n - 3]) / f.d[n - 2];
    f.beta[n - 2] = sys.b[n - 2] - f.beta[n - 3] * sys.c[n - 3] / f.d[n - 3];
    pol.flops += 6;

    // d_n = a_n - sum_{j=1}^{n-1} alpha_j beta_j.
    S dn = sys.a[n - 1];
    for (std::size_t j = 0; j + 1 < n; ++j) {
        dn = dn - f.alpha[j] * f.beta[j];
        pol.flops += 2;
    }
    pol.fix_pivot(dn, static_cast<int>(n), f.subs);
    f.d.push_back(std::move(dn));
    return f;
}

/// Product of pivots; in exact mode this reduces to the characteristic
/// polynomial of the t-perturbed matrix (denominator-free after reduction).
template <class P, class S = typename P::scalar>
S pivot_product(const Factorization<S>& f, P& pol) {
    S det = f.d[0];
    for (std::size_t i = 1; i < f.d.size(); ++i) {
        det = det * f.d[i];
        pol.flops += 1;
    }
    return det;
}

/// Determinant of the original (unperturbed) matrix: product of pivots with
/// t = 0 substituted. Zero means the matrix is singular.
Rational determinant(const Factorization<ExactScalar>& f);
double determinant(const Factorization<double>& f);

/// Dense L·U product per the factorization shapes: unit lower triangle with
/// subdiagonal c_i/d_{i-1} and last row alpha; upper triangle with diagonal d,
/// superdiagonal b_1..b_{n-2} and last column beta. Test oracle for the
/// factorization identity.
template <class S>
std::vector<std::vector<S>> reconstruct_LU(const Factorization<S>& f) {
    const std::size_t n = f.d.size();
    const auto& sys = f.source;
    std::vector<std::vector<S>> lower(n, std::vector<S>(n, S(0)));
    std::vector<std::vector<S>> upper(n, std::vector<S>(n, S(0)));
    for (std::size_t i = 0; i < n; ++i) {
        lower[i][i] = S(1);
        upper[i][i] = f.d[i];
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        lower[i + 1][i] = sys.c[i] / f.d[i];
        upper[i][i + 1] = sys.b[i];
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        lower[n - 1][j] = f.alpha[j];
        upper[j][n - 1] = f.beta[j];
    }
    std::vector<std::vector<S>> out(n, std::vector<S>(n, S(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (lower[i][k] == S(0)) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] = out[i][j] + lower[i][k] * upper[k][j];
        }
    return out;
}

}  // namespace btls
