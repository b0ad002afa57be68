#include "btls/oracle.hpp"

#include <cmath>

namespace btls {

std::vector<double> gauss_solve(DenseMatrix<double> a, std::vector<double> rhs) {
    const std::size_t m = static_cast<std::size_t>(a.size());
    if (rhs.size() != m) throw BadDimensions("rhs length must match matrix size");
    constexpr double tau = 0x1p-40;

    std::vector<double> row_scale(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) row_scale[i] = std::max(row_scale[i], std::abs(a.at(i, j)));

    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;

    for (std::size_t k = 0; k < m; ++k) {
        std::size_t best = k;
        double best_mag = std::abs(a.at(perm[k], k)) / std::max(row_scale[perm[k]], 1e-300);
        for (std::size_t r = k + 1; r < m; ++r) {
            const double mag = std::abs(a.at(perm[r], k)) / std::max(row_scale[perm[r]], 1e-300);
            if (mag > best_mag) {
                best = r;
                best_mag = mag;
            }
        }
        std::swap(perm[k], perm[best]);
        const double pivot = a.at(perm[k], k);
        if (std::abs(pivot) <= tau * std::max(row_scale[perm[k]], 1.0)) throw SingularError();
        for (std::size_t i = k + 1; i < m; ++i) {
            const double factor = a.at(perm[i], k) / pivot;
            if (factor == 0.0) continue;
            for (std::size_t j = k; j < m; ++j) a.at(perm[i], j) -= factor * a.at(perm[k], j);
            rhs[perm[i]] -= factor * rhs[perm[k]];
        }
    }

    std::vector<double> x(m, 0.0);
    for (std::size_t k = m; k-- > 0;) {
        double acc = rhs[perm[k]];
        for (std::size_t j = k + 1; j < m; ++j) acc -= a.at(perm[k], j) * x[j];
        x[k] = acc / a.at(perm[k], k);
    }
    return x;
}

namespace {

// Bareiss one-step elimination on the augmented matrix [A | rhs...].
// Returns the permutation sign; throws SingularError on rank deficiency.
int eliminate(DenseMatrix<Rational>& a, std::vector<Rational>& rhs, bool with_rhs) {
    const std::size_t m = static_cast<std::size_t>(a.size());
    int sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < m && a.at(pivot_row, k).is_zero()) ++pivot_row;
        if (pivot_row == m) throw SingularError();
        if (pivot_row != k) {
            for (std::size_t j = 0; j < m; ++j) std::swap(a.at(k, j), a.at(pivot_row, j));
            if (with_rhs) std::swap(rhs[k], rhs[pivot_row]);
            sign = -sign;
        }
        const Rational pivot = a.at(k, k);
        for (std::size_t i = k + 1; i < m; ++i) {
            const Rational lead = a.at(i, k);
            for (std::size_t j = k + 1; j < m; ++j)
                a.at(i, j) = (pivot * a.at(i, j) - lead * a.at(k, j)) / prev;
            if (with_rhs) rhs[i] = (pivot * rhs[i] - lead * rhs[k]) / prev;
            a.at(i, k) = Rational(0);
        }
        prev = pivot;
    }
    if (a.at(m - 1, m - 1).is_zero()) throw SingularError();
    return sign;
}

}  // namespace

BareissResult bareiss_solve(DenseMatrix<Rational> a, std::vector<Rational> rhs) {
    const std::size_t m = static_cast<std::size_t>(a.size());
    if (rhs.size() != m) throw BadDimensions("rhs length must match matrix size");
    const int sign = eliminate(a, rhs, true);

    BareissResult out;
    out.determinant = sign == 1 ? a.at(m - 1, m - 1) : -a.at(m - 1, m - 1);
    out.x.assign(m, Rational(0));
    for (std::size_t k = m; k-- > 0;) {
        Rational acc = rhs[k];
        for (std::size_t j = k + 1; j < m; ++j) acc -= a.at(k, j) * out.x[j];
        out.x[k] = acc / a.at(k, k);
    }
    return out;
}

Rational bareiss_determinant(DenseMatrix<Rational> a) {
    std::vector<Rational> rhs;
    const int sign = eliminate(a, rhs, false);
    const std::size_t m = static_cast<std::size_t>(a.size());
    return sign == 1 ? a.at(m - 1, m - 1) : -a.at(m - 1, m - 1);
}

}  // namespace btls
