#pragma once

#include <vector>

#include "btls/rational.hpp"

namespace btls {

/// Dense square matrix, row-major.
template <class S>
class DenseMatrix {
  public:
    DenseMatrix() = default;
    explicit DenseMatrix(int m, S init = S(0))
        : m_(m), e_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), init) {}

    static DenseMatrix from_rows(const std::vector<std::vector<S>>& rows) {
        DenseMatrix out(static_cast<int>(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw BadDimensions("dense matrix rows must all have the matrix size");
            for (std::size_t j = 0; j < rows.size(); ++j) out.at(i, j) = rows[i][j];
        }
        return out;
    }

    int size() const { return m_; }
    S& at(std::size_t i, std::size_t j) { return e_[i * static_cast<std::size_t>(m_) + j]; }
    const S& at(std::size_t i, std::size_t j) const {
        return e_[i * static_cast<std::size_t>(m_) + j];
    }

  private:
    int m_ = 0;
    std::vector<S> e_;
};

/// Gaussian elimination with partial pivoting over doubles.
/// Throws SingularError when no acceptable pivot exists.
std::vector<double> gauss_solve(DenseMatrix<double> a, std::vector<double> rhs);

struct BareissResult {
    std::vector<Rational> x;
    Rational determinant;
};

/// Fraction-free (Bareiss) elimination with row exchanges over exact
/// rationals. Independent of the symbolic t mechanism by construction.
BareissResult bareiss_solve(DenseMatrix<Rational> a, std::vector<Rational> rhs);

Rational bareiss_determinant(DenseMatrix<Rational> a);

}  // namespace btls
