#pragma once

#include <string>
#include <vector>

#include "btls/scalar.hpp"

namespace btls {

/// Coefficient data of the n-by-n bordered tridiagonal system.
/// Index mapping (1-based math to 0-based storage):
///   a[i] = a_{i+1}   (diagonal, n entries)
///   b[i] = b_{i+1}   (superdiagonal, n-1 entries; b_{n-1} is also the (n-1, n) border entry)
///   c[i] = c_{i+2}   (subdiagonal, n-1 entries; c_n is also the (n, n-1) border entry)
///   p[i] = p_{i+1}   (last-column border, n-2 entries)
///   q[i] = q_{i+1}   (last-row border, n-2 entries)
///   y[i] = y_{i+1}   (right-hand side, n entries)
template <class S>
struct BorderedSystem {
    int n = 0;
    std::vector<S> a, b, c, p, q, y;
};

using ExactSystem = BorderedSystem<Rational>;
using FloatSystem = BorderedSystem<double>;

/// Throws BadDimensions unless n > 3 and all array lengths match the template.
template <class S>
void check_dimensions(const BorderedSystem<S>& sys) {
    const auto n = static_cast<std::size_t>(sys.n);
    if (sys.n <= 3) throw BadDimensions("n must be > 3, got " + std::to_string(sys.n));
    auto want = [&](const std::vector<S>& v, std::size_t len, const char* name) {
        if (v.size() != len)
            throw BadDimensions(std::string(name) + " has length " + std::to_string(v.size()) +
                                ", expected " + std::to_string(len));
    };
    want(sys.a, n, "a");
    want(sys.b, n - 1, "b");
    want(sys.c, n - 1, "c");
    want(sys.p, n - 2, "p");
    want(sys.q, n - 2, "q");
    want(sys.y, n, "y");
}

/// Raw parsed fields, scalars still textual.
struct RawSystem {
    int n = 0;
    std::vector<std::string> a, b, c, p, q, y;
};

/// Parses every scalar and checks the dimension invariants.
/// Throws BadScalar or BadDimensions.
ExactSystem validate_system(const RawSystem& raw);

FloatSystem to_float(const ExactSystem& sys);
BorderedSystem<ExactScalar> to_exact_scalars(const ExactSystem& sys);

/// A·v for the matrix assembled from the system, computed row by row in O(n).
template <class S>
std::vector<S> multiply(const BorderedSystem<S>& sys, const std::vector<S>& v) {
    check_dimensions(sys);
    const std::size_t n = static_cast<std::size_t>(sys.n);
    if (v.size() != n)
        throw BadDimensions("vector has length " + std::to_string(v.size()) + ", expected " +
                            std::to_string(n));
    std::vector<S> out;
    out.reserve(n);
    // Row 1: a1 v1 + b1 v2 + p1 vn.
    out.push_back(sys.a[0] * v[0] + sys.b[0] * v[1] + sys.p[0] * v[n - 1]);
    // Rows 2..n-2: c_i v_{i-1} + a_i v_i + b_i v_{i+1} + p_i v_n.
    for (std::size_t i = 1; i + 2 < n; ++i)
        out.push_back(sys.c[i - 1] * v[i - 1] + sys.a[i] * v[i] + sys.b[i] * v[i + 1] +
                      sys.p[i] * v[n - 1]);
    // Row n-1: c_{n-1} v_{n-2} + a_{n-1} v_{n-1} + b_{n-1} v_n.
    out.push_back(sys.c[n - 3] * v[n - 3] + sys.a[n - 2] * v[n - 2] + sys.b[n - 2] * v[n - 1]);
    // Row n: sum q_j v_j + c_n v_{n-1} + a_n v_n.
    S last = sys.q[0] * v[0];
    for (std::size_t j = 1; j + 2 < n; ++j) last = last + sys.q[j] * v[j];
    last = last + sys.c[n - 2] * v[n - 2] + sys.a[n - 1] * v[n - 1];
    out.push_back(last);
    return out;
}

/// Dense row-major assembly of the system matrix.
template <class S>
std::vector<std::vector<S>> dense_matrix(const BorderedSystem<S>& sys) {
    check_dimensions(sys);
    const std::size_t n = static_cast<std::size_t>(sys.n);
    std::vector<std::vector<S>> m(n, std::vector<S>(n, S(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = sys.a[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m[i][i + 1] = sys.b[i];
        m[i + 1][i] = sys.c[i];
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        m[i][n - 1] = sys.p[i];
        m[n - 1][i] = sys.q[i];
    }
    return m;
}

}  // namespace btls
