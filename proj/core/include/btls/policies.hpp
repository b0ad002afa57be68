#pragma once

#include <vector>

#include "btls/scalar.hpp"

namespace btls {

/// Exact-mode elimination policy: an exactly zero pivot is replaced by the
/// symbol t and its index recorded; arithmetic then continues over rational
/// functions of t.
struct ExactPolicy {
    using scalar = ExactScalar;

    long flops = 0;

    void observe(const ExactScalar&) {}
    bool is_zero(const ExactScalar& s) const { return s.is_zero(); }

    void fix_pivot(ExactScalar& d, int index, std::vector<int>& subs) {
        if (d.is_zero()) {
            d = ExactScalar::symbol_t();
            subs.push_back(index);
        }
    }
};

/// Float-mode elimination policy: no t trick (it needs exact cancellation);
/// a numerically zero pivot aborts the factorization.
struct FloatPolicy {
    using scalar = double;

    long flops = 0;
    FloatZeroTest zero;

    void observe(double v) { zero.observe(v); }
    bool is_zero(double s) const { return zero.is_zero(s); }

    void fix_pivot(double& d, int index, std::vector<int>&) {
        if (zero.is_zero(d)) throw ZeroPivotError(index);
        zero.observe(d);
    }
};

}  // namespace btls
