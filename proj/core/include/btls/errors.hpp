#pragma once

#include <stdexcept>
#include <string>

namespace btls {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("rational function denominator is the zero polynomial") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// den(0) = 0 after full reduction: the unperturbed matrix is singular.
struct SingularAtZero : Error {
    SingularAtZero() : Error("expression has a pole at t = 0") {}
};

struct SingularError : Error {
    SingularError() : Error("matrix is singular") {}
    explicit SingularError(const std::string& what) : Error(what) {}
};

struct ZeroPivotError : Error {
    int index;
    explicit ZeroPivotError(int i)
        : Error("zero pivot d_" + std::to_string(i) +
                " encountered in float mode; rerun with --mode exact"),
          index(i) {}
};

struct ZeroCornerError : Error {
    ZeroCornerError()
        : Error("corner entry a_n is numerically zero in float mode; rerun with --mode exact") {}
};

struct BadDimensions : Error {
    using Error::Error;
};

struct BadScalar : Error {
    using Error::Error;
};

struct BadSpec : Error {
    using Error::Error;
};

}  // namespace btls
