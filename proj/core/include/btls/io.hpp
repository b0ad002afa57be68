#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "btls/system.hpp"

namespace btls {

/// System file format: one JSON document with integer "n" and arrays of
/// scalar strings "a", "b", "c", "p", "q", "y". Scalars use the textual
/// syntax of Rational::parse, so exact values survive a round trip.
std::string system_to_json(const ExactSystem& sys);
ExactSystem system_from_json(const std::string& text);

ExactSystem read_system(const std::filesystem::path& path);
void write_system(const ExactSystem& sys, const std::filesystem::path& path);

struct SolveReport {
    std::string method;  // sbtls | smw | gauss
    std::string mode;    // exact | f64
    std::vector<std::string> x;
    std::string determinant;
    long flops = 0;  // 0 only for gauss, which is not instrumented
    int substitutions = 0;
    std::string residual_inf;  // recomputed independently of the solver
    double wall_time_s = 0.0;
};

std::string report_to_json(const SolveReport& report);
std::string report_to_table(const SolveReport& report);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace btls
