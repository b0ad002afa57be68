#pragma once

#include <cstdint>
#include <string_view>

#include "btls/system.hpp"

namespace btls {

enum class Family { Example31, Example32, Example33, Random, Pertri };

Family parse_family(std::string_view name);  // throws BadSpec
std::string_view family_name(Family f);

struct FamilySpec {
    Family family = Family::Random;
    int n = 0;  // ignored for the two fixed example systems
    std::uint64_t seed = 0;
    int entry_range = 9;
};

/// SplitMix64: the fixed pseudo-random stream behind the random families,
/// chosen so generated systems are identical across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] via modular reduction (span << 2^64, so
    /// the bias is negligible and, more to the point, deterministic).
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }
};

/// Builds the requested system. Random families resample until the Bareiss
/// determinant is nonzero and set y = A * ones, so the exact solution is the
/// all-ones vector. Throws BadSpec.
ExactSystem generate(const FamilySpec& spec);

}  // namespace btls
