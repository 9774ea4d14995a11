#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "errors.hpp"

namespace wpsc {

// Deterministic sampling helpers on top of std::mt19937_64.
//
// The engine's output sequence is fixed by the C++ standard, but
// std::uniform_int_distribution is not, so every mapping from raw engine
// output to a range is done here by rejection sampling. Same seed, same
// draws, on every platform.

inline uint64_t uniform_below(std::mt19937_64& g, uint64_t bound) {
    if (bound == 0) throw UsageError("uniform_below: bound must be positive");
    // Largest multiple of bound that fits; values at or above it would bias.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        uint64_t v = g();
        if (v < limit) return v % bound;
    }
}

// k distinct values from [0, n), returned sorted ascending (Floyd's method).
inline std::vector<uint64_t> sample_distinct(std::mt19937_64& g, uint64_t n, uint64_t k) {
    if (k > n) throw UsageError("sample_distinct: k exceeds n");
    std::vector<uint64_t> picked;
    picked.reserve(k);
    for (uint64_t j = n - k; j < n; ++j) {
        uint64_t t = uniform_below(g, j + 1);
        bool seen = false;
        for (uint64_t p : picked) {
            if (p == t) { seen = true; break; }
        }
        picked.push_back(seen ? j : t);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

}  // namespace wpsc
