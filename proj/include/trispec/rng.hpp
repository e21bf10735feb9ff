// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "trispec/types.hpp"

namespace trispec {

/// SplitMix64 with bit-shift uniform doubles. std::random distributions
/// are implementation-defined; this generator gives bit-identical
/// sequences for a given seed on every platform, which the round-trip
/// harness requires.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] (inclusive).
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Random Jacobi matrix with diagonal entries in [b_lo, b_hi] and
/// off-diagonal entries in [a_lo, a_hi].
inline JacobiMatrix random_jacobi(SplitMix64& rng, int n, double a_lo, double a_hi,
                                  double b_lo, double b_hi) {
    std::vector<double> b(static_cast<std::size_t>(n)), a(static_cast<std::size_t>(n - 1));
    for (double& v : b) v = rng.uniform(b_lo, b_hi);
    for (double& v : a) v = rng.uniform(a_lo, a_hi);
    return JacobiMatrix(std::move(b), std::move(a));
}

} // namespace trispec
