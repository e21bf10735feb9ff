// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace trispec {

/// Base class for all numerical failures reported by this library.
/// Structural misuse (bad sizes, nonpositive off-diagonals) throws
/// std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Spectral parameter collided with a pole of the requested expression.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Split site outside 1..N.
class SiteOutOfRange : public Error {
public:
    using Error::Error;
};

/// Computed spectral data is numerically degenerate (coincident nodes,
/// vanishing weight). Cannot happen for exact Jacobi input.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Measure input is unusable: non-distinct nodes or nonpositive weights.
class DegenerateMeasure : public Error {
public:
    using Error::Error;
};

/// Lanczos recurrence norm fell below the breakdown threshold; the measure
/// is numerically supported on fewer points than claimed.
class BreakdownError : public Error {
public:
    using Error::Error;
};

/// A residue that must be positive for realizable spectral data came out
/// <= 0; the input is numerically inconsistent.
class NonPositiveResidue : public Error {
public:
    using Error::Error;
};

} // namespace trispec
