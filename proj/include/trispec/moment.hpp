// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "trispec/tridiag_eig.hpp"
#include "trispec/types.hpp"

namespace trispec {

/// The unique M x M Jacobi matrix whose spectral measure at the given
/// anchor reproduces m: Lanczos three-term recurrence on the diagonal
/// operator of the nodes, started from the vector of square-rooted
/// weights, with full reorthogonalization at every step. The Last-anchor
/// variant runs the First-anchor construction and index-reverses.
///
/// Throws BreakdownError if a recurrence norm falls below
/// 1e-12 * (node spread): the measure is numerically supported on fewer
/// points than claimed.
JacobiMatrix measure_to_jacobi(const DiscreteMeasure& m, Anchor anchor);

/// Index-reversed matrix (b_k -> b_{M+1-k}, a_k -> a_{M-k}). Involutive,
/// spectrum preserved.
JacobiMatrix reverse_jacobi(const JacobiMatrix& J);

} // namespace trispec
