// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "trispec/types.hpp"

namespace trispec {

/// Which basis vector anchors a spectral measure: the first index (used
/// for the upper submatrix) or the last index (used for the lower one).
enum class Anchor { First, Last };

/// Default eigenvalue tolerance, relative to the Gershgorin radius.
inline constexpr double kDefaultEigTol = 1e-13;

/// Number of eigenvalues strictly below x.
///
/// Sturm count via the shifted LDL^T recurrence
///   d_1 = b_1 - x,  d_i = b_i - x - a_{i-1}^2 / d_{i-1},
/// counting negative pivots. A zero pivot is flushed to +pivmin with
/// pivmin = safmin * max(1, max_k a_k^2), which keeps the quotient
/// a^2/d below overflow and makes the count exact ("strictly below")
/// even when x hits an eigenvalue.
int sturm_count(const JacobiMatrix& J, double x);

/// All N eigenvalues, strictly increasing, by Sturm-sequence bisection.
///
/// Each output is within tol * (Gershgorin radius) of a true eigenvalue,
/// and the k-th output has exactly k-1 eigenvalues below it
/// (count-correct by construction).
std::vector<double> eigenvalues(const JacobiMatrix& J, double tol = kDefaultEigTol);

/// Spectral measure of J seen from one end: nodes are the eigenvalues,
/// weight i is the squared anchor component of the normalized i-th
/// eigenvector (renormalized to unit sum). Satisfies
///   sum_i w_i / (node_i - z) = anchor-diagonal entry of (J - z)^{-1}.
///
/// Eigenvector anchor components come from inverse iteration with one
/// reorthogonalization pass against previously converged vectors in
/// tight clusters.
///
/// Throws DegenerateError if two computed nodes coincide within
/// tol * (Gershgorin radius) or a weight falls below 1e-300.
DiscreteMeasure spectral_measure(const JacobiMatrix& J, Anchor anchor,
                                 double tol = kDefaultEigTol);

} // namespace trispec
