// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference implementations, independent of the library paths
// they check: dense linear algebra where the library is tridiagonal,
// characteristic-polynomial root bracketing where the library uses Sturm
// bisection.
#pragma once

#include <vector>

#include "trispec/types.hpp"

namespace oracle {

/// (site, site) entry of (J - z)^{-1}, 1-based site, computed by dense
/// Gaussian elimination with partial pivoting on the full N x N matrix.
double dense_resolvent_diag(const trispec::JacobiMatrix& J, double z, int site);

/// All eigenvalues as roots of the characteristic polynomial evaluated by
/// the three-term determinant recurrence
///   p_0 = 1, p_1 = b_1 - x, p_k = (b_k - x) p_{k-1} - a_{k-1}^2 p_{k-2},
/// bracketed on a fine grid over the Gershgorin interval and bisected.
/// Intended for small N (<= 8) with simple, separated roots.
std::vector<double> charpoly_eigenvalues(const trispec::JacobiMatrix& J);

/// Number of oracle eigenvalues strictly below x.
int count_below(const trispec::JacobiMatrix& J, double x);

} // namespace oracle
