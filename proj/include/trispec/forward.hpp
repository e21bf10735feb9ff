// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "trispec/tridiag_eig.hpp"
#include "trispec/types.hpp"

namespace trispec {

/// Default relative tolerance for declaring a lower and an upper
/// submatrix eigenvalue common.
inline constexpr double kDefaultMergeTol = 1e-8;

/// The two principal submatrices left after deleting row and column
/// `site`; a side is absent when the site is the corresponding end.
struct SplitMatrices {
    std::optional<JacobiMatrix> minus;  ///< rows/columns 1..site-1
    std::optional<JacobiMatrix> plus;   ///< rows/columns site+1..N
};

/// Delete row and column `site` (1-based). Throws SiteOutOfRange.
SplitMatrices split_at_site(const JacobiMatrix& J, int site);

/// The forward spectral map: eigenvalues of J, merged eigenvalues of the
/// two site-deleted submatrices, and the side datum sigma per entry.
///
/// Submatrix eigenvalues closer than merge_tol * max(1, |mu|) are treated
/// as one common eigenvalue: both entries get the pair mean as value and
/// the weight-split sigma
///
///   sigma = (a_n^2 w+ - a_{n-1}^2 w-) / (a_n^2 w+ + a_{n-1}^2 w-),
///
/// where w-/w+ are the spectral-measure weights of the lower (last-index
/// anchor) and upper (first-index anchor) submatrices. The lambda entry
/// matching a merged pair is snapped to the pair value, so the output is
/// canonical and always passes validate_three_spectra.
ThreeSpectra extract_three_spectra(const JacobiMatrix& J, int site,
                                   double merge_tol = kDefaultMergeTol,
                                   double eig_tol = kDefaultEigTol);

} // namespace trispec
