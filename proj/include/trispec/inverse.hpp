// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "trispec/types.hpp"

namespace trispec {

/// Interior coefficients at the split site recovered from three-spectra
/// data: the two squared couplings, the diagonal entry, and the spectral
/// measures of the two sides (weights alpha = beta / a^2).
struct InteriorBlock {
    double a_minus_sq = 0.0;  ///< a_{n-1}^2 = sum of lower residues; 0 iff site = 1
    double a_plus_sq = 0.0;   ///< a_n^2 = sum of upper residues; 0 iff site = N
    double b_center = 0.0;    ///< diagonal entry at the site (trace formula)
    std::optional<DiscreteMeasure> measure_minus;
    std::optional<DiscreteMeasure> measure_plus;
};

/// Residue computation. For a simple entry on the lower side,
///
///   beta_i = - prod_j (mu_i - lambda_j)
///            / [ prod_{l != i} (mu_i - mu_l^-) * prod_l (mu_i - mu_l^+) ],
///
/// and symmetrically on the upper side; all products are sign-tracked in
/// log magnitude. For a doubled value the vanishing (mu - lambda) factor
/// and the single vanishing cross factor are removed by index bookkeeping
/// (never divided out numerically), giving the combined residue gamma,
/// which sigma splits as beta^- = (1-sigma)/2 * gamma,
/// beta^+ = (1+sigma)/2 * gamma. The diagonal entry is the trace
/// difference b = sum lambda - sum mu.
///
/// Precondition: validate_three_spectra(data).ok.
/// Throws NonPositiveResidue if any residue comes out <= 0; data passing
/// tolerance-based validation can still be numerically unrealizable.
InteriorBlock interior_coefficients(const ThreeSpectra& data);

/// Rebuild the unique Jacobi matrix with the given three-spectra data:
/// both sides are reconstructed from their measures through the moment
/// problem (lower side anchored at its last index, upper side at its
/// first), joined by the couplings and diagonal entry from
/// interior_coefficients.
///
/// Precondition: validate_three_spectra(data).ok.
/// Propagates interior_coefficients and measure_to_jacobi errors.
JacobiMatrix reconstruct(const ThreeSpectra& data);

} // namespace trispec
