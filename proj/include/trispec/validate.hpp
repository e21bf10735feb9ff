// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "trispec/types.hpp"

namespace trispec {

/// Check candidate three-spectra data against the realizability rules.
/// Nothing is thrown; every failed rule is reported. Rules:
///
///   structure  sizes consistent, site in 1..N, mu sorted
///   a          lambda strictly increasing
///   b          interlacing: lambda_1 < mu_1, mu_{N-1} < lambda_N,
///              lambda_j <= mu_j <= lambda_{j+1}
///   c          each mu value has multiplicity <= 2
///   d          a simple mu_j lies strictly inside (lambda_j, lambda_{j+1})
///              and carries sigma in {-1, +1}
///   e          a doubled mu_j = mu_{j+1} equals lambda_{j+1} exactly and
///              carries equal sigmas in the open interval (-1, 1)
///   f          side counts match the site:
///              #(sigma = -1) + #pairs = site - 1,
///              #(sigma = +1) + #pairs = N - site
///
/// Rule d is strict on purpose: equality of a simple mu with a lambda
/// forces a zero residue downstream, which contradicts positive weights.
/// Comparisons are exact; doubled entries must be listed twice with
/// bit-identical values (the forward map emits data in this canonical
/// form, with the matching lambda snapped to the pair value).
ValidationReport validate_three_spectra(const ThreeSpectra& data);

/// Diagonal resolvent entry g(z, site) of the underlying matrix,
/// evaluated from the spectra alone via the eigenvalue-ratio product
///
///   g(z) = prod_j (mu_j - z) / prod_j (lambda_j - z),
///
/// with sign-tracked log-magnitude accumulation so the products cannot
/// overflow for large N. Doubled mu values cancel symbolically against
/// their matching lambda before evaluation.
///
/// Throws PoleError if z collides with a (non-cancelled) lambda_j within
/// 1e-12 relative.
double resolvent_product_form(const ThreeSpectra& data, double z);

} // namespace trispec
