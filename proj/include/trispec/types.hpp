// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "trispec/errors.hpp"

namespace trispec {

/// Real symmetric tridiagonal matrix with positive off-diagonal entries.
///
/// Storage is the diagonal (N entries) and the off-diagonal (N-1 entries).
/// Positivity of the off-diagonal is a normalization: the spectra are
/// invariant under sign flips of individual off-diagonal entries, so
/// uniqueness statements are made within this class.
class JacobiMatrix {
public:
    /// Throws std::invalid_argument unless diag is nonempty,
    /// offdiag.size() == diag.size() - 1, and every offdiag entry is > 0.
    JacobiMatrix(std::vector<double> diag, std::vector<double> offdiag);

    std::size_t size() const { return diag_.size(); }
    const std::vector<double>& diag() const { return diag_; }
    const std::vector<double>& offdiag() const { return offdiag_; }

    /// Matrix infinity norm (max absolute row sum).
    double inf_norm() const;

private:
    std::vector<double> diag_;
    std::vector<double> offdiag_;
};

/// One interior eigenvalue with its side datum sigma.
///
/// sigma is +1 for an eigenvalue of the upper submatrix only, -1 for the
/// lower submatrix only, and lies in (-1, 1) for an eigenvalue common to
/// both (then it encodes the weight split between the two sides and the
/// value is listed twice, adjacently, with equal sigma).
struct SignedEigenvalue {
    double value = 0.0;
    double sigma = 0.0;
};

/// Spectral data of a Jacobi matrix split at one site: the N eigenvalues
/// of the full matrix and the merged, signed eigenvalues of the two
/// submatrices obtained by deleting row and column `site`.
///
/// This is a plain carrier: candidate data may violate the invariants and
/// is checked by validate_three_spectra, which reports (not throws).
struct ThreeSpectra {
    int site = 1;                      ///< split index, 1-based, 1 <= site <= N
    std::vector<double> lambda;        ///< eigenvalues of the full matrix, ascending
    std::vector<SignedEigenvalue> mu;  ///< merged submatrix eigenvalues, ascending

    std::size_t order() const { return lambda.size(); } ///< N
};

/// Finitely supported probability measure: strictly increasing nodes with
/// positive weights. Weights are renormalized to unit sum on construction.
class DiscreteMeasure {
public:
    /// Throws DegenerateMeasure unless nodes are strictly increasing and
    /// all weights are positive (sizes must match, at least one node).
    DiscreteMeasure(std::vector<double> nodes, std::vector<double> weights);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// One failed validation rule with a human-readable message and the
/// offending indices (0-based positions into lambda or mu).
struct Violation {
    std::string rule;
    std::string message;
    std::vector<std::size_t> indices;
};

/// Outcome of validate_three_spectra. ok iff violations is empty.
struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

} // namespace trispec
