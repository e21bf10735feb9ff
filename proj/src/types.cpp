// SPDX-License-Identifier: Apache-2.0
#include "trispec/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace trispec {

JacobiMatrix::JacobiMatrix(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
    if (diag_.empty())
        throw std::invalid_argument("JacobiMatrix: diagonal must be nonempty");
    if (offdiag_.size() + 1 != diag_.size())
        throw std::invalid_argument("JacobiMatrix: offdiag size must be diag size - 1, got " +
                                    std::to_string(offdiag_.size()) + " for N = " +
                                    std::to_string(diag_.size()));
    for (std::size_t k = 0; k < offdiag_.size(); ++k) {
        if (!(offdiag_[k] > 0.0) || !std::isfinite(offdiag_[k]))
            throw std::invalid_argument("JacobiMatrix: off-diagonal entry " + std::to_string(k) +
                                        " must be positive and finite");
    }
    for (std::size_t k = 0; k < diag_.size(); ++k) {
        if (!std::isfinite(diag_[k]))
            throw std::invalid_argument("JacobiMatrix: diagonal entry " + std::to_string(k) +
                                        " must be finite");
    }
}

double JacobiMatrix::inf_norm() const {
    const std::size_t n = size();
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(diag_[i]);
        if (i > 0) row += std::abs(offdiag_[i - 1]);
        if (i + 1 < n) row += std::abs(offdiag_[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

DiscreteMeasure::DiscreteMeasure(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
    if (nodes_.empty())
        throw DegenerateMeasure("DiscreteMeasure: at least one node required");
    if (nodes_.size() != weights_.size())
        throw DegenerateMeasure("DiscreteMeasure: node/weight count mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!std::isfinite(nodes_[i]))
            throw DegenerateMeasure("DiscreteMeasure: node " + std::to_string(i) + " not finite");
        if (i > 0 && !(nodes_[i - 1] < nodes_[i]))
            throw DegenerateMeasure("DiscreteMeasure: nodes must be strictly increasing at index " +
                                    std::to_string(i));
        if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i]))
            throw DegenerateMeasure("DiscreteMeasure: weight " + std::to_string(i) +
                                    " must be positive and finite");
        sum += weights_[i];
    }
    for (double& w : weights_) w /= sum;
}

} // namespace trispec
