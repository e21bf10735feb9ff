// SPDX-License-Identifier: Apache-2.0
#include "trispec/forward.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "trispec/errors.hpp"

namespace trispec {

namespace {

bool close_rel(double x, double y, double tol) {
    return std::abs(x - y) <= tol * std::max(1.0, std::max(std::abs(x), std::abs(y)));
}

} // namespace

SplitMatrices split_at_site(const JacobiMatrix& J, int site) {
    const std::size_t n_order = J.size();
    if (site < 1 || static_cast<std::size_t>(site) > n_order)
        throw SiteOutOfRange("split_at_site: site " + std::to_string(site) + " outside 1.." +
                             std::to_string(n_order));
    const std::size_t n = static_cast<std::size_t>(site);
    const auto& b = J.diag();
    const auto& a = J.offdiag();

    SplitMatrices out;
    if (n > 1) {
        std::vector<double> bm(b.begin(), b.begin() + (n - 1));
        std::vector<double> am(a.begin(), a.begin() + (n - 2));
        out.minus.emplace(std::move(bm), std::move(am));
    }
    if (n < n_order) {
        std::vector<double> bp(b.begin() + n, b.end());
        std::vector<double> ap(a.begin() + n, a.end());
        out.plus.emplace(std::move(bp), std::move(ap));
    }
    return out;
}

ThreeSpectra extract_three_spectra(const JacobiMatrix& J, int site, double merge_tol,
                                   double eig_tol) {
    if (merge_tol < 0.0)
        throw std::invalid_argument("extract_three_spectra: merge_tol must be >= 0");
    SplitMatrices halves = split_at_site(J, site);

    ThreeSpectra data;
    data.site = site;
    data.lambda = eigenvalues(J, eig_tol);

    std::vector<double> mu_minus, w_minus, mu_plus, w_plus;
    if (halves.minus) {
        DiscreteMeasure m = spectral_measure(*halves.minus, Anchor::Last, eig_tol);
        mu_minus = m.nodes();
        w_minus = m.weights();
    }
    if (halves.plus) {
        DiscreteMeasure m = spectral_measure(*halves.plus, Anchor::First, eig_tol);
        mu_plus = m.nodes();
        w_plus = m.weights();
    }

    const std::size_t n = static_cast<std::size_t>(site);
    const double a_minus_sq = (n > 1) ? J.offdiag()[n - 2] * J.offdiag()[n - 2] : 0.0;
    const double a_plus_sq = (n < J.size()) ? J.offdiag()[n - 1] * J.offdiag()[n - 1] : 0.0;

    // Merge the two sorted lists; values within merge_tol pair up as one
    // common eigenvalue listed twice.
    std::size_t k = 0, l = 0;
    while (k < mu_minus.size() || l < mu_plus.size()) {
        const bool have_minus = k < mu_minus.size();
        const bool have_plus = l < mu_plus.size();
        if (have_minus && have_plus && close_rel(mu_minus[k], mu_plus[l], merge_tol)) {
            const double value = 0.5 * (mu_minus[k] + mu_plus[l]);
            const double sm = a_minus_sq * w_minus[k];
            const double sp = a_plus_sq * w_plus[l];
            const double sigma = (sp - sm) / (sp + sm);
            data.mu.push_back({value, sigma});
            data.mu.push_back({value, sigma});
            // Canonicalize: pin the matching eigenvalue of J to the pair value.
            auto it = std::min_element(data.lambda.begin(), data.lambda.end(),
                                       [value](double x, double y) {
                                           return std::abs(x - value) < std::abs(y - value);
                                       });
            *it = value;
            ++k;
            ++l;
        } else if (have_minus && (!have_plus || mu_minus[k] <= mu_plus[l])) {
            data.mu.push_back({mu_minus[k], -1.0});
            ++k;
        } else {
            data.mu.push_back({mu_plus[l], +1.0});
            ++l;
        }
    }
    std::sort(data.lambda.begin(), data.lambda.end());   // snapping may reorder by ulps

    // Strict interlacing can be lost to rounding when a submatrix
    // eigenvalue is closer to an eigenvalue of J than one ulp (deeply
    // localized eigenvectors make such gaps routinely underflow the
    // representable resolution). Nudge simple entries back into the open
    // interior of their slot; the adjustment is at most a few ulps, far
    // below the accuracy of the values themselves.
    for (std::size_t j = 0; j < data.mu.size(); ++j) {
        const bool in_pair =
            (j + 1 < data.mu.size() && data.mu[j].value == data.mu[j + 1].value) ||
            (j > 0 && data.mu[j - 1].value == data.mu[j].value);
        if (in_pair) continue;
        const double lo = data.lambda[j], hi = data.lambda[j + 1];
        double v = data.mu[j].value;
        if (v <= lo) v = std::nextafter(lo, hi);
        if (v >= hi) v = std::nextafter(hi, lo);
        if (v > lo && v < hi) data.mu[j].value = v;
    }
    return data;
}

} // namespace trispec
