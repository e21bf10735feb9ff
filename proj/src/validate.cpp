// SPDX-License-Identifier: Apache-2.0
#include "trispec/validate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "trispec/errors.hpp"

namespace trispec {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void add(ValidationReport& report, std::string rule, std::string message,
         std::vector<std::size_t> indices) {
    report.ok = false;
    report.violations.push_back({std::move(rule), std::move(message), std::move(indices)});
}

bool is_pair_start(const std::vector<SignedEigenvalue>& mu, std::size_t j) {
    return j + 1 < mu.size() && mu[j].value == mu[j + 1].value;
}

} // namespace

ValidationReport validate_three_spectra(const ThreeSpectra& data) {
    ValidationReport report;
    const auto& lam = data.lambda;
    const auto& mu = data.mu;
    const std::size_t n_order = lam.size();

    if (n_order == 0)
        add(report, "structure", "lambda is empty", {});
    if (mu.size() + 1 != std::max<std::size_t>(n_order, 1))
        add(report, "structure",
            "mu has " + std::to_string(mu.size()) + " entries, expected N - 1 = " +
                std::to_string(n_order == 0 ? 0 : n_order - 1),
            {});
    if (data.site < 1 || static_cast<std::size_t>(data.site) > n_order)
        add(report, "structure", "site " + std::to_string(data.site) + " outside 1.." +
                std::to_string(n_order), {});
    for (std::size_t j = 0; j + 1 < mu.size(); ++j) {
        if (mu[j].value > mu[j + 1].value) {
            add(report, "structure", "mu not sorted at index " + std::to_string(j), {j, j + 1});
            break;
        }
    }
    if (!report.ok) return report;   // later rules assume the shape

    // (a) lambda strictly increasing
    for (std::size_t j = 0; j + 1 < n_order; ++j) {
        if (!(lam[j] < lam[j + 1]))
            add(report, "a",
                "lambda[" + std::to_string(j) + "] = " + fmt(lam[j]) +
                    " not strictly below lambda[" + std::to_string(j + 1) + "] = " +
                    fmt(lam[j + 1]),
                {j, j + 1});
    }

    // (b) interlacing, strict at the outer ends
    if (!mu.empty()) {
        if (!(lam.front() < mu.front().value))
            add(report, "b", "lambda[0] = " + fmt(lam.front()) + " not strictly below mu[0] = " +
                    fmt(mu.front().value), {0});
        if (!(mu.back().value < lam.back()))
            add(report, "b", "mu[" + std::to_string(mu.size() - 1) + "] = " +
                    fmt(mu.back().value) + " not strictly below lambda[N-1] = " +
                    fmt(lam.back()), {mu.size() - 1});
    }
    for (std::size_t j = 0; j < mu.size(); ++j) {
        if (!(lam[j] <= mu[j].value && mu[j].value <= lam[j + 1]))
            add(report, "b",
                "mu[" + std::to_string(j) + "] = " + fmt(mu[j].value) + " outside [lambda[" +
                    std::to_string(j) + "], lambda[" + std::to_string(j + 1) + "]] = [" +
                    fmt(lam[j]) + ", " + fmt(lam[j + 1]) + "]",
                {j});
    }

    // (c) multiplicity <= 2
    for (std::size_t j = 0; j < mu.size();) {
        std::size_t k = j;
        while (k + 1 < mu.size() && mu[k + 1].value == mu[j].value) ++k;
        if (k - j + 1 > 2)
            add(report, "c",
                "mu value " + fmt(mu[j].value) + " has multiplicity " + std::to_string(k - j + 1),
                {j, k});
        j = k + 1;
    }

    // (d) simple entries: strictly interior, sigma = +-1
    // (e) doubled pairs: pinned to the lambda between them, equal sigma in (-1, 1)
    std::size_t pairs = 0, count_minus = 0, count_plus = 0;
    for (std::size_t j = 0; j < mu.size();) {
        if (is_pair_start(mu, j)) {
            ++pairs;
            if (lam[j + 1] != mu[j].value)
                add(report, "e",
                    "doubled mu = " + fmt(mu[j].value) + " must equal lambda[" +
                        std::to_string(j + 1) + "] = " + fmt(lam[j + 1]) + " exactly",
                    {j, j + 1});
            if (mu[j].sigma != mu[j + 1].sigma)
                add(report, "e", "doubled mu at " + std::to_string(j) + " has unequal sigmas",
                    {j, j + 1});
            if (!(mu[j].sigma > -1.0 && mu[j].sigma < 1.0))
                add(report, "e",
                    "doubled mu at " + std::to_string(j) + " needs sigma in (-1, 1), got " +
                        fmt(mu[j].sigma),
                    {j, j + 1});
            j += 2;
        } else {
            if (!(lam[j] < mu[j].value && mu[j].value < lam[j + 1]))
                add(report, "d",
                    "simple mu[" + std::to_string(j) + "] = " + fmt(mu[j].value) +
                        " must lie strictly inside (lambda[" + std::to_string(j) + "], lambda[" +
                        std::to_string(j + 1) + "])",
                    {j});
            if (mu[j].sigma == -1.0)
                ++count_minus;
            else if (mu[j].sigma == 1.0)
                ++count_plus;
            else
                add(report, "d",
                    "simple mu[" + std::to_string(j) + "] needs sigma exactly -1 or +1, got " +
                        fmt(mu[j].sigma),
                    {j});
            j += 1;
        }
    }

    // (f) side counts determined by the site
    const std::size_t want_minus = static_cast<std::size_t>(data.site) - 1;
    const std::size_t want_plus = n_order - static_cast<std::size_t>(data.site);
    if (count_minus + pairs != want_minus)
        add(report, "f",
            "lower-side count " + std::to_string(count_minus + pairs) + " != site - 1 = " +
                std::to_string(want_minus),
            {});
    if (count_plus + pairs != want_plus)
        add(report, "f",
            "upper-side count " + std::to_string(count_plus + pairs) + " != N - site = " +
                std::to_string(want_plus),
            {});

    return report;
}

double resolvent_product_form(const ThreeSpectra& data, double z) {
    // Copy the node lists, cancelling each doubled mu against its matching
    // lambda (bit-identical values, so the cancellation is exact).
    std::vector<double> mu_vals;
    mu_vals.reserve(data.mu.size());
    std::vector<double> lam(data.lambda);
    for (std::size_t j = 0; j < data.mu.size();) {
        if (is_pair_start(data.mu, j)) {
            mu_vals.push_back(data.mu[j].value);
            auto it = std::find(lam.begin(), lam.end(), data.mu[j].value);
            if (it != lam.end()) lam.erase(it);
            j += 2;
        } else {
            mu_vals.push_back(data.mu[j].value);
            j += 1;
        }
    }

    double log_mag = 0.0;
    int sign = 1;
    bool zero = false;
    for (double m : mu_vals) {
        double t = m - z;
        if (t == 0.0) {
            zero = true;
        } else {
            log_mag += std::log(std::abs(t));
            if (t < 0.0) sign = -sign;
        }
    }
    for (double l : lam) {
        double t = l - z;
        if (std::abs(t) <= 1e-12 * std::max({1.0, std::abs(l), std::abs(z)}))
            throw PoleError("resolvent_product_form: z = " + std::to_string(z) +
                            " collides with eigenvalue " + std::to_string(l));
        log_mag -= std::log(std::abs(t));
        if (t < 0.0) sign = -sign;
    }
    if (zero) return 0.0;
    return sign * std::exp(log_mag);
}

} // namespace trispec
