// SPDX-License-Identifier: Apache-2.0
#include "trispec/inverse.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "trispec/errors.hpp"
#include "trispec/moment.hpp"

namespace trispec {

namespace {

// Sign-tracked log-magnitude product; value = sign * exp(log_mag).
struct SignedLogProduct {
    double log_mag = 0.0;
    int sign = 1;

    void mul(double t) {
        if (t == 0.0) {
            sign = 0;
            return;
        }
        log_mag += std::log(std::abs(t));
        if (t < 0.0) sign = -sign;
    }
    void div(double t) {
        if (t == 0.0)
            throw NonPositiveResidue("interior_coefficients: coincident nodes make a residue "
                                     "denominator vanish; data is numerically inconsistent");
        log_mag -= std::log(std::abs(t));
        if (t < 0.0) sign = -sign;
    }
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }
};

// One side entry: its value, and (for a doubled value) the lambda index
// it is pinned to plus the position of its partner on the other side.
struct SideEntry {
    double value = 0.0;
    bool doubled = false;
    std::size_t lambda_idx = 0;   // cancelled lambda factor, valid iff doubled
    std::size_t partner = 0;      // index into the other side's list, valid iff doubled
    double sigma = 0.0;           // valid iff doubled
};

double checked_residue(const SignedLogProduct& p, const char* what, double at) {
    double v = -p.value();
    if (!(v > 0.0) || !std::isfinite(v))
        throw NonPositiveResidue(std::string("interior_coefficients: ") + what + " at mu = " +
                                 std::to_string(at) + " is " + std::to_string(v) +
                                 ", must be positive");
    return v;
}

} // namespace

InteriorBlock interior_coefficients(const ThreeSpectra& data) {
    const auto& lam = data.lambda;
    const auto& mu = data.mu;

    // Partition the merged list into side lists; each doubled value
    // contributes one entry to each side and remembers which lambda and
    // which cross factor cancel.
    std::vector<SideEntry> minus, plus;
    for (std::size_t j = 0; j < mu.size();) {
        if (j + 1 < mu.size() && mu[j].value == mu[j + 1].value) {
            SideEntry em{mu[j].value, true, j + 1, plus.size(), mu[j].sigma};
            SideEntry ep{mu[j].value, true, j + 1, minus.size(), mu[j].sigma};
            minus.push_back(em);
            plus.push_back(ep);
            j += 2;
        } else if (mu[j].sigma < 0.0) {
            minus.push_back({mu[j].value, false, 0, 0, 0.0});
            j += 1;
        } else {
            plus.push_back({mu[j].value, false, 0, 0, 0.0});
            j += 1;
        }
    }

    // Residue products for one entry of one side. `own` is the entry's
    // side, `other` the opposite one.
    auto residue_product = [&lam](const std::vector<SideEntry>& own, std::size_t i,
                                  const std::vector<SideEntry>& other) {
        const SideEntry& e = own[i];
        SignedLogProduct p;
        for (std::size_t j = 0; j < lam.size(); ++j) {
            if (e.doubled && j == e.lambda_idx) continue;   // cancelled factor
            p.mul(e.value - lam[j]);
        }
        for (std::size_t l = 0; l < own.size(); ++l) {
            if (l == i) continue;
            p.div(e.value - own[l].value);
        }
        for (std::size_t l = 0; l < other.size(); ++l) {
            if (e.doubled && l == e.partner) continue;      // cancelled cross factor
            p.div(e.value - other[l].value);
        }
        return p;
    };

    std::vector<double> beta_minus(minus.size()), beta_plus(plus.size());
    for (std::size_t i = 0; i < minus.size(); ++i) {
        const SideEntry& e = minus[i];
        if (e.doubled) {
            double gamma = checked_residue(residue_product(minus, i, plus), "combined residue",
                                           e.value);
            beta_minus[i] = 0.5 * (1.0 - e.sigma) * gamma;
            beta_plus[e.partner] = 0.5 * (1.0 + e.sigma) * gamma;
        } else {
            beta_minus[i] = checked_residue(residue_product(minus, i, plus), "lower residue",
                                            e.value);
        }
    }
    for (std::size_t l = 0; l < plus.size(); ++l) {
        if (!plus[l].doubled)
            beta_plus[l] = checked_residue(residue_product(plus, l, minus), "upper residue",
                                           plus[l].value);
    }

    InteriorBlock block;
    double sum_mu = 0.0;
    for (const auto& e : mu) sum_mu += e.value;
    double sum_lam = 0.0;
    for (double l : lam) sum_lam += l;
    block.b_center = sum_lam - sum_mu;

    if (!minus.empty()) {
        for (double bm : beta_minus) block.a_minus_sq += bm;
        std::vector<double> nodes(minus.size());
        for (std::size_t i = 0; i < minus.size(); ++i) nodes[i] = minus[i].value;
        block.measure_minus.emplace(std::move(nodes), std::move(beta_minus));
    }
    if (!plus.empty()) {
        for (double bp : beta_plus) block.a_plus_sq += bp;
        std::vector<double> nodes(plus.size());
        for (std::size_t l = 0; l < plus.size(); ++l) nodes[l] = plus[l].value;
        block.measure_plus.emplace(std::move(nodes), std::move(beta_plus));
    }
    return block;
}

JacobiMatrix reconstruct(const ThreeSpectra& data) {
    InteriorBlock block = interior_coefficients(data);

    std::vector<double> b, a;
    b.reserve(data.order());
    a.reserve(data.order() > 0 ? data.order() - 1 : 0);

    if (block.measure_minus) {
        JacobiMatrix lower = measure_to_jacobi(*block.measure_minus, Anchor::Last);
        b.insert(b.end(), lower.diag().begin(), lower.diag().end());
        a.insert(a.end(), lower.offdiag().begin(), lower.offdiag().end());
        a.push_back(std::sqrt(block.a_minus_sq));
    }
    b.push_back(block.b_center);
    if (block.measure_plus) {
        JacobiMatrix upper = measure_to_jacobi(*block.measure_plus, Anchor::First);
        a.push_back(std::sqrt(block.a_plus_sq));
        b.insert(b.end(), upper.diag().begin(), upper.diag().end());
        a.insert(a.end(), upper.offdiag().begin(), upper.offdiag().end());
    }
    return JacobiMatrix(std::move(b), std::move(a));
}

} // namespace trispec
