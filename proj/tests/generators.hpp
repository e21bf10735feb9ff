// SPDX-License-Identifier: Apache-2.0
//
// Deterministic generators for property tests: structurally valid
// synthetic spectra (optionally with doubled values) and well-separated
// random measures.
#pragma once

#include <algorithm>
#include <vector>

#include "trispec/rng.hpp"
#include "trispec/types.hpp"

namespace testgen {

/// Structurally valid three-spectra data built from scratch: strictly
/// increasing lambda with healthy gaps, one mu per slot, a requested
/// number of doubled values pinned to their interior lambda (sigma drawn
/// from (-0.9, 0.9)), and side assignments matching the site.
inline trispec::ThreeSpectra random_valid_spectra(trispec::SplitMix64& rng, int order, int site,
                                                  int want_pairs) {
    const std::size_t n_order = static_cast<std::size_t>(order);
    trispec::ThreeSpectra data;
    data.site = site;

    // Gaps in [0.2, 1.2] scaled so the total spread stays ~4 regardless
    // of order (keeps eigenvalue sums well conditioned).
    data.lambda.resize(n_order);
    const double gap_scale = (order > 1) ? 4.0 / static_cast<double>(order) : 1.0;
    double x = rng.uniform(-2.0, -1.0);
    for (std::size_t j = 0; j < n_order; ++j) {
        data.lambda[j] = x;
        x += gap_scale * rng.uniform(0.2, 1.2);
    }

    const std::size_t slots = n_order - 1;
    std::size_t want_minus = static_cast<std::size_t>(site) - 1;
    std::size_t want_plus = n_order - static_cast<std::size_t>(site);

    // Choose non-overlapping adjacent slot pairs for the doubled values.
    std::vector<int> kind(slots, 0);   // 0 free, 2 pair start, 3 pair tail
    int pairs = 0;
    int attempts = 0;
    while (pairs < want_pairs && static_cast<std::size_t>(pairs) < std::min(want_minus, want_plus)
           && attempts++ < 200 && slots >= 2) {
        std::size_t j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(slots) - 2));
        if (kind[j] == 0 && kind[j + 1] == 0) {
            kind[j] = 2;
            kind[j + 1] = 3;
            ++pairs;
        }
    }
    want_minus -= static_cast<std::size_t>(pairs);
    want_plus -= static_cast<std::size_t>(pairs);

    // Distribute the remaining simple slots between the sides.
    std::vector<double> side_pool(want_minus, -1.0);
    side_pool.insert(side_pool.end(), want_plus, +1.0);
    for (std::size_t j = side_pool.size(); j > 1; --j)
        std::swap(side_pool[j - 1],
                  side_pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(j) - 1))]);

    std::size_t pool_at = 0;
    for (std::size_t j = 0; j < slots;) {
        if (kind[j] == 2) {
            const double value = data.lambda[j + 1];   // pinned exactly
            const double sigma = rng.uniform(-0.9, 0.9);
            data.mu.push_back({value, sigma});
            data.mu.push_back({value, sigma});
            j += 2;
        } else {
            const double u = rng.uniform(0.15, 0.85);
            const double value = data.lambda[j] + u * (data.lambda[j + 1] - data.lambda[j]);
            data.mu.push_back({value, side_pool[pool_at++]});
            j += 1;
        }
    }
    return data;
}

/// Random probability measure with node separation >= ~1.9e-3 of the
/// spread and weights bounded away from zero.
inline trispec::DiscreteMeasure random_measure(trispec::SplitMix64& rng, int size) {
    std::vector<double> nodes(static_cast<std::size_t>(size)), weights(nodes.size());
    double x = rng.uniform(-3.0, 3.0);
    const double scale = rng.uniform(0.1, 4.0);
    for (auto& node : nodes) {
        node = x;
        x += scale * rng.uniform(1.5, 20.0);
    }
    for (auto& w : weights) w = rng.uniform(0.05, 1.0);
    return trispec::DiscreteMeasure(std::move(nodes), std::move(weights));
}

/// Number of doubled values in a merged list.
inline int count_pairs(const trispec::ThreeSpectra& data) {
    int pairs = 0;
    for (std::size_t j = 0; j + 1 < data.mu.size(); ++j)
        if (data.mu[j].value == data.mu[j + 1].value) {
            ++pairs;
            ++j;
        }
    return pairs;
}

} // namespace testgen
