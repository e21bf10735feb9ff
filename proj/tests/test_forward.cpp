// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "trispec/errors.hpp"
#include "trispec/forward.hpp"
#include "trispec/inverse.hpp"
#include "trispec/rng.hpp"
#include "trispec/validate.hpp"

using trispec::JacobiMatrix;

namespace {
const double kSqrt5 = std::sqrt(5.0);
}

TEST_CASE("split_at_site returns verbatim submatrices") {
    SUBCASE("interior site") {
        auto halves = trispec::split_at_site(JacobiMatrix({1, 2, 3}, {4, 5}), 2);
        REQUIRE(halves.minus.has_value());
        REQUIRE(halves.plus.has_value());
        CHECK(halves.minus->diag() == std::vector<double>{1});
        CHECK(halves.minus->offdiag().empty());
        CHECK(halves.plus->diag() == std::vector<double>{3});
    }
    SUBCASE("first site: lower side absent") {
        auto halves = trispec::split_at_site(JacobiMatrix({1, 2}, {4}), 1);
        CHECK(!halves.minus.has_value());
        REQUIRE(halves.plus.has_value());
        CHECK(halves.plus->diag() == std::vector<double>{2});
    }
    SUBCASE("last site: upper side absent") {
        auto halves = trispec::split_at_site(JacobiMatrix({1, 2, 3, 4}, {1, 1, 1}), 4);
        REQUIRE(halves.minus.has_value());
        CHECK(!halves.plus.has_value());
        CHECK(halves.minus->diag() == std::vector<double>{1, 2, 3});
        CHECK(halves.minus->offdiag() == std::vector<double>{1, 1});
    }
    SUBCASE("site out of range") {
        JacobiMatrix J({1, 2}, {4});
        CHECK_THROWS_AS(trispec::split_at_site(J, 0), trispec::SiteOutOfRange);
        CHECK_THROWS_AS(trispec::split_at_site(J, 3), trispec::SiteOutOfRange);
    }
}

TEST_CASE("forward map on desk-size matrices") {
    SUBCASE("2x2 at the first site") {
        auto data = trispec::extract_three_spectra(JacobiMatrix({0, 0}, {1}), 1);
        REQUIRE(data.order() == 2);
        CHECK(data.lambda[0] == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(data.lambda[1] == doctest::Approx(1.0).epsilon(1e-12));
        REQUIRE(data.mu.size() == 1);
        CHECK(std::abs(data.mu[0].value) < 1e-12);
        CHECK(data.mu[0].sigma == 1.0);
    }
    SUBCASE("symmetric 3x3: doubled value with sigma 0") {
        auto data = trispec::extract_three_spectra(JacobiMatrix({0, 0, 0}, {1, 1}), 2);
        REQUIRE(data.mu.size() == 2);
        CHECK(data.mu[0].value == data.mu[1].value);
        CHECK(std::abs(data.mu[0].value) < 1e-12);
        CHECK(std::abs(data.mu[0].sigma) < 1e-12);
        CHECK(data.mu[0].sigma == data.mu[1].sigma);
        // the matching lambda is pinned to the pair value
        CHECK(data.lambda[1] == data.mu[0].value);
    }
    SUBCASE("asymmetric couplings tilt sigma to 3/5") {
        auto data = trispec::extract_three_spectra(JacobiMatrix({0, 0, 0}, {1, 2}), 2);
        REQUIRE(data.mu.size() == 2);
        CHECK(data.lambda[0] == doctest::Approx(-kSqrt5).epsilon(1e-12));
        CHECK(data.lambda[2] == doctest::Approx(kSqrt5).epsilon(1e-12));
        CHECK(data.mu[0].value == data.mu[1].value);
        CHECK(data.mu[0].sigma == doctest::Approx(0.6).epsilon(1e-10));
    }
}

TEST_CASE("forward output always validates") {
    trispec::SplitMix64 rng(301);
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.uniform_int(1, 30);
        JacobiMatrix J = trispec::random_jacobi(rng, n, 0.5, 2.0, -1.0, 1.0);
        for (int site = 1; site <= n; ++site) {
            auto data = trispec::extract_three_spectra(J, site);
            auto report = trispec::validate_three_spectra(data);
            for (const auto& v : report.violations)
                INFO("rule ", v.rule, ": ", v.message);
            CHECK(report.ok);
        }
    }
}

TEST_CASE("forward output always validates on matrices with common eigenvalues") {
    trispec::SplitMix64 rng(302);
    for (int trial = 0; trial < 15; ++trial) {
        int n = rng.uniform_int(3, 16);
        int site = rng.uniform_int(2, n - 1);
        auto synthetic = testgen::random_valid_spectra(rng, n, site, 1 + trial % 2);
        JacobiMatrix J = trispec::reconstruct(synthetic);
        auto data = trispec::extract_three_spectra(J, site);
        CHECK(trispec::validate_three_spectra(data).ok);
        CHECK(testgen::count_pairs(data) == testgen::count_pairs(synthetic));
    }
}

TEST_CASE("glued values are eigenvalues of the full matrix") {
    // A palindromic matrix split at its center makes both submatrices
    // share their whole spectrum, sigma = 0 throughout.
    trispec::SplitMix64 rng(303);
    for (int half = 1; half <= 6; ++half) {
        std::vector<double> b(static_cast<std::size_t>(half)), a(b.size());
        for (auto& v : b) v = rng.uniform(-1.0, 1.0);
        for (auto& v : a) v = rng.uniform(0.5, 2.0);
        std::vector<double> bf(b);
        bf.push_back(rng.uniform(-1.0, 1.0));
        bf.insert(bf.end(), b.rbegin(), b.rend());
        std::vector<double> af(a);
        af.insert(af.end(), a.rbegin(), a.rend());
        JacobiMatrix J(bf, af);
        const int site = half + 1;

        auto data = trispec::extract_three_spectra(J, site);
        REQUIRE(data.mu.size() == 2 * static_cast<std::size_t>(half));
        const double scale = J.inf_norm();
        for (std::size_t j = 0; j + 1 < data.mu.size(); j += 2) {
            CHECK(data.mu[j].value == data.mu[j + 1].value);
            CHECK(std::abs(data.mu[j].sigma) < 1e-6);
            // Sturm bracket: an eigenvalue of J lies within 1e-8 of the value.
            const double m = data.mu[j].value;
            const double d = 1e-8 * std::max(1.0, scale);
            CHECK(trispec::sturm_count(J, m + d) - trispec::sturm_count(J, m - d) >= 1);
        }
        CHECK(trispec::validate_three_spectra(data).ok);
    }
}

TEST_CASE("trace identity on forward outputs") {
    trispec::SplitMix64 rng(304);
    for (int trial = 0; trial < 10; ++trial) {
        int n = rng.uniform_int(1, 28);
        JacobiMatrix J = trispec::random_jacobi(rng, n, 0.5, 2.0, -1.0, 1.0);
        for (int site = 1; site <= n; ++site) {
            auto data = trispec::extract_three_spectra(J, site);
            double sum = 0.0;
            for (double l : data.lambda) sum += l;
            for (const auto& e : data.mu) sum -= e.value;
            CHECK(std::abs(sum - J.diag()[static_cast<std::size_t>(site - 1)]) <= 1e-10);
        }
    }
}

TEST_CASE("sigma ranges: +-1 on simple values, interior on pairs") {
    trispec::SplitMix64 rng(305);
    for (int trial = 0; trial < 10; ++trial) {
        int n = rng.uniform_int(2, 20);
        int site = rng.uniform_int(1, n);
        auto data = trispec::extract_three_spectra(
            trispec::random_jacobi(rng, n, 0.5, 2.0, -1.0, 1.0), site);
        for (std::size_t j = 0; j < data.mu.size(); ++j) {
            bool doubled = (j + 1 < data.mu.size() && data.mu[j].value == data.mu[j + 1].value) ||
                           (j > 0 && data.mu[j - 1].value == data.mu[j].value);
            if (doubled)
                CHECK((data.mu[j].sigma > -1.0 && data.mu[j].sigma < 1.0));
            else
                CHECK(std::abs(data.mu[j].sigma) == 1.0);
        }
    }
}

TEST_CASE("empty-side conventions at the ends") {
    JacobiMatrix J({0.5, -0.25, 0.75}, {1.0, 1.5});
    auto first = trispec::extract_three_spectra(J, 1);
    for (const auto& e : first.mu) CHECK(e.sigma == 1.0);
    auto last = trispec::extract_three_spectra(J, 3);
    for (const auto& e : last.mu) CHECK(e.sigma == -1.0);
    auto single = trispec::extract_three_spectra(JacobiMatrix({5.0}, {}), 1);
    CHECK(single.mu.empty());
    CHECK(single.order() == 1);
}
