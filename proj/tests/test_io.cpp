// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "trispec/forward.hpp"
#include "trispec/io.hpp"
#include "trispec/rng.hpp"

using trispec::JacobiMatrix;

TEST_CASE("format_double round trips bit-exactly") {
    trispec::SplitMix64 rng(601);
    std::vector<double> samples = {0.0,   1.0,        -1.0,          0.5,
                                   1.0 / 3.0,         std::sqrt(2.0), 1e-300,
                                   1e300, 6.02214076e23, -2.2250738585072014e-308};
    for (int i = 0; i < 200; ++i)
        samples.push_back((rng.uniform() - 0.5) * std::pow(10.0, rng.uniform(-30.0, 30.0)));
    for (double v : samples) {
        std::string s = trispec::format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("matrix file round trip") {
    JacobiMatrix J({0.25, -1.0 / 3.0, 5.0}, {std::sqrt(2.0), 1e-7});
    std::string text = trispec::matrix_to_json(J);
    JacobiMatrix back = trispec::read_matrix_json(text);
    CHECK(back.diag() == J.diag());
    CHECK(back.offdiag() == J.offdiag());
    // byte determinism
    CHECK(trispec::matrix_to_json(back) == text);
}

TEST_CASE("spectra file round trip preserves doubled entries") {
    auto data = trispec::extract_three_spectra(JacobiMatrix({0, 0, 0}, {1, 2}), 2);
    std::string text = trispec::spectra_to_json(data);
    auto back = trispec::read_spectra_json(text);
    CHECK(back.site == data.site);
    REQUIRE(back.lambda.size() == data.lambda.size());
    for (std::size_t j = 0; j < data.lambda.size(); ++j)
        CHECK(back.lambda[j] == data.lambda[j]);
    REQUIRE(back.mu.size() == data.mu.size());
    for (std::size_t j = 0; j < data.mu.size(); ++j) {
        CHECK(back.mu[j].value == data.mu[j].value);
        CHECK(back.mu[j].sigma == data.mu[j].sigma);
    }
    CHECK(back.mu[0].value == back.mu[1].value);   // pair survives the file
    CHECK(trispec::spectra_to_json(back) == text);
}

TEST_CASE("readers reject malformed input") {
    CHECK_THROWS_AS(trispec::read_matrix_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(trispec::read_matrix_json("[1, 2]"), std::invalid_argument);
    CHECK_THROWS_AS(trispec::read_matrix_json(R"({"b": [0, 0]})"), std::invalid_argument);
    CHECK_THROWS_AS(trispec::read_matrix_json(R"({"b": [0, 0], "a": ["x"]})"),
                    std::invalid_argument);
    // structurally fine JSON, but the off-diagonal must be positive
    CHECK_THROWS_AS(trispec::read_matrix_json(R"({"b": [0, 0], "a": [-1]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(trispec::read_spectra_json(R"({"N": 3, "site": 1, "lambda": [1, 2],
                                                   "mu": []})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(trispec::read_spectra_json(R"({"N": 2, "site": 1, "lambda": [1, 2],
                                                   "mu": [{"value": 0}]})"),
                    std::invalid_argument);
}

TEST_CASE("empty mu serializes as an empty array") {
    trispec::ThreeSpectra d;
    d.site = 1;
    d.lambda = {7.0};
    std::string text = trispec::spectra_to_json(d);
    auto back = trispec::read_spectra_json(text);
    CHECK(back.mu.empty());
    CHECK(back.lambda == std::vector<double>{7.0});
}
