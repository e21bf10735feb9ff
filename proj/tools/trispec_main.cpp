// SPDX-License-Identifier: Apache-2.0
//
// File-based front end for the three-spectra maps.
//
// Commands: forward, inverse, validate, eig, roundtrip.
// Exit codes: 0 ok, 1 tolerance failure, 2 malformed input, 3 bad site,
//             4 validation failure, 5 reconstruction failure.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trispec/errors.hpp"
#include "trispec/forward.hpp"
#include "trispec/inverse.hpp"
#include "trispec/io.hpp"
#include "trispec/rng.hpp"
#include "trispec/tridiag_eig.hpp"
#include "trispec/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitBadSite = 3;
constexpr int kExitInvalidData = 4;
constexpr int kExitReconstruction = 5;

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty())
        std::cout << content;
    else
        trispec::write_file(output_path, content);
}

void render_report(std::ostream& os, const trispec::ValidationReport& report) {
    if (report.ok) {
        os << "ok\n";
        return;
    }
    for (const auto& v : report.violations)
        os << "rule (" << v.rule << "): " << v.message << "\n";
}

std::string sci(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 3);
    return std::string(buf, res.ptr);
}

int cmd_forward(const std::string& matrix_path, int site, double merge_tol, double eig_tol,
                const std::string& output_path) {
    trispec::JacobiMatrix J = trispec::read_matrix_json(trispec::read_file(matrix_path));
    trispec::ThreeSpectra data = trispec::extract_three_spectra(J, site, merge_tol, eig_tol);
    emit(output_path, trispec::spectra_to_json(data));
    return kExitOk;
}

int cmd_inverse(const std::string& spectra_path, const std::string& output_path) {
    trispec::ThreeSpectra data = trispec::read_spectra_json(trispec::read_file(spectra_path));
    trispec::ValidationReport report = trispec::validate_three_spectra(data);
    if (!report.ok) {
        render_report(std::cerr, report);
        return kExitInvalidData;
    }
    trispec::JacobiMatrix J = trispec::reconstruct(data);
    emit(output_path, trispec::matrix_to_json(J));
    return kExitOk;
}

int cmd_validate(const std::string& spectra_path) {
    trispec::ThreeSpectra data = trispec::read_spectra_json(trispec::read_file(spectra_path));
    trispec::ValidationReport report = trispec::validate_three_spectra(data);
    render_report(std::cout, report);
    return report.ok ? kExitOk : kExitInvalidData;
}

int cmd_eig(const std::string& matrix_path, double eig_tol, const std::string& output_path) {
    trispec::JacobiMatrix J = trispec::read_matrix_json(trispec::read_file(matrix_path));
    emit(output_path, trispec::eigenvalues_to_json(trispec::eigenvalues(J, eig_tol)));
    return kExitOk;
}

double normalized_error(const trispec::JacobiMatrix& original,
                        const trispec::JacobiMatrix& rebuilt) {
    double err = 0.0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        double row = std::abs(rebuilt.diag()[i] - original.diag()[i]);
        if (i > 0) row += std::abs(rebuilt.offdiag()[i - 1] - original.offdiag()[i - 1]);
        if (i + 1 < original.size())
            row += std::abs(rebuilt.offdiag()[i] - original.offdiag()[i]);
        err = std::max(err, row);
    }
    return err / (1.0 + original.inf_norm());
}

int cmd_roundtrip(int size, const std::string& site_arg, int trials, std::uint64_t seed,
                  std::vector<double> a_range, std::vector<double> b_range, double tol,
                  double merge_tol, double eig_tol) {
    std::vector<int> sites;
    if (site_arg == "all") {
        for (int n = 1; n <= size; ++n) sites.push_back(n);
    } else {
        int n = 0;
        auto [p, ec] = std::from_chars(site_arg.data(), site_arg.data() + site_arg.size(), n);
        if (ec != std::errc() || p != site_arg.data() + site_arg.size())
            throw std::invalid_argument("--site must be an integer or \"all\"");
        if (n < 1 || n > size) throw trispec::SiteOutOfRange("roundtrip: site out of range");
        sites.push_back(n);
    }

    std::vector<double> errors;
    errors.reserve(static_cast<std::size_t>(trials));
    int first_bad = -1;
    for (int t = 0; t < trials; ++t) {
        // Trial-indexed seeding keeps results independent of trial order.
        trispec::SplitMix64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
        trispec::JacobiMatrix J = trispec::random_jacobi(rng, size, a_range[0], a_range[1],
                                                         b_range[0], b_range[1]);
        double err = 0.0;
        int merged = 0;
        std::string note;
        for (int n : sites) {
            trispec::ThreeSpectra data = trispec::extract_three_spectra(J, n, merge_tol, eig_tol);
            for (std::size_t j = 0; j + 1 < data.mu.size(); ++j)
                if (data.mu[j].value == data.mu[j + 1].value) {
                    ++merged;
                    ++j;
                }
            try {
                err = std::max(err, normalized_error(J, trispec::reconstruct(data)));
            } catch (const trispec::Error& e) {
                err = std::numeric_limits<double>::infinity();
                note = std::string("; site ") + std::to_string(n) + " failed: " + e.what();
                break;
            }
        }
        std::cout << "trial " << t << ": error " << sci(err);
        // Random matrices have no exactly common eigenvalues, so any
        // merged pair here records a (tolerance-induced) false merge.
        if (merged > 0) std::cout << " [" << merged << " merged pair(s)]";
        std::cout << note << "\n";
        errors.push_back(err);
        if (err > tol && first_bad < 0) first_bad = t;
    }

    std::vector<double> sorted(errors);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    const double median =
        (m % 2 == 1) ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    std::cout << "max " << sci(sorted.back()) << " median " << sci(median) << "\n";

    if (first_bad >= 0) {
        std::cerr << "tolerance " << sci(tol) << " exceeded first at trial " << first_bad
                  << " (seed " << seed << ")\n";
        return kExitTolerance;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forward and inverse spectral maps for Jacobi matrices: "
                 "matrix -> three spectra with sign data, and back"};
    app.require_subcommand(1);

    std::string matrix_path, spectra_path, output_path;
    int site = 1;
    double merge_tol = trispec::kDefaultMergeTol;
    double eig_tol = trispec::kDefaultEigTol;

    auto* fwd = app.add_subcommand("forward", "Spectra of a matrix split at a site");
    fwd->add_option("matrix-file", matrix_path, "matrix JSON file")->required();
    fwd->add_option("--site", site, "split site, 1-based")->required();
    fwd->add_option("--merge-tol", merge_tol, "relative tolerance for common eigenvalues");
    fwd->add_option("--eig-tol", eig_tol, "eigenvalue tolerance relative to Gershgorin radius");
    fwd->add_option("-o,--output", output_path, "output path (default: stdout)");

    auto* inv = app.add_subcommand("inverse", "Reconstruct the matrix from spectra");
    inv->add_option("spectra-file", spectra_path, "spectra JSON file")->required();
    inv->add_option("-o,--output", output_path, "output path (default: stdout)");

    auto* val = app.add_subcommand("validate", "Check spectra data, report violations");
    val->add_option("spectra-file", spectra_path, "spectra JSON file")->required();

    auto* eig = app.add_subcommand("eig", "Eigenvalues of a matrix");
    eig->add_option("matrix-file", matrix_path, "matrix JSON file")->required();
    eig->add_option("--eig-tol", eig_tol, "eigenvalue tolerance relative to Gershgorin radius");
    eig->add_option("-o,--output", output_path, "output path (default: stdout)");

    int size = 1, trials = 100;
    std::uint64_t seed = 1;
    std::string site_arg = "all";
    double tol = 1e-8;
    std::vector<double> a_range{0.5, 2.0}, b_range{-1.0, 1.0};
    auto* rt = app.add_subcommand("roundtrip", "Seeded random forward-inverse harness");
    rt->add_option("--size", size, "matrix order")->required()->check(CLI::PositiveNumber);
    rt->add_option("--site", site_arg, "split site or \"all\"");
    rt->add_option("--trials", trials, "number of matrices")->check(CLI::PositiveNumber);
    rt->add_option("--seed", seed, "RNG seed");
    rt->add_option("--a-range", a_range, "off-diagonal range")->expected(2);
    rt->add_option("--b-range", b_range, "diagonal range")->expected(2);
    rt->add_option("--tol", tol, "max allowed normalized error");
    rt->add_option("--merge-tol", merge_tol, "relative tolerance for common eigenvalues");
    rt->add_option("--eig-tol", eig_tol, "eigenvalue tolerance relative to Gershgorin radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    try {
        if (fwd->parsed()) return cmd_forward(matrix_path, site, merge_tol, eig_tol, output_path);
        if (inv->parsed()) return cmd_inverse(spectra_path, output_path);
        if (val->parsed()) return cmd_validate(spectra_path);
        if (eig->parsed()) return cmd_eig(matrix_path, eig_tol, output_path);
        if (rt->parsed())
            return cmd_roundtrip(size, site_arg, trials, seed, a_range, b_range, tol, merge_tol,
                                 eig_tol);
    } catch (const trispec::SiteOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadSite;
    } catch (const trispec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitReconstruction;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitOk;
}
