// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trispec/types.hpp"

namespace trispec {

/// Shortest-exact decimal form of v (17 significant digits, trailing
/// zeros trimmed by the general format). Deterministic and
/// locale-independent; parsing it back recovers v bit-exactly.
std::string format_double(double v);

/// Matrix file: {"b": [...], "a": [...]}. Throws std::invalid_argument on
/// malformed input (including nonpositive off-diagonal entries).
JacobiMatrix read_matrix_json(const std::string& text);

/// Spectra file: {"N": int, "site": int, "lambda": [...],
/// "mu": [{"value": r, "sigma": r}, ...]}, mu ascending, doubled values
/// listed twice adjacently. The redundant "N" must equal the lambda
/// count; deeper consistency is left to validate_three_spectra.
ThreeSpectra read_spectra_json(const std::string& text);

/// Deterministic serializers: fixed field order, fixed layout, one
/// trailing newline. Identical values give byte-identical output.
std::string matrix_to_json(const JacobiMatrix& J);
std::string spectra_to_json(const ThreeSpectra& data);
std::string eigenvalues_to_json(const std::vector<double>& lambda);

/// Whole-file helpers. Reading throws std::invalid_argument when the file
/// cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace trispec
