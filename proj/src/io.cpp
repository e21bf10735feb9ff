// SPDX-License-Identifier: Apache-2.0
#include "trispec/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace trispec {

namespace {

using json = nlohmann::json;

std::vector<double> number_array(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw std::invalid_argument(std::string("expected array field \"") + key + "\"");
    std::vector<double> out;
    out.reserve(j.at(key).size());
    for (const auto& v : j.at(key)) {
        if (!v.is_number())
            throw std::invalid_argument(std::string("non-numeric entry in \"") + key + "\"");
        out.push_back(v.get<double>());
    }
    return out;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

void append_array(std::string& out, const std::vector<double>& values) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_double(values[i]);
    }
    out += ']';
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

JacobiMatrix read_matrix_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object())
        throw std::invalid_argument("matrix file must hold a JSON object");
    return JacobiMatrix(number_array(j, "b"), number_array(j, "a"));
}

ThreeSpectra read_spectra_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object())
        throw std::invalid_argument("spectra file must hold a JSON object");
    if (!j.contains("N") || !j.at("N").is_number_integer())
        throw std::invalid_argument("expected integer field \"N\"");
    if (!j.contains("site") || !j.at("site").is_number_integer())
        throw std::invalid_argument("expected integer field \"site\"");

    ThreeSpectra data;
    data.site = j.at("site").get<int>();
    data.lambda = number_array(j, "lambda");
    const long long n = j.at("N").get<long long>();
    if (n < 0 || static_cast<std::size_t>(n) != data.lambda.size())
        throw std::invalid_argument("field \"N\" does not match the lambda count");

    if (!j.contains("mu") || !j.at("mu").is_array())
        throw std::invalid_argument("expected array field \"mu\"");
    for (const auto& entry : j.at("mu")) {
        if (!entry.is_object() || !entry.contains("value") || !entry.contains("sigma") ||
            !entry.at("value").is_number() || !entry.at("sigma").is_number())
            throw std::invalid_argument("mu entries must be {\"value\": r, \"sigma\": r}");
        data.mu.push_back({entry.at("value").get<double>(), entry.at("sigma").get<double>()});
    }
    return data;
}

std::string matrix_to_json(const JacobiMatrix& J) {
    std::string out = "{\n  \"b\": ";
    append_array(out, J.diag());
    out += ",\n  \"a\": ";
    append_array(out, J.offdiag());
    out += "\n}\n";
    return out;
}

std::string spectra_to_json(const ThreeSpectra& data) {
    std::string out = "{\n  \"N\": " + std::to_string(data.order());
    out += ",\n  \"site\": " + std::to_string(data.site);
    out += ",\n  \"lambda\": ";
    append_array(out, data.lambda);
    out += ",\n  \"mu\": [";
    for (std::size_t j = 0; j < data.mu.size(); ++j) {
        out += (j > 0) ? ",\n    " : "\n    ";
        out += "{\"value\": " + format_double(data.mu[j].value) +
               ", \"sigma\": " + format_double(data.mu[j].sigma) + "}";
    }
    out += data.mu.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

std::string eigenvalues_to_json(const std::vector<double>& lambda) {
    std::string out = "{\n  \"lambda\": ";
    append_array(out, lambda);
    out += "\n}\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open file for writing: " + path);
    out << content;
}

} // namespace trispec
