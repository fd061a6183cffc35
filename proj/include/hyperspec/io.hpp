#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/solver.hpp"
#include "hyperspec/tensor.hpp"
#include "hyperspec/verify.hpp"

namespace hyperspec {

/// Fixed-width significant-digit formatting for CSV output (12 digits keeps
/// rows reproducible without drowning them in noise).
inline std::string format_csv_number(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

// ---- hypergraph formats ----------------------------------------------------

/// JSON form {"k": int, "n": int, "edges": [[int,...],...]}.
inline nlohmann::json hypergraph_to_json(const UniformHypergraph& h) {
    nlohmann::json j;
    j["k"] = h.k;
    j["n"] = h.n;
    j["edges"] = h.edges;
    return j;
}

inline UniformHypergraph hypergraph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument(
            "hypergraph JSON must be an object with fields k, n, edges");
    try {
        return build_hypergraph(j.at("n").get<std::size_t>(),
                                j.at("k").get<std::size_t>(),
                                j.at("edges").get<std::vector<Edge>>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid hypergraph JSON: ") +
                                    e.what());
    }
}

/// Accepts both input formats: JSON, or plain text with first line "k n" and
/// one whitespace-separated edge per line.
inline UniformHypergraph parse_hypergraph(const std::string& content) {
    std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw std::invalid_argument("empty hypergraph input");
    if (content[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("invalid hypergraph JSON: ") +
                                        e.what());
        }
        return hypergraph_from_json(j);
    }

    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty hypergraph input");
    std::istringstream header(line);
    long long k = -1, n = -1;
    if (!(header >> k >> n) || k < 0 || n < 0)
        throw std::invalid_argument(
            "text hypergraph input must start with a \"k n\" line");
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        Edge e;
        long long v;
        while (row >> v) {
            if (v < 0) throw std::invalid_argument("negative vertex id in edge " +
                                                   std::to_string(edges.size()));
            e.push_back(static_cast<VertexId>(v));
        }
        if (!e.empty()) edges.push_back(std::move(e));
    }
    return build_hypergraph(static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                            std::move(edges));
}

inline UniformHypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
}

// ---- result serialization --------------------------------------------------

inline nlohmann::json spectral_result_to_json(const SpectralResult& res) {
    nlohmann::json j;
    j["lambda"] = res.lambda;
    j["lower"] = res.lower;
    j["upper"] = res.upper;
    j["iterations"] = res.iterations;
    j["residual"] = res.residual;
    j["eigenvector"] = res.eigenvector;
    j["flags"] = res.flags;
    return j;
}

inline std::string spectral_result_to_csv(const SpectralResult& res) {
    std::string out = "lambda,lower,upper,iterations,residual\n";
    out += format_csv_number(res.lambda) + "," + format_csv_number(res.lower) + "," +
           format_csv_number(res.upper) + "," + std::to_string(res.iterations) + "," +
           format_csv_number(res.residual) + "\n";
    return out;
}

inline nlohmann::json scan_table_to_json(const ScanTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ScanRow& r : table.rows) {
        nlohmann::json row;
        row["k"] = r.k;
        row["lambda"] = r.lambda;
        row["lower"] = r.lower;
        row["upper"] = r.upper;
        row["iterations"] = r.iterations;
        row["converged"] = r.converged;
        rows.push_back(row);
    }
    nlohmann::json j;
    j["base"] = table.base;
    j["kind"] = tensor_kind_name(table.kind);
    j["rows"] = rows;
    j["is_strictly_decreasing"] = table.is_strictly_decreasing;
    j["limit_target"] = table.limit_target;
    j["all_above_limit"] = table.all_above_limit;
    j["final_gap"] = table.final_gap;
    return j;
}

inline std::string scan_table_to_csv(const ScanTable& table) {
    std::string out = "k,lambda,lower,upper,iterations\n";
    for (const ScanRow& r : table.rows)
        out += std::to_string(r.k) + "," + format_csv_number(r.lambda) + "," +
               format_csv_number(r.lower) + "," + format_csv_number(r.upper) + "," +
               std::to_string(r.iterations) + "\n";
    return out;
}

inline nlohmann::json check_report_to_json(const CheckReport& report) {
    nlohmann::json items = nlohmann::json::array();
    for (const CheckItem& item : report.items) {
        nlohmann::json ji;
        ji["label"] = item.label;
        ji["measured"] = item.measured;
        ji["expected"] = item.expected;
        ji["tolerance"] = item.tolerance;
        ji["pass"] = item.pass;
        items.push_back(ji);
    }
    nlohmann::json j;
    j["name"] = report.name;
    j["pass"] = report.pass;
    j["items"] = items;
    j["notes"] = report.notes;
    return j;
}

inline nlohmann::json check_reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckReport& r : reports) arr.push_back(check_report_to_json(r));
    return arr;
}

inline std::string check_reports_to_csv(const std::vector<CheckReport>& reports) {
    std::string out = "check,item,measured,expected,tolerance,pass\n";
    auto quote = [](std::string s) {
        for (char& c : s)
            if (c == ',') c = ';';
        return s;
    };
    for (const CheckReport& r : reports) {
        for (const CheckItem& item : r.items)
            out += quote(r.name) + "," + quote(item.label) + "," +
                   format_csv_number(item.measured) + "," +
                   format_csv_number(item.expected) + "," +
                   format_csv_number(item.tolerance) + "," +
                   (item.pass ? "true" : "false") + "\n";
        if (r.items.empty())
            out += quote(r.name) + ",," + ",,," + (r.pass ? "true" : "false") + "\n";
    }
    return out;
}

/// Row-major dense tensor dump for golden-file comparisons.
inline nlohmann::json dense_tensor_to_json(const DenseTensor& t) {
    nlohmann::json j;
    j["order"] = t.order;
    j["dim"] = t.dim;
    j["entries"] = t.entries;
    return j;
}

inline DenseTensor dense_tensor_from_json(const nlohmann::json& j) {
    DenseTensor t;
    t.order = j.at("order").get<std::size_t>();
    t.dim = j.at("dim").get<std::size_t>();
    t.entries = j.at("entries").get<std::vector<double>>();
    return t;
}

}  // namespace hyperspec
