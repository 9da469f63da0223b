#pragma once

#include "majorization.hpp"
#include "operator_space.hpp"
#include "preserver.hpp"

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

// JSON encodings. Rationals travel as canonical "p/q" strings ("p" alone
// for integers); plain JSON integers are accepted on input. Matrix files
// are {"n": …, "entries": [[…]]}; operator files carry either the full
// n²×n² "rep" (row-major vectorization, as in OperatorRep) or a sparse
// "basis_images" list of {"h", "k", "image"} with 1-based h, k and omitted
// images meaning zero.

namespace hcm {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline nlohmann::json rational_to_json(const Rational& r) { return r.str(); }

inline Mat entries_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("expected " + std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw ParseError("expected " + std::to_string(cols) + " entries per row");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(row.at(c));
    }
    return m;
}

inline nlohmann::json entries_to_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::size_t dimension_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
        throw ParseError("expected an object with an integer field \"n\"");
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1) throw ParseError("\"n\" must be positive");
    return static_cast<std::size_t>(n);
}

inline Mat matrix_from_json(const nlohmann::json& j) {
    const std::size_t n = dimension_from_json(j);
    if (!j.contains("entries")) throw ParseError("matrix file needs an \"entries\" field");
    return entries_from_json(j.at("entries"), n, n);
}

inline nlohmann::json matrix_to_json(const Mat& m) {
    if (!m.is_square() || m.rows() == 0)
        throw std::invalid_argument("matrix_to_json: need a square nonempty matrix");
    return nlohmann::json{{"n", m.rows()}, {"entries", entries_to_json(m)}};
}

inline OperatorRep operator_from_json(const nlohmann::json& j) {
    const std::size_t n = dimension_from_json(j);
    const bool has_rep = j.contains("rep"), has_images = j.contains("basis_images");
    if (has_rep == has_images)
        throw ParseError("operator file needs exactly one of \"rep\" and \"basis_images\"");
    if (has_rep) return OperatorRep(n, entries_from_json(j.at("rep"), n * n, n * n));
    const auto& images = j.at("basis_images");
    if (!images.is_array()) throw ParseError("\"basis_images\" must be an array");
    std::map<std::pair<std::size_t, std::size_t>, Mat> parsed;
    for (const auto& item : images) {
        if (!item.is_object() || !item.contains("h") || !item.contains("k") || !item.contains("image"))
            throw ParseError("each basis image needs \"h\", \"k\" and \"image\"");
        const auto h = item.at("h").get<std::int64_t>();
        const auto k = item.at("k").get<std::int64_t>();
        if (h < 1 || k < 1 || h > static_cast<std::int64_t>(n) || k > static_cast<std::int64_t>(n))
            throw ParseError("basis image position out of range (h, k are 1-based)");
        const auto key = std::make_pair(static_cast<std::size_t>(h - 1), static_cast<std::size_t>(k - 1));
        if (parsed.count(key)) throw ParseError("duplicate basis image");
        parsed.emplace(key, entries_from_json(item.at("image"), n, n));
    }
    return OperatorRep::from_basis_images(n, parsed);
}

inline nlohmann::json operator_to_json(const OperatorRep& t) {
    return nlohmann::json{{"n", t.n()}, {"rep", entries_to_json(t.rep())}};
}

inline nlohmann::json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

inline Mat load_matrix_file(const std::filesystem::path& path) {
    try {
        return matrix_from_json(load_json_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

inline OperatorRep load_operator_file(const std::filesystem::path& path) {
    try {
        return operator_from_json(load_json_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

inline nlohmann::json to_json(const HcWitness& w) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : w.combo.coeffs()) r.push_back(rational_to_json(c));
    return nlohmann::json{{"r", std::move(r)}};
}

inline nlohmann::json to_json(const HWitness& w) { return nlohmann::json{{"d", entries_to_json(w.d)}}; }

inline nlohmann::json to_json(const DiagonalProfile& profile) {
    nlohmann::json touched = nlohmann::json::array();
    for (const auto& u : profile.touched) touched.push_back(std::set<std::size_t>(u));
    return nlohmann::json{{"touched", std::move(touched)}};
}

inline nlohmann::json to_json(const DiagonalEvidence& e) {
    return nlohmann::json{{"source_diagonal", e.source_diag},
                          {"target_diagonal", e.target_diag},
                          {"h", e.h + 1},
                          {"k", e.k + 1}};
}

inline nlohmann::json to_json(const PreserverDecision& d) {
    if (accepted(d)) {
        const auto& cert = certificate(d);
        return nlohmann::json{
            {"preserves", true}, {"p", cert.p}, {"profile", to_json(cert.profile)}};
    }
    const auto& ref = refutation(d);
    nlohmann::json out{
        {"preserves", false},
        {"kind", ref.kind == PreserverRefutation::Kind::diagonal_split ? "diagonal-split"
                                                                       : "diagonal-collision"},
        {"evidence", nlohmann::json::array({to_json(ref.first), to_json(ref.second)})}};
    if (ref.counterexample)
        out["counterexample"] =
            nlohmann::json{{"k", ref.counterexample->first}, {"b", entries_to_json(ref.counterexample->second)}};
    else
        out["counterexample"] = nullptr;
    return out;
}

}  // namespace hcm
