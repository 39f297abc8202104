#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hungerlab/chain.hpp"

namespace hungerlab {

using AnyChain = std::variant<MarkovChain<Rational>, MarkovChain<double>>;

namespace detail {

inline std::string cell_name(std::size_t i, std::size_t j) {
    return "P[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

template <Scalar T>
T parse_entry(const nlohmann::json& cell, std::size_t i, std::size_t j) {
    if constexpr (ScalarTraits<T>::exact) {
        if (cell.is_number())
            throw Error(Errc::mode_mismatch, cell_name(i, j) + " is a number; rational mode needs \"a/b\" strings");
        if (!cell.is_string()) throw Error(Errc::malformed_token, cell_name(i, j) + " is not a string");
        const auto& s = cell.get_ref<const std::string&>();
        if (!s.empty() && s.front() == '-') throw Error(Errc::negative_entry, cell_name(i, j) + " is negative");
        if (s.find('.') != std::string::npos || s.find_first_of("eE") != std::string::npos)
            throw Error(Errc::mode_mismatch, cell_name(i, j) + " is a float literal in rational mode");
        return parse_rational(s);
    } else {
        if (!cell.is_number()) throw Error(Errc::malformed_token, cell_name(i, j) + " is not a number");
        return cell.get<double>();
    }
}

template <Scalar T>
MarkovChain<T> build_chain(const nlohmann::json& doc) {
    const auto& rows = doc.at("P");
    if (!rows.is_array() || rows.empty()) throw Error(Errc::malformed_token, "P must be a non-empty array");
    const std::size_t n = rows.size();
    Matrix<T> p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw Error(Errc::malformed_token, "row " + std::to_string(i + 1) + " must have " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) p(i, j) = parse_entry<T>(row[j], i, j);
    }
    std::vector<std::string> labels;
    if (doc.contains("states")) {
        const auto& states = doc.at("states");
        if (!states.is_array()) throw Error(Errc::malformed_token, "states must be an array");
        for (const auto& s : states) {
            if (!s.is_string()) throw Error(Errc::malformed_token, "state names must be strings");
            labels.push_back(s.get<std::string>());
        }
    }
    return MarkovChain<T>(std::move(p), std::move(labels));
}

}  // namespace detail

/// Parses a chain-definition document: {"mode": "rational"|"float", "states": [...], "P": [[...]]}.
inline AnyChain parse_chain(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::malformed_token, e.what());
    }
    if (!doc.is_object() || !doc.contains("mode") || !doc.at("mode").is_string() || !doc.contains("P"))
        throw Error(Errc::malformed_token, "chain document needs string 'mode' and 'P'");

    const auto mode = doc.at("mode").get<std::string>();
    if (mode == "rational") return detail::build_chain<Rational>(doc);
    if (mode == "float") return detail::build_chain<double>(doc);
    throw Error(Errc::malformed_token, "unknown mode '" + mode + "'");
}

inline AnyChain load_chain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_chain(ss.str());
}

template <Scalar T>
nlohmann::json chain_to_json(const MarkovChain<T>& chain) {
    nlohmann::json doc;
    doc["mode"] = std::string(mode_name(MarkovChain<T>::mode));
    doc["states"] = chain.labels();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < chain.size(); ++j) {
            if constexpr (ScalarTraits<T>::exact)
                row.push_back(to_string(chain.prob(i, j)));
            else
                row.push_back(chain.prob(i, j));
        }
        rows.push_back(std::move(row));
    }
    doc["P"] = std::move(rows);
    return doc;
}

}  // namespace hungerlab
