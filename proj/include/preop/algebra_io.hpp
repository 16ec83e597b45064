#ifndef PREOP_ALGEBRA_IO_HPP
#define PREOP_ALGEBRA_IO_HPP

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include <json.hpp>

#include "algebra.hpp"
#include "errors.hpp"

namespace preop {

/*
 * Algebra files are JSON:
 *
 *   { "name": "dual_numbers", "dim": 2, "basis": ["1", "eps"],
 *     "mul": [ {"i": 0, "j": 1, "k": 1, "c": "1"}, ... ] }
 *
 * meaning e_i * e_j has coefficient c on e_k. "c" is a string "p" or "p/q".
 * Omitted triples are zero; repeating a triple is an error.
 */
inline AlgebraDef parse_algebra_json(const nlohmann::json& doc)
{
    if (!doc.is_object()) throw ParseError("algebra file must be a JSON object");
    for (const char* key : {"name", "dim", "basis", "mul"})
        if (!doc.contains(key)) throw ParseError(std::string("missing member \"") + key + "\"");
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    if (!doc["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
    if (!doc["basis"].is_array()) throw ParseError("\"basis\" must be an array");
    if (!doc["mul"].is_array()) throw ParseError("\"mul\" must be an array");

    const auto dim = doc["dim"].get<long long>();
    if (dim < 1) throw ValidationError("\"dim\" must be at least 1");
    std::vector<std::string> basis;
    for (const auto& b : doc["basis"]) {
        if (!b.is_string()) throw ParseError("basis names must be strings");
        basis.push_back(b.get<std::string>());
    }
    if (static_cast<long long>(basis.size()) != dim)
        throw ValidationError("\"basis\" has " + std::to_string(basis.size()) + " names but dim is " + std::to_string(dim));

    AlgebraDef alg(doc["name"].get<std::string>(), std::move(basis));
    std::set<std::tuple<long long, long long, long long>> seen;
    for (const auto& e : doc["mul"]) {
        if (!e.is_object()) throw ParseError("\"mul\" entries must be objects");
        for (const char* key : {"i", "j", "k"})
            if (!e.contains(key) || !e[key].is_number_integer())
                throw ParseError(std::string("\"mul\" entry needs integer \"") + key + "\"");
        if (!e.contains("c") || !e["c"].is_string()) throw ParseError("\"mul\" entry needs string \"c\"");
        const auto i = e["i"].get<long long>(), j = e["j"].get<long long>(), k = e["k"].get<long long>();
        for (long long v : {i, j, k})
            if (v < 0 || v >= dim) throw ValidationError("index " + std::to_string(v) + " outside 0.." + std::to_string(dim - 1));
        if (!seen.insert({i, j, k}).second)
            throw ValidationError("duplicate entry (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
        alg.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k),
                Rational::parse(e["c"].get<std::string>()));
    }
    return alg;
}

inline AlgebraDef parse_algebra_text(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_algebra_json(doc);
}

inline AlgebraDef parse_algebra(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_text(ss.str());
}

inline nlohmann::ordered_json algebra_to_json(const AlgebraDef& alg)
{
    nlohmann::ordered_json doc;
    doc["name"] = alg.name();
    doc["dim"] = alg.dim();
    doc["basis"] = alg.basis_names();
    auto mul = nlohmann::ordered_json::array();
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!alg.c(i, j, k).is_zero()) mul.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", alg.c(i, j, k).str()}});
    doc["mul"] = std::move(mul);
    return doc;
}

} // namespace preop

#endif // PREOP_ALGEBRA_IO_HPP
