#ifndef PREOP_REPORT_HPP
#define PREOP_REPORT_HPP

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "cohomology.hpp"
#include "gerstenhaber.hpp"
#include "identities.hpp"

namespace preop {

using ordered_json = nlohmann::ordered_json;

// Report schema, top level {"meta", "verdicts", "tables"}. Rationals are
// strings so values stay exact; coefficient tables use the flat order of
// MultiMap.

inline ordered_json to_json(std::span<const Rational> v)
{
    auto a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline ordered_json to_json(const MultiMap& f)
{
    return {{"arity", f.arity()}, {"coeffs", to_json(f.coeffs())}};
}

inline ordered_json to_json(const Verdict& v)
{
    ordered_json j;
    j["name"] = v.name;
    j["passed"] = v.passed;
    j["samples"] = v.samples;
    j["comparisons"] = v.comparisons;
    j["nonzero"] = v.nonzero;
    if (v.counterexample) {
        const auto& c = *v.counterexample;
        auto inputs = ordered_json::array();
        for (const auto& f : c.inputs) inputs.push_back(to_json(f));
        j["counterexample"] = {{"sample", c.sample}, {"sample_seed", c.sample_seed}, {"where", c.where},
                               {"inputs", std::move(inputs)}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}};
    }
    return j;
}

inline ordered_json to_json(const StructureCheck& c)
{
    ordered_json j{{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}};
    if (!c.passed) j["failure"] = c.failure;
    return j;
}

inline ordered_json to_json(const ProductEntry& e)
{
    return {{"left", {e.left.degree, e.left.index}},
            {"right", {e.right.degree, e.right.index}},
            {"degree", e.result.degree},
            {"coords", to_json(e.result.coords)}};
}

// Human-readable listing of the nonzero entries of a cochain, e.g.
// "eps <- (1, eps) : 1".
inline void print_cochain(std::ostream& os, const MultiMap& f, const AlgebraDef& alg, const std::string& indent)
{
    if (f.arity() < 0) return;
    const auto& names = alg.basis_names();
    for (std::size_t t = 0; t < f.size(); ++t) {
        if (f[t].is_zero()) continue;
        const auto bt = basis_tuple(f.arity(), f.dim(), t);
        os << indent << names[bt.output] << " <- (";
        for (std::size_t s = 0; s < bt.inputs.size(); ++s) os << (s ? ", " : "") << names[bt.inputs[s]];
        os << ") : " << f[t] << '\n';
    }
}

inline std::string coords_text(std::span<const Rational> v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

} // namespace preop

#endif // PREOP_REPORT_HPP
