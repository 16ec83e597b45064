#ifndef PREOP_COMMANDS_HPP
#define PREOP_COMMANDS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "algebra_io.hpp"
#include "cohomology.hpp"
#include "gerstenhaber.hpp"
#include "identities.hpp"
#include "report.hpp"

namespace preop {

// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kViolation = 1, kInputError = 2 };

struct RunOptions {
    std::string file;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::size_t samples = 200;
    int max_arity = 3;
    std::string mu = "table";
    int max_degree = CochainComplex::kDefaultMaxDegree;
    bool show_basis = false;
    std::size_t column_cap = CochainComplex::kDefaultColumnCap;
    // timing_ms is the only field allowed to differ between identical runs
    bool timing = true;
};

namespace detail {

class Stopwatch {
public:
    [[nodiscard]] double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::optional<AlgebraDef> load(const RunOptions& opt, std::ostream& err)
{
    if (opt.format != "text" && opt.format != "json") {
        err << "error: --format must be text or json\n";
        return std::nullopt;
    }
    try {
        return parse_algebra(opt.file);
    } catch (const ParseError& e) {
        err << "error: " << opt.file << ": " << e.what() << '\n';
    } catch (const ValidationError& e) {
        err << "error: " << opt.file << ": " << e.what() << '\n';
    }
    return std::nullopt;
}

inline ordered_json meta(const std::string& command, const RunOptions& opt, const AlgebraDef& alg)
{
    ordered_json m;
    m["command"] = command;
    m["file"] = opt.file;
    m["algebra"] = alg.name();
    m["dim"] = alg.dim();
    return m;
}

inline void emit(std::ostream& out, const RunOptions& opt, ordered_json doc, const Stopwatch& clock)
{
    if (opt.timing) doc["meta"]["timing_ms"] = clock.ms();
    out << doc.dump(2) << '\n';
}

inline void print_verdict_text(std::ostream& out, const Verdict& v, const AlgebraDef& alg)
{
    out << (v.passed ? "PASS " : "FAIL ") << v.name << "  samples=" << v.samples << " comparisons=" << v.comparisons
        << " nonzero=" << v.nonzero << '\n';
    if (!v.counterexample) return;
    const auto& c = *v.counterexample;
    out << "  counterexample: sample " << c.sample << " (sample seed " << c.sample_seed << ")";
    if (!c.where.empty()) out << " at " << c.where;
    out << '\n';
    for (std::size_t i = 0; i < c.inputs.size(); ++i) {
        out << "  input " << i << " (arity " << c.inputs[i].arity() << "):\n";
        print_cochain(out, c.inputs[i], alg, "    ");
    }
    out << "  lhs:\n";
    print_cochain(out, c.lhs, alg, "    ");
    out << "  rhs:\n";
    print_cochain(out, c.rhs, alg, "    ");
}

inline int run_catalog(const std::string& command, const std::vector<Identity>& catalog, const RunOptions& opt,
                       std::ostream& out, std::ostream& err)
{
    Stopwatch clock;
    auto alg = load(opt, err);
    if (!alg) return kInputError;
    if (opt.max_arity < 0) {
        err << "error: --max-arity must be non-negative\n";
        return kInputError;
    }
    if (opt.mu != "table" && opt.mu != "random") {
        err << "error: --mu must be table or random\n";
        return kInputError;
    }
    const OperadContext ctx = opt.mu == "random" ? OperadContext(*alg, random_mu(alg->dim(), opt.seed)) : OperadContext(*alg);
    const SampleConfig cfg{opt.seed, opt.samples, opt.max_arity, 3};
    const bool mu2_zero = mu_squared(ctx).is_zero();

    std::vector<Verdict> verdicts;
    bool ok = true;
    for (const auto& id : catalog) {
        verdicts.push_back(run_identity(ctx, id, cfg));
        ok = ok && verdicts.back().passed;
    }

    if (opt.format == "json") {
        ordered_json doc;
        doc["meta"] = meta(command, opt, *alg);
        doc["meta"]["seed"] = opt.seed;
        doc["meta"]["samples"] = opt.samples;
        doc["meta"]["max_arity"] = opt.max_arity;
        doc["meta"]["coefficient_bound"] = cfg.bound;
        doc["meta"]["mu"] = opt.mu;
        doc["verdicts"] = ordered_json::array();
        for (const auto& v : verdicts) doc["verdicts"].push_back(to_json(v));
        doc["tables"] = {{"mu", to_json(ctx.mu())}, {"mu_squared_zero", mu2_zero}};
        emit(out, opt, std::move(doc), clock);
    } else {
        out << command << ": " << alg->name() << " (dim " << alg->dim() << "), seed " << opt.seed << ", " << opt.samples
            << " samples, arity <= " << opt.max_arity << ", mu " << opt.mu << (mu2_zero ? " (mu^2 = 0)" : " (mu^2 != 0)")
            << '\n';
        for (const auto& v : verdicts) print_verdict_text(out, v, *alg);
        if (opt.timing) out << "time: " << clock.ms() << " ms\n";
        out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return ok ? kPass : kViolation;
}

// Shared refusal path for commands that need mu^2 = 0.
inline int refuse(const std::string& command, const RunOptions& opt, const AlgebraDef& alg,
                  const NotFormallyAssociative& e, std::ostream& out, const Stopwatch& clock)
{
    const auto& names = alg.basis_names();
    const auto& in = e.inputs();
    if (opt.format == "json") {
        ordered_json doc;
        doc["meta"] = meta(command, opt, alg);
        doc["meta"]["max_degree"] = opt.max_degree;
        doc["verdicts"] = ordered_json::array();
        doc["verdicts"].push_back({{"name", "formal-associativity"},
                                   {"passed", false},
                                   {"witness",
                                    {{"inputs", {in[0], in[1], in[2]}},
                                     {"basis", {names[in[0]], names[in[1]], names[in[2]]}},
                                     {"mu_squared", to_json(e.value())}}}});
        doc["tables"] = ordered_json::object();
        emit(out, opt, std::move(doc), clock);
    } else {
        out << "NotFormallyAssociative: mu^2(" << names[in[0]] << ", " << names[in[1]] << ", " << names[in[2]]
            << ") = " << coords_text(e.value()) << " != 0; cohomology refused\n";
    }
    return kViolation;
}

inline std::optional<CochainComplex> build(const std::string& command, const RunOptions& opt, const AlgebraDef& alg,
                                           std::ostream& out, std::ostream& err, const Stopwatch& clock, int& code)
{
    if (opt.max_degree < 0) {
        err << "error: --max-degree must be non-negative\n";
        code = kInputError;
        return std::nullopt;
    }
    try {
        return CochainComplex(OperadContext(alg), opt.max_degree, opt.column_cap);
    } catch (const NotFormallyAssociative& e) {
        code = refuse(command, opt, alg, e, out, clock);
    } catch (const MatrixTooLarge& e) {
        err << "error: " << e.what() << "; lower --max-degree\n";
        code = kInputError;
    }
    return std::nullopt;
}

} // namespace detail

// Unit axioms and the three composition relations on seeded samples.
inline int cmd_axioms(const RunOptions& opt, std::ostream& out, std::ostream& err)
{
    return detail::run_catalog("axioms", axiom_catalog(), opt, out, err);
}

// The full identity catalog.
inline int cmd_identities(const RunOptions& opt, std::ostream& out, std::ostream& err)
{
    return detail::run_catalog("identities", identity_catalog(), opt, out, err);
}

inline int cmd_cohomology(const RunOptions& opt, std::ostream& out, std::ostream& err)
{
    detail::Stopwatch clock;
    auto alg = detail::load(opt, err);
    if (!alg) return kInputError;
    int code = kPass;
    auto cx = detail::build("cohomology", opt, *alg, out, err, clock, code);
    if (!cx) return code;

    const int top = cx->max_degree();
    if (opt.format == "json") {
        ordered_json doc;
        doc["meta"] = detail::meta("cohomology", opt, *alg);
        doc["meta"]["max_degree"] = top;
        doc["verdicts"] = ordered_json::array();
        doc["verdicts"].push_back({{"name", "delta-squared-zero"}, {"passed", true}});
        auto rows = ordered_json::array();
        for (int n = 0; n <= top; ++n) {
            ordered_json r{{"degree", n},
                           {"dim", cx->cohomology_dim(n)},
                           {"cochain_dim", ipow(alg->dim(), n + 1)},
                           {"kernel_dim", cx->kernel_dim(n)},
                           {"image_dim", cx->image_dim(n)}};
            if (opt.show_basis) {
                auto basis = ordered_json::array();
                for (const auto& c : cx->cohomology_basis(n)) basis.push_back(to_json(c.representative));
                r["basis"] = std::move(basis);
            }
            rows.push_back(std::move(r));
        }
        doc["tables"] = {{"cohomology", std::move(rows)}};
        detail::emit(out, opt, std::move(doc), clock);
    } else {
        out << "cohomology: " << alg->name() << " (dim " << alg->dim() << "), degrees 0.." << top << '\n';
        for (int n = 0; n <= top; ++n) {
            out << "H^" << n << " = " << cx->cohomology_dim(n) << "   (ker " << cx->kernel_dim(n) << ", im "
                << cx->image_dim(n) << ", dim C^" << n << " = " << ipow(alg->dim(), n + 1) << ")\n";
            if (!opt.show_basis) continue;
            const auto& basis = cx->cohomology_basis(n);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                out << "  class " << i << ":\n";
                print_cochain(out, basis[i].representative, *alg, "    ");
            }
        }
        if (opt.timing) out << "time: " << clock.ms() << " ms\n";
    }
    return kPass;
}

inline int cmd_gerstenhaber(const RunOptions& opt, std::ostream& out, std::ostream& err)
{
    detail::Stopwatch clock;
    auto alg = detail::load(opt, err);
    if (!alg) return kInputError;
    int code = kPass;
    auto cx = detail::build("gerstenhaber", opt, *alg, out, err, clock, code);
    if (!cx) return code;

    auto tables = analyze_gerstenhaber(*cx);
    tables.checks.push_back(check_well_defined(*cx, opt.seed));
    const bool ok = tables.passed();

    if (opt.format == "json") {
        ordered_json doc;
        doc["meta"] = detail::meta("gerstenhaber", opt, *alg);
        doc["meta"]["max_degree"] = cx->max_degree();
        doc["meta"]["seed"] = opt.seed;
        doc["verdicts"] = ordered_json::array();
        for (const auto& c : tables.checks) doc["verdicts"].push_back(to_json(c));
        auto dims = ordered_json::array();
        for (int n = 0; n <= cx->max_degree(); ++n) dims.push_back(cx->cohomology_dim(n));
        auto cupt = ordered_json::array(), brt = ordered_json::array();
        for (const auto& e : tables.cup) cupt.push_back(to_json(e));
        for (const auto& e : tables.bracket) brt.push_back(to_json(e));
        doc["tables"] = {{"dims", std::move(dims)}, {"cup", std::move(cupt)}, {"bracket", std::move(brt)}};
        detail::emit(out, opt, std::move(doc), clock);
    } else {
        out << "gerstenhaber: " << alg->name() << ", degrees 0.." << cx->max_degree() << ", dims";
        for (int n = 0; n <= cx->max_degree(); ++n) out << ' ' << cx->cohomology_dim(n);
        out << '\n';
        auto name = [](const ClassRef& r) { return "H" + std::to_string(r.degree) + "[" + std::to_string(r.index) + "]"; };
        out << "cup table:\n";
        for (const auto& e : tables.cup)
            out << "  " << name(e.left) << " u " << name(e.right) << " = " << coords_text(e.result.coords) << " in H^"
                << e.result.degree << '\n';
        out << "bracket table:\n";
        for (const auto& e : tables.bracket) {
            out << "  [" << name(e.left) << ", " << name(e.right) << "] = ";
            if (e.result.degree < 0)
                out << "0 (degree " << e.result.degree << ")\n";
            else
                out << coords_text(e.result.coords) << " in H^" << e.result.degree << '\n';
        }
        for (const auto& c : tables.checks)
            out << (c.passed ? "PASS " : "FAIL ") << c.name << "  checked=" << c.checked
                << (c.passed ? "" : "  " + c.failure) << '\n';
        if (opt.timing) out << "time: " << clock.ms() << " ms\n";
    }
    return ok ? kPass : kViolation;
}

} // namespace preop

#endif // PREOP_COMMANDS_HPP
