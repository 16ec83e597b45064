// preop: randomized identity checks and cohomology for endomorphism
// pre-operads of finite-dimensional algebras.
//
//   preop axioms       FILE [--samples S] [--seed R] [--max-arity M] [--format F]
//   preop identities   FILE [--samples S] [--seed R] [--max-arity M] [--mu table|random] [--format F]
//   preop cohomology   FILE [--max-degree N] [--show-basis] [--format F]
//   preop gerstenhaber FILE [--max-degree N] [--seed R] [--format F]
//
// Exit status: 0 all checks pass, 1 mathematical violation or refusal,
// 2 input or usage error.

#include <iostream>

#include <CLI11.hpp>

#include "preop/commands.hpp"

namespace {

void add_common(CLI::App* cmd, preop::RunOptions& opt)
{
    cmd->add_option("file", opt.file, "algebra JSON file")->required();
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("!--no-timing", opt.timing, "omit timing from the report");
}

void add_sampling(CLI::App* cmd, preop::RunOptions& opt)
{
    cmd->add_option("--samples", opt.samples, "random samples per identity");
    cmd->add_option("--seed", opt.seed, "64-bit run seed");
    cmd->add_option("--max-arity", opt.max_arity, "largest operand arity")->check(CLI::NonNegativeNumber);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pre-operad identity checker and cohomology calculator"};
    app.require_subcommand(1);

    preop::RunOptions axioms, identities, cohomology, gerstenhaber;
    gerstenhaber.max_degree = 3;

    auto* ax = app.add_subcommand("axioms", "check unit and composition axioms");
    add_common(ax, axioms);
    add_sampling(ax, axioms);

    auto* id = app.add_subcommand("identities", "run the full identity catalog");
    add_common(id, identities);
    add_sampling(id, identities);
    id->add_option("--mu", identities.mu, "use the algebra table or a random multiplication")
        ->check(CLI::IsMember({"table", "random"}));

    auto* co = app.add_subcommand("cohomology", "dimensions and representatives of H^n");
    add_common(co, cohomology);
    co->add_option("--max-degree", cohomology.max_degree, "highest degree N")->check(CLI::NonNegativeNumber);
    co->add_flag("--show-basis", cohomology.show_basis, "print class representatives");

    auto* ge = app.add_subcommand("gerstenhaber", "induced cup and bracket on cohomology");
    add_common(ge, gerstenhaber);
    ge->add_option("--max-degree", gerstenhaber.max_degree, "highest degree N")->check(CLI::NonNegativeNumber);
    ge->add_option("--seed", gerstenhaber.seed, "seed for coboundary perturbations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return preop::kInputError;
    }

    try {
        if (*ax) return preop::cmd_axioms(axioms, std::cout, std::cerr);
        if (*id) return preop::cmd_identities(identities, std::cout, std::cerr);
        if (*co) return preop::cmd_cohomology(cohomology, std::cout, std::cerr);
        if (*ge) return preop::cmd_gerstenhaber(gerstenhaber, std::cout, std::cerr);
    } catch (const preop::Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return preop::kViolation;
    }
    return preop::kInputError;
}
