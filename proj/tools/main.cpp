#include <iostream>

#include <CLI11.hpp>

#include "augvar/cli.hpp"
#include "augvar/errors.hpp"

namespace {

struct Descriptions {
    const char* name;
    const char* help;
};

constexpr Descriptions kCommands[] = {
    {"potential", "build a potential and its lifted relation"},
    {"augpoly", "clear the potential at each Newton vertex, fitting into the orthant"},
    {"newton", "Newton polytope invariants of a potential or polytope file"},
    {"irreducible", "irreducibility certificate for the lifted relation"},
    {"distinguish", "certify that two Newton polytopes are unimodularly inequivalent"},
    {"solve-aug", "formal power-series augmentation with residual check"},
    {"solve-nilpotent", "augmentation into Q[a]/(a^d) for a repeated factor"},
    {"partitions", "partition components of a multi-sheet link with witness checks"},
    {"check-candidate", "evaluate the DGA relations on a candidate augmentation"},
    {"markov", "Markov triples up to a bound with Fibonacci tags"},
    {"localize", "multiple-cover contributions and the logarithm identity"},
};

}  // namespace

int main(int argc, char** argv)
{
    augvar::RunConfig config;
    try {
        if (auto env = augvar::order_from_environment())
            config.order = *env;
    } catch (const augvar::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    CLI::App app{"augvar: augmentation varieties, Newton polytopes and formal augmentations"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--order", config.order, "truncation order N (default 16, or AUGVAR_ORDER)")
        ->check(CLI::Range(1, 1000));
    app.add_option("--seed", config.seed, "random seed (default 0)");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    for (const auto& [name, help] : kCommands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("inputs", config.inputs, "input JSON files");
        sub->add_option("--clifford", config.clifford, "Clifford relation with n monomials");
        sub->add_option("--product", config.product, "product-spheres relation: unit | anticanonical");
        sub->add_option("--fan", config.fan_path, "fan JSON {\"rays\": ..., \"signs\": ...}");
        sub->add_option("--signs", config.signs, "comma-separated signs, e.g. +,+,-");
        sub->add_option("--vertex", config.vertex, "comma-separated vertex for clearing");
        sub->add_option("--var", config.var, "variable to solve for (default: the last)");
        sub->add_option("--factor", config.factor_path, "JSON coefficients of a squarefree factor for kappa");
        sub->add_flag("--generic", config.generic, "retry in seeded random unimodular bases");
        sub->add_option("--mult", config.multiplicity, "multiplicity d of the factor")->check(CLI::Range(1, 64));
        sub->add_option("--ell", config.ell, "number of sheets")->check(CLI::Range(1, 9));
        sub->add_option("--spins", config.spins, "comma-separated spin labels per sheet");
        sub->add_option("--bound", config.bound, "largest Markov entry")->check(CLI::Range(1L, 1'000'000'000L));
        sub->add_option("--d-max", config.d_max, "largest cover degree")->check(CLI::Range(1, 200));
        sub->add_option("--m-max", config.m_max, "largest variable count")->check(CLI::Range(1, 6));
        // global flags are also accepted after the subcommand
        sub->fallthrough();
        sub->callback([&config, n = std::string(name)] { config.subcommand = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    config.format = format == "json" ? augvar::OutputFormat::Json : augvar::OutputFormat::Text;

    const augvar::RunResult result = augvar::run(config);
    (result.exit_code == 1 ? std::cerr : std::cout) << result.report;
    return result.exit_code;
}
