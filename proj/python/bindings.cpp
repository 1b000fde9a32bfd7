// Thin Python bindings. Values cross the boundary as JSON text; the Python package
// decodes them, so no object graph has to be mirrored.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "augvar/augment.hpp"
#include "augvar/cli.hpp"
#include "augvar/errors.hpp"
#include "augvar/localization.hpp"
#include "augvar/polytope.hpp"
#include "augvar/potential.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

augvar::LaurentPoly parse_poly(const std::string& text)
{
    return augvar::LaurentPoly::from_json(json::parse(text));
}

std::size_t var_index(const augvar::LaurentPoly& f, const std::string& var)
{
    return var.empty() ? f.nvars() - 1 : f.index_of(var);
}

}  // namespace

PYBIND11_MODULE(_augvar, m)
{
    m.doc() = "augmentation varieties and formal augmentations (JSON-level bindings)";

    static py::exception<augvar::Error> error(m, "AugvarError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const augvar::Error& e) {
            error(e.what());
        }
    });

    m.def(
        "run",
        [](const std::string& subcommand, const std::vector<std::string>& inputs, int order, std::uint64_t seed,
           bool as_json, std::optional<int> clifford, std::optional<std::string> signs, int ell, long bound,
           int d_max, int multiplicity) {
            augvar::RunConfig c;
            c.subcommand = subcommand;
            c.inputs = inputs;
            c.order = order;
            c.seed = seed;
            c.format = as_json ? augvar::OutputFormat::Json : augvar::OutputFormat::Text;
            c.clifford = clifford;
            c.signs = signs;
            c.ell = ell;
            c.bound = bound;
            c.d_max = d_max;
            c.multiplicity = multiplicity;
            const augvar::RunResult r = augvar::run(c);
            return py::make_tuple(r.exit_code, r.report);
        },
        py::arg("subcommand"), py::arg("inputs") = std::vector<std::string>{}, py::arg("order") = 16,
        py::arg("seed") = 0, py::arg("as_json") = true, py::arg("clifford") = std::nullopt,
        py::arg("signs") = std::nullopt, py::arg("ell") = 2, py::arg("bound") = 1000, py::arg("d_max") = 10,
        py::arg("multiplicity") = 2);

    m.def("clifford_relation", [](int n, const std::vector<int>& signs) {
        return augvar::clifford_relation(n, signs).to_json().dump();
    });

    m.def(
        "solve_formal",
        [](const std::string& relation, const std::string& var, int order) {
            const augvar::LaurentPoly f = parse_poly(relation);
            const std::size_t k = var_index(f, var);
            const augvar::TransverseRoot root = augvar::find_transverse_root(f, k);
            return augvar::solve_formal_augmentation(f, k, root.kappa, order).to_json().dump();
        },
        py::arg("relation"), py::arg("var") = "", py::arg("order") = 16);

    m.def("newton_invariants", [](const std::string& relation) {
        return augvar::polytope_invariants(augvar::newton_polytope(parse_poly(relation))).to_json().dump();
    });

    m.def("certify_irreducible", [](const std::string& relation) {
        return augvar::certify_irreducible(parse_poly(relation)).to_json().dump();
    });

    m.def("markov", [](long bound) {
        std::vector<std::tuple<long, long, long>> out;
        for (const auto& t : augvar::markov_generate(bound))
            out.emplace_back(t.a(), t.b(), t.c());
        return out;
    });

    m.def("cover_contribution", [](int d) {
        return augvar::to_string(augvar::euler_contribution(augvar::hl_cover_weights(d)));
    });

    m.def("multicover_matches_log", [](int mvars, int order) {
        try {
            augvar::multicover_series(mvars, order);
            return true;
        } catch (const augvar::Error& e) {
            if (e.kind() != augvar::ErrorKind::VerificationFailure)
                throw;
            return false;
        }
    });
}
