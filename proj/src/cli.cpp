#include "augvar/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "augvar/augment.hpp"
#include "augvar/errors.hpp"
#include "augvar/localization.hpp"
#include "augvar/polytope.hpp"
#include "augvar/potential.hpp"

namespace augvar {

using nlohmann::json;

nlohmann::json RunConfig::to_json() const
{
    json j{{"subcommand", subcommand},
           {"inputs", inputs},
           {"order", order},
           {"seed", seed},
           {"format", format == OutputFormat::Json ? "json" : "text"}};
    auto opt = [&](const char* key, const auto& v) {
        if (v)
            j[key] = *v;
    };
    opt("clifford", clifford);
    opt("product", product);
    opt("fan", fan_path);
    opt("signs", signs);
    opt("vertex", vertex);
    opt("var", var);
    opt("factor", factor_path);
    opt("spins", spins);
    if (generic)
        j["generic"] = true;
    if (subcommand == "solve-nilpotent")
        j["multiplicity"] = multiplicity;
    if (subcommand == "partitions")
        j["ell"] = ell;
    if (subcommand == "markov")
        j["bound"] = bound;
    if (subcommand == "localize") {
        j["d_max"] = d_max;
        j["m_max"] = m_max;
    }
    return j;
}

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names{"potential",       "augpoly",    "newton",         "irreducible",
                                                "distinguish",     "solve-aug",  "solve-nilpotent", "partitions",
                                                "check-candidate", "markov",     "localize"};
    return names;
}

std::optional<int> order_from_environment()
{
    const char* v = std::getenv("AUGVAR_ORDER");
    if (v == nullptr || *v == '\0')
        return std::nullopt;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1 || n > 1000)
        fail(ErrorKind::ParseError, std::string("AUGVAR_ORDER: expected a positive integer, got '") + v + "'");
    return static_cast<int>(n);
}

namespace {

// Text reports are built line by line; JSON reports from the same data.
struct Report {
    json result = json::object();
    std::vector<std::string> lines;
    bool verified = true;

    void line(std::string s) { lines.push_back(std::move(s)); }
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::ParseError, path + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::ParseError, path + ": malformed JSON (" + e.what() + ")");
    }
}

std::string csv(const std::vector<long>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string matrix_string(const IntMatrix& m)
{
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i)
        out += (i ? ";" : "") + csv(m[i]);
    return out + "]";
}

Exponent parse_exponent(const std::string& text)
{
    Exponent e;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            e.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "--vertex: cannot read '" + item + "' as an integer");
        }
    }
    return e;
}

std::optional<Exponent> config_vertex(const RunConfig& c)
{
    if (!c.vertex)
        return std::nullopt;
    return parse_exponent(*c.vertex);
}

PotentialSpec load_potential(const RunConfig& c, std::size_t input_index = 0)
{
    const SignVector signs = c.signs ? parse_signs(*c.signs) : SignVector{};
    if (input_index == 0) {
        if (c.clifford)
            return clifford_relation(*c.clifford, signs.empty() ? SignVector(static_cast<std::size_t>(*c.clifford), 1)
                                                                : signs);
        if (c.product) {
            if (*c.product == "unit")
                return product_spheres_relation(ProductSpheresVariant::UnitSphereBundle, signs);
            if (*c.product == "anticanonical")
                return product_spheres_relation(ProductSpheresVariant::Anticanonical, signs);
            fail(ErrorKind::ParseError, "--product: expected 'unit' or 'anticanonical'");
        }
        if (c.fan_path) {
            FanInput fan = fan_from_json(read_json_file(*c.fan_path));
            return toric_relation(fan.rays, signs.empty() ? fan.signs : signs, config_vertex(c));
        }
    }
    if (c.inputs.size() <= input_index)
        fail(ErrorKind::ParseError, "no potential given (use --clifford, --product, --fan or an input file)");
    const std::string& path = c.inputs[input_index];
    const json j = read_json_file(path);
    if (j.is_object() && j.contains("rays")) {
        FanInput fan = fan_from_json(j);
        return toric_relation(fan.rays, signs.empty() ? fan.signs : signs, config_vertex(c));
    }
    try {
        return user_supplied_relation(LaurentPoly::from_json(j), config_vertex(c));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError)
            fail(ErrorKind::ParseError, path + ": " + e.what());
        throw;
    }
}

void describe_spec(Report& r, const PotentialSpec& spec)
{
    r.result["potential"] = spec.to_json();
    r.line("source: " + spec.description);
    r.line("base potential: " + spec.base.to_string());
    r.line("cleared at vertex: (" + csv(spec.vertex) + ")");
    r.line("basis change: " + matrix_string(spec.basis_change));
    r.line("relation: " + spec.relation.to_string());
}

void cmd_potential(const RunConfig& c, Report& r)
{
    describe_spec(r, load_potential(c));
}

void cmd_augpoly(const RunConfig& c, Report& r)
{
    const PotentialSpec spec = load_potential(c);
    r.line("base potential: " + spec.base.to_string());
    const LatticePolytope p = newton_polytope(spec.base);
    std::vector<Exponent> vertices = p.vertices();
    if (c.vertex)
        vertices = {parse_exponent(*c.vertex)};
    json rows = json::array();
    for (const auto& v : vertices) {
        const ClearedPolynomial cp = clear_to_vertex(spec.base, v, true);
        rows.push_back({{"vertex", v},
                        {"basis_change", cp.basis_change},
                        {"relation", cp.polynomial.to_json()},
                        {"constant_term", cp.polynomial.constant_term().to_json()}});
        r.line("vertex (" + csv(v) + ") basis " + matrix_string(cp.basis_change) + ": " + cp.polynomial.to_string());
    }
    r.result["base"] = spec.base.to_json();
    r.result["clearings"] = rows;
}

json invariants_with_vertices(const LatticePolytope& p)
{
    json j = polytope_invariants(p).to_json();
    j["vertices"] = p.vertices();
    return j;
}

void describe_invariants(Report& r, const std::string& name, const LatticePolytope& p)
{
    const InvariantRecord inv = polytope_invariants(p);
    std::string verts;
    for (const auto& v : p.vertices())
        verts += " (" + csv(v) + ")";
    r.line(name + " vertices:" + verts);
    r.line(name + " dim " + std::to_string(inv.dim) + "/" + std::to_string(inv.ambient_dim) +
           ", normalized volume " + inv.normalized_volume.str() + ", relative volume " + inv.relative_volume.str() +
           ", lattice points " + inv.lattice_points.str() + ", edge lengths {" + csv(inv.edge_lengths) + "}");
}

LatticePolytope load_polytope(const RunConfig& c, std::size_t index)
{
    if (index < c.inputs.size()) {
        const json j = read_json_file(c.inputs[index]);
        if (j.is_object() && j.contains("vertices")) {
            try {
                return LatticePolytope::from_json(j);
            } catch (const Error& e) {
                fail(ErrorKind::ParseError, c.inputs[index] + ": " + e.what());
            }
        }
    }
    return newton_polytope(load_potential(c, index).base);
}

void cmd_newton(const RunConfig& c, Report& r)
{
    if (!c.inputs.empty()) {
        const json j = read_json_file(c.inputs[0]);
        if (j.is_object() && j.contains("vertices")) {
            const LatticePolytope p = load_polytope(c, 0);
            r.result["polytope"] = invariants_with_vertices(p);
            describe_invariants(r, "polytope", p);
            return;
        }
    }
    const PotentialSpec spec = load_potential(c);
    r.line("base potential: " + spec.base.to_string());
    r.line("relation: " + spec.relation.to_string());
    const LatticePolytope pb = newton_polytope(spec.base), pr = newton_polytope(spec.relation);
    describe_invariants(r, "Newt(base)", pb);
    describe_invariants(r, "Newt(relation)", pr);
    r.result["base"] = invariants_with_vertices(pb);
    r.result["relation"] = invariants_with_vertices(pr);
    if (!(polytope_invariants(pb) == polytope_invariants(pr))) {
        // a shift plus unimodular basis change must preserve every invariant
        r.verified = false;
        r.line("invariants of base and relation differ");
    }
}

void describe_certificate(Report& r, const IrreducibilityCertificate& cert, int depth)
{
    const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    r.line(pad + (cert.irreducible() ? "Irreducible" : "Inconclusive") + " [" + cert.method + "] " +
           cert.polynomial.to_string());
    r.line(pad + "  " + cert.detail);
    if (!cert.facet_certificate.empty()) {
        r.line(pad + "  restricted to " + cert.restricted_variable + " = 0:");
        describe_certificate(r, cert.facet_certificate.front(), depth + 2);
    }
}

void cmd_irreducible(const RunConfig& c, Report& r)
{
    const PotentialSpec spec = load_potential(c);
    const IrreducibilityCertificate cert = certify_irreducible(spec.relation);
    r.result["certificate"] = cert.to_json();
    describe_certificate(r, cert, 0);
}

void cmd_distinguish(const RunConfig& c, Report& r)
{
    if (c.inputs.size() != 2)
        fail(ErrorKind::ParseError, "distinguish needs exactly two input files");
    const LatticePolytope p = load_polytope(c, 0), q = load_polytope(c, 1);
    const DistinctnessVerdict v = certify_distinct(p, q);
    describe_invariants(r, "left", p);
    describe_invariants(r, "right", q);
    r.result["left"] = invariants_with_vertices(p);
    r.result["right"] = invariants_with_vertices(q);
    r.result["verdict"] = v.to_json();
    if (v.distinct)
        r.line("verdict: Distinct (" + v.witness + ": " + v.left_value + " vs " + v.right_value + ")");
    else
        r.line("verdict: Unknown (all invariants agree)");
}

UniPoly load_factor(const std::string& path)
{
    const json j = read_json_file(path);
    const json& arr = j.is_object() && j.contains("factor") ? j.at("factor") : j;
    return UniPoly(rationals_from_json(arr, j.is_object() ? "$.factor" : "$"));
}

std::size_t solved_index(const RunConfig& c, const LaurentPoly& f)
{
    if (f.nvars() == 0)
        fail(ErrorKind::PreconditionViolation, "relation has no variables");
    return c.var ? f.index_of(*c.var) : f.nvars() - 1;
}

void describe_series(Report& r, const AugmentationSeries& a)
{
    r.line("variable: " + a.relation.variables()[a.k]);
    r.line("kappa: " + a.kappa.to_string());
    r.line("s = " + a.s.to_string());
    if (a.s.variables().size() == 1) {
        json coeffs = json::array();
        std::string text;
        for (int j = 1; j <= a.order(); ++j) {
            const Scalar x = a.s.coefficient({j});
            coeffs.push_back(x.to_json());
            text += (j > 1 ? ", " : "") + x.to_string();
        }
        r.result["coefficients"] = coeffs;
        r.line("coefficients: [" + text + "]");
    }
}

void cmd_solve_aug(const RunConfig& c, Report& r)
{
    const PotentialSpec spec = load_potential(c);
    LaurentPoly relation = spec.relation;
    const std::size_t k = solved_index(c, relation);
    r.line("relation: " + relation.to_string());
    TransverseRoot root;
    if (c.factor_path) {
        root = find_transverse_root(relation, k, load_factor(*c.factor_path));
    } else if (c.generic) {
        GenericRoot g = find_generic_transverse_root(relation, k, c.seed);
        if (g.attempts > 1) {
            r.line("transverse after basis change " + matrix_string(g.basis_change) + ": " + g.relation.to_string());
            r.result["basis_change"] = g.basis_change;
        }
        relation = g.relation;
        root = g.root;
    } else {
        root = find_transverse_root(relation, k);
    }
    r.line("restriction: " + root.restriction.to_string(relation.variables()[k]));
    r.line("derivative at kappa: " + root.witness.to_string());
    const AugmentationSeries a = solve_formal_augmentation(relation, k, root.kappa, c.order);
    const bool residual_ok = point_on_variety(relation, a.point());
    r.result["root"] = root.to_json();
    const json series_json = a.to_json();
    for (const auto& [key, v] : series_json.items())
        r.result[key] = v;
    r.result["residual_vanishes"] = residual_ok;
    describe_series(r, a);
    r.line(std::string("residual mod order ") + std::to_string(c.order + 1) + ": " + (residual_ok ? "0" : "NONZERO"));
    r.verified = residual_ok;
}

void cmd_solve_nilpotent(const RunConfig& c, Report& r)
{
    const PotentialSpec spec = load_potential(c);
    const std::size_t k = solved_index(c, spec.relation);
    r.line("factor: " + spec.relation.to_string() + ", multiplicity " + std::to_string(c.multiplicity));
    const NilpotentAugmentation n = solve_nilpotent_augmentation(spec.relation, c.multiplicity, k, c.order);
    const int order = nilpotency_order(n.image, c.multiplicity + 1);
    r.result = n.to_json();
    r.result["nilpotency_order"] = order;
    describe_series(r, n.series);
    r.line("image of factor: " + n.image.to_string());
    r.line("nilpotency order: " + std::to_string(order) + (n.nilpotent_order_exact ? " (exact)" : " (MISMATCH)"));
    // W_i^d must vanish at the witness
    const LaurentPoly full = [&] {
        LaurentPoly p = LaurentPoly::constant(spec.relation.variables(), Scalar(1));
        for (int i = 0; i < c.multiplicity; ++i)
            p = p * spec.relation;
        return p;
    }();
    const bool vanishes = point_on_variety(full, n.series.point());
    r.result["power_vanishes"] = vanishes;
    r.line(std::string("factor^") + std::to_string(c.multiplicity) + " at witness: " + (vanishes ? "0" : "NONZERO"));
    r.verified = n.nilpotent_order_exact && vanishes;
}

std::vector<std::string> split_labels(const std::optional<std::string>& text)
{
    std::vector<std::string> out;
    if (!text)
        return out;
    std::stringstream in(*text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(item);
    return out;
}

// Every single-value change by +1 of the witness must break some relation.
int surviving_perturbations(const AugCandidate& w, int& total)
{
    int survivors = 0;
    total = 0;
    for (std::size_t b = 0; b < w.y.size(); ++b)
        for (std::size_t i = 0; i < w.y[b].size(); ++i) {
            AugCandidate p = w;
            p.y[b][i] += Scalar(1);
            ++total;
            survivors += dga_relation_check(p).pass ? 1 : 0;
        }
    for (const auto& [jk, v] : w.a) {
        AugCandidate p = w;
        p.a[jk] += Scalar(1);
        ++total;
        survivors += dga_relation_check(p).pass ? 1 : 0;
    }
    return survivors;
}

void cmd_partitions(const RunConfig& c, Report& r)
{
    const bool has_source = c.clifford || c.product || c.fan_path || !c.inputs.empty();
    const PotentialSpec spec = has_source ? load_potential(c) : clifford_relation(3, {1, 1, 1});
    const auto comps = enumerate_partition_components(c.ell, spec.relation, split_labels(c.spins));
    r.line("sheet relation: " + spec.relation.to_string());
    r.line(std::to_string(comps.size()) + " components for " + std::to_string(c.ell) + " sheets");
    json rows = json::array();
    for (const auto& comp : comps) {
        json row = comp.to_json();
        std::string text = comp.label() + ":";
        for (const auto& e : comp.equations)
            text += " [" + e.to_string() + "]";
        if (c.ell == 2 || c.ell == 3) {
            const AugCandidate w = component_witness(comp, c.ell, spec.relation);
            const DgaVerdict v = dga_relation_check(w);
            int total = 0;
            const int survivors = surviving_perturbations(w, total);
            row["witness"] = w.to_json();
            row["witness_check"] = v.pass ? "Pass" : "Fail";
            row["perturbations"] = total;
            row["perturbations_passing"] = survivors;
            text += " witness " + std::string(v.pass ? "Pass" : "Fail") + ", " + std::to_string(total - survivors) +
                    "/" + std::to_string(total) + " perturbations fail";
            if (!v.pass || survivors != 0)
                r.verified = false;
        }
        rows.push_back(row);
        r.line(text);
    }
    r.result["sheet_relation"] = spec.relation.to_json();
    r.result["count"] = comps.size();
    r.result["components"] = rows;
}

void cmd_check_candidate(const RunConfig& c, Report& r)
{
    if (c.inputs.size() != 1)
        fail(ErrorKind::ParseError, "check-candidate needs one candidate file");
    AugCandidate cand;
    try {
        cand = AugCandidate::from_json(read_json_file(c.inputs[0]));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError)
            fail(ErrorKind::ParseError, c.inputs[0] + ": " + e.what());
        throw;
    }
    const DgaVerdict v = dga_relation_check(cand);
    r.result["candidate"] = cand.to_json();
    r.result["verdict"] = v.to_json();
    for (const auto& [name, value] : v.values)
        r.line(name + " = " + value.to_string());
    r.line(v.pass ? "verdict: Pass" : "verdict: Fail(" + v.violated + ")");
    r.verified = v.pass;
}

void cmd_markov(const RunConfig& c, Report& r)
{
    const auto triples = markov_generate(c.bound);
    json rows = json::array();
    for (const auto& t : triples) {
        json row{{"triple", t.to_json()}};
        std::string text = "(" + std::to_string(t.a()) + "," + std::to_string(t.b()) + "," + std::to_string(t.c()) + ")";
        if (t.a() == 1) {
            const bool fib = markov_fibonacci_check(t);
            row["fibonacci"] = fib;
            text += fib ? " fibonacci" : " NOT-FIBONACCI";
            if (!fib)
                r.verified = false;
        }
        rows.push_back(row);
        r.line(text);
    }
    r.result["bound"] = c.bound;
    r.result["count"] = triples.size();
    r.result["triples"] = rows;
    r.line(std::to_string(triples.size()) + " triples with entries <= " + std::to_string(c.bound));
}

void cmd_localize(const RunConfig& c, Report& r)
{
    if (c.d_max < 1 || c.m_max < 1)
        fail(ErrorKind::PreconditionViolation, "--d-max and --m-max must be positive");
    json rows = json::array();
    for (int d = 1; d <= c.d_max; ++d) {
        const Rational v = euler_contribution(hl_cover_weights(d));
        const Rational expected = Rational(d % 2 == 1 ? 1 : -1, d * d);
        rows.push_back({{"d", d}, {"contribution", to_string(v)}});
        r.line("d=" + std::to_string(d) + " contribution " + to_string(v));
        if (v != expected)
            r.verified = false;
    }
    json identities = json::array();
    for (int m = 1; m <= c.m_max; ++m) {
        bool ok = true;
        std::size_t coeffs = 0;
        try {
            coeffs = multicover_series(m, c.order).terms().size();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::VerificationFailure)
                throw;
            ok = false;
        }
        identities.push_back({{"m", m}, {"order", c.order}, {"coefficients", coeffs}, {"equal", ok}});
        r.line("m=" + std::to_string(m) + " multinomial sum vs log(1+sum mu) through order " + std::to_string(c.order) +
               ": " + (ok ? "equal" : "DIFFERENT") + " (" + std::to_string(coeffs) + " coefficients)");
        if (!ok)
            r.verified = false;
    }
    r.result["contributions"] = rows;
    r.result["identities"] = identities;
    r.line(std::string("identity verdict: ") + (r.verified ? "PASS" : "FAIL"));
}

std::string config_line(const RunConfig& c)
{
    return "# augvar " + c.subcommand + " " + c.to_json().dump();
}

}  // namespace

RunResult run(const RunConfig& config)
{
    Report r;
    int code = 0;
    json error;
    try {
        if (config.order < 1)
            fail(ErrorKind::PreconditionViolation, "--order must be at least 1");
        const std::string& s = config.subcommand;
        if (s == "potential")
            cmd_potential(config, r);
        else if (s == "augpoly")
            cmd_augpoly(config, r);
        else if (s == "newton")
            cmd_newton(config, r);
        else if (s == "irreducible")
            cmd_irreducible(config, r);
        else if (s == "distinguish")
            cmd_distinguish(config, r);
        else if (s == "solve-aug")
            cmd_solve_aug(config, r);
        else if (s == "solve-nilpotent")
            cmd_solve_nilpotent(config, r);
        else if (s == "partitions")
            cmd_partitions(config, r);
        else if (s == "check-candidate")
            cmd_check_candidate(config, r);
        else if (s == "markov")
            cmd_markov(config, r);
        else if (s == "localize")
            cmd_localize(config, r);
        else
            fail(ErrorKind::ParseError, "unknown subcommand '" + s + "'");
        code = r.verified ? 0 : 2;
    } catch (const Error& e) {
        code = e.kind() == ErrorKind::VerificationFailure ? 2 : 1;
        error = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    }
    RunResult out;
    out.exit_code = code;
    if (config.format == OutputFormat::Json) {
        json j{{"config", config.to_json()}, {"exit_code", code}};
        if (error.is_null())
            j["result"] = r.result;
        else
            j["error"] = error;
        out.report = j.dump(2) + "\n";
    } else {
        std::string text = config_line(config) + "\n";
        if (error.is_null())
            for (const auto& l : r.lines)
                text += l + "\n";
        else
            text += "error: " + error.at("message").get<std::string>() + "\n";
        if (code == 2)
            text += "verification failed\n";
        out.report = text;
    }
    return out;
}

}  // namespace augvar
