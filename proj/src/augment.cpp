#include "augvar/augment.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <set>

#include "augvar/errors.hpp"
#include "augvar/polytope.hpp"

namespace augvar {

namespace {

void require_rational(const LaurentPoly& f, const char* what)
{
    if (f.ring()->kind() != RingKind::Rational)
        fail(ErrorKind::UnsupportedRing, std::string(what) + " needs a relation over Q, got " + f.ring()->describe());
}

void require_index(const LaurentPoly& f, std::size_t k)
{
    if (k >= f.nvars())
        fail(ErrorKind::IndexOutOfRange,
             "variable index " + std::to_string(k) + " with " + std::to_string(f.nvars()) + " variables");
}

// Divides out the largest power of t.
UniPoly strip_zero_roots(const UniPoly& p)
{
    std::vector<Rational> c;
    long lowest = 0;
    while (lowest <= p.degree() && p.coefficient(static_cast<std::size_t>(lowest)) == 0)
        ++lowest;
    for (long i = lowest; i <= p.degree(); ++i)
        c.push_back(p.coefficient(static_cast<std::size_t>(i)));
    return UniPoly(std::move(c));
}

}  // namespace

nlohmann::json TransverseRoot::to_json() const
{
    nlohmann::json j{{"kappa", kappa.to_json()},
                     {"derivative", witness.to_json()},
                     {"restriction", rationals_to_json(restriction.coefficients())}};
    if (factor)
        j["factor"] = rationals_to_json(factor->coefficients());
    return j;
}

TransverseRoot find_transverse_root(const LaurentPoly& relation, std::size_t k, const std::optional<UniPoly>& factor)
{
    require_rational(relation, "root selection");
    require_index(relation, k);
    const UniPoly full = set_vars_zero(relation, relation.variables()[k]);
    if (full.is_zero())
        fail(ErrorKind::PreconditionViolation,
             "restriction to " + relation.variables()[k] + " vanishes identically");
    const UniPoly p = strip_zero_roots(full);
    const UniPoly dp = p.derivative();
    if (factor) {
        if (factor->degree() < 1)
            fail(ErrorKind::NotAFactor, "factor must be nonconstant");
        if (!(p % *factor).is_zero())
            fail(ErrorKind::NotAFactor, factor->to_string("t") + " does not divide " + p.to_string("t"));
        if (!is_squarefree(*factor))
            fail(ErrorKind::NotAFactor, factor->to_string("t") + " is not squarefree");
        const RingPtr ring = Ring::quotient_field(*factor);
        const Scalar kappa = Scalar::generator(ring);
        const Scalar d = evaluate_in(dp, kappa);
        if (!d.is_invertible())
            fail(ErrorKind::DoubleRoot, "a root of " + factor->to_string("t") + " is a multiple root");
        return {kappa, d, p, factor};
    }
    std::vector<Rational> roots = rational_roots(p);
    if (roots.empty())
        fail(ErrorKind::NoRootAvailable,
             p.to_string("t") + " has no nonzero rational root; supply a squarefree factor");
    std::stable_sort(roots.begin(), roots.end(), [&](const Rational& a, const Rational& b) {
        const bool sa = root_multiplicity(p, a) == 1, sb = root_multiplicity(p, b) == 1;
        if (sa != sb)
            return sa;
        if (abs(a) != abs(b))
            return abs(a) < abs(b);
        return a > b;
    });
    const Rational& r = roots.front();
    const Rational d = dp.evaluate(r);
    if (d == 0)
        fail(ErrorKind::DoubleRoot,
             "every rational root of " + p.to_string("t") + " is multiple; retry in a random unimodular basis");
    return {Scalar(r), Scalar(d), p, std::nullopt};
}

GenericRoot find_generic_transverse_root(const LaurentPoly& relation, std::size_t k, std::uint64_t seed,
                                         int max_attempts)
{
    require_index(relation, k);
    std::mt19937_64 rng(seed);
    const std::size_t n = relation.nvars();
    for (int attempt = 1;; ++attempt) {
        IntMatrix m = identity_matrix(n);
        LaurentPoly g = relation;
        Exponent vertex(n, 0);
        if (attempt > 1) {
            const IntMatrix r = random_unimodular(n, rng);
            const LaurentPoly h = substitute_monomial(relation, r);
            vertex = newton_polytope(h).vertices().front();
            ClearedPolynomial c = clear_to_vertex(h, vertex, true);
            g = std::move(c.polynomial);
            m = mat_mul(c.basis_change, r);
        }
        try {
            TransverseRoot root = find_transverse_root(g, k);
            return {std::move(g), std::move(m), std::move(vertex), std::move(root), attempt};
        } catch (const Error& e) {
            const bool retry = e.kind() == ErrorKind::DoubleRoot || e.kind() == ErrorKind::NoRootAvailable ||
                               e.kind() == ErrorKind::PreconditionViolation;
            if (!retry || attempt >= max_attempts)
                throw;
        }
    }
}

std::vector<std::string> series_variables(std::size_t nvars, std::size_t k)
{
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < nvars; ++i)
        if (i != k)
            vars.push_back("mu" + std::to_string(i + 1));
    return vars;
}

namespace {

std::vector<TruncatedSeries> series_point(std::size_t nvars, std::size_t k, const Scalar& kappa,
                                          const TruncatedSeries& s)
{
    std::vector<TruncatedSeries> point;
    std::size_t next = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (i == k)
            point.push_back(kappa * series_exp(s));
        else
            point.push_back(TruncatedSeries::variable(s.variables(), s.order(), next++, s.ring()));
    }
    return point;
}

// Solves W(mu, kappa exp(s)) = target, where target = W(0, ..., kappa).
AugmentationSeries solve_against(const LaurentPoly& relation, std::size_t k, const Scalar& kappa, int order,
                                 const Scalar& target)
{
    require_index(relation, k);
    if (order < 1)
        fail(ErrorKind::PreconditionViolation, "truncation order must be at least 1");
    const RingPtr& ring = kappa.ring();
    if (relation.ring()->kind() != RingKind::Rational)
        require_same_ring(relation.ring(), ring, "formal solver");
    const LaurentPoly f = relation.change_ring(ring);
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != k && e[i] < 0)
                fail(ErrorKind::NegativeExponentAtZero,
                     f.variables()[i] + " has exponent " + std::to_string(e[i]) + "; change basis first");
    if (!kappa.is_invertible())
        fail(ErrorKind::PreconditionViolation, "kappa is not invertible");

    std::vector<Scalar> base(f.nvars(), Scalar::embed(0, ring));
    base[k] = kappa;
    if (evaluate(f, base) != target)
        fail(ErrorKind::PreconditionViolation, "kappa is not a root of the restricted relation");
    const Scalar lin = kappa * evaluate(partial_derivative(f, f.variables()[k]), base);
    if (!lin.is_invertible())
        fail(ErrorKind::DoubleRoot, "derivative at kappa is " + lin.to_string());
    const Scalar lin_inv = lin.inverse();

    const auto vars = series_variables(f.nvars(), k);
    const TruncatedSeries goal = TruncatedSeries::constant(vars, order, target);
    AugmentationSeries out;
    out.relation = relation;
    out.k = k;
    out.kappa = kappa;
    out.s = TruncatedSeries(vars, order, ring);
    out.iterates.push_back(out.s);
    for (int d = 0; d < order; ++d) {
        const TruncatedSeries residual = evaluate(f, series_point(f.nvars(), k, kappa, out.s)) - goal;
        if (!residual.is_zero())
            out.s -= lin_inv * residual;
        out.iterates.push_back(out.s);
    }
    if (!(evaluate(f, series_point(f.nvars(), k, kappa, out.s)) - goal).is_zero())
        fail(ErrorKind::VerificationFailure, "residual does not vanish to order " + std::to_string(order));
    return out;
}

}  // namespace

std::vector<TruncatedSeries> AugmentationSeries::point() const
{
    return series_point(relation.nvars(), k, kappa, s);
}

nlohmann::json AugmentationSeries::to_json() const
{
    return {{"relation", relation.to_json()},
            {"variable", relation.variables()[k]},
            {"kappa", kappa.to_json()},
            {"series_vars", s.variables()},
            {"series", s.to_json()["terms"]},
            {"iterations", iterates.size() - 1},
            {"residual_order_checked", s.order()}};
}

AugmentationSeries solve_formal_augmentation(const LaurentPoly& relation, std::size_t k, const Scalar& kappa, int order)
{
    return solve_against(relation, k, kappa, order, Scalar::embed(0, kappa.ring()));
}

int nilpotency_order(const Scalar& x, int limit)
{
    Scalar p = x;
    for (int e = 1; e <= limit; ++e) {
        if (p.is_zero())
            return e;
        p *= x;
    }
    return 0;
}

nlohmann::json NilpotentAugmentation::to_json() const
{
    nlohmann::json j = series.to_json();
    j["multiplicity"] = multiplicity;
    j["image"] = image.to_json();
    j["nilpotent_order_exact"] = nilpotent_order_exact;
    return j;
}

NilpotentAugmentation solve_nilpotent_augmentation(const LaurentPoly& factor, int multiplicity, std::size_t k,
                                                   int order)
{
    require_rational(factor, "the nilpotent solver");
    if (multiplicity < 1)
        fail(ErrorKind::PreconditionViolation, "multiplicity must be at least 1");
    const TransverseRoot root = find_transverse_root(factor, k);
    const Rational k0 = root.kappa.to_rational();
    const RingPtr ring = Ring::nilpotent(multiplicity);
    const Scalar kappa(ring, UniPoly{k0, k0});
    std::vector<Scalar> base(factor.nvars(), Scalar::embed(0, ring));
    base[k] = kappa;
    const Scalar image = evaluate(factor, base);

    NilpotentAugmentation out;
    out.series = solve_against(factor, k, kappa, order, image);
    out.multiplicity = multiplicity;
    out.image = image;
    out.nilpotent_order_exact = nilpotency_order(image, multiplicity) == multiplicity;
    return out;
}

bool point_on_variety(const LaurentPoly& relation, const std::vector<Scalar>& point)
{
    return evaluate(relation, point).is_zero();
}

bool point_on_variety(const LaurentPoly& relation, const std::vector<TruncatedSeries>& point)
{
    return evaluate(relation, point).is_zero();
}

// ---------------------------------------------------------------------------
// Multi-component candidates

nlohmann::json AugCandidate::to_json() const
{
    nlohmann::json ys = nlohmann::json::object();
    for (std::size_t b = 0; b < y.size(); ++b) {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : y[b])
            vals.push_back(v.to_json());
        ys[std::to_string(b + 1)] = vals;
    }
    nlohmann::json as = nlohmann::json::object();
    for (const auto& [jk, v] : a)
        as[std::to_string(jk.first) + std::to_string(jk.second)] = v.to_json();
    nlohmann::json j{{"ell", ell}, {"y", ys}, {"a", as}};
    if (!signs.empty())
        j["signs"] = signs;
    else {
        nlohmann::json rels = nlohmann::json::array();
        for (const auto& r : relations)
            rels.push_back(r.to_json());
        j["relations"] = rels;
    }
    return j;
}

AugCandidate AugCandidate::from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        fail(ErrorKind::ParseError, "$: expected an object");
    if (!j.contains("ell") || !j.at("ell").is_number_integer() || j.at("ell").get<int>() < 1 ||
        j.at("ell").get<int>() > 9)
        fail(ErrorKind::ParseError, "$.ell: expected an integer between 1 and 9");
    AugCandidate c;
    c.ell = j.at("ell").get<int>();
    if (!j.contains("y") || !j.at("y").is_object())
        fail(ErrorKind::ParseError, "$.y: expected an object keyed by sheet");
    c.y.resize(static_cast<std::size_t>(c.ell));
    std::size_t n = 0;
    for (int b = 1; b <= c.ell; ++b) {
        const std::string key = std::to_string(b);
        const std::string path = "$.y." + key;
        if (!j.at("y").contains(key))
            fail(ErrorKind::MissingAssignment, path + ": values for sheet " + key + " missing");
        const auto& vals = j.at("y").at(key);
        if (!vals.is_array() || vals.empty())
            fail(ErrorKind::ParseError, path + ": expected a nonempty array");
        for (std::size_t i = 0; i < vals.size(); ++i) {
            try {
                c.y[b - 1].push_back(Scalar::from_json(vals[i]));
            } catch (const Error& e) {
                fail(ErrorKind::ParseError, path + "[" + std::to_string(i) + "]: " + e.what());
            }
        }
        if (b == 1)
            n = c.y[0].size();
        else if (c.y[b - 1].size() != n)
            fail(ErrorKind::ParseError, path + ": expected " + std::to_string(n) + " values");
    }
    if (j.contains("a")) {
        if (!j.at("a").is_object())
            fail(ErrorKind::ParseError, "$.a: expected an object keyed by chord \"jk\"");
        for (const auto& [key, v] : j.at("a").items()) {
            const std::string path = "$.a." + key;
            if (key.size() != 2 || !std::isdigit(static_cast<unsigned char>(key[0])) ||
                !std::isdigit(static_cast<unsigned char>(key[1])))
                fail(ErrorKind::ParseError, path + ": chord keys are two sheet digits");
            const int s = key[0] - '0', t = key[1] - '0';
            if (s < 1 || t < 1 || s > c.ell || t > c.ell || s == t)
                fail(ErrorKind::ParseError, path + ": not a mixed chord of " + std::to_string(c.ell) + " sheets");
            try {
                c.a[{s, t}] = Scalar::from_json(v);
            } catch (const Error& e) {
                fail(ErrorKind::ParseError, path + ": " + e.what());
            }
        }
    }
    std::vector<SignVector> signs;
    if (j.contains("signs")) {
        const auto& s = j.at("signs");
        if (!s.is_array())
            fail(ErrorKind::ParseError, "$.signs: expected a list of signs or one list per sheet");
        auto read = [](const nlohmann::json& arr, const std::string& path) {
            SignVector v;
            for (const auto& x : arr) {
                if (!x.is_number_integer())
                    fail(ErrorKind::ParseError, path + ": expected +1/-1 entries");
                v.push_back(x.get<int>());
            }
            return v;
        };
        if (!s.empty() && s.front().is_array()) {
            if (s.size() != static_cast<std::size_t>(c.ell))
                fail(ErrorKind::SignLengthMismatch, "$.signs: expected one sign list per sheet");
            for (std::size_t b = 0; b < s.size(); ++b)
                signs.push_back(read(s[b], "$.signs[" + std::to_string(b) + "]"));
        } else {
            signs.assign(static_cast<std::size_t>(c.ell), read(s, "$.signs"));
        }
    } else if (j.contains("relations")) {
        const auto& rels = j.at("relations");
        if (!rels.is_array() || rels.size() != static_cast<std::size_t>(c.ell))
            fail(ErrorKind::ParseError, "$.relations: expected one relation per sheet");
        for (std::size_t b = 0; b < rels.size(); ++b) {
            const std::string path = "$.relations[" + std::to_string(b) + "]";
            try {
                c.relations.push_back(LaurentPoly::from_json(rels[b]));
            } catch (const Error& e) {
                fail(ErrorKind::ParseError, path + ": " + e.what());
            }
            if (c.relations.back().nvars() != n)
                fail(ErrorKind::ParseError, path + ": expected " + std::to_string(n) + " variables");
        }
        return c;
    } else {
        signs.assign(static_cast<std::size_t>(c.ell), SignVector(n + 1, 1));
    }
    c.signs = signs;
    for (const auto& s : signs)
        c.relations.push_back(clifford_relation(static_cast<int>(n + 1), s).relation);
    return c;
}

nlohmann::json DgaVerdict::to_json() const
{
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& [name, v] : values)
        vals.push_back({{"relation", name}, {"value", v.to_json()}});
    nlohmann::json j{{"verdict", pass ? "Pass" : "Fail"}, {"relations", vals}};
    if (!pass)
        j["violated"] = violated;
    return j;
}

DgaVerdict dga_relation_check(const AugCandidate& c)
{
    if (c.ell != 2 && c.ell != 3)
        fail(ErrorKind::PreconditionViolation, "relations are known for 2 or 3 sheets, got " + std::to_string(c.ell));
    const auto ell = static_cast<std::size_t>(c.ell);
    if (c.y.size() != ell)
        fail(ErrorKind::MissingAssignment, "y values for " + std::to_string(ell) + " sheets required");
    if (c.relations.size() != ell)
        fail(ErrorKind::MissingAssignment, "sheet relations for " + std::to_string(ell) + " sheets required");
    auto chord = [&](int j, int k) -> const Scalar& {
        auto it = c.a.find({j, k});
        if (it == c.a.end())
            fail(ErrorKind::MissingAssignment, "a" + std::to_string(j) + std::to_string(k) + " not assigned");
        return it->second;
    };
    DgaVerdict v;
    auto record = [&](std::string name, const Scalar& value) {
        if (v.pass && !value.is_zero()) {
            v.pass = false;
            v.violated = name;
        }
        v.values.emplace_back(std::move(name), value);
    };
    for (int j = 1; j <= c.ell; ++j) {
        Scalar d = evaluate(c.relations[j - 1], c.y[j - 1]);
        for (int k = 1; k <= c.ell; ++k)
            if (k != j)
                d += chord(j, k) * chord(k, j);
        record("d(a" + std::to_string(j) + std::to_string(j) + ")", d);
    }
    if (c.ell == 3) {
        record("d(a13)", chord(1, 2) * chord(2, 3));
        record("d(a21)", chord(2, 3) * chord(3, 1));
        record("d(a32)", chord(3, 1) * chord(1, 2));
    }
    for (int j = 1; j <= c.ell; ++j)
        for (int k = 1; k <= c.ell; ++k) {
            if (j == k)
                continue;
            for (std::size_t i = 0; i < c.y[j - 1].size(); ++i) {
                if (i >= c.y[k - 1].size())
                    fail(ErrorKind::MissingAssignment, "sheet " + std::to_string(k) + " lacks y values");
                const std::string name = "a" + std::to_string(j) + std::to_string(k) + "*(y" + std::to_string(j) +
                                         "_" + std::to_string(i + 1) + "-y" + std::to_string(k) + "_" +
                                         std::to_string(i + 1) + ")";
                record(name, chord(j, k) * (c.y[j - 1][i] - c.y[k - 1][i]));
            }
        }
    return v;
}

// ---------------------------------------------------------------------------
// Partition components

std::vector<std::string> sheet_variables(int ell, std::size_t n)
{
    std::vector<std::string> vars;
    for (int b = 1; b <= ell; ++b)
        for (std::size_t i = 1; i <= n; ++i)
            vars.push_back("y" + std::to_string(b) + "_" + std::to_string(i));
    return vars;
}

std::string PartitionComponent::label() const
{
    std::string out;
    for (const auto& block : blocks) {
        out += "{";
        for (std::size_t i = 0; i < block.size(); ++i)
            out += (i ? "," : "") + std::to_string(block[i]);
        out += "}";
    }
    return out;
}

nlohmann::json PartitionComponent::to_json() const
{
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : equations)
        eqs.push_back(e.to_string());
    return {{"partition", label()}, {"blocks", blocks}, {"equations", eqs}};
}

namespace {

LaurentPoly on_sheet(const LaurentPoly& f, int sheet, int ell)
{
    const std::size_t n = f.nvars();
    LaurentPoly g(sheet_variables(ell, n), f.ring());
    for (const auto& [e, c] : f.terms()) {
        Exponent x(n * static_cast<std::size_t>(ell), 0);
        std::copy(e.begin(), e.end(), x.begin() + static_cast<long>(n * static_cast<std::size_t>(sheet - 1)));
        g.add_term(x, c);
    }
    return g;
}

}  // namespace

std::vector<PartitionComponent> enumerate_partition_components(int ell, const LaurentPoly& sheet_relation,
                                                               const std::vector<std::string>& spin_labels)
{
    if (ell < 1)
        fail(ErrorKind::PreconditionViolation, "need at least one sheet");
    std::vector<std::string> labels = spin_labels;
    if (labels.empty())
        labels.assign(static_cast<std::size_t>(ell), "");
    if (labels.size() != static_cast<std::size_t>(ell))
        fail(ErrorKind::DimensionMismatch,
             std::to_string(labels.size()) + " spin labels for " + std::to_string(ell) + " sheets");
    const std::size_t n = sheet_relation.nvars();
    const auto vars = sheet_variables(ell, n);
    std::vector<PartitionComponent> out;
    std::vector<std::vector<int>> blocks;
    std::vector<bool> used(static_cast<std::size_t>(ell) + 1, false);
    std::function<void()> recurse = [&]() {
        int first = 1;
        while (first <= ell && used[first])
            ++first;
        if (first > ell) {
            PartitionComponent c;
            c.blocks = blocks;
            for (const auto& b : blocks) {
                if (b.size() == 1) {
                    c.equations.push_back(on_sheet(sheet_relation, b[0], ell));
                    continue;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    LaurentPoly eq(vars, sheet_relation.ring());
                    Exponent ea(vars.size(), 0), eb(vars.size(), 0);
                    ea[static_cast<std::size_t>(b[0] - 1) * n + i] = 1;
                    eb[static_cast<std::size_t>(b[1] - 1) * n + i] = 1;
                    eq.add_term(ea, Scalar::embed(1, sheet_relation.ring()));
                    eq.add_term(eb, Scalar::embed(-1, sheet_relation.ring()));
                    c.equations.push_back(eq);
                }
            }
            out.push_back(std::move(c));
            return;
        }
        used[first] = true;
        blocks.push_back({first});
        recurse();
        for (int second = first + 1; second <= ell; ++second) {
            if (used[second] || labels[first - 1] != labels[second - 1])
                continue;
            used[second] = true;
            blocks.back() = {first, second};
            recurse();
            used[second] = false;
        }
        blocks.pop_back();
        used[first] = false;
    };
    recurse();
    return out;
}

namespace {

// Nonzero rational t with f(c, ..., c, t) = 0, if any.
std::optional<Rational> solve_last(const LaurentPoly& f, const Rational& c)
{
    const std::size_t n = f.nvars();
    std::map<long, Rational> coeffs;
    long lowest = 0;
    for (const auto& [e, coef] : f.terms()) {
        Rational v = coef.to_rational();
        long others = 0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            others += e[i];
        v *= pow_rational(c, others);
        coeffs[e[n - 1]] += v;
        lowest = std::min(lowest, e[n - 1]);
    }
    std::vector<Rational> dense;
    for (const auto& [deg, v] : coeffs) {
        const auto idx = static_cast<std::size_t>(deg - lowest);
        if (dense.size() <= idx)
            dense.resize(idx + 1);
        dense[idx] = v;
    }
    const UniPoly p(std::move(dense));
    if (p.is_zero())
        return std::nullopt;
    for (const auto& r : rational_roots(p))
        if (r != 0)
            return r;
    return std::nullopt;
}

}  // namespace

AugCandidate component_witness(const PartitionComponent& comp, int ell, const LaurentPoly& rel)
{
    require_rational(rel, "witness construction");
    const std::size_t n = rel.nvars();
    if (n == 0)
        fail(ErrorKind::PreconditionViolation, "sheet relation has no variables");
    AugCandidate c;
    c.ell = ell;
    c.y.assign(static_cast<std::size_t>(ell), std::vector<Scalar>(n));
    c.relations.assign(static_cast<std::size_t>(ell), rel);
    for (int j = 1; j <= ell; ++j)
        for (int k = 1; k <= ell; ++k)
            if (j != k)
                c.a[{j, k}] = Scalar(0);
    std::set<Rational> used;
    long next = 1;
    auto fresh = [&]() {
        while (used.contains(Rational(next)))
            ++next;
        return Rational(next++);
    };
    for (const auto& block : comp.blocks) {
        std::vector<Scalar> point;
        for (int attempt = 0; point.empty(); ++attempt) {
            if (attempt > 1000)
                fail(ErrorKind::NoRootAvailable, "no rational witness found for block of " + comp.label());
            const Rational p = fresh();
            if (block.size() == 1) {
                if (n == 1) {
                    std::vector<Rational> roots;
                    for (const auto& r : rational_roots(set_vars_zero(rel, rel.variables()[0])))
                        if (r != 0 && !used.contains(r))
                            roots.push_back(r);
                    if (roots.empty())
                        fail(ErrorKind::NoRootAvailable, "sheet relation has no unused nonzero rational root");
                    used.insert(roots.front());
                    point = {Scalar(roots.front())};
                    break;
                }
                if (auto t = solve_last(rel, p)) {
                    point.assign(n - 1, Scalar(p));
                    point.push_back(Scalar(*t));
                    used.insert(p);
                }
            } else {
                std::vector<Scalar> cand(n, Scalar(p));
                if (!evaluate(rel, cand).is_zero()) {
                    point = cand;
                    used.insert(p);
                }
            }
        }
        for (int sheet : block)
            c.y[static_cast<std::size_t>(sheet - 1)] = point;
        if (block.size() == 2) {
            c.a[{block[0], block[1]}] = Scalar(1);
            c.a[{block[1], block[0]}] = -evaluate(rel, point);
        }
    }
    return c;
}

Rational reeb_chord_degree(const ChordDegreeParams& params, int j, int k)
{
    if (params.sheets < 2)
        fail(ErrorKind::PreconditionViolation, "need at least two sheets");
    if (params.theta_over_pi <= 0)
        fail(ErrorKind::PreconditionViolation, "rotation angle must be positive");
    if (j < 1 || k < 1 || j > params.sheets || k > params.sheets)
        fail(ErrorKind::IndexOutOfRange, "chord a" + std::to_string(j) + std::to_string(k) + " with " +
                                             std::to_string(params.sheets) + " sheets");
    if (j == k)
        fail(ErrorKind::PreconditionViolation, "mixed chords join distinct sheets");
    const int steps = ((k - j) % params.sheets + params.sheets) % params.sheets;
    return params.slope * Rational(steps) * params.theta_over_pi - Rational(1);
}

}  // namespace augvar
