#include "augvar/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "augvar/errors.hpp"
#include "augvar/lattice.hpp"

namespace augvar {

long total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0L);
}

LaurentPoly::LaurentPoly(std::vector<std::string> variables, RingPtr ring)
    : vars_(std::move(variables)), ring_(std::move(ring))
{
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables, const Scalar& c)
{
    LaurentPoly f(std::move(variables), c.ring());
    f.add_term(Exponent(f.vars_.size(), 0), c);
    return f;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables, const Exponent& e, const Scalar& c)
{
    LaurentPoly f(std::move(variables), c.ring());
    f.add_term(e, c);
    return f;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> variables, std::size_t index)
{
    Exponent e(variables.size(), 0);
    if (index >= e.size())
        fail(ErrorKind::IndexOutOfRange, "variable index out of range");
    e[index] = 1;
    return monomial(std::move(variables), e, Scalar(Rational(1)));
}

Scalar LaurentPoly::coefficient(const Exponent& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::embed(Rational(0), ring_) : it->second;
}

std::size_t LaurentPoly::index_of(const std::string& var) const
{
    const auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        fail(ErrorKind::VariableMismatch, "unknown variable '" + var + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

void LaurentPoly::add_term(const Exponent& e, const Scalar& c)
{
    if (e.size() != vars_.size())
        fail(ErrorKind::VariableMismatch, "exponent vector length " + std::to_string(e.size()) + " != " +
                                              std::to_string(vars_.size()) + " variables");
    require_same_ring(ring_, c.ring(), "Laurent coefficient");
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

void LaurentPoly::require_compatible(const LaurentPoly& o, const char* where) const
{
    if (vars_ != o.vars_)
        fail(ErrorKind::VariableMismatch, std::string(where) + ": variable lists differ");
    require_same_ring(ring_, o.ring_, where);
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    require_compatible(o, "Laurent addition");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    a.require_compatible(b, "Laurent multiplication");
    LaurentPoly r(a.vars_, a.ring_);
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly operator*(const Scalar& c, const LaurentPoly& f)
{
    require_same_ring(c.ring(), f.ring_, "Laurent scaling");
    LaurentPoly r(f.vars_, f.ring_);
    for (const auto& [e, x] : f.terms_)
        r.add_term(e, c * x);
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    return a.vars_ == b.vars_ && same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const
{
    if (s.size() != vars_.size())
        fail(ErrorKind::VariableMismatch, "shift length mismatch");
    LaurentPoly r(vars_, ring_);
    for (const auto& [e, c] : terms_) {
        Exponent x = e;
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += s[i];
        r.terms_.emplace(std::move(x), c);
    }
    return r;
}

LaurentPoly LaurentPoly::change_ring(const RingPtr& ring) const
{
    if (same_ring(ring_, ring))
        return *this;
    if (ring_->kind() != RingKind::Rational)
        fail(ErrorKind::BackendMismatch, "only Q-polynomials embed into " + ring->describe());
    LaurentPoly r(vars_, ring);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, Scalar::embed(c.to_rational(), ring));
    return r;
}

std::vector<std::pair<Exponent, Scalar>> LaurentPoly::sorted_terms() const
{
    std::vector<std::pair<Exponent, Scalar>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        const long dx = total_degree(x.first), dy = total_degree(y.first);
        if (dx != dy)
            return dx < dy;
        return x.first > y.first;
    });
    return v;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
        std::string coef = c.to_string();
        const bool negative = c.is_rational() && c.to_rational() < 0;
        if (negative)
            coef = augvar::to_string(-c.to_rational());
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            mono << (any ? "*" : "") << vars_[i];
            if (e[i] != 1)
                mono << "^" << e[i];
            any = true;
        }
        if (!any)
            out << coef;
        else if (coef == "1")
            out << mono.str();
        else
            out << coef << "*" << mono.str();
    }
    return out.str();
}

nlohmann::json LaurentPoly::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : sorted_terms())
        terms.push_back({{"exp", e}, {"coef", c.to_json()}});
    return {{"vars", vars_}, {"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        fail(ErrorKind::ParseError, "$: expected an object with \"vars\" and \"terms\"");
    if (!j.contains("vars") || !j.at("vars").is_array())
        fail(ErrorKind::ParseError, "$.vars: expected an array of variable names");
    if (!j.contains("terms") || !j.at("terms").is_array())
        fail(ErrorKind::ParseError, "$.terms: expected an array of terms");
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < j.at("vars").size(); ++i) {
        const auto& v = j.at("vars")[i];
        if (!v.is_string())
            fail(ErrorKind::ParseError, "$.vars[" + std::to_string(i) + "]: expected a string");
        vars.push_back(v.get<std::string>());
    }
    std::vector<std::pair<Exponent, Scalar>> parsed;
    const auto& terms = j.at("terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string path = "$.terms[" + std::to_string(i) + "]";
        const auto& t = terms[i];
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            fail(ErrorKind::ParseError, path + ": expected {\"exp\": [...], \"coef\": ...}");
        const auto& ej = t.at("exp");
        if (!ej.is_array() || ej.size() != vars.size())
            fail(ErrorKind::ParseError, path + ".exp: expected " + std::to_string(vars.size()) + " integers");
        Exponent e;
        for (const auto& x : ej) {
            if (!x.is_number_integer())
                fail(ErrorKind::ParseError, path + ".exp: expected integers");
            e.push_back(x.get<long>());
        }
        try {
            parsed.emplace_back(std::move(e), Scalar::from_json(t.at("coef")));
        } catch (const Error& err) {
            fail(ErrorKind::ParseError, path + ".coef: " + err.what());
        }
    }
    RingPtr ring = Ring::rationals();
    for (const auto& [e, c] : parsed)
        if (c.ring()->kind() != RingKind::Rational) {
            ring = c.ring();
            break;
        }
    LaurentPoly f(vars, ring);
    for (const auto& [e, c] : parsed) {
        Scalar coef = c;
        if (!same_ring(c.ring(), ring)) {
            if (c.ring()->kind() != RingKind::Rational)
                fail(ErrorKind::ParseError, "$.terms: coefficients live in different rings");
            coef = Scalar::embed(c.to_rational(), ring);
        }
        f.add_term(e, coef);
    }
    return f;
}

LaurentPoly laurent_mul(const LaurentPoly& f, const LaurentPoly& g)
{
    return f * g;
}

LaurentPoly substitute_monomial(const LaurentPoly& f, const IntMatrix& m)
{
    if (m.size() != f.nvars())
        fail(ErrorKind::DimensionMismatch, "substitution matrix must be " + std::to_string(f.nvars()) + " x " +
                                               std::to_string(f.nvars()));
    if (!is_unimodular(m))
        fail(ErrorKind::NotUnimodular, "substitution matrix has determinant " + determinant(m).str());
    LaurentPoly r(f.variables(), f.ring());
    for (const auto& [e, c] : f.terms())
        r.add_term(mat_vec(m, e), c);
    return r;
}

UniPoly set_vars_zero(const LaurentPoly& f, const std::string& keep)
{
    const std::size_t k = f.index_of(keep);
    if (f.ring()->kind() != RingKind::Rational)
        fail(ErrorKind::UnsupportedRing, "set_vars_zero returns a polynomial over Q");
    std::map<long, Rational> kept;
    long low = 0;
    for (const auto& [e, c] : f.terms()) {
        bool survives = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i == k)
                continue;
            if (e[i] < 0)
                fail(ErrorKind::NegativeExponentAtZero,
                     "variable " + f.variables()[i] + " has exponent " + std::to_string(e[i]));
            if (e[i] > 0)
                survives = false;
        }
        if (survives) {
            kept[e[k]] += c.to_rational();
            low = std::min(low, e[k]);
        }
    }
    std::vector<Rational> coeffs;
    for (const auto& [d, c] : kept) {
        const auto idx = static_cast<std::size_t>(d - low);
        if (coeffs.size() <= idx)
            coeffs.resize(idx + 1);
        coeffs[idx] = c;
    }
    return UniPoly(std::move(coeffs));
}

LaurentPoly restrict_to_zero(const LaurentPoly& f, const std::string& var)
{
    const std::size_t k = f.index_of(var);
    std::vector<std::string> vars = f.variables();
    vars.erase(vars.begin() + static_cast<long>(k));
    LaurentPoly r(vars, f.ring());
    for (const auto& [e, c] : f.terms()) {
        if (e[k] < 0)
            fail(ErrorKind::NegativeExponentAtZero, "variable " + var + " has exponent " + std::to_string(e[k]));
        if (e[k] > 0)
            continue;
        Exponent x = e;
        x.erase(x.begin() + static_cast<long>(k));
        r.add_term(x, c);
    }
    return r;
}

LaurentPoly partial_derivative(const LaurentPoly& f, const std::string& var)
{
    const std::size_t k = f.index_of(var);
    LaurentPoly r(f.variables(), f.ring());
    for (const auto& [e, c] : f.terms()) {
        if (e[k] == 0)
            continue;
        Exponent x = e;
        x[k] -= 1;
        r.add_term(x, c * Rational(e[k]));
    }
    return r;
}

Scalar evaluate(const LaurentPoly& f, const std::vector<Scalar>& point)
{
    if (point.size() != f.nvars())
        fail(ErrorKind::VariableMismatch, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                              std::to_string(f.nvars()));
    RingPtr ring = f.ring();
    for (const auto& x : point)
        if (x.ring()->kind() != RingKind::Rational) {
            ring = x.ring();
            break;
        }
    const LaurentPoly g = f.change_ring(ring);
    std::vector<Scalar> pt;
    for (const auto& x : point) {
        if (same_ring(x.ring(), ring))
            pt.push_back(x);
        else if (x.ring()->kind() == RingKind::Rational)
            pt.push_back(Scalar::embed(x.to_rational(), ring));
        else
            fail(ErrorKind::BackendMismatch, "point coordinates live in different rings");
    }
    Scalar acc = Scalar::embed(Rational(0), ring);
    for (const auto& [e, c] : g.terms()) {
        Scalar term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (e[i] < 0 && !pt[i].is_invertible())
                fail(ErrorKind::NotInvertibleAtPoint,
                     f.variables()[i] + " = " + pt[i].to_string() + " is not invertible");
            term *= pt[i].pow(e[i]);
        }
        acc += term;
    }
    return acc;
}

TruncatedSeries evaluate(const LaurentPoly& f, const std::vector<TruncatedSeries>& point)
{
    if (point.size() != f.nvars())
        fail(ErrorKind::VariableMismatch, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                              std::to_string(f.nvars()));
    if (point.empty())
        fail(ErrorKind::PreconditionViolation, "series evaluation needs at least one coordinate");
    const RingPtr& ring = point.front().ring();
    const LaurentPoly g = f.change_ring(ring);
    // Cache powers per coordinate.
    std::vector<std::map<long, TruncatedSeries>> cache(point.size());
    auto power = [&](std::size_t i, long e) -> const TruncatedSeries& {
        auto it = cache[i].find(e);
        if (it != cache[i].end())
            return it->second;
        if (e < 0 && !point[i].constant_term().is_invertible())
            fail(ErrorKind::NotInvertibleAtPoint,
                 f.variables()[i] + " has non-invertible constant term " + point[i].constant_term().to_string());
        return cache[i].emplace(e, point[i].pow(e)).first->second;
    };
    const auto& first = point.front();
    TruncatedSeries acc(first.variables(), first.order(), ring);
    for (const auto& [e, c] : g.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(first.variables(), first.order(), c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                term = term * power(i, e[i]);
        acc += term;
    }
    return acc;
}

}  // namespace augvar
