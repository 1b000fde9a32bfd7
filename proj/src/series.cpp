#include "augvar/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "augvar/errors.hpp"

namespace augvar {

int total_degree(const SeriesExponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

TruncatedSeries::TruncatedSeries(std::vector<std::string> variables, int order, RingPtr ring)
    : vars_(std::move(variables)), order_(order), ring_(std::move(ring))
{
    if (order_ < 0)
        fail(ErrorKind::PreconditionViolation, "truncation order must be nonnegative");
}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> variables, int order, const Scalar& c)
{
    TruncatedSeries s(std::move(variables), order, c.ring());
    s.set(SeriesExponent(s.vars_.size(), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(std::vector<std::string> variables, int order, std::size_t index,
                                          RingPtr ring)
{
    if (index >= variables.size())
        fail(ErrorKind::IndexOutOfRange, "series variable index out of range");
    TruncatedSeries s(std::move(variables), order, ring);
    SeriesExponent e(s.vars_.size(), 0);
    e[index] = 1;
    s.set(e, Scalar::embed(Rational(1), ring));
    return s;
}

Scalar TruncatedSeries::coefficient(const SeriesExponent& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::embed(Rational(0), ring_) : it->second;
}

Scalar TruncatedSeries::constant_term() const
{
    return coefficient(SeriesExponent(vars_.size(), 0));
}

int TruncatedSeries::valuation() const
{
    int v = order_ + 1;
    for (const auto& [e, c] : terms_)
        v = std::min(v, total_degree(e));
    return v;
}

void TruncatedSeries::set(const SeriesExponent& e, const Scalar& c)
{
    if (e.size() != vars_.size())
        fail(ErrorKind::VariableMismatch, "exponent length does not match the series variables");
    for (int x : e)
        if (x < 0)
            fail(ErrorKind::PreconditionViolation, "power series exponents must be nonnegative");
    require_same_ring(ring_, c.ring(), "series coefficient");
    if (total_degree(e) > order_)
        return;
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_.insert_or_assign(e, c);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o, const char* where) const
{
    if (vars_ != o.vars_)
        fail(ErrorKind::VariableMismatch, std::string(where) + ": series variables differ");
    require_same_ring(ring_, o.ring_, where);
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    require_compatible(o, "series addition");
    order_ = std::min(order_, o.order_);
    for (const auto& [e, c] : o.terms_) {
        if (total_degree(e) > order_)
            continue;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    std::erase_if(terms_, [&](const auto& kv) { return total_degree(kv.first) > order_; });
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    return *this += -o;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    a.require_compatible(b, "series multiplication");
    TruncatedSeries r(a.vars_, std::min(a.order_, b.order_), a.ring_);
    SeriesExponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        if (da > r.order_)
            continue;
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > r.order_)
                continue;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            Scalar prod = ca * cb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                if (!prod.is_zero())
                    r.terms_.emplace(e, std::move(prod));
            } else {
                it->second += prod;
            }
        }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

TruncatedSeries operator*(const Scalar& c, const TruncatedSeries& s)
{
    require_same_ring(c.ring(), s.ring_, "series scaling");
    TruncatedSeries r(s.vars_, s.order_, s.ring_);
    for (const auto& [e, x] : s.terms_)
        r.set(e, c * x);
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    const Scalar c = constant_term();
    if (!c.is_invertible())
        fail(ErrorKind::NotInvertible, "series with non-invertible constant term " + c.to_string());
    const Scalar cinv = c.inverse();
    // u = c (1 + x), u^{-1} = c^{-1} sum (-x)^j
    TruncatedSeries x = cinv * *this;
    x -= constant(vars_, order_, Scalar::embed(Rational(1), ring_));
    const TruncatedSeries negx = -x;
    TruncatedSeries acc = constant(vars_, order_, Scalar::embed(Rational(1), ring_));
    TruncatedSeries power = acc;
    for (int j = 1; j <= order_; ++j) {
        power = power * negx;
        if (power.is_zero())
            break;
        acc += power;
    }
    return cinv * acc;
}

TruncatedSeries TruncatedSeries::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    TruncatedSeries result = constant(vars_, order_, Scalar::embed(Rational(1), ring_));
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    TruncatedSeries r(vars_, order, ring_);
    for (const auto& [e, c] : terms_)
        r.set(e, c);
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a.vars_ == b.vars_ && a.order_ == b.order_ && same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

namespace {

bool grlex_less(const SeriesExponent& a, const SeriesExponent& b)
{
    const int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return a > b;
}

std::vector<std::pair<SeriesExponent, Scalar>> sorted_terms(const std::map<SeriesExponent, Scalar>& terms)
{
    std::vector<std::pair<SeriesExponent, Scalar>> v(terms.begin(), terms.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return grlex_less(x.first, y.first); });
    return v;
}

}  // namespace

std::string TruncatedSeries::to_string() const
{
    if (terms_.empty())
        return "0 + O(" + std::to_string(order_ + 1) + ")";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms(terms_)) {
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
    out << " + O(" << order_ + 1 << ")";
    return out.str();
}

nlohmann::json TruncatedSeries::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : sorted_terms(terms_))
        terms.push_back({{"exp", e}, {"coef", c.to_json()}});
    return {{"vars", vars_}, {"order", order_}, {"terms", terms}};
}

TruncatedSeries series_exp(const TruncatedSeries& s)
{
    if (!s.constant_term().is_zero())
        fail(ErrorKind::NonzeroConstantTerm, "exp needs a series with zero constant term");
    const Scalar one = Scalar::embed(Rational(1), s.ring());
    TruncatedSeries acc = TruncatedSeries::constant(s.variables(), s.order(), one);
    TruncatedSeries power = acc;
    for (int j = 1; j <= s.order(); ++j) {
        power = Scalar::embed(Rational(1, j), s.ring()) * (power * s);
        if (power.is_zero())
            break;
        acc += power;
    }
    return acc;
}

TruncatedSeries series_log(const TruncatedSeries& u)
{
    if (!u.constant_term().is_one())
        fail(ErrorKind::ConstantTermNotOne, "log needs a series with constant term 1");
    const Scalar one = Scalar::embed(Rational(1), u.ring());
    const TruncatedSeries x = u - TruncatedSeries::constant(u.variables(), u.order(), one);
    TruncatedSeries acc(u.variables(), u.order(), u.ring());
    TruncatedSeries power = TruncatedSeries::constant(u.variables(), u.order(), one);
    for (int j = 1; j <= u.order(); ++j) {
        power = power * x;
        if (power.is_zero())
            break;
        const Rational c = (j % 2 == 1 ? Rational(1) : Rational(-1)) / j;
        acc += Scalar::embed(c, u.ring()) * power;
    }
    return acc;
}

}  // namespace augvar
