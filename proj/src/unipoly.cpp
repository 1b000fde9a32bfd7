#include "augvar/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "augvar/errors.hpp"

namespace augvar {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    normalize();
}

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients)
{
    normalize();
}

UniPoly UniPoly::constant(const Rational& c)
{
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::leading() const
{
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

UniPoly UniPoly::operator-() const
{
    std::vector<Rational> v(coeffs_);
    for (auto& c : v)
        c = -c;
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coefficient(i) + b.coefficient(i);
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b)
{
    return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& p)
{
    std::vector<Rational> v(p.coeffs_);
    for (auto& x : v)
        x *= c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return {};
    return Rational(1) / leading() * *this;
}

Rational UniPoly::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string UniPoly::to_string(std::string_view var) const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            out << augvar::to_string(mag);
            continue;
        }
        if (mag != 1)
            out << augvar::to_string(mag) << "*";
        out << var;
        if (i > 1)
            out << "^" << i;
    }
    return out.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero())
        fail(ErrorKind::ZeroPolynomial, "polynomial division by zero");
    if (a.degree() < b.degree())
        return {UniPoly{}, a};
    std::vector<Rational> rem(a.coefficients());
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coefficients();
    const Rational lead = b.leading();
    for (long i = a.degree() - b.degree(); i >= 0; --i) {
        const auto top = static_cast<std::size_t>(i) + bc.size() - 1;
        const Rational q = rem[top] / lead;
        quo[static_cast<std::size_t>(i)] = q;
        if (q == 0)
            continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            rem[static_cast<std::size_t>(i) + j] -= q * bc[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b)
{
    return divmod(a, b).second;
}

UniPoly uni_gcd(const UniPoly& p, const UniPoly& q)
{
    UniPoly a = p, b = q;
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd uni_xgcd(const UniPoly& p, const UniPoly& q)
{
    UniPoly r0 = p, r1 = q;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [quo, rem] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        s0 = std::exchange(s1, s0 - quo * s1);
        t0 = std::exchange(t1, t0 - quo * t1);
    }
    if (r0.is_zero())
        return {UniPoly{}, UniPoly{}, UniPoly{}};
    const Rational scale = Rational(1) / r0.leading();
    return {scale * r0, scale * s0, scale * t0};
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.is_zero())
        fail(ErrorKind::ZeroPolynomial, "squarefree part of the zero polynomial");
    return divmod(p, uni_gcd(p, p.derivative())).first.monic();
}

bool is_squarefree(const UniPoly& p)
{
    return !p.is_zero() && uni_gcd(p, p.derivative()).degree() == 0;
}

namespace {

std::vector<Integer> positive_divisors(Integer n)
{
    if (n < 0)
        n = -n;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p)
{
    if (p.is_zero())
        fail(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    std::vector<Rational> roots;
    // Strip the power of y, recording 0 as a root.
    std::size_t low = 0;
    while (p.coefficients()[low] == 0)
        ++low;
    if (low > 0)
        roots.emplace_back(0);
    std::vector<Rational> shifted(p.coefficients().begin() + static_cast<long>(low), p.coefficients().end());
    // Clear denominators to an integer polynomial.
    Integer lcm_den = 1;
    for (const auto& c : shifted)
        lcm_den = boost::multiprecision::lcm(lcm_den, Integer(boost::multiprecision::denominator(c)));
    std::vector<Integer> ints;
    for (const auto& c : shifted)
        ints.push_back(Integer(boost::multiprecision::numerator(c)) * (lcm_den / boost::multiprecision::denominator(c)));
    if (ints.size() > 1) {
        const UniPoly q(shifted);
        for (const auto& num : positive_divisors(ints.front()))
            for (const auto& den : positive_divisors(ints.back()))
                for (int sign : {1, -1}) {
                    Rational cand(Integer(sign) * num, den);
                    if (q.evaluate(cand) == 0)
                        roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

int root_multiplicity(const UniPoly& p, const Rational& x)
{
    int m = 0;
    UniPoly q = p;
    const UniPoly lin{-x, Rational(1)};
    while (!q.is_zero() && q.evaluate(x) == 0) {
        q = divmod(q, lin).first;
        ++m;
    }
    return m;
}

}  // namespace augvar
