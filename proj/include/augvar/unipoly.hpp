#pragma once

#include <string>
#include <utility>
#include <vector>

#include "augvar/rational.hpp"

namespace augvar {

/// Dense univariate polynomial over Q, coefficients by ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);
    UniPoly(std::initializer_list<Rational> coefficients);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coefficient(std::size_t i) const;
    Rational leading() const;
    Rational constant_term() const { return coefficient(0); }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    UniPoly derivative() const;
    UniPoly monic() const;
    Rational evaluate(const Rational& x) const;

    std::string to_string(std::string_view var = "y") const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws ZeroPolynomial on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
UniPoly uni_gcd(const UniPoly& p, const UniPoly& q);

struct ExtendedGcd {
    UniPoly gcd;  // monic
    UniPoly s;    // s*p + t*q = gcd
    UniPoly t;
};
ExtendedGcd uni_xgcd(const UniPoly& p, const UniPoly& q);

/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

bool is_squarefree(const UniPoly& p);

/// Distinct rational roots, sorted ascending.
std::vector<Rational> rational_roots(const UniPoly& p);

/// Multiplicity of x as a root of p (0 when p(x) != 0).
int root_multiplicity(const UniPoly& p, const Rational& x);

}  // namespace augvar
