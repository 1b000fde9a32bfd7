#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvar/ring.hpp"
#include "augvar/series.hpp"
#include "augvar/unipoly.hpp"

namespace augvar {

using Exponent = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

/// Multivariate Laurent polynomial (group-ring element) over one coefficient Ring.
class LaurentPoly {
public:
    explicit LaurentPoly(std::vector<std::string> variables, RingPtr ring = Ring::rationals());

    static LaurentPoly constant(std::vector<std::string> variables, const Scalar& c);
    static LaurentPoly monomial(std::vector<std::string> variables, const Exponent& e, const Scalar& c);
    /// Single variable y_index.
    static LaurentPoly variable(std::vector<std::string> variables, std::size_t index);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t nvars() const noexcept { return vars_.size(); }
    const RingPtr& ring() const noexcept { return ring_; }
    const std::map<Exponent, Scalar>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Scalar coefficient(const Exponent& e) const;
    Scalar constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }
    std::size_t index_of(const std::string& var) const;

    /// Adds c*y^e to the polynomial.
    void add_term(const Exponent& e, const Scalar& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& f);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    /// Multiply by the monomial y^e.
    LaurentPoly shifted(const Exponent& e) const;
    /// Canonical image of a Q-polynomial in another ring.
    LaurentPoly change_ring(const RingPtr& ring) const;

    /// Terms in display order: ascending total degree, then lexicographically descending.
    std::vector<std::pair<Exponent, Scalar>> sorted_terms() const;
    std::string to_string() const;
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    void require_compatible(const LaurentPoly& o, const char* where) const;

    std::vector<std::string> vars_;
    RingPtr ring_;
    std::map<Exponent, Scalar> terms_;
};

long total_degree(const Exponent& e);

/// Alias matching the contract name; same as operator*.
LaurentPoly laurent_mul(const LaurentPoly& f, const LaurentPoly& g);

/// Replaces every exponent e by M*e. Throws NotUnimodular unless det(M) = +-1.
LaurentPoly substitute_monomial(const LaurentPoly& f, const IntMatrix& m);

/// Sets every variable except `keep` to zero. Negative exponents of `keep` are cleared by
/// a power of `keep`; negative exponents elsewhere throw NegativeExponentAtZero.
UniPoly set_vars_zero(const LaurentPoly& f, const std::string& keep);

/// Sets one variable to zero, returning a polynomial in the remaining variables.
LaurentPoly restrict_to_zero(const LaurentPoly& f, const std::string& var);

LaurentPoly partial_derivative(const LaurentPoly& f, const std::string& var);

/// Exact value at a point of the coefficient ring. A Q-polynomial is embedded into the
/// point's ring. Throws NotInvertibleAtPoint for negative powers of non-units.
Scalar evaluate(const LaurentPoly& f, const std::vector<Scalar>& point);
/// Value at a point of power series; negative powers need an invertible constant term.
TruncatedSeries evaluate(const LaurentPoly& f, const std::vector<TruncatedSeries>& point);

}  // namespace augvar
