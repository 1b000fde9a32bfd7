#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "augvar/rational.hpp"
#include "augvar/unipoly.hpp"

namespace augvar {

enum class RingKind {
    Rational,       // Q
    QuotientField,  // Q[t]/(m), m monic squarefree (irreducibility asserted by the caller)
    Nilpotent,      // Q[alpha]/(alpha^order)
};

/// A coefficient backend. Every ring is a quotient Q[x]/(modulus); Q itself uses modulus x.
class Ring {
public:
    static std::shared_ptr<const Ring> rationals();
    /// Throws NotInvertible when m is not squarefree, ZeroPolynomial for m = 0.
    static std::shared_ptr<const Ring> quotient_field(const UniPoly& m);
    static std::shared_ptr<const Ring> nilpotent(int order);

    RingKind kind() const noexcept { return kind_; }
    const UniPoly& modulus() const noexcept { return modulus_; }
    /// Nilpotency order for Nilpotent rings, degree of the modulus otherwise.
    int order() const noexcept { return static_cast<int>(modulus_.degree()); }
    std::string generator_name() const { return kind_ == RingKind::Nilpotent ? "a" : "t"; }
    std::string describe() const;

    friend bool operator==(const Ring& a, const Ring& b)
    {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }

private:
    Ring(RingKind kind, UniPoly modulus) : kind_(kind), modulus_(std::move(modulus)) {}

    RingKind kind_;
    UniPoly modulus_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Element of a Ring. Binary operations require both operands to live in the same ring;
/// the embedding of Q is explicit via Scalar::embed.
class Scalar {
public:
    /// Zero of Q.
    Scalar();
    Scalar(const Rational& q);  // NOLINT: rationals are the common case
    Scalar(std::int64_t n) : Scalar(Rational(n)) {}  // NOLINT
    Scalar(RingPtr ring, UniPoly residue);

    static Scalar embed(const Rational& q, const RingPtr& ring);
    /// Class of the generator (t or alpha).
    static Scalar generator(const RingPtr& ring);

    const RingPtr& ring() const noexcept { return ring_; }
    const UniPoly& residue() const noexcept { return residue_; }

    bool is_zero() const noexcept { return residue_.is_zero(); }
    bool is_one() const;
    bool is_rational() const noexcept { return residue_.degree() <= 0; }
    /// Throws PreconditionViolation when the element is not in the image of Q.
    Rational to_rational() const;
    /// Constant coefficient of the residue (the value modulo the generator).
    Rational constant_part() const { return residue_.constant_term(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator*=(const Rational& q);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator*(Scalar a, const Rational& q) { return a *= q; }
    friend Scalar operator*(const Rational& q, Scalar a) { return a *= q; }

    /// Throws NotInvertible.
    Scalar inverse() const;
    bool is_invertible() const;
    /// Negative exponents require an invertible element.
    Scalar pow(long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;
    /// "p/q" for rational-ring elements, {"residue": [...], "modulus": [...]} or
    /// {"residue": [...], "nilpotent_order": m} otherwise.
    nlohmann::json to_json() const;
    static Scalar from_json(const nlohmann::json& j);

private:
    RingPtr ring_;
    UniPoly residue_;
};

/// Throws BackendMismatch unless both scalars share a ring.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

nlohmann::json rationals_to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const nlohmann::json& j, const std::string& path);

/// Residue of p(x) in the given ring, for p over Q and x a ring element.
Scalar evaluate_in(const UniPoly& p, const Scalar& x);

}  // namespace augvar
