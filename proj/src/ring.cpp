#include "augvar/ring.hpp"

#include <sstream>

#include "augvar/errors.hpp"

namespace augvar {

namespace {

const UniPoly kX{Rational(0), Rational(1)};

}  // namespace

std::shared_ptr<const Ring> Ring::rationals()
{
    static const std::shared_ptr<const Ring> q(new Ring(RingKind::Rational, kX));
    return q;
}

std::shared_ptr<const Ring> Ring::quotient_field(const UniPoly& m)
{
    if (m.is_zero())
        fail(ErrorKind::ZeroPolynomial, "quotient modulus is zero");
    if (m.degree() < 1)
        fail(ErrorKind::PreconditionViolation, "quotient modulus must be nonconstant");
    if (!is_squarefree(m))
        fail(ErrorKind::NotInvertible, "quotient modulus " + m.to_string("t") + " is not squarefree");
    return std::shared_ptr<const Ring>(new Ring(RingKind::QuotientField, m.monic()));
}

std::shared_ptr<const Ring> Ring::nilpotent(int order)
{
    if (order < 1)
        fail(ErrorKind::PreconditionViolation, "nilpotency order must be positive");
    return std::shared_ptr<const Ring>(
        new Ring(RingKind::Nilpotent, UniPoly::monomial(Rational(1), static_cast<std::size_t>(order))));
}

std::string Ring::describe() const
{
    switch (kind_) {
    case RingKind::Rational: return "Q";
    case RingKind::QuotientField: return "Q[t]/(" + modulus_.to_string("t") + ")";
    case RingKind::Nilpotent: return "Q[a]/(a^" + std::to_string(order()) + ")";
    }
    return "?";
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where)
{
    if (!same_ring(a, b))
        fail(ErrorKind::BackendMismatch, std::string(where) + ": " + a->describe() + " vs " + b->describe());
}

Scalar::Scalar() : ring_(Ring::rationals()) {}

Scalar::Scalar(const Rational& q) : ring_(Ring::rationals()), residue_(UniPoly::constant(q)) {}

Scalar::Scalar(RingPtr ring, UniPoly residue) : ring_(std::move(ring)), residue_(std::move(residue))
{
    if (residue_.degree() >= ring_->modulus().degree())
        residue_ = residue_ % ring_->modulus();
}

Scalar Scalar::embed(const Rational& q, const RingPtr& ring)
{
    return Scalar(ring, UniPoly::constant(q));
}

Scalar Scalar::generator(const RingPtr& ring)
{
    return Scalar(ring, kX);
}

bool Scalar::is_one() const
{
    return residue_.degree() == 0 && residue_.constant_term() == 1;
}

Rational Scalar::to_rational() const
{
    if (!is_rational())
        fail(ErrorKind::PreconditionViolation, "element " + to_string() + " is not rational");
    return residue_.constant_term();
}

Scalar Scalar::operator-() const
{
    return Scalar(ring_, -residue_);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    require_same_ring(ring_, o.ring_, "addition");
    residue_ = residue_ + o.residue_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    require_same_ring(ring_, o.ring_, "subtraction");
    residue_ = residue_ - o.residue_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    require_same_ring(ring_, o.ring_, "multiplication");
    if (residue_.degree() <= 0 || o.residue_.degree() <= 0) {
        residue_ = residue_ * o.residue_;
        return *this;
    }
    residue_ = (residue_ * o.residue_) % ring_->modulus();
    return *this;
}

Scalar& Scalar::operator*=(const Rational& q)
{
    residue_ = q * residue_;
    return *this;
}

bool Scalar::is_invertible() const
{
    if (is_zero())
        return false;
    if (residue_.degree() == 0)
        return true;
    return uni_gcd(residue_, ring_->modulus()).degree() == 0;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        fail(ErrorKind::NotInvertible, "inverse of zero");
    if (residue_.degree() == 0)
        return Scalar(ring_, UniPoly::constant(Rational(1) / residue_.constant_term()));
    const ExtendedGcd g = uni_xgcd(residue_, ring_->modulus());
    if (g.gcd.degree() != 0)
        fail(ErrorKind::NotInvertible, to_string() + " shares the factor " + g.gcd.to_string(ring_->generator_name()) +
                                           " with the modulus of " + ring_->describe());
    return Scalar(ring_, g.s);
}

Scalar Scalar::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Scalar result = embed(Rational(1), ring_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return same_ring(a.ring_, b.ring_) && a.residue_ == b.residue_;
}

std::string Scalar::to_string() const
{
    if (ring_->kind() == RingKind::Rational || residue_.degree() <= 0)
        return augvar::to_string(residue_.constant_term());
    return "(" + residue_.to_string(ring_->generator_name()) + ")";
}

nlohmann::json rationals_to_json(const std::vector<Rational>& v)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& q : v)
        arr.push_back(augvar::to_string(q));
    return arr;
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j, const std::string& path)
{
    if (!j.is_array())
        fail(ErrorKind::ParseError, path + ": expected an array of rationals");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (e.is_string())
            out.push_back(parse_rational(e.get<std::string>()));
        else if (e.is_number_integer())
            out.push_back(Rational(e.get<std::int64_t>()));
        else
            fail(ErrorKind::ParseError, path + "[" + std::to_string(i) + "]: expected \"p/q\" or integer");
    }
    return out;
}

nlohmann::json Scalar::to_json() const
{
    if (ring_->kind() == RingKind::Rational)
        return augvar::to_string(residue_.constant_term());
    nlohmann::json j;
    j["residue"] = rationals_to_json(residue_.coefficients());
    if (ring_->kind() == RingKind::Nilpotent)
        j["nilpotent_order"] = ring_->order();
    else
        j["modulus"] = rationals_to_json(ring_->modulus().coefficients());
    return j;
}

Scalar Scalar::from_json(const nlohmann::json& j)
{
    if (j.is_string())
        return Scalar(parse_rational(j.get<std::string>()));
    if (j.is_number_integer())
        return Scalar(Rational(j.get<std::int64_t>()));
    if (!j.is_object() || !j.contains("residue"))
        fail(ErrorKind::ParseError, "coefficient: expected \"p/q\" or {\"residue\", \"modulus\"}");
    UniPoly residue(rationals_from_json(j.at("residue"), "residue"));
    if (j.contains("modulus"))
        return Scalar(Ring::quotient_field(UniPoly(rationals_from_json(j.at("modulus"), "modulus"))), residue);
    if (j.contains("nilpotent_order")) {
        if (!j.at("nilpotent_order").is_number_integer())
            fail(ErrorKind::ParseError, "nilpotent_order: expected integer");
        return Scalar(Ring::nilpotent(j.at("nilpotent_order").get<int>()), residue);
    }
    fail(ErrorKind::ParseError, "coefficient: missing \"modulus\" or \"nilpotent_order\"");
}

Scalar evaluate_in(const UniPoly& p, const Scalar& x)
{
    Scalar acc = Scalar::embed(Rational(0), x.ring());
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + Scalar::embed(*it, x.ring());
    return acc;
}

}  // namespace augvar
