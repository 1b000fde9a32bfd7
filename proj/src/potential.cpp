#include "augvar/potential.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "augvar/errors.hpp"

namespace augvar {

void validate_signs(const SignVector& signs)
{
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] != 1 && signs[i] != -1)
            fail(ErrorKind::PreconditionViolation,
                 "sign " + std::to_string(i) + " is " + std::to_string(signs[i]) + ", expected +1 or -1");
}

SignVector parse_signs(const std::string& csv)
{
    SignVector out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (item == "+" || item == "+1" || item == "1")
            out.push_back(1);
        else if (item == "-" || item == "-1")
            out.push_back(-1);
        else
            fail(ErrorKind::ParseError, "--signs: cannot read '" + item + "' as a sign");
    }
    return out;
}

std::string source_name(PotentialSource s)
{
    switch (s) {
    case PotentialSource::Clifford: return "Clifford";
    case PotentialSource::ProductSpheres: return "ProductSpheres";
    case PotentialSource::ToricFromRays: return "ToricFromRays";
    case PotentialSource::UserSupplied: return "UserSupplied";
    }
    return "?";
}

nlohmann::json PotentialSpec::to_json() const
{
    return {{"source", source_name(source)},
            {"description", description},
            {"signs", signs},
            {"base", base.to_json()},
            {"relation", relation.to_json()},
            {"vertex", vertex},
            {"basis_change", basis_change}};
}

std::vector<std::string> y_variables(std::size_t n)
{
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= n; ++i)
        vars.push_back("y" + std::to_string(i));
    return vars;
}

namespace {

LaurentPoly signed_sum(const std::vector<std::string>& vars, const std::vector<Exponent>& monomials,
                       const SignVector& signs)
{
    LaurentPoly f(vars);
    for (std::size_t i = 0; i < monomials.size(); ++i)
        f.add_term(monomials[i], Scalar(signs[i]));
    return f;
}

std::string sign_string(const SignVector& s)
{
    std::string out;
    for (int x : s)
        out += x > 0 ? '+' : '-';
    return out;
}

PotentialSpec cleared_spec(PotentialSource source, std::string description, SignVector signs, const LaurentPoly& base,
                           const std::optional<Exponent>& vertex)
{
    const LatticePolytope p = newton_polytope(base);
    const Exponent v = vertex ? *vertex : p.vertices().front();
    ClearedPolynomial c = clear_to_vertex(base, v, true);
    return {source, std::move(description), std::move(signs), base, std::move(c.polynomial), v, c.basis_change};
}

}  // namespace

PotentialSpec clifford_relation(int n, const SignVector& signs)
{
    if (n < 2)
        fail(ErrorKind::PreconditionViolation, "Clifford relation needs n >= 2");
    if (signs.size() != static_cast<std::size_t>(n))
        fail(ErrorKind::SignLengthMismatch,
             "Clifford relation with n = " + std::to_string(n) + " needs " + std::to_string(n) + " signs, got " +
                 std::to_string(signs.size()));
    validate_signs(signs);
    const auto vars = y_variables(static_cast<std::size_t>(n - 1));
    std::vector<Exponent> monomials{Exponent(vars.size(), 0)};
    for (std::size_t i = 0; i < vars.size(); ++i) {
        Exponent e(vars.size(), 0);
        e[i] = 1;
        monomials.push_back(e);
    }
    const LaurentPoly f = signed_sum(vars, monomials, signs);
    return {PotentialSource::Clifford,
            "Clifford(" + std::to_string(n) + ", " + sign_string(signs) + ")",
            signs,
            f,
            f,
            Exponent(vars.size(), 0),
            identity_matrix(vars.size())};
}

PotentialSpec product_spheres_relation(ProductSpheresVariant variant, const SignVector& signs)
{
    const bool unit = variant == ProductSpheresVariant::UnitSphereBundle;
    SignVector s = signs.empty() ? (unit ? SignVector{1, -1, -1, 1} : SignVector{1, -1, 1, -1}) : signs;
    if (s.size() != 4)
        fail(ErrorKind::SignLengthMismatch, "product-spheres relation needs 4 signs, got " + std::to_string(s.size()));
    validate_signs(s);
    const std::vector<Exponent> monomials =
        unit ? std::vector<Exponent>{{0, 0}, {1, 0}, {0, 1}, {1, 1}} : std::vector<Exponent>{{0, 0}, {2, 0}, {1, 1}, {1, -1}};
    const LaurentPoly f = signed_sum(y_variables(2), monomials, s);
    return {PotentialSource::ProductSpheres,
            std::string(unit ? "UnitSphereBundle" : "Anticanonical") + "(" + sign_string(s) + ")",
            s,
            f,
            f,
            Exponent{0, 0},
            identity_matrix(2)};
}

PotentialSpec toric_relation(const std::vector<IntVector>& rays, const SignVector& signs,
                             const std::optional<Exponent>& vertex)
{
    if (rays.empty())
        fail(ErrorKind::DegenerateFan, "no rays");
    const std::size_t n = rays.front().size();
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].size() != n)
            fail(ErrorKind::DimensionMismatch, "ray " + std::to_string(i) + " has the wrong length");
        if (std::abs(gcd_of(rays[i])) != 1)
            fail(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(i) + " is not primitive");
    }
    SignVector s = signs.empty() ? SignVector(rays.size(), 1) : signs;
    if (s.size() != rays.size())
        fail(ErrorKind::SignLengthMismatch,
             std::to_string(rays.size()) + " rays but " + std::to_string(s.size()) + " signs");
    validate_signs(s);
    if (n == 0 || rank_of(rays) != n)
        fail(ErrorKind::DegenerateFan, "rays do not span the lattice");
    const LatticePolytope hull = LatticePolytope::hull(rays);
    if (hull.dim() != n)
        fail(ErrorKind::DegenerateFan, "rays lie in an affine hyperplane");
    const HullStructure h = hull_structure(hull);
    const IntVector origin = h.frame.to_coords(IntVector(n, 0));
    for (const auto& f : h.facets)
        if (dot(f.normal, origin) <= f.offset)
            fail(ErrorKind::DegenerateFan, "the origin is not interior to the convex hull of the rays");
    LaurentPoly base(y_variables(n));
    for (std::size_t i = 0; i < rays.size(); ++i)
        base.add_term(rays[i], Scalar(s[i]));
    std::ostringstream desc;
    desc << "Toric(" << rays.size() << " rays, " << sign_string(s) << ")";
    return cleared_spec(PotentialSource::ToricFromRays, desc.str(), s, base, vertex);
}

PotentialSpec user_supplied_relation(const LaurentPoly& base, const std::optional<Exponent>& vertex)
{
    return cleared_spec(PotentialSource::UserSupplied, "UserSupplied", {}, base, vertex);
}

FanInput fan_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("rays") || !j.at("rays").is_array())
        fail(ErrorKind::ParseError, "$.rays: expected an array of integer vectors");
    FanInput fan;
    for (std::size_t i = 0; i < j.at("rays").size(); ++i) {
        const auto& r = j.at("rays")[i];
        if (!r.is_array())
            fail(ErrorKind::ParseError, "$.rays[" + std::to_string(i) + "]: expected an array");
        IntVector v;
        for (const auto& x : r) {
            if (!x.is_number_integer())
                fail(ErrorKind::ParseError, "$.rays[" + std::to_string(i) + "]: expected integers");
            v.push_back(x.get<long>());
        }
        fan.rays.push_back(std::move(v));
    }
    if (j.contains("signs")) {
        if (!j.at("signs").is_array())
            fail(ErrorKind::ParseError, "$.signs: expected an array of +-1");
        for (std::size_t i = 0; i < j.at("signs").size(); ++i) {
            const auto& x = j.at("signs")[i];
            if (!x.is_number_integer())
                fail(ErrorKind::ParseError, "$.signs[" + std::to_string(i) + "]: expected an integer");
            fan.signs.push_back(x.get<int>());
        }
    }
    return fan;
}

bool is_markov(long a, long b, long c)
{
    const Integer A(a), B(b), C(c);
    return a > 0 && b > 0 && c > 0 && A * A + B * B + C * C == 3 * A * B * C;
}

MarkovTriple::MarkovTriple(long a, long b, long c)
{
    long v[3] = {a, b, c};
    std::sort(v, v + 3);
    if (!is_markov(v[0], v[1], v[2]))
        fail(ErrorKind::PreconditionViolation, "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                                                   std::to_string(v[2]) + ") is not a Markov triple");
    a_ = v[0];
    b_ = v[1];
    c_ = v[2];
}

nlohmann::json MarkovTriple::to_json() const
{
    return nlohmann::json::array({a_, b_, c_});
}

std::vector<MarkovTriple> markov_generate(long bound)
{
    if (bound < 1)
        fail(ErrorKind::PreconditionViolation, "bound must be at least 1");
    if (bound > 1'000'000'000)
        fail(ErrorKind::Overflow, "bound above 10^9");
    // Each triple other than (1,1,1) and (1,1,2) has a unique parent with a smaller
    // maximum, so pruning by the bound keeps the tree connected.
    std::set<MarkovTriple> seen{MarkovTriple(1, 1, 1)};
    std::deque<MarkovTriple> queue{MarkovTriple(1, 1, 1)};
    while (!queue.empty()) {
        const MarkovTriple t = queue.front();
        queue.pop_front();
        const long x[3] = {t.a(), t.b(), t.c()};
        for (int i = 0; i < 3; ++i) {
            const long p = x[(i + 1) % 3], q = x[(i + 2) % 3];
            const long y = 3 * p * q - x[i];
            if (y < 1 || y > bound)
                continue;
            MarkovTriple m(y, p, q);
            if (seen.insert(m).second)
                queue.push_back(m);
        }
    }
    return {seen.begin(), seen.end()};
}

bool is_fibonacci(long n)
{
    long a = 1, b = 1;
    while (a < n) {
        const long c = a + b;
        a = b;
        b = c;
    }
    return a == n;
}

bool markov_fibonacci_check(const MarkovTriple& t)
{
    if (t.a() != 1)
        fail(ErrorKind::NotANormalizedTriple, "triple starts with " + std::to_string(t.a()) + ", not 1");
    return is_fibonacci(t.b()) && is_fibonacci(t.c());
}

}  // namespace augvar
