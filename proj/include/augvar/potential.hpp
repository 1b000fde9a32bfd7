#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvar/laurent.hpp"
#include "augvar/polytope.hpp"

namespace augvar {

/// Entries are +1 or -1; one per monomial slot.
using SignVector = std::vector<int>;

/// Throws PreconditionViolation on an entry other than +-1.
void validate_signs(const SignVector& signs);
SignVector parse_signs(const std::string& csv);

enum class PotentialSource { Clifford, ProductSpheres, ToricFromRays, UserSupplied };
std::string source_name(PotentialSource s);

/// A disk potential together with its lifted relation x^{-v} W, which has a nonzero
/// constant term. `basis_change` is the unimodular matrix applied after the vertex shift.
struct PotentialSpec {
    PotentialSource source = PotentialSource::UserSupplied;
    std::string description;
    SignVector signs;
    LaurentPoly base{std::vector<std::string>{}};
    LaurentPoly relation{std::vector<std::string>{}};
    Exponent vertex;
    IntMatrix basis_change;

    nlohmann::json to_json() const;
};

/// y-variable names y1..yn.
std::vector<std::string> y_variables(std::size_t n);

/// s0 + s1 y1 + ... + s_{n-1} y_{n-1}. Throws SignLengthMismatch unless signs.size() == n.
PotentialSpec clifford_relation(int n, const SignVector& signs);

enum class ProductSpheresVariant { UnitSphereBundle, Anticanonical };

/// Relations for the two lifts over S^2 x S^2. Signs attach to the four monomials in the
/// order 1, y1, y2, y1 y2 (unit sphere bundle) or 1, y1^2, y1 y2, y1 y2^{-1} (anticanonical);
/// empty signs select the defaults (+,-,-,+) and (+,-,+,-).
PotentialSpec product_spheres_relation(ProductSpheresVariant variant, const SignVector& signs = {});

/// Base potential sum_i s_i y^{ray_i}, cleared at `vertex` (default: the lexicographically
/// smallest vertex of its Newton polytope) and fitted into the nonnegative orthant if needed.
/// Throws NonPrimitiveRay, DegenerateFan (rays do not span or the origin is not interior),
/// SignLengthMismatch.
PotentialSpec toric_relation(const std::vector<IntVector>& rays, const SignVector& signs = {},
                             const std::optional<Exponent>& vertex = std::nullopt);

/// Clears a user-supplied potential the same way.
PotentialSpec user_supplied_relation(const LaurentPoly& base, const std::optional<Exponent>& vertex = std::nullopt);

struct FanInput {
    std::vector<IntVector> rays;
    SignVector signs;
};
FanInput fan_from_json(const nlohmann::json& j);

/// Sorted positive integers with a^2 + b^2 + c^2 = 3abc (checked on construction).
class MarkovTriple {
public:
    /// Sorts its arguments; throws PreconditionViolation if they do not solve the equation.
    MarkovTriple(long a, long b, long c);

    long a() const noexcept { return a_; }
    long b() const noexcept { return b_; }
    long c() const noexcept { return c_; }

    friend auto operator<=>(const MarkovTriple&, const MarkovTriple&) = default;

    nlohmann::json to_json() const;

private:
    long a_, b_, c_;
};

bool is_markov(long a, long b, long c);

/// All Markov triples with largest entry <= bound, by mutation from (1,1,1).
/// Throws PreconditionViolation for bound < 1 and Overflow above 10^9.
std::vector<MarkovTriple> markov_generate(long bound);

bool is_fibonacci(long n);
/// Throws NotANormalizedTriple unless t.a() == 1.
bool markov_fibonacci_check(const MarkovTriple& t);

}  // namespace augvar
