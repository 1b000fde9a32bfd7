#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvar/lattice.hpp"
#include "augvar/laurent.hpp"

namespace augvar {

/// Convex hull of finitely many lattice points. Vertices are exactly the hull vertices,
/// sorted lexicographically.
class LatticePolytope {
public:
    /// Throws PreconditionViolation for an empty point set.
    static LatticePolytope hull(const std::vector<IntVector>& points);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    /// Dimension of the affine hull.
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
    bool is_simplex() const noexcept { return vertices_.size() == dim_ + 1; }
    bool has_vertex(const IntVector& v) const;

    LatticePolytope translated(const IntVector& t) const;
    /// Image under x -> M x.
    LatticePolytope transformed(const IntMatrix& m) const;

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) = default;

    nlohmann::json to_json() const;
    static LatticePolytope from_json(const nlohmann::json& j);

private:
    std::size_t ambient_dim_ = 0;
    std::size_t dim_ = 0;
    std::vector<IntVector> vertices_;
};

/// Inequality normal . x >= offset with a primitive normal, in ambient coordinates of a
/// full-dimensional polytope or in frame coordinates otherwise.
struct Facet {
    IntVector normal;
    long offset = 0;
};

/// Facets of P in the coordinates of its lattice frame (P is full-dimensional there).
struct HullStructure {
    LatticeFrame frame;
    std::vector<IntVector> coord_vertices;  // same order as P.vertices()
    std::vector<Facet> facets;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // vertex index pairs
};
HullStructure hull_structure(const LatticePolytope& p);

LatticePolytope newton_polytope(const LaurentPoly& f);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

struct InvariantRecord {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    bool full_dimensional = false;
    /// n! * euclidean volume in the ambient space; 0 unless full-dimensional.
    Integer normalized_volume = 0;
    /// Normalized volume with respect to the lattice of the affine hull.
    Integer relative_volume = 0;
    Integer lattice_points = 0;
    std::vector<long> edge_lengths;  // sorted
    std::size_t vertex_count = 0;

    friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
    nlohmann::json to_json() const;
};
InvariantRecord polytope_invariants(const LatticePolytope& p);

struct DistinctnessVerdict {
    bool distinct = false;
    std::string witness;  // invariant name when distinct
    std::string left_value;
    std::string right_value;
    nlohmann::json to_json() const;
};
/// Distinct only when some unimodular+translation invariant differs; never claims equivalence.
DistinctnessVerdict certify_distinct(const LatticePolytope& p, const LatticePolytope& q);

/// Integral Minkowski indecomposability of a lattice polygon, segment or point in Z^2.
bool indecomposable_2d(const LatticePolytope& p);
/// Same test for any polytope of affine dimension <= 2, in lattice-frame coordinates.
bool indecomposable_planar(const LatticePolytope& p);

/// Ambient functional r with r.(p - v) > 0 for every other vertex p. Throws NotAVertex.
IntVector vertex_functional(const LatticePolytope& p, const IntVector& v);

struct ClearedPolynomial {
    LaurentPoly polynomial;
    Exponent vertex;
    /// Unimodular matrix applied to the exponents after the shift (identity when unused).
    IntMatrix basis_change;
};

/// y^{-v} f for a vertex v of Newt(f). With fit_orthant, additionally applies a unimodular
/// change of basis (only when needed) making every exponent nonnegative.
ClearedPolynomial clear_to_vertex(const LaurentPoly& f, const Exponent& v, bool fit_orthant = false);

/// Unimodular M mapping every d in `directions` into the nonnegative orthant, given an
/// integer functional strictly positive on every nonzero direction.
IntMatrix orthant_fitting_matrix(const std::vector<IntVector>& directions, const IntVector& functional);

enum class Irreducibility { Irreducible, Inconclusive };

struct IrreducibilityCertificate {
    Irreducibility verdict = Irreducibility::Inconclusive;
    std::string method;  // "planar-indecomposable" | "simplex-suspension" | "none"
    std::string detail;
    LaurentPoly polynomial{std::vector<std::string>{}};
    std::string restricted_variable;
    std::vector<IrreducibilityCertificate> facet_certificate;  // at most one

    bool irreducible() const noexcept { return verdict == Irreducibility::Irreducible; }
    nlohmann::json to_json() const;
};

struct FacetRestriction {
    std::string variable;
    IrreducibilityCertificate certificate;
};

/// Certificate for f in its given basis. Irreducible when the Newton polytope has affine
/// dimension <= 2 and is integrally indecomposable, or when Newt(f) is a simplex, one of
/// `restrictions` certifies f|_{var=0} irreducible, that restriction is a facet, and the
/// opposite vertex lies at lattice height 1 over it. Never answers "reducible".
IrreducibilityCertificate irreducibility_certificate(const LaurentPoly& f,
                                                     const std::vector<FacetRestriction>& restrictions = {});

/// Searches facets itself, aligning each with a coordinate hyperplane and recursing.
IrreducibilityCertificate certify_irreducible(const LaurentPoly& f);

}  // namespace augvar
