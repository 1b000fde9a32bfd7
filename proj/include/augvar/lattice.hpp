#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "augvar/rational.hpp"

namespace augvar {

using IntVector = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

long gcd_of(const IntVector& v);
IntMatrix identity_matrix(std::size_t n);
IntVector mat_vec(const IntMatrix& m, const IntVector& v);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVector vec_sub(const IntVector& a, const IntVector& b);
IntVector vec_add(const IntVector& a, const IntVector& b);
long dot(const IntVector& a, const IntVector& b);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
/// Inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Rank over Q of a list of integer row vectors.
std::size_t rank_of(const IntMatrix& rows);

/// Coordinates on the saturated lattice L = span_Q(p - origin) ∩ Z^n of an affine point set.
/// to_coords is a bijection from the lattice points of the affine hull onto Z^k, so lattice
/// invariants (volumes, lattice lengths, point counts) can be computed in full dimension.
class LatticeFrame {
public:
    /// points must be nonempty and of equal length.
    explicit LatticeFrame(const std::vector<IntVector>& points);

    std::size_t ambient_dim() const noexcept { return origin_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    const IntVector& origin() const noexcept { return origin_; }

    IntVector to_coords(const IntVector& x) const;
    IntVector from_coords(const IntVector& c) const;
    /// Pulls a functional on frame coordinates back to an ambient functional r with
    /// r . (x - origin) = coord_functional . to_coords(x) for lattice points x of the hull.
    IntVector pull_back(const IntVector& coord_functional) const;

private:
    IntVector origin_;
    std::size_t dim_ = 0;
    IntMatrix transform_;  // U, n x n unimodular: (x - origin) U = (coords, 0...)
    IntMatrix basis_;      // first dim_ rows of U^{-1}
};

/// Column reduction D U = [H | 0] with U unimodular; returns U and the rank.
std::pair<IntMatrix, std::size_t> column_hermite_transform(const IntMatrix& rows, std::size_t ncols);

/// Unimodular matrix whose first row is the primitive vector w.
IntMatrix complete_to_unimodular(const IntVector& w);

/// Product of `steps` random elementary matrices with entries in [-bound, bound] plus a
/// random signed permutation; always unimodular.
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 4, int bound = 2);

long checked_long(const Integer& x);

}  // namespace augvar
