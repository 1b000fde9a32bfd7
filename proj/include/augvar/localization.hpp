#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "augvar/rational.hpp"
#include "augvar/series.hpp"

namespace augvar {

/// Tangent weights at an isolated fixed point: numerator weights from the obstruction
/// side, denominator weights from the deformation side, and the automorphism order.
struct FixedPointData {
    std::vector<long> numerator;
    std::vector<long> denominator;
    long automorphisms = 1;

    /// Throws PreconditionViolation on a zero weight or automorphisms < 1.
    void validate() const;
    nlohmann::json to_json() const;
};

/// (prod numerator) / (prod denominator) / automorphisms.
Rational euler_contribution(const FixedPointData& p);
/// Sum of contributions over all fixed points.
Rational euler_number(const std::vector<FixedPointData>& points);

/// Concatenated weights with multiplied automorphism orders.
FixedPointData disjoint_union(const FixedPointData& a, const FixedPointData& b);

/// Weights of the d-fold cover: numerator -1..-(d-1), denominator 2..d, automorphisms d.
FixedPointData hl_cover_weights(int d);

/// sum over (d_1..d_m), 1 <= sum d_i = d <= order, of multinomial(d; d_i) (-1)^{d-1}/d prod mu_i^{d_i}.
TruncatedSeries multicover_sum(int m, int order);

/// multicover_sum(m, order) after checking it equals log(1 + mu_1 + ... + mu_m);
/// throws VerificationFailure otherwise.
TruncatedSeries multicover_series(int m, int order);

}  // namespace augvar
