#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvar/laurent.hpp"
#include "augvar/potential.hpp"
#include "augvar/series.hpp"

namespace augvar {

struct TransverseRoot {
    /// A rational root, or the class of t in Q[t]/(factor).
    Scalar kappa;
    /// Derivative of the one-variable restriction at kappa; nonzero (invertible).
    Scalar witness;
    UniPoly restriction;
    std::optional<UniPoly> factor;

    nlohmann::json to_json() const;
};

/// Simple root of W(0,...,0,y_k) (other variables zeroed, negative powers of y_k cleared).
/// Rational roots are preferred: simple ones first, then smallest |r|, then positive.
/// With `factor`, kappa is the class of t modulo that squarefree divisor instead.
/// Throws NoRootAvailable, DoubleRoot, NotAFactor, PreconditionViolation.
TransverseRoot find_transverse_root(const LaurentPoly& relation, std::size_t k,
                                    const std::optional<UniPoly>& factor = std::nullopt);

struct GenericRoot {
    LaurentPoly relation;  // the relation in the basis that worked
    IntMatrix basis_change;
    Exponent vertex;
    TransverseRoot root;
    int attempts = 0;
};

/// Retries find_transverse_root after seeded random unimodular changes of basis (each
/// followed by vertex clearing into the orthant) when the given basis is not transverse.
GenericRoot find_generic_transverse_root(const LaurentPoly& relation, std::size_t k, std::uint64_t seed,
                                         int max_attempts = 16);

/// Formal solution y_i = mu_i (i != k), y_k = kappa exp(s) of the relation.
struct AugmentationSeries {
    LaurentPoly relation{std::vector<std::string>{}};
    std::size_t k = 0;
    Scalar kappa;
    TruncatedSeries s{std::vector<std::string>{}, 0};
    /// s_0 = 0, s_1, ..., s_N; s_{d+1} - s_d has valuation > d.
    std::vector<TruncatedSeries> iterates;

    int order() const { return s.order(); }
    /// Series point (mu_1, ..., kappa exp(s), ...) in the relation's variable order.
    std::vector<TruncatedSeries> point() const;
    nlohmann::json to_json() const;
};

/// Series variable names: mu{i+1} for every relation variable i != k.
std::vector<std::string> series_variables(std::size_t nvars, std::size_t k);

/// Order-by-order iteration s_{d+1} = s_d - L^{-1} W(mu, kappa exp(s_d)) with
/// L = kappa dW/dy_k at (0,...,kappa). Throws DoubleRoot, NegativeExponentAtZero,
/// VerificationFailure if the final residual does not vanish.
AugmentationSeries solve_formal_augmentation(const LaurentPoly& relation, std::size_t k, const Scalar& kappa,
                                             int order = kDefaultOrder);

struct NilpotentAugmentation {
    /// kappa is kappa0 (1 + a) in Q[a]/(a^d).
    AugmentationSeries series;
    int multiplicity = 1;
    /// Image of the factor, the constant W_i(0,...,kappa0(1+a)); nilpotent of order d.
    Scalar image;
    bool nilpotent_order_exact = false;
    nlohmann::json to_json() const;
};

/// Augmentation into Q[a]/(a^d)[[mu]] of a relation W_i^d: solves
/// W_i(mu, kappa0 (1+a) exp(s)) = W_i(0,...,kappa0 (1+a)). Rational relations only.
NilpotentAugmentation solve_nilpotent_augmentation(const LaurentPoly& factor, int multiplicity, std::size_t k,
                                                   int order = kDefaultOrder);

/// Exact order of nilpotency: least e >= 1 with x^e = 0, or 0 when none up to `limit`.
int nilpotency_order(const Scalar& x, int limit);

bool point_on_variety(const LaurentPoly& relation, const std::vector<Scalar>& point);
/// True when the substituted series vanishes through its truncation order.
bool point_on_variety(const LaurentPoly& relation, const std::vector<TruncatedSeries>& point);

/// Values of a candidate augmentation of an l-component link of Clifford-type sheets.
/// Sheets and chords are 1-based; a[{j,k}] holds a_jk for j != k.
struct AugCandidate {
    int ell = 0;
    std::vector<std::vector<Scalar>> y;  // y[sheet-1][variable-1]
    std::map<std::pair<int, int>, Scalar> a;
    std::vector<SignVector> signs;       // per sheet, may be empty when relations are given
    std::vector<LaurentPoly> relations;  // per sheet, in variables y1..yn

    nlohmann::json to_json() const;
    /// Reads {"ell", "y", "a", "signs"}; signs is one list for every sheet or one per sheet.
    static AugCandidate from_json(const nlohmann::json& j);
};

struct DgaVerdict {
    bool pass = true;
    std::string violated;  // first failing relation
    std::vector<std::pair<std::string, Scalar>> values;
    nlohmann::json to_json() const;
};

/// Evaluates d(a_jj) = W_j(y_j) + sum_{k != j} a_jk a_kj, for l = 3 also
/// d(a13) = a12 a23, d(a21) = a23 a31, d(a32) = a31 a12, and the mixed relations
/// a_jk (y_{j,i} - y_{k,i}) = 0 on the abelianized sheets. Throws MissingAssignment,
/// PreconditionViolation for l outside {2, 3}.
DgaVerdict dga_relation_check(const AugCandidate& candidate);

struct PartitionComponent {
    std::vector<std::vector<int>> blocks;  // 1-based sheets
    std::vector<LaurentPoly> equations;    // in variables y{sheet}_{i}
    std::string label() const;
    nlohmann::json to_json() const;
};

/// Variables y{b}_{i} for sheets b = 1..l and i = 1..n.
std::vector<std::string> sheet_variables(int ell, std::size_t n);

/// One component per partition of {1..l} into blocks of size 1 or 2 whose pairs have equal
/// spin labels (empty labels: all equal). Throws DimensionMismatch on a label-count mismatch.
std::vector<PartitionComponent> enumerate_partition_components(int ell, const LaurentPoly& sheet_relation,
                                                               const std::vector<std::string>& spin_labels = {});

/// Rational candidate on the given component: singleton sheets on the sheet relation's
/// zero set, paired sheets equal and off it with a_ab = 1, a_ba = -W(y_a), distinct y
/// values across blocks, all other chords 0.
AugCandidate component_witness(const PartitionComponent& c, int ell, const LaurentPoly& sheet_relation);

struct ChordDegreeParams {
    int sheets = 3;
    Rational theta_over_pi{2, 9};
    Rational slope{3};
};

/// slope ((k - j) mod sheets) theta/pi - 1. Throws IndexOutOfRange, PreconditionViolation.
Rational reeb_chord_degree(const ChordDegreeParams& params, int j, int k);
/// Z/2 degree of a mixed chord.
inline int reeb_chord_degree_mod2(int /*j*/, int /*k*/) { return 1; }

}  // namespace augvar
