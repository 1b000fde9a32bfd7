#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvar/ring.hpp"

namespace augvar {

inline constexpr int kDefaultOrder = 16;

using SeriesExponent = std::vector<int>;

/// Multivariate power series over one Ring, truncated at total degree `order`
/// (terms of degree > order are dropped by every operation).
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<std::string> variables, int order, RingPtr ring = Ring::rationals());

    static TruncatedSeries constant(std::vector<std::string> variables, int order, const Scalar& c);
    /// The series consisting of the single variable `index`.
    static TruncatedSeries variable(std::vector<std::string> variables, int order, std::size_t index,
                                    RingPtr ring = Ring::rationals());

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    int order() const noexcept { return order_; }
    const RingPtr& ring() const noexcept { return ring_; }
    const std::map<SeriesExponent, Scalar>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    Scalar coefficient(const SeriesExponent& e) const;
    Scalar constant_term() const;
    /// Lowest total degree with a nonzero coefficient; order()+1 for the zero series.
    int valuation() const;

    /// Sets a coefficient; terms above the truncation order are ignored.
    void set(const SeriesExponent& e, const Scalar& c);

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Scalar& c, const TruncatedSeries& s);
    friend TruncatedSeries operator*(const TruncatedSeries& s, const Scalar& c) { return c * s; }

    /// Multiplicative inverse; the constant term must be invertible in the ring.
    TruncatedSeries inverse() const;
    TruncatedSeries pow(long e) const;
    /// Same series with a different truncation order (lower: drop terms; higher: no new information).
    TruncatedSeries truncated(int order) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    void require_compatible(const TruncatedSeries& o, const char* where) const;

    std::vector<std::string> vars_;
    int order_;
    RingPtr ring_;
    std::map<SeriesExponent, Scalar> terms_;
};

int total_degree(const SeriesExponent& e);

/// sum_{j>=0} s^j / j!; requires a zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& s);
/// sum_{j>=1} (-1)^{j-1} (u-1)^j / j; requires constant term 1.
TruncatedSeries series_log(const TruncatedSeries& u);

}  // namespace augvar
