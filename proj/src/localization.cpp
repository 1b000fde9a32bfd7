#include "augvar/localization.hpp"

#include <functional>

#include "augvar/errors.hpp"

namespace augvar {

void FixedPointData::validate() const
{
    for (long w : numerator)
        if (w == 0)
            fail(ErrorKind::PreconditionViolation, "zero numerator weight");
    for (long w : denominator)
        if (w == 0)
            fail(ErrorKind::PreconditionViolation, "zero denominator weight");
    if (automorphisms < 1)
        fail(ErrorKind::PreconditionViolation, "automorphism order must be positive");
}

nlohmann::json FixedPointData::to_json() const
{
    return {{"numerator", numerator}, {"denominator", denominator}, {"automorphisms", automorphisms}};
}

Rational euler_contribution(const FixedPointData& p)
{
    p.validate();
    Integer num = 1, den = p.automorphisms;
    for (long w : p.numerator)
        num *= w;
    for (long w : p.denominator)
        den *= w;
    return Rational(num, den);
}

Rational euler_number(const std::vector<FixedPointData>& points)
{
    Rational total = 0;
    for (const auto& p : points)
        total += euler_contribution(p);
    return total;
}

FixedPointData disjoint_union(const FixedPointData& a, const FixedPointData& b)
{
    FixedPointData u = a;
    u.numerator.insert(u.numerator.end(), b.numerator.begin(), b.numerator.end());
    u.denominator.insert(u.denominator.end(), b.denominator.begin(), b.denominator.end());
    u.automorphisms = a.automorphisms * b.automorphisms;
    return u;
}

FixedPointData hl_cover_weights(int d)
{
    if (d < 1)
        fail(ErrorKind::PreconditionViolation, "cover degree must be at least 1");
    FixedPointData p;
    for (long j = 1; j < d; ++j)
        p.numerator.push_back(-j);
    for (long j = 2; j <= d; ++j)
        p.denominator.push_back(j);
    p.automorphisms = d;
    return p;
}

TruncatedSeries multicover_sum(int m, int order)
{
    if (m < 1 || order < 1)
        fail(ErrorKind::PreconditionViolation, "need m >= 1 and order >= 1");
    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i)
        vars.push_back("mu" + std::to_string(i));
    std::vector<Integer> fact(static_cast<std::size_t>(order) + 1, Integer(1));
    for (int i = 1; i <= order; ++i)
        fact[i] = fact[i - 1] * i;
    TruncatedSeries out(vars, order);
    SeriesExponent e(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> fill = [&](int i, int remaining) {
        if (i == m) {
            const int d = order - remaining;
            if (d == 0)
                return;
            Integer multinomial = fact[d];
            for (int x : e)
                multinomial /= fact[x];
            const Rational sign = d % 2 == 1 ? Rational(1) : Rational(-1);
            out.set(e, Scalar(sign * Rational(multinomial, Integer(d))));
            return;
        }
        for (int x = 0; x <= remaining; ++x) {
            e[i] = x;
            fill(i + 1, remaining - x);
        }
        e[i] = 0;
    };
    fill(0, order);
    return out;
}

TruncatedSeries multicover_series(int m, int order)
{
    TruncatedSeries sum = multicover_sum(m, order);
    TruncatedSeries u = TruncatedSeries::constant(sum.variables(), order, Scalar(1));
    for (std::size_t i = 0; i < sum.variables().size(); ++i)
        u += TruncatedSeries::variable(sum.variables(), order, i);
    if (!(sum == series_log(u)))
        fail(ErrorKind::VerificationFailure, "multinomial cover sum differs from log(1 + sum mu)");
    return sum;
}

}  // namespace augvar
