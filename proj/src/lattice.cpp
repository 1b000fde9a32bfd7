#include "augvar/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "augvar/errors.hpp"

namespace augvar {

namespace {

using BigMatrix = std::vector<std::vector<Integer>>;

BigMatrix to_big(const IntMatrix& m)
{
    BigMatrix b(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long x : m[i])
            b[i].emplace_back(x);
    return b;
}

IntMatrix from_big(const BigMatrix& b)
{
    IntMatrix m(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (const auto& x : b[i])
            m[i].push_back(checked_long(x));
    return m;
}

// a*x + b*y = g >= 0
void xgcd(const Integer& x, const Integer& y, Integer& g, Integer& a, Integer& b)
{
    Integer r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    g = r0;
    a = s0;
    b = t0;
}

}  // namespace

long checked_long(const Integer& x)
{
    if (x > std::numeric_limits<long>::max() || x < std::numeric_limits<long>::min())
        fail(ErrorKind::Overflow, "integer " + x.str() + " exceeds 64 bits");
    return x.convert_to<long>();
}

long gcd_of(const IntVector& v)
{
    long g = 0;
    for (long x : v)
        g = std::gcd(g, x);
    return g;
}

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v)
{
    IntVector r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size())
            fail(ErrorKind::DimensionMismatch, "matrix/vector size mismatch");
        Integer acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            acc += Integer(m[i][j]) * v[j];
        r[i] = checked_long(acc);
    }
    return r;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMatrix r(a.size(), IntVector(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Integer acc = 0;
            for (std::size_t k = 0; k < inner; ++k)
                acc += Integer(a[i][k]) * b[k][j];
            r[i][j] = checked_long(acc);
        }
    return r;
}

IntVector vec_sub(const IntVector& a, const IntVector& b)
{
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

IntVector vec_add(const IntVector& a, const IntVector& b)
{
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

long dot(const IntVector& a, const IntVector& b)
{
    Integer acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += Integer(a[i]) * b[i];
    return checked_long(acc);
}

Integer determinant(const IntMatrix& m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    if (n == 0)
        return 1;
    BigMatrix a = to_big(m);
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool is_unimodular(const IntMatrix& m)
{
    const Integer d = determinant(m);
    return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    if (!is_unimodular(m))
        fail(ErrorKind::NotUnimodular, "matrix is not unimodular");
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c] == 0)
            ++p;
        std::swap(a[p], a[c]);
        const Rational inv = Rational(1) / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    IntMatrix r(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r[i][j] = checked_long(boost::multiprecision::numerator(a[i][n + j]));
    return r;
}

std::size_t rank_of(const IntMatrix& rows)
{
    if (rows.empty())
        return 0;
    return column_hermite_transform(rows, rows[0].size()).second;
}

std::pair<IntMatrix, std::size_t> column_hermite_transform(const IntMatrix& rows, std::size_t ncols)
{
    BigMatrix a = to_big(rows);
    BigMatrix u = to_big(identity_matrix(ncols));
    std::size_t col = 0;
    auto combine = [&](BigMatrix& mat, std::size_t c0, std::size_t c1, const Integer& p, const Integer& q,
                       const Integer& r, const Integer& s) {
        // [c0, c1] <- [p*c0 + q*c1, r*c0 + s*c1]
        for (auto& row : mat) {
            Integer x = row[c0], y = row[c1];
            row[c0] = p * x + q * y;
            row[c1] = r * x + s * y;
        }
    };
    for (std::size_t i = 0; i < a.size() && col < ncols; ++i) {
        for (std::size_t j = col + 1; j < ncols; ++j) {
            if (a[i][j] == 0)
                continue;
            Integer g, s, t;
            xgcd(a[i][col], a[i][j], g, s, t);
            const Integer x = a[i][col] / g, y = a[i][j] / g;
            combine(a, col, j, s, t, -y, x);
            combine(u, col, j, s, t, -y, x);
        }
        if (a[i][col] != 0)
            ++col;
    }
    return {from_big(u), col};
}

LatticeFrame::LatticeFrame(const std::vector<IntVector>& points)
{
    if (points.empty())
        fail(ErrorKind::PreconditionViolation, "lattice frame of an empty point set");
    origin_ = points.front();
    const std::size_t n = origin_.size();
    IntMatrix diffs;
    for (const auto& p : points) {
        if (p.size() != n)
            fail(ErrorKind::DimensionMismatch, "points of different lengths");
        diffs.push_back(vec_sub(p, origin_));
    }
    auto [u, rank] = column_hermite_transform(diffs, n);
    transform_ = std::move(u);
    dim_ = rank;
    const IntMatrix inv = unimodular_inverse(transform_);
    basis_.assign(inv.begin(), inv.begin() + static_cast<long>(dim_));
}

IntVector LatticeFrame::to_coords(const IntVector& x) const
{
    const IntVector d = vec_sub(x, origin_);
    IntVector c(dim_, 0);
    for (std::size_t j = 0; j < dim_; ++j) {
        Integer acc = 0;
        for (std::size_t i = 0; i < d.size(); ++i)
            acc += Integer(d[i]) * transform_[i][j];
        c[j] = checked_long(acc);
    }
    return c;
}

IntVector LatticeFrame::from_coords(const IntVector& c) const
{
    IntVector x = origin_;
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += c[j] * basis_[j][i];
    return x;
}

IntVector LatticeFrame::pull_back(const IntVector& coord_functional) const
{
    IntVector r(origin_.size(), 0);
    for (std::size_t i = 0; i < origin_.size(); ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < dim_; ++j)
            acc += Integer(transform_[i][j]) * coord_functional[j];
        r[i] = checked_long(acc);
    }
    return r;
}

IntMatrix complete_to_unimodular(const IntVector& w)
{
    if (std::abs(gcd_of(w)) != 1)
        fail(ErrorKind::PreconditionViolation, "vector is not primitive");
    auto [u, rank] = column_hermite_transform(IntMatrix{w}, w.size());
    IntMatrix inv = unimodular_inverse(u);
    // w U = (g, 0, ...) so w = g * inv[0] with g = +-1.
    if (inv[0] != w)
        for (auto& x : inv[0])
            x = -x;
    return inv;
}

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps, int bound)
{
    IntMatrix m = identity_matrix(n);
    if (n == 0)
        return m;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-bound, bound);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int s = 0; s < steps && n > 1; ++s) {
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (i == j)
            j = (j + 1) % n;
        const int c = coef(rng);
        for (std::size_t k = 0; k < n; ++k)
            m[i][k] += c * m[j][k];
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = m[perm[i]];
        if (coin(rng))
            for (auto& x : r[i])
                x = -x;
    }
    return r;
}

}  // namespace augvar
