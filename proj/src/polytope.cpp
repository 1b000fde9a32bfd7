#include "augvar/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <limits>
#include <tuple>

#include "augvar/errors.hpp"

namespace augvar {

namespace {

// Coordinates of a full-dimensional point set in Z^k: hull vertex indices and facets.
struct CoordHull {
    std::vector<std::size_t> vertices;  // indices into the input, ccw for k = 2
    std::vector<Facet> facets;
};

long cross2(const IntVector& o, const IntVector& a, const IntVector& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Facet make_facet(IntVector normal, const IntVector& on_facet)
{
    const long g = std::abs(gcd_of(normal));
    for (auto& x : normal)
        x /= g;
    Facet f{std::move(normal), 0};
    f.offset = dot(f.normal, on_facet);
    return f;
}

CoordHull hull_1d(const std::vector<IntVector>& pts)
{
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i][0] < pts[lo][0])
            lo = i;
        if (pts[i][0] > pts[hi][0])
            hi = i;
    }
    return {{lo, hi}, {make_facet({1}, pts[lo]), make_facet({-1}, pts[hi])}};
}

CoordHull hull_2d(const std::vector<IntVector>& pts)
{
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i : idx) {
        while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0)
            --k;
        h[k++] = i;
    }
    for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
        const std::size_t i = idx[t];
        while (k >= lower && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0)
            --k;
        h[k++] = i;
    }
    h.resize(k - 1);
    CoordHull out;
    out.vertices = h;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const IntVector& a = pts[h[i]];
        const IntVector& b = pts[h[(i + 1) % h.size()]];
        out.facets.push_back(make_facet({-(b[1] - a[1]), b[0] - a[0]}, a));
    }
    return out;
}

// Normal to the hyperplane through k affinely independent points in Z^k (zero if dependent).
IntVector hyperplane_normal(const std::vector<const IntVector*>& pts)
{
    const std::size_t k = pts.size();
    IntMatrix diffs;
    for (std::size_t i = 1; i < k; ++i)
        diffs.push_back(vec_sub(*pts[i], *pts[0]));
    IntVector n(k);
    for (std::size_t c = 0; c < k; ++c) {
        IntMatrix minor;
        for (const auto& row : diffs) {
            IntVector r;
            for (std::size_t j = 0; j < k; ++j)
                if (j != c)
                    r.push_back(row[j]);
            minor.push_back(std::move(r));
        }
        const Integer d = determinant(minor);
        n[c] = checked_long(c % 2 == 0 ? d : Integer(-d));
    }
    return n;
}

CoordHull hull_nd(const std::vector<IntVector>& input)
{
    std::vector<IntVector> pts = input;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t k = pts[0].size();
    const std::size_t m = pts.size();
    std::set<std::pair<IntVector, long>> seen;
    std::vector<Facet> facets;
    std::vector<std::size_t> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        std::vector<const IntVector*> chosen;
        for (std::size_t i : comb)
            chosen.push_back(&pts[i]);
        IntVector n = hyperplane_normal(chosen);
        if (gcd_of(n) != 0) {
            Facet f = make_facet(n, pts[comb[0]]);
            bool pos = false, neg = false;
            for (const auto& p : pts) {
                const long s = dot(f.normal, p) - f.offset;
                pos |= s > 0;
                neg |= s < 0;
                if (pos && neg)
                    break;
            }
            if (!(pos && neg)) {
                if (neg) {
                    for (auto& x : f.normal)
                        x = -x;
                    f.offset = -f.offset;
                }
                if (seen.emplace(f.normal, f.offset).second)
                    facets.push_back(f);
            }
        }
        // next combination
        std::size_t i = k;
        while (i > 0 && comb[i - 1] == m - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j)
            comb[j] = comb[j - 1] + 1;
    }
    CoordHull out;
    out.facets = facets;
    for (std::size_t i = 0; i < input.size(); ++i) {
        // skip duplicates of an earlier input point
        bool dup = false;
        for (std::size_t j = 0; j < i && !dup; ++j)
            dup = input[j] == input[i];
        if (dup)
            continue;
        IntMatrix normals;
        for (const auto& f : facets)
            if (dot(f.normal, input[i]) == f.offset)
                normals.push_back(f.normal);
        if (rank_of(normals) == k)
            out.vertices.push_back(i);
    }
    return out;
}

CoordHull coord_hull(const std::vector<IntVector>& pts, std::size_t k)
{
    if (k == 0)
        return {{0}, {}};
    if (k == 1)
        return hull_1d(pts);
    if (k == 2)
        return hull_2d(pts);
    return hull_nd(pts);
}

std::vector<IntVector> coords_of(const LatticeFrame& frame, const std::vector<IntVector>& pts)
{
    std::vector<IntVector> out;
    out.reserve(pts.size());
    for (const auto& p : pts)
        out.push_back(frame.to_coords(p));
    return out;
}

}  // namespace

LatticePolytope LatticePolytope::hull(const std::vector<IntVector>& points)
{
    if (points.empty())
        fail(ErrorKind::PreconditionViolation, "hull of an empty point set");
    const LatticeFrame frame(points);
    const auto coords = coords_of(frame, points);
    const CoordHull h = coord_hull(coords, frame.dim());
    LatticePolytope p;
    p.ambient_dim_ = frame.ambient_dim();
    p.dim_ = frame.dim();
    for (std::size_t i : h.vertices)
        p.vertices_.push_back(points[i]);
    std::sort(p.vertices_.begin(), p.vertices_.end());
    p.vertices_.erase(std::unique(p.vertices_.begin(), p.vertices_.end()), p.vertices_.end());
    return p;
}

bool LatticePolytope::has_vertex(const IntVector& v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

LatticePolytope LatticePolytope::translated(const IntVector& t) const
{
    std::vector<IntVector> pts;
    for (const auto& v : vertices_)
        pts.push_back(vec_add(v, t));
    return hull(pts);
}

LatticePolytope LatticePolytope::transformed(const IntMatrix& m) const
{
    std::vector<IntVector> pts;
    for (const auto& v : vertices_)
        pts.push_back(mat_vec(m, v));
    return hull(pts);
}

nlohmann::json LatticePolytope::to_json() const
{
    return {{"dim", ambient_dim_}, {"vertices", vertices_}};
}

LatticePolytope LatticePolytope::from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_integer())
        fail(ErrorKind::ParseError, "$.dim: expected an integer");
    if (!j.contains("vertices") || !j.at("vertices").is_array() || j.at("vertices").empty())
        fail(ErrorKind::ParseError, "$.vertices: expected a nonempty array");
    const auto n = j.at("dim").get<std::size_t>();
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < j.at("vertices").size(); ++i) {
        const auto& v = j.at("vertices")[i];
        const std::string path = "$.vertices[" + std::to_string(i) + "]";
        if (!v.is_array() || v.size() != n)
            fail(ErrorKind::ParseError, path + ": expected " + std::to_string(n) + " integers");
        IntVector p;
        for (const auto& x : v) {
            if (!x.is_number_integer())
                fail(ErrorKind::ParseError, path + ": expected integers");
            p.push_back(x.get<long>());
        }
        pts.push_back(std::move(p));
    }
    return hull(pts);
}

HullStructure hull_structure(const LatticePolytope& p)
{
    LatticeFrame frame(p.vertices());
    auto coords = coords_of(frame, p.vertices());
    const std::size_t k = frame.dim();
    CoordHull h = coord_hull(coords, k);
    HullStructure s{std::move(frame), coords, std::move(h.facets), {}};
    if (k == 1) {
        s.edges.emplace_back(0, 1);
    } else if (k == 2) {
        // map ccw order back to indices in p.vertices() (which are the coords order)
        for (std::size_t i = 0; i < h.vertices.size(); ++i) {
            std::size_t a = h.vertices[i], b = h.vertices[(i + 1) % h.vertices.size()];
            s.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(s.edges.begin(), s.edges.end());
    } else if (k >= 3) {
        for (std::size_t a = 0; a < coords.size(); ++a)
            for (std::size_t b = a + 1; b < coords.size(); ++b) {
                IntMatrix normals;
                for (const auto& f : s.facets)
                    if (dot(f.normal, coords[a]) == f.offset && dot(f.normal, coords[b]) == f.offset)
                        normals.push_back(f.normal);
                if (rank_of(normals) == k - 1)
                    s.edges.emplace_back(a, b);
            }
    }
    return s;
}

LatticePolytope newton_polytope(const LaurentPoly& f)
{
    if (f.is_zero())
        fail(ErrorKind::ZeroPolynomial, "Newton polytope of the zero polynomial");
    std::vector<IntVector> pts;
    for (const auto& [e, c] : f.terms())
        pts.push_back(e);
    return LatticePolytope::hull(pts);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q)
{
    if (p.ambient_dim() != q.ambient_dim())
        fail(ErrorKind::DimensionMismatch, "Minkowski sum of polytopes in different dimensions");
    std::vector<IntVector> pts;
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices())
            pts.push_back(vec_add(a, b));
    return LatticePolytope::hull(pts);
}

namespace {

Integer relative_volume(const LatticePolytope& p);

Integer relative_volume(const HullStructure& s, const LatticePolytope& p)
{
    const std::size_t k = s.frame.dim();
    if (k == 0)
        return 1;
    if (k == 1)
        return std::abs(s.coord_vertices[0][0] - s.coord_vertices[1][0]);
    if (k == 2) {
        // shoelace over the cycle of edges
        const CoordHull h = hull_2d(s.coord_vertices);
        Integer twice_area = 0;
        for (std::size_t i = 0; i < h.vertices.size(); ++i) {
            const auto& a = s.coord_vertices[h.vertices[i]];
            const auto& b = s.coord_vertices[h.vertices[(i + 1) % h.vertices.size()]];
            twice_area += Integer(a[0]) * b[1] - Integer(a[1]) * b[0];
        }
        return abs(twice_area);
    }
    const IntVector& apex = s.coord_vertices[0];
    Integer total = 0;
    for (const auto& f : s.facets) {
        const long height = dot(f.normal, apex) - f.offset;
        if (height == 0)
            continue;
        std::vector<IntVector> on;
        for (std::size_t i = 0; i < s.coord_vertices.size(); ++i)
            if (dot(f.normal, s.coord_vertices[i]) == f.offset)
                on.push_back(p.vertices()[i]);
        total += Integer(height) * relative_volume(LatticePolytope::hull(on));
    }
    return total;
}

Integer relative_volume(const LatticePolytope& p)
{
    return relative_volume(hull_structure(p), p);
}

Integer count_lattice_points(const HullStructure& s, const Integer& rel_volume, const std::vector<long>& edges)
{
    const std::size_t k = s.frame.dim();
    if (k == 0)
        return 1;
    if (k == 1)
        return rel_volume + 1;
    if (k == 2) {
        Integer boundary = 0;
        for (long l : edges)
            boundary += l;
        return (rel_volume + boundary) / 2 + 1;  // Pick
    }
    IntVector lo = s.coord_vertices[0], hi = lo;
    for (const auto& v : s.coord_vertices)
        for (std::size_t i = 0; i < k; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    Integer box = 1;
    for (std::size_t i = 0; i < k; ++i)
        box *= Integer(hi[i] - lo[i] + 1);
    if (box > 50'000'000)
        fail(ErrorKind::Overflow, "lattice point enumeration box too large (" + box.str() + " points)");
    Integer count = 0;
    IntVector x = lo;
    while (true) {
        bool inside = true;
        for (const auto& f : s.facets)
            if (dot(f.normal, x) < f.offset) {
                inside = false;
                break;
            }
        if (inside)
            ++count;
        std::size_t i = 0;
        while (i < k && x[i] == hi[i]) {
            x[i] = lo[i];
            ++i;
        }
        if (i == k)
            break;
        ++x[i];
    }
    return count;
}

}  // namespace

nlohmann::json InvariantRecord::to_json() const
{
    return {{"ambient_dim", ambient_dim},
            {"dim", dim},
            {"full_dimensional", full_dimensional},
            {"normalized_volume", normalized_volume.str()},
            {"relative_volume", relative_volume.str()},
            {"lattice_points", lattice_points.str()},
            {"edge_lengths", edge_lengths},
            {"vertex_count", vertex_count}};
}

InvariantRecord polytope_invariants(const LatticePolytope& p)
{
    const HullStructure s = hull_structure(p);
    InvariantRecord r;
    r.ambient_dim = p.ambient_dim();
    r.dim = p.dim();
    r.full_dimensional = p.dim() == p.ambient_dim();
    r.vertex_count = p.vertices().size();
    for (const auto& [a, b] : s.edges)
        r.edge_lengths.push_back(std::abs(gcd_of(vec_sub(p.vertices()[a], p.vertices()[b]))));
    std::sort(r.edge_lengths.begin(), r.edge_lengths.end());
    r.relative_volume = relative_volume(s, p);
    r.normalized_volume = r.full_dimensional ? r.relative_volume : Integer(0);
    r.lattice_points = count_lattice_points(s, r.relative_volume, r.edge_lengths);
    return r;
}

nlohmann::json DistinctnessVerdict::to_json() const
{
    if (!distinct)
        return {{"verdict", "Unknown"}};
    return {{"verdict", "Distinct"}, {"witness", witness}, {"left", left_value}, {"right", right_value}};
}

namespace {

std::string join_lengths(const std::vector<long>& v)
{
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << "}";
    return out.str();
}

}  // namespace

DistinctnessVerdict certify_distinct(const LatticePolytope& p, const LatticePolytope& q)
{
    if (p.ambient_dim() != q.ambient_dim())
        fail(ErrorKind::DimensionMismatch, "comparing polytopes in different dimensions");
    const InvariantRecord a = polytope_invariants(p);
    const InvariantRecord b = polytope_invariants(q);
    auto differ = [](const char* name, std::string x, std::string y) {
        return DistinctnessVerdict{true, name, std::move(x), std::move(y)};
    };
    if (a.dim != b.dim)
        return differ("dimension", std::to_string(a.dim), std::to_string(b.dim));
    if (a.vertex_count != b.vertex_count)
        return differ("vertex_count", std::to_string(a.vertex_count), std::to_string(b.vertex_count));
    if (a.relative_volume != b.relative_volume)
        return differ("normalized_volume", a.relative_volume.str(), b.relative_volume.str());
    if (a.lattice_points != b.lattice_points)
        return differ("lattice_points", a.lattice_points.str(), b.lattice_points.str());
    if (a.edge_lengths != b.edge_lengths)
        return differ("edge_lengths", join_lengths(a.edge_lengths), join_lengths(b.edge_lengths));
    return {};
}

bool indecomposable_planar(const LatticePolytope& p)
{
    if (p.dim() > 2)
        fail(ErrorKind::NotTwoDimensionalInput, "polytope has affine dimension " + std::to_string(p.dim()));
    if (p.dim() == 0)
        return true;
    const HullStructure s = hull_structure(p);
    if (p.dim() == 1)
        return std::abs(s.coord_vertices[0][0] - s.coord_vertices[1][0]) == 1;
    const CoordHull h = hull_2d(s.coord_vertices);
    // A summand picks 0..len copies of each primitive edge vector and must close up.
    using State = std::tuple<long, long, bool, bool>;  // partial sum, picked something, left something
    std::set<State> states{{0, 0, false, false}};
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        const auto& a = s.coord_vertices[h.vertices[i]];
        const auto& b = s.coord_vertices[h.vertices[(i + 1) % h.vertices.size()]];
        const IntVector e = vec_sub(b, a);
        const long len = std::abs(gcd_of(e));
        const long ux = e[0] / len, uy = e[1] / len;
        std::set<State> next;
        for (const auto& [x, y, picked, left] : states)
            for (long m = 0; m <= len; ++m)
                next.emplace(x + m * ux, y + m * uy, picked || m > 0, left || m < len);
        states = std::move(next);
    }
    return !states.contains(State{0, 0, true, true});
}

bool indecomposable_2d(const LatticePolytope& p)
{
    if (p.ambient_dim() != 2)
        fail(ErrorKind::NotTwoDimensionalInput, "ambient dimension is " + std::to_string(p.ambient_dim()));
    return indecomposable_planar(p);
}

IntVector vertex_functional(const LatticePolytope& p, const IntVector& v)
{
    if (!p.has_vertex(v))
        fail(ErrorKind::NotAVertex, "point is not a vertex of the polytope");
    const HullStructure s = hull_structure(p);
    const std::size_t k = s.frame.dim();
    if (k == 0)
        return IntVector(p.ambient_dim(), 0);
    const IntVector c = s.frame.to_coords(v);
    IntVector coord_functional(k, 0);
    for (const auto& f : s.facets)
        if (dot(f.normal, c) == f.offset)
            for (std::size_t i = 0; i < k; ++i)
                coord_functional[i] += f.normal[i];
    return s.frame.pull_back(coord_functional);
}

IntMatrix orthant_fitting_matrix(const std::vector<IntVector>& directions, const IntVector& functional)
{
    const std::size_t n = functional.size();
    IntVector r = functional;
    const long g = std::abs(gcd_of(r));
    if (g == 0) {
        for (const auto& d : directions)
            if (gcd_of(d) != 0)
                fail(ErrorKind::PreconditionViolation, "zero functional with nonzero directions");
        return identity_matrix(n);
    }
    for (auto& x : r)
        x /= g;
    IntMatrix basis = complete_to_unimodular(r);
    for (std::size_t i = 1; i < n; ++i) {
        long k = 0;
        for (const auto& d : directions) {
            const long rd = dot(r, d);
            if (rd <= 0) {
                if (gcd_of(d) != 0)
                    fail(ErrorKind::PreconditionViolation, "functional is not strictly positive");
                continue;
            }
            const long bd = dot(basis[i], d);
            if (bd < 0)
                k = std::max(k, (-bd + rd - 1) / rd);
        }
        for (std::size_t j = 0; j < n; ++j)
            basis[i][j] += k * r[j];
    }
    return basis;
}

ClearedPolynomial clear_to_vertex(const LaurentPoly& f, const Exponent& v, bool fit_orthant)
{
    const LatticePolytope p = newton_polytope(f);
    if (v.size() != f.nvars() || !p.has_vertex(v))
        fail(ErrorKind::NotAVertex, "exponent is not a vertex of the Newton polytope");
    Exponent shift = v;
    for (auto& x : shift)
        x = -x;
    ClearedPolynomial out{f.shifted(shift), v, identity_matrix(f.nvars())};
    if (!fit_orthant)
        return out;
    bool nonnegative = true;
    std::vector<IntVector> dirs;
    for (const auto& [e, c] : out.polynomial.terms()) {
        dirs.push_back(e);
        for (long x : e)
            nonnegative &= x >= 0;
    }
    if (nonnegative)
        return out;
    out.basis_change = orthant_fitting_matrix(dirs, vertex_functional(p, v));
    out.polynomial = substitute_monomial(out.polynomial, out.basis_change);
    return out;
}

nlohmann::json IrreducibilityCertificate::to_json() const
{
    nlohmann::json j{{"verdict", irreducible() ? "Irreducible" : "Inconclusive"},
                     {"method", method},
                     {"detail", detail},
                     {"polynomial", polynomial.to_json()}};
    if (!facet_certificate.empty()) {
        j["restricted_variable"] = restricted_variable;
        j["facet_certificate"] = facet_certificate.front().to_json();
    }
    return j;
}

namespace {

IrreducibilityCertificate inconclusive(const LaurentPoly& f, std::string detail)
{
    IrreducibilityCertificate c;
    c.method = "none";
    c.detail = std::move(detail);
    c.polynomial = f;
    return c;
}

IrreducibilityCertificate planar_certificate(const LaurentPoly& f, const LatticePolytope& p)
{
    if (p.dim() == 0)
        return inconclusive(f, "monomial (a unit of the Laurent ring)");
    if (!indecomposable_planar(p))
        return inconclusive(f, "Newton polytope is integrally decomposable");
    IrreducibilityCertificate c;
    c.verdict = Irreducibility::Irreducible;
    c.method = "planar-indecomposable";
    c.detail = "Newton polytope of dimension " + std::to_string(p.dim()) + " is integrally indecomposable";
    c.polynomial = f;
    return c;
}

// Checks that the zero set of `var` cuts a facet of the simplex p with apex at height 1.
bool is_height_one_facet(const LatticePolytope& p, std::size_t var, std::string& why)
{
    long min = std::numeric_limits<long>::max();
    for (const auto& v : p.vertices())
        min = std::min(min, v[var]);
    if (min != 0) {
        why = "exponents of the restricted variable do not start at 0";
        return false;
    }
    std::size_t on = 0;
    long apex_height = 0;
    for (const auto& v : p.vertices()) {
        if (v[var] == 0)
            ++on;
        else
            apex_height = v[var];
    }
    if (on != p.dim()) {
        why = "restriction is not a facet of the simplex";
        return false;
    }
    if (apex_height != 1) {
        why = "opposite vertex is at lattice height " + std::to_string(apex_height);
        return false;
    }
    return true;
}

IrreducibilityCertificate suspension_certificate(const LaurentPoly& f, const std::string& var,
                                                 IrreducibilityCertificate sub)
{
    IrreducibilityCertificate c;
    c.verdict = Irreducibility::Irreducible;
    c.method = "simplex-suspension";
    c.detail = "Newton simplex is a height-one suspension of the facet " + var + " = 0";
    c.polynomial = f;
    c.restricted_variable = var;
    c.facet_certificate.push_back(std::move(sub));
    return c;
}

// f re-expressed on the saturated lattice of its Newton polytope (variables z1..zk).
LaurentPoly to_frame_variables(const LaurentPoly& f, const LatticeFrame& frame)
{
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < frame.dim(); ++i)
        vars.push_back("z" + std::to_string(i + 1));
    LaurentPoly g(vars, f.ring());
    for (const auto& [e, c] : f.terms())
        g.add_term(frame.to_coords(e), c);
    return g;
}

}  // namespace

IrreducibilityCertificate irreducibility_certificate(const LaurentPoly& f,
                                                     const std::vector<FacetRestriction>& restrictions)
{
    const LatticePolytope p = newton_polytope(f);
    if (p.dim() <= 2)
        return planar_certificate(f, p);
    if (!p.is_simplex())
        fail(ErrorKind::PreconditionViolation, "Newton polytope is not a simplex");
    if (p.dim() != f.nvars())
        fail(ErrorKind::PreconditionViolation, "Newton simplex is not full-dimensional in the given variables");
    for (const auto& r : restrictions) {
        const std::size_t var = f.index_of(r.variable);
        std::string why;
        if (!is_height_one_facet(p, var, why))
            fail(ErrorKind::PreconditionViolation, r.variable + ": " + why);
        LaurentPoly h = restrict_to_zero(f, r.variable);
        if (!(h == r.certificate.polynomial))
            fail(ErrorKind::PreconditionViolation,
                 r.variable + ": sub-certificate is for " + r.certificate.polynomial.to_string() + ", not " +
                     h.to_string());
        if (r.certificate.irreducible())
            return suspension_certificate(f, r.variable, r.certificate);
    }
    return inconclusive(f, "no facet restriction certified irreducible");
}

IrreducibilityCertificate certify_irreducible(const LaurentPoly& f)
{
    const LatticePolytope p = newton_polytope(f);
    if (p.dim() <= 2)
        return planar_certificate(f, p);
    if (!p.is_simplex())
        return inconclusive(f, "Newton polytope of dimension " + std::to_string(p.dim()) + " is not a simplex");
    if (p.dim() < f.nvars()) {
        IrreducibilityCertificate c = certify_irreducible(to_frame_variables(f, LatticeFrame(p.vertices())));
        c.polynomial = f;
        return c;
    }
    // Full-dimensional simplex: align each facet with the last coordinate hyperplane.
    const HullStructure s = hull_structure(p);
    for (const auto& facet : s.facets) {
        const IntVector normal = s.frame.pull_back(facet.normal);
        std::size_t apex = 0;
        IntVector base;
        for (std::size_t i = 0; i < p.vertices().size(); ++i) {
            if (dot(facet.normal, s.coord_vertices[i]) == facet.offset)
                base = p.vertices()[i];
            else
                apex = i;
        }
        if (dot(facet.normal, s.coord_vertices[apex]) - facet.offset != 1)
            continue;
        IntMatrix m = complete_to_unimodular(normal);
        std::rotate(m.begin(), m.begin() + 1, m.end());
        Exponent shift = base;
        for (auto& x : shift)
            x = -x;
        const LaurentPoly g = substitute_monomial(f.shifted(shift), m);
        const std::string var = g.variables().back();
        IrreducibilityCertificate sub = certify_irreducible(restrict_to_zero(g, var));
        if (!sub.irreducible())
            continue;
        IrreducibilityCertificate c = suspension_certificate(g, var, std::move(sub));
        c.detail += " after a unimodular change of basis";
        c.polynomial = f;
        return c;
    }
    return inconclusive(f, "no height-one facet with an irreducible restriction");
}

}  // namespace augvar
