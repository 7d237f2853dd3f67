#include "udca/polytope.hpp"

#include "udca/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace udca {

namespace {

Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * Int(n - i) / Int(i + 1);
    return r;
}

template <class T>
T tgcd(T a, T b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        T t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

template <class T>
T vdot(const std::vector<T>& a, const std::vector<T>& b) {
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Division-free determinant for the tiny matrices of the facet scan:
// plain first-row Laplace expansion with explicit minors.
template <class T>
T tiny_det(const std::vector<std::vector<T>>& m) {
    const std::size_t k = m.size();
    if (k == 0) return T(1);
    if (k == 1) return m[0][0];
    if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    T det = 0;
    std::vector<std::vector<T>> sub(k - 1, std::vector<T>(k - 1));
    for (std::size_t p = 0; p < k; ++p) {
        if (m[0][p] == 0) continue;
        for (std::size_t r = 1; r < k; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < k; ++c) {
                if (c == p) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        const T term = m[0][p] * tiny_det(sub);
        if (p % 2 == 0) det += term; else det -= term;
    }
    return det;
}

// Vector orthogonal to d-1 rows in dimension d (Laplace cofactors).
template <class T>
void cross_normal(const std::vector<std::vector<T>>& rows, std::size_t d,
                  std::vector<T>& normal) {
    std::vector<std::vector<T>> sub(rows.size(), std::vector<T>(d - 1));
    for (std::size_t drop = 0; drop < d; ++drop) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::size_t cj = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == drop) continue;
                sub[i][cj++] = rows[i][j];
            }
        }
        T m = tiny_det(sub);
        normal[drop] = (drop % 2 == 0) ? m : T(-m);
    }
}

/// Drop every point lying strictly inside a segment between two other
/// points. Extreme points always survive, so the hull is unchanged.
template <class T>
std::vector<std::size_t> segment_interior_filter(const std::vector<std::vector<T>>& w) {
    const std::size_t m = w.size();
    const std::size_t d = w.empty() ? 0 : w[0].size();
    std::vector<std::size_t> keep;
    std::vector<T> diff(d);
    for (std::size_t p = 0; p < m; ++p) {
        std::set<std::vector<T>> dirs;
        bool interior = false;
        for (std::size_t q = 0; q < m && !interior; ++q) {
            if (q == p) continue;
            T g = 0;
            for (std::size_t j = 0; j < d; ++j) {
                diff[j] = w[q][j] - w[p][j];
                g = tgcd(g, diff[j]);
            }
            for (std::size_t j = 0; j < d; ++j) diff[j] /= g;
            std::vector<T> neg(d);
            for (std::size_t j = 0; j < d; ++j) neg[j] = -diff[j];
            if (dirs.count(neg)) interior = true;
            else dirs.insert(diff);
        }
        if (!interior) keep.push_back(p);
    }
    return keep;
}

template <class T>
struct ChartFacet {
    std::vector<T> normal;  // normal·w <= offset for all chart points
    T offset;
    std::vector<std::size_t> tight;  // indices into the scanned point list
};

template <class T>
std::vector<ChartFacet<T>> scan_facets(const std::vector<std::vector<T>>& w,
                                       std::size_t d, const Budget& budget) {
    std::set<std::pair<std::vector<T>, T>> found;
    const std::size_t m = w.size();
    if (d == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < m; ++i) {
            if (w[i][0] < w[lo][0]) lo = i;
            if (w[i][0] > w[hi][0]) hi = i;
        }
        found.insert({{T(1)}, w[hi][0]});
        found.insert({{T(-1)}, T(-w[lo][0])});
    } else {
        require(binomial(m, d) <= Int(budget.hull_subsets), ErrorKind::SizeExceeded,
                "hull candidate-subset budget exceeded");
        std::vector<std::size_t> idx(d);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::vector<std::vector<T>> rows(d - 1, std::vector<T>(d));
        std::vector<T> normal(d);
        do {
            for (std::size_t k = 1; k < d; ++k)
                for (std::size_t j = 0; j < d; ++j)
                    rows[k - 1][j] = w[idx[k]][j] - w[idx[0]][j];
            cross_normal(rows, d, normal);
            if (std::all_of(normal.begin(), normal.end(),
                            [](const T& x) { return x == 0; }))
                continue;
            T offset = vdot(normal, w[idx[0]]);
            bool above = false, below = false;
            for (std::size_t i = 0; i < m; ++i) {
                const T s = vdot(normal, w[i]) - offset;
                if (s > 0) above = true;
                if (s < 0) below = true;
                if (above && below) break;
            }
            if (above && below) continue;
            if (!above && !below)
                throw std::logic_error("hull: all points on one hyperplane");
            if (above) {
                for (T& x : normal) x = -x;
                offset = -offset;
            }
            T g = offset;
            for (const T& x : normal) g = tgcd(g, x);
            std::vector<T> key = normal;
            for (T& x : key) x /= g;
            found.insert({std::move(key), T(offset / g)});
        } while (next_combination(idx, m));
    }

    std::vector<ChartFacet<T>> facets;
    for (const auto& [normal, offset] : found) {
        ChartFacet<T> f{normal, offset, {}};
        for (std::size_t i = 0; i < m; ++i)
            if (vdot(f.normal, w[i]) == f.offset) f.tight.push_back(i);
        facets.push_back(std::move(f));
    }
    return facets;
}

Int to_Int(std::int64_t v) { return Int(v); }
Int to_Int(const Int& v) { return v; }

/// Joint scaling of (normal, offset) to integral with content 1,
/// preserving orientation.
std::pair<IntVec, Int> primitive_inequality(const RatVec& normal, const Rat& offset) {
    RatVec row = normal;
    row.push_back(offset);
    IntVec scaled = primitive_direction(row);
    Int b = scaled.back();
    scaled.pop_back();
    return {std::move(scaled), std::move(b)};
}

Equation make_equation(const IntVec& direction_normal, const RatVec& base_point) {
    auto [a, b] = primitive_inequality(to_rat(direction_normal),
                                       dot(direction_normal, base_point));
    return Equation{std::move(a), std::move(b)};
}

struct Chart {
    RatVec origin;              // v0
    IntMatrix lattice_basis;    // n x d, basis of (direction space ∩ Z^n)
    std::vector<RatVec> lift;   // d rows L with L * lattice_basis = I
};

Chart make_chart(std::size_t n, std::size_t d, const RatVec& v0,
                 const std::vector<IntVec>& direction_equations) {
    Chart chart;
    chart.origin = v0;
    chart.lattice_basis = kernel_lattice_basis(n, direction_equations);
    if (chart.lattice_basis.cols() != d)
        throw std::logic_error("chart: lattice basis rank mismatch");
    std::vector<RatVec> bt_rows;
    for (std::size_t j = 0; j < d; ++j)
        bt_rows.push_back(to_rat(chart.lattice_basis.column(j)));
    for (std::size_t j = 0; j < d; ++j) {
        RatVec rhs(d, Rat(0));
        rhs[j] = 1;
        auto y = solve_linear_system(bt_rows, rhs);
        if (!y) throw std::logic_error("chart: lattice basis not left-invertible");
        chart.lift.push_back(std::move(*y));
    }
    return chart;
}

RatVec chart_coords(const Chart& chart, const RatVec& x) {
    const std::size_t d = chart.lift.size();
    RatVec diff = sub(x, chart.origin);
    RatVec w(d);
    for (std::size_t j = 0; j < d; ++j) w[j] = dot(chart.lift[j], diff);
    if (chart.lattice_basis.apply(w) != diff)
        throw std::logic_error("chart: point outside affine hull");
    return w;
}

}  // namespace

bool Polytope::contains(const RatVec& x) const {
    require(x.size() == ambient_, ErrorKind::DimensionMismatch,
            "point dimension mismatch");
    for (const Equation& e : equations_)
        if (dot(e.normal, x) != Rat(e.offset)) return false;
    for (const FacetIneq& f : facets_)
        if (dot(f.normal, x) > Rat(f.offset)) return false;
    return true;
}

bool Polytope::contains(const IntVec& x) const {
    require(x.size() == ambient_, ErrorKind::DimensionMismatch,
            "point dimension mismatch");
    for (const Equation& e : equations_)
        if (dot(e.normal, x) != e.offset) return false;
    for (const FacetIneq& f : facets_)
        if (dot(f.normal, x) > f.offset) return false;
    return true;
}

namespace {

struct HullParts {
    std::vector<RatVec> vertices;
    std::vector<FacetIneq> facets;
};

template <class T>
HullParts assemble_hull(const std::vector<RatVec>& pts, std::size_t n, std::size_t d,
                        const Chart& chart, const Int& denom_scale,
                        const std::vector<std::vector<T>>& w_all,
                        const Budget& budget) {
    const std::vector<std::size_t> survivors = segment_interior_filter(w_all);
    std::vector<std::vector<T>> w;
    w.reserve(survivors.size());
    for (std::size_t s : survivors) w.push_back(w_all[s]);

    const std::vector<ChartFacet<T>> chart_facets = scan_facets(w, d, budget);

    // A survivor is a vertex iff its tight facet normals span the chart.
    std::vector<std::vector<RatVec>> tight_normals(w.size());
    for (const auto& f : chart_facets) {
        RatVec nr(d);
        for (std::size_t j = 0; j < d; ++j) nr[j] = Rat(to_Int(f.normal[j]));
        for (std::size_t i : f.tight) tight_normals[i].push_back(nr);
    }
    HullParts parts;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (rank_of_rows(tight_normals[i]) == d)
            parts.vertices.push_back(pts[survivors[i]]);
    std::sort(parts.vertices.begin(), parts.vertices.end(),
              [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });

    // Lift chart inequalities alpha·w <= beta through w = D*L*(x - v0).
    for (const auto& f : chart_facets) {
        RatVec g(n, Rat(0));
        for (std::size_t j = 0; j < d; ++j) {
            const Rat alpha(to_Int(f.normal[j]));
            if (alpha == 0) continue;
            for (std::size_t c = 0; c < n; ++c) g[c] += alpha * chart.lift[j][c];
        }
        RatVec lhs = scale(g, Rat(denom_scale));
        const Rat rhs = Rat(to_Int(f.offset)) + dot(lhs, chart.origin);
        auto [a, b] = primitive_inequality(lhs, rhs);
        FacetIneq fi{std::move(a), std::move(b), {}};
        for (std::size_t v = 0; v < parts.vertices.size(); ++v)
            if (dot(fi.normal, parts.vertices[v]) == Rat(fi.offset))
                fi.tight.push_back(v);
        if (fi.tight.empty())
            throw std::logic_error("hull: facet with no tight vertex");
        parts.facets.push_back(std::move(fi));
    }
    std::sort(parts.facets.begin(), parts.facets.end(),
              [](const FacetIneq& x, const FacetIneq& y) {
                  if (x.normal != y.normal)
                      return std::lexicographical_compare(x.normal.begin(), x.normal.end(),
                                                          y.normal.begin(), y.normal.end());
                  return x.offset < y.offset;
              });
    return parts;
}

}  // namespace

Polytope hull(const std::vector<RatVec>& points, const Budget& budget) {
    require(!points.empty(), ErrorKind::EmptyInput, "hull of no points");
    const std::size_t n = points[0].size();
    require(n >= 1, ErrorKind::DimensionMismatch, "ambient dimension must be >= 1");
    std::vector<RatVec> pts = points;
    for (const RatVec& p : pts)
        require(p.size() == n, ErrorKind::DimensionMismatch, "point dimension mismatch");
    std::sort(pts.begin(), pts.end(),
              [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const RatVec& v0 = pts[0];
    std::vector<RatVec> diffs;
    diffs.reserve(pts.size());
    for (const RatVec& p : pts) diffs.push_back(sub(p, v0));
    const Subspace direction = Subspace::span(n, diffs);
    const std::size_t d = direction.dim();

    const std::vector<IntVec> direction_eqs = direction.complement_equations();
    std::vector<Equation> equations;
    for (const IntVec& e : direction_eqs) equations.push_back(make_equation(e, v0));

    Polytope out;
    out.ambient_ = n;
    out.dim_ = d;
    if (d == 0) {
        out.vertices_ = {v0};
        out.equations_ = std::move(equations);
        return out;
    }

    const Chart chart = make_chart(n, d, v0, direction_eqs);
    std::vector<RatVec> w_rat;
    w_rat.reserve(pts.size());
    for (const RatVec& p : pts) w_rat.push_back(chart_coords(chart, p));
    Int denom_scale = 1;
    for (const RatVec& w : w_rat)
        for (const Rat& c : w) denom_scale = lcm(denom_scale, denominator(c));

    std::vector<IntVec> w_int(pts.size(), IntVec(d));
    Int maxabs = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            w_int[i][j] = numerator(w_rat[i][j]) * (denom_scale / denominator(w_rat[i][j]));
            if (abs(w_int[i][j]) > maxabs) maxabs = abs(w_int[i][j]);
        }

    // Entries this small keep every scan intermediate within int64.
    HullParts parts;
    if (d <= 5 && maxabs <= 2000) {
        std::vector<std::vector<std::int64_t>> w64(pts.size(), std::vector<std::int64_t>(d));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < d; ++j)
                w64[i][j] = static_cast<std::int64_t>(w_int[i][j]);
        parts = assemble_hull(pts, n, d, chart, denom_scale, w64, budget);
    } else {
        parts = assemble_hull(pts, n, d, chart, denom_scale, w_int, budget);
    }
    out.vertices_ = std::move(parts.vertices);
    out.facets_ = std::move(parts.facets);
    out.equations_ = std::move(equations);
    for (const RatVec& p : pts)
        if (!out.contains(p)) throw std::logic_error("hull: input point escapes hull");
    return out;
}

Polytope hull(const LatticeSet& s, const Budget& budget) {
    require(!s.empty(), ErrorKind::EmptyInput, "hull of empty lattice set");
    std::vector<RatVec> pts;
    pts.reserve(s.size());
    for (const IntVec& p : s.points()) pts.push_back(to_rat(p));
    return hull(pts, budget);
}

LatticeSet lattice_points(const Polytope& p, const Budget& budget) {
    const std::size_t n = p.ambient_dim();
    IntVec lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat mn = p.vertices()[0][i], mx = mn;
        for (const RatVec& v : p.vertices()) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        lo[i] = rat_ceil(mn);
        hi[i] = rat_floor(mx);
        if (lo[i] > hi[i]) return LatticeSet(n);
    }
    Int cells = 1;
    for (std::size_t i = 0; i < n; ++i) cells *= hi[i] - lo[i] + 1;
    require(cells <= Int(budget.lattice_box), ErrorKind::SizeExceeded,
            "lattice-point bounding-box budget exceeded");

    std::vector<IntVec> found;
    IntVec x = lo;
    while (true) {
        if (p.contains(x)) found.push_back(x);
        std::size_t i = n;
        while (i-- > 0) {
            if (x[i] < hi[i]) {
                ++x[i];
                for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
                break;
            }
            if (i == 0) return LatticeSet(n, std::move(found));
        }
    }
}

bool is_integer_polytope(const Polytope& p) {
    for (const RatVec& v : p.vertices())
        for (const Rat& c : v)
            if (denominator(c) != 1) return false;
    return true;
}

Face face_from_vertex_indices(const Polytope& p, std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    require(!idx.empty(), ErrorKind::EmptyInput, "face needs at least one vertex");
    std::vector<RatVec> diffs;
    for (std::size_t i : idx)
        diffs.push_back(sub(p.vertices()[i], p.vertices()[idx[0]]));
    Subspace lins = Subspace::span(p.ambient_dim(), diffs);
    const std::size_t fdim = lins.dim();
    return Face{std::move(idx), fdim, std::move(lins)};
}

std::vector<Face> faces(const Polytope& p, const Budget& budget) {
    std::vector<std::size_t> full(p.vertices().size());
    std::iota(full.begin(), full.end(), std::size_t{0});
    std::set<std::vector<std::size_t>> known;
    std::vector<std::vector<std::size_t>> work;
    auto push = [&](std::vector<std::size_t> s) {
        if (s.empty()) return;
        if (known.insert(s).second) {
            require(known.size() <= budget.faces, ErrorKind::SizeExceeded,
                    "face enumeration budget exceeded");
            work.push_back(std::move(s));
        }
    };
    push(full);
    for (const FacetIneq& f : p.facets()) push(f.tight);
    for (std::size_t i = 0; i < work.size(); ++i) {
        const std::vector<std::size_t> current = work[i];
        for (const FacetIneq& f : p.facets()) {
            std::vector<std::size_t> inter;
            std::set_intersection(current.begin(), current.end(), f.tight.begin(),
                                  f.tight.end(), std::back_inserter(inter));
            push(std::move(inter));
        }
    }
    std::vector<Face> out;
    out.reserve(known.size());
    for (const auto& s : known) out.push_back(face_from_vertex_indices(p, s));
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_indices < b.vertex_indices;
    });
    return out;
}

Face minimal_face_containing(const Polytope& p, const RatVec& x) {
    require(p.contains(x), ErrorKind::NotInPolytope,
            "point is not in the polytope");
    std::vector<std::size_t> idx(p.vertices().size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (const FacetIneq& f : p.facets()) {
        if (dot(f.normal, x) != Rat(f.offset)) continue;
        std::vector<std::size_t> inter;
        std::set_intersection(idx.begin(), idx.end(), f.tight.begin(), f.tight.end(),
                              std::back_inserter(inter));
        idx = std::move(inter);
    }
    if (idx.empty()) throw std::logic_error("minimal face without vertices");
    return face_from_vertex_indices(p, std::move(idx));
}

RatVec relative_interior_point(const Polytope& p, const Face& f) {
    require(!f.vertex_indices.empty(), ErrorKind::EmptyInput, "empty face");
    RatVec c(p.ambient_dim(), Rat(0));
    for (std::size_t i : f.vertex_indices) c = add(c, p.vertices()[i]);
    return scale(c, Rat(1, static_cast<long>(f.vertex_indices.size())));
}

Polytope minkowski_sum_polytopes(const Polytope& p1, const Polytope& p2,
                                 const Budget& budget) {
    require(p1.ambient_dim() == p2.ambient_dim(), ErrorKind::DimensionMismatch,
            "minkowski sum of polytopes in different dimensions");
    std::vector<RatVec> sums;
    sums.reserve(p1.vertices().size() * p2.vertices().size());
    for (const RatVec& a : p1.vertices())
        for (const RatVec& b : p2.vertices()) sums.push_back(add(a, b));
    return hull(sums, budget);
}

Polytope translate(const Polytope& p, const IntVec& t) {
    require(t.size() == p.ambient_dim(), ErrorKind::DimensionMismatch,
            "translation dimension mismatch");
    // Translation preserves lex order, incidence, and the whole
    // H-description shape, so shift the data instead of re-hulling.
    Polytope out = p;
    const RatVec tr = to_rat(t);
    for (RatVec& v : out.vertices_) v = add(v, tr);
    for (FacetIneq& f : out.facets_) f.offset += dot(f.normal, t);
    for (Equation& e : out.equations_) e.offset += dot(e.normal, t);
    return out;
}

StepInterval max_step(const Polytope& p, const RatVec& x, const RatVec& d) {
    require(d.size() == p.ambient_dim(), ErrorKind::DimensionMismatch,
            "direction dimension mismatch");
    require(!is_zero(d), ErrorKind::ZeroDirection, "zero direction");
    require(p.contains(x), ErrorKind::NotInPolytope, "base point outside polytope");
    StepInterval iv;
    auto clamp_hi = [&](const Rat& v) { if (!iv.hi || v < *iv.hi) iv.hi = v; };
    auto clamp_lo = [&](const Rat& v) { if (!iv.lo || v > *iv.lo) iv.lo = v; };
    for (const Equation& e : p.equations()) {
        if (dot(e.normal, d) != 0) {
            clamp_hi(Rat(0));
            clamp_lo(Rat(0));
        }
    }
    for (const FacetIneq& f : p.facets()) {
        const Rat s = dot(f.normal, d);
        if (s == 0) continue;
        const Rat slack = Rat(f.offset) - dot(f.normal, x);
        if (s > 0) clamp_hi(slack / s);
        else clamp_lo(slack / s);
    }
    return iv;
}

bool HalfspaceSystem::contains(const RatVec& x) const {
    for (const auto& [a, b] : eqs)
        if (dot(a, x) != Rat(b)) return false;
    for (const auto& [a, b] : ineqs)
        if (dot(a, x) > Rat(b)) return false;
    return true;
}

StepInterval max_step(const HalfspaceSystem& h, const RatVec& x, const RatVec& d) {
    require(!is_zero(d), ErrorKind::ZeroDirection, "zero direction");
    StepInterval iv;
    auto clamp_hi = [&](const Rat& v) { if (!iv.hi || v < *iv.hi) iv.hi = v; };
    auto clamp_lo = [&](const Rat& v) { if (!iv.lo || v > *iv.lo) iv.lo = v; };
    for (const auto& [a, b] : h.eqs) {
        if (dot(a, d) != 0) {
            clamp_hi(Rat(0));
            clamp_lo(Rat(0));
        }
    }
    for (const auto& [a, b] : h.ineqs) {
        const Rat s = dot(a, d);
        if (s == 0) continue;
        const Rat slack = Rat(b) - dot(a, x);
        if (s > 0) clamp_hi(slack / s);
        else clamp_lo(slack / s);
    }
    return iv;
}

RatVec purify_to_vertex(const HalfspaceSystem& h, RatVec x) {
    if (!h.contains(x)) throw std::logic_error("purify: infeasible start point");
    for (std::size_t round = 0; round <= h.n; ++round) {
        std::vector<RatVec> tight;
        for (const auto& [a, b] : h.eqs) tight.push_back(to_rat(a));
        for (const auto& [a, b] : h.ineqs)
            if (dot(a, x) == Rat(b)) tight.push_back(to_rat(a));
        const std::vector<RatVec> kernel = rational_kernel_basis(h.n, std::move(tight));
        if (kernel.empty()) return x;
        const RatVec dir = to_rat(primitive_direction(kernel.front()));
        const StepInterval iv = max_step(h, x, dir);
        Rat step;
        if (iv.hi && *iv.hi > 0) step = *iv.hi;
        else if (iv.lo && *iv.lo < 0) step = *iv.lo;
        else throw std::logic_error("purify: system is unbounded or degenerate");
        x = add(x, scale(dir, step));
    }
    throw std::logic_error("purify: failed to reach a vertex");
}

}  // namespace udca
