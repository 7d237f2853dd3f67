#include "udca/lattice_set.hpp"

#include "udca/errors.hpp"
#include "udca/polytope.hpp"

#include <algorithm>

namespace udca {

LatticeSet::LatticeSet(std::size_t dim, std::vector<IntVec> points) : dim_(dim) {
    for (const IntVec& p : points)
        require(p.size() == dim_, ErrorKind::DimensionMismatch,
                "point dimension mismatch");
    std::sort(points.begin(), points.end(),
              [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    points_ = std::move(points);
}

bool LatticeSet::contains(const IntVec& p) const {
    return std::binary_search(points_.begin(), points_.end(), p,
                              [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
}

void LatticeSet::insert(IntVec p) {
    require(p.size() == dim_, ErrorKind::DimensionMismatch, "point dimension mismatch");
    auto it = std::lower_bound(points_.begin(), points_.end(), p,
                               [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    if (it == points_.end() || *it != p) points_.insert(it, std::move(p));
}

LatticeSet minkowski_sum(const LatticeSet& s1, const LatticeSet& s2) {
    require(s1.dim() == s2.dim(), ErrorKind::DimensionMismatch,
            "minkowski sum of sets in different dimensions");
    std::vector<IntVec> pts;
    pts.reserve(s1.size() * s2.size());
    for (const IntVec& x : s1.points())
        for (const IntVec& y : s2.points()) pts.push_back(add(x, y));
    return LatticeSet(s1.dim(), std::move(pts));
}

bool no_hole_check(const LatticeSet& s) {
    require(!s.empty(), ErrorKind::EmptySet, "no-hole test on empty set");
    std::vector<RatVec> pts;
    pts.reserve(s.size());
    for (const IntVec& p : s.points()) pts.push_back(to_rat(p));
    return lattice_points(hull(pts)) == s;
}

bool sum_no_hole_check(const LatticeSet& s1, const LatticeSet& s2) {
    require(!s1.empty() && !s2.empty(), ErrorKind::EmptySet,
            "no-hole test on empty set");
    return no_hole_check(minkowski_sum(s1, s2));
}

bool is_mnat_convex(const LatticeSet& s) {
    require(!s.empty(), ErrorKind::EmptySet, "exchange axiom on empty set");
    for (const IntVec& x : s.points()) {
        for (const IntVec& y : s.points()) {
            const IntVec diff = sub(x, y);
            const Supports sup = supports(diff);
            for (std::size_t i : sup.positive) {
                IntVec x_down = x;
                x_down[i] -= 1;
                IntVec y_up = y;
                y_up[i] += 1;
                if (s.contains(x_down) && s.contains(y_up)) continue;
                bool exchanged = false;
                for (std::size_t j : sup.negative) {
                    IntVec xj = x_down;
                    xj[j] += 1;
                    IntVec yj = y_up;
                    yj[j] -= 1;
                    if (s.contains(xj) && s.contains(yj)) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged) return false;
            }
        }
    }
    return true;
}

bool is_lnat_convex(const LatticeSet& s) {
    require(!s.empty(), ErrorKind::EmptySet, "midpoint convexity on empty set");
    const auto& pts = s.points();
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            IntVec up(s.dim()), down(s.dim());
            for (std::size_t i = 0; i < s.dim(); ++i) {
                const Int sum = pts[a][i] + pts[b][i];
                up[i] = half_ceil(sum);
                down[i] = half_floor(sum);
            }
            if (!s.contains(up) || !s.contains(down)) return false;
        }
    }
    return true;
}

Supports supports(const IntVec& z) {
    Supports out;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] > 0) out.positive.push_back(i);
        if (z[i] < 0) out.negative.push_back(i);
    }
    return out;
}

}  // namespace udca
