#pragma once

#include "udca/numeric.hpp"

#include <cstddef>
#include <vector>

namespace udca {

/// Finite subset of Z^n. Points are deduplicated and kept in lexicographic
/// order, so equal sets compare equal as plain data.
class LatticeSet {
public:
    explicit LatticeSet(std::size_t dim) : dim_(dim) {}
    LatticeSet(std::size_t dim, std::vector<IntVec> points);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<IntVec>& points() const { return points_; }

    bool contains(const IntVec& p) const;
    void insert(IntVec p);

    bool operator==(const LatticeSet& rhs) const = default;

private:
    std::size_t dim_;
    std::vector<IntVec> points_;  // sorted, unique
};

/// { x + y : x in s1, y in s2 }
LatticeSet minkowski_sum(const LatticeSet& s1, const LatticeSet& s2);

/// S = conv(S) ∩ Z^n. Needs the hull machinery; EmptySet on empty input.
bool no_hole_check(const LatticeSet& s);

/// S1+S2 = conv(S1+S2) ∩ Z^n.
bool sum_no_hole_check(const LatticeSet& s1, const LatticeSet& s2);

/// Exchange-axiom test: for every x, y in S and i with x_i > y_i, either
/// x - e_i and y + e_i are both in S, or some j with x_j < y_j makes
/// x - e_i + e_j and y + e_i - e_j both members. Exhaustive.
bool is_mnat_convex(const LatticeSet& s);

/// Discrete midpoint closure: ceil((x+y)/2) and floor((x+y)/2) in S for
/// every pair, with componentwise mathematical rounding.
bool is_lnat_convex(const LatticeSet& s);

struct Supports {
    std::vector<std::size_t> positive;  // indices i with z_i > 0
    std::vector<std::size_t> negative;  // indices i with z_i < 0
};

Supports supports(const IntVec& z);

}  // namespace udca
