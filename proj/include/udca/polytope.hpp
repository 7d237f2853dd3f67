#pragma once

#include "udca/budget.hpp"
#include "udca/lattice_set.hpp"
#include "udca/linalg.hpp"
#include "udca/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace udca {

/// One facet inequality normal·x <= offset. The pair (normal, offset) is
/// integral with overall content 1; the orientation (outward) is fixed by
/// the geometry. For integer polytopes this makes the normal itself
/// primitive with an integer offset.
struct FacetIneq {
    IntVec normal;
    Int offset;
    std::vector<std::size_t> tight;  // vertex indices on the facet

    bool operator==(const FacetIneq& rhs) const = default;
};

/// Affine-hull equation normal·x = offset, same normalization as facets
/// plus a positive leading normal entry (equations are orientation-free).
struct Equation {
    IntVec normal;
    Int offset;

    bool operator==(const Equation& rhs) const = default;
};

/// Bounded rational polyhedron, V-representation primary, exact
/// H-representation derived at construction. Lower-dimensional polytopes
/// carry their affine hull as explicit equations. Unbounded polyhedra are
/// unsupported throughout: every lineality space here is {0}, so faces
/// always have vertices and the hull data is canonical.
class Polytope {
public:
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return dim_; }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    const std::vector<FacetIneq>& facets() const { return facets_; }
    const std::vector<Equation>& equations() const { return equations_; }

    bool contains(const RatVec& x) const;
    bool contains(const IntVec& x) const;

    bool operator==(const Polytope& rhs) const = default;

    friend Polytope hull(const std::vector<RatVec>& points, const Budget& budget);
    friend Polytope translate(const Polytope& p, const IntVec& t);

private:
    std::size_t ambient_ = 0;
    std::size_t dim_ = 0;
    std::vector<RatVec> vertices_;      // lex sorted, irredundant
    std::vector<FacetIneq> facets_;     // sorted by (normal, offset)
    std::vector<Equation> equations_;   // affine-hull description
};

/// A face identified by its vertex set within a parent polytope, with the
/// direction space of its affine hull.
struct Face {
    std::vector<std::size_t> vertex_indices;  // sorted
    std::size_t dim = 0;
    Subspace lins{0};

    bool operator==(const Face& rhs) const = default;
};

/// Exact convex hull by brute-force supporting-hyperplane enumeration over
/// point subsets (after an exact midpoint prefilter). Handles any affine
/// dimension; SizeExceeded when the subset count passes the budget.
Polytope hull(const std::vector<RatVec>& points,
              const Budget& budget = Budget::current());
Polytope hull(const LatticeSet& s, const Budget& budget = Budget::current());

/// All integer points, by bounding-box scan with exact membership tests.
LatticeSet lattice_points(const Polytope& p, const Budget& budget = Budget::current());

/// True iff every vertex is integral.
bool is_integer_polytope(const Polytope& p);

/// All nonempty faces (vertices up to the polytope itself), computed by
/// closing the facet incidence sets under intersection.
std::vector<Face> faces(const Polytope& p, const Budget& budget = Budget::current());

Face face_from_vertex_indices(const Polytope& p, std::vector<std::size_t> idx);

/// The unique face with x in its relative interior. NotInPolytope if x
/// lies outside.
Face minimal_face_containing(const Polytope& p, const RatVec& x);

/// Vertex centroid of the face, an exact relative-interior point.
RatVec relative_interior_point(const Polytope& p, const Face& f);

Polytope minkowski_sum_polytopes(const Polytope& p1, const Polytope& p2,
                                 const Budget& budget = Budget::current());

Polytope translate(const Polytope& p, const IntVec& t);

/// Closed interval of feasible steps { lambda : x + lambda * d in p }.
/// nullopt marks an unbounded end (never happens for a polytope with
/// d != 0 inside its affine hull; kept for the signature's sake).
struct StepInterval {
    std::optional<Rat> lo;
    std::optional<Rat> hi;
};

StepInterval max_step(const Polytope& p, const RatVec& x, const RatVec& d);

/// Plain inequality/equation system, used for working with intersections
/// like P1 ∩ (z - P2) without converting back to a vertex representation.
struct HalfspaceSystem {
    std::size_t n = 0;
    std::vector<std::pair<IntVec, Int>> ineqs;  // a·x <= b
    std::vector<std::pair<IntVec, Int>> eqs;    // a·x = b

    bool contains(const RatVec& x) const;
};

StepInterval max_step(const HalfspaceSystem& h, const RatVec& x, const RatVec& d);

/// Walk from a feasible point to a vertex of the (bounded) system by
/// repeatedly moving along a direction in the kernel of the tight rows
/// until it binds. At most n steps, all exact.
RatVec purify_to_vertex(const HalfspaceSystem& h, RatVec x);

}  // namespace udca
