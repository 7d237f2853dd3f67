#pragma once

#include "udca/budget.hpp"
#include "udca/lattice_set.hpp"
#include "udca/linalg.hpp"
#include "udca/matrix.hpp"
#include "udca/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace udca {

/// Column configuration of a unimodular matrix. The checked constructor
/// rejects non-unimodular matrices; `unchecked` exists so negative
/// controls can push a bad system through downstream algorithms and watch
/// them fail at the integrality step.
class UnimodularSystem {
public:
    static UnimodularSystem checked(IntMatrix m, std::string name = "");
    static UnimodularSystem unchecked(IntMatrix m, std::string name = "");

    const IntMatrix& matrix() const { return matrix_; }
    const std::string& name() const { return name_; }
    std::size_t dim() const { return matrix_.rows(); }

    /// Duplicate or negated column pairs. Permitted (they never change the
    /// class) but worth a diagnostic.
    std::vector<std::pair<std::size_t, std::size_t>> redundant_column_pairs() const;

private:
    UnimodularSystem(IntMatrix m, std::string name)
        : matrix_(std::move(m)), name_(std::move(name)) {}
    IntMatrix matrix_;
    std::string name_;
};

/// Unit vectors e_i followed by the differences e_i - e_j (i < j), the
/// n x n(n+1)/2 system whose class is the M-natural-convex polytopes.
UnimodularSystem system_mnat(std::size_t n);

/// The fixed 4 x 9 system not reachable from system_mnat(4) by any
/// unimodular transform.
UnimodularSystem system_b4();

/// Left-multiply by a square matrix with determinant +-1.
/// NotUnimodularTransform otherwise. diag(1,..,1,-1,..,-1) applied to
/// system_mnat yields the twisted variant.
UnimodularSystem transform(const UnimodularSystem& sys, const IntMatrix& t);

struct ClassWitness {
    enum class Kind { FractionalVertex, FaceSpanNotGenerated };
    Kind kind;
    RatVec vertex;                            // FractionalVertex
    std::vector<std::size_t> face_vertices;   // FaceSpanNotGenerated
    Subspace face_span{0};
};

struct ClassCheckResult {
    bool member = false;
    std::optional<ClassWitness> witness;
    explicit operator bool() const { return member; }
};

/// p is in the class of sys iff p is an integer polytope and, for every
/// face, the columns of the system lying inside the face's direction
/// space span it.
ClassCheckResult in_class(const UnimodularSystem& sys, const Polytope& p,
                          const Budget& budget = Budget::current());

/// Every edge direction parallel to some e_i or e_i - e_j. Equivalent to
/// in_class(system_mnat(n), p) for integer polytopes.
bool edge_directions_check_mnat(const Polytope& p,
                                const Budget& budget = Budget::current());

/// Minkowski sum of the segments [0, k_j * a^j] over the selected columns.
/// Members of the class of sys by construction.
Polytope zonotope(const UnimodularSystem& sys, const std::vector<std::size_t>& selection,
                  const std::vector<Int>& multiplicities,
                  const Budget& budget = Budget::current());

/// Set function on subsets of {0,...,n-1}; values indexed by bitmask.
struct SetFunction {
    std::size_t n = 0;
    std::vector<Int> values;  // size 1 << n

    const Int& at(unsigned mask) const { return values.at(mask); }
};

/// Integer points of the polyhedron mu(X) <= x(X) <= rho(X). Validates
/// rho submodular, mu supermodular, the pair paramodular, and the
/// normalizations rho(empty) = mu(empty) = 0, all exhaustively (n <= 6).
LatticeSet gpolymatroid_points(const SetFunction& rho, const SetFunction& mu);

}  // namespace udca
