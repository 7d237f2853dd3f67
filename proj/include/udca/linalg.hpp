#pragma once

#include "udca/budget.hpp"
#include "udca/matrix.hpp"
#include "udca/numeric.hpp"

#include <cstddef>
#include <vector>

namespace udca {

/// Lexicographic k-subset iteration over {0, ..., n-1}: idx starts at
/// {0,...,k-1} and advances in place; false once exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n);
std::vector<std::size_t> first_combination(std::size_t k);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);
std::size_t rank_of_rows(const std::vector<RatVec>& rows);

/// Row-full rank and every maximal minor in {0, +1, -1}. Brute force over
/// all column subsets of size rows().
bool is_unimodular(const IntMatrix& m);

/// Every square minor of every order in {0, +1, -1}. Brute force; throws
/// SizeExceeded past the minor budget.
bool is_totally_unimodular(const IntMatrix& m, const Budget& budget = Budget::current());

/// Exact rational linear subspace in canonical form: the basis is the
/// reduced row echelon form of any generating set (unit pivots, cleared
/// pivot columns, rows ordered by pivot). Equal subspaces compare equal
/// as plain data.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<RatVec>& generators);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RatVec>& basis() const { return basis_; }

    bool contains(const RatVec& v) const;
    bool contains(const IntVec& v) const;
    bool contains_subspace(const Subspace& other) const;

    /// Integer matrix E (rows primitive, leading entry positive) with
    /// this = { x : E x = 0 }. Empty for the full space.
    std::vector<IntVec> complement_equations() const;

    friend Subspace sum(const Subspace& a, const Subspace& b);
    friend Subspace intersection(const Subspace& a, const Subspace& b);

    bool operator==(const Subspace& rhs) const = default;

private:
    std::size_t ambient_;
    std::vector<RatVec> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

Subspace span_of_columns(const IntMatrix& m, const std::vector<std::size_t>& selection);

bool subspace_membership(const Subspace& s, const RatVec& v);

/// All column indices j of m whose column lies in s.
std::vector<std::size_t> columns_inside_subspace(const IntMatrix& m, const Subspace& s);

/// Greedily extend `fixed` (independent columns inside `target`) by columns
/// from `candidates` in ascending index order until the selection spans
/// `target`. SpanFailure if the candidates cannot complete a basis.
std::vector<std::size_t> extend_basis(const IntMatrix& m,
                                      const std::vector<std::size_t>& fixed,
                                      const std::vector<std::size_t>& candidates,
                                      const Subspace& target);

/// Unique lambda with basis * lambda = d. SingularBasis if not invertible.
RatVec solve_in_basis(const IntMatrix& basis, const IntVec& d);

/// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(std::vector<RatVec>& rows);

/// Basis of { x in Q^n : rows · x = 0 }, one vector per free column.
std::vector<RatVec> rational_kernel_basis(std::size_t n, std::vector<RatVec> rows);

/// Basis of the lattice { x in Z^n : E x = 0 } for an integer matrix E with
/// n columns (rows of E given as vectors). Returned as columns of an n x d
/// matrix. Computed with unimodular row operations so the result generates
/// every integer solution over Z, not merely over Q.
IntMatrix kernel_lattice_basis(std::size_t n, const std::vector<IntVec>& equation_rows);

/// Particular rational solution of E x = rhs with free variables set to 0;
/// nullopt if inconsistent.
std::optional<RatVec> solve_linear_system(const std::vector<RatVec>& rows,
                                          const RatVec& rhs);

}  // namespace udca
