#include "udca/linalg.hpp"

#include "udca/errors.hpp"

#include <algorithm>
#include <numeric>

namespace udca {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] + 1 <= n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

namespace {

Int det_bareiss(IntMatrix m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = k; c < n; ++c) std::swap(m.at(k, c), m.at(swap_row, c));
            sign = -sign;
        }
        const Int pivot = m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * pivot - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

Int minor_det(const IntMatrix& m, const std::vector<std::size_t>& row_idx,
              const std::vector<std::size_t>& col_idx) {
    IntMatrix sub(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c)
            sub.at(r, c) = m.at(row_idx[r], col_idx[c]);
    return det_bareiss(std::move(sub));
}

bool unit_or_zero(const Int& d) { return d == 0 || d == 1 || d == -1; }

}  // namespace

Int determinant(const IntMatrix& m) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch,
            "determinant needs a square matrix");
    return det_bareiss(m);
}

std::vector<std::size_t> rref(std::vector<RatVec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t top = 0;
    for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
        std::size_t pr = top;
        while (pr < rows.size() && rows[pr][col] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[top], rows[pr]);
        const Rat inv = Rat(1) / rows[top][col];
        for (std::size_t c = col; c < ncols; ++c) rows[top][c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == top || rows[r][col] == 0) continue;
            const Rat f = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[top][c];
        }
        pivots.push_back(col);
        ++top;
    }
    rows.resize(top);
    return pivots;
}

std::size_t rank_of_rows(const std::vector<RatVec>& rows) {
    auto copy = rows;
    return rref(copy).size();
}

std::size_t rank(const IntMatrix& m) {
    std::vector<RatVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_rat(m.row(r)));
    return rank_of_rows(rows);
}

bool is_unimodular(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() < n) return false;
    if (rank(m) != n) return false;
    auto cols = first_combination(n);
    do {
        auto all_rows = first_combination(n);
        if (!unit_or_zero(minor_det(m, all_rows, cols))) return false;
    } while (next_combination(cols, m.cols()));
    return true;
}

bool is_totally_unimodular(const IntMatrix& m, const Budget& budget) {
    const std::size_t max_order = std::min(m.rows(), m.cols());
    std::uint64_t examined = 0;
    for (std::size_t k = 1; k <= max_order; ++k) {
        auto row_idx = first_combination(k);
        do {
            auto col_idx = first_combination(k);
            do {
                if (++examined > budget.minors)
                    raise(ErrorKind::SizeExceeded,
                          "total-unimodularity minor budget exceeded");
                if (!unit_or_zero(minor_det(m, row_idx, col_idx))) return false;
            } while (next_combination(col_idx, m.cols()));
        } while (next_combination(row_idx, m.rows()));
    }
    return true;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RatVec>& generators) {
    Subspace s(ambient_dim);
    std::vector<RatVec> rows;
    for (const RatVec& g : generators) {
        require(g.size() == ambient_dim, ErrorKind::DimensionMismatch,
                "generator dimension mismatch");
        if (!is_zero(g)) rows.push_back(g);
    }
    rref(rows);
    s.basis_ = std::move(rows);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        RatVec e(ambient_dim, Rat(0));
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return span(ambient_dim, rows);
}

bool Subspace::contains(const RatVec& v) const {
    require(v.size() == ambient_, ErrorKind::DimensionMismatch,
            "vector dimension mismatch");
    RatVec rem = v;
    for (const RatVec& row : basis_) {
        std::size_t p = 0;
        while (p < ambient_ && row[p] == 0) ++p;
        if (p == ambient_) continue;
        if (rem[p] == 0) continue;
        const Rat f = rem[p];  // pivot entry of row is 1
        for (std::size_t c = p; c < ambient_; ++c) rem[c] -= f * row[c];
    }
    return is_zero(rem);
}

bool Subspace::contains(const IntVec& v) const { return contains(to_rat(v)); }

bool Subspace::contains_subspace(const Subspace& other) const {
    for (const RatVec& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

std::vector<IntVec> Subspace::complement_equations() const {
    // RREF basis with pivot set P: for each free column f the relation
    // x_f = sum_i basis[i][f] * x_{P_i} must hold on the subspace.
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(ambient_, false);
    for (const RatVec& row : basis_) {
        std::size_t p = 0;
        while (p < ambient_ && row[p] == 0) ++p;
        pivots.push_back(p);
        is_pivot[p] = true;
    }
    std::vector<IntVec> equations;
    for (std::size_t f = 0; f < ambient_; ++f) {
        if (is_pivot[f]) continue;
        RatVec eq(ambient_, Rat(0));
        eq[f] = 1;
        for (std::size_t i = 0; i < basis_.size(); ++i) eq[pivots[i]] = -basis_[i][f];
        equations.push_back(primitive_signed(primitive_direction(eq)));
    }
    return equations;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require(a.ambient_ == b.ambient_, ErrorKind::DimensionMismatch,
            "subspace sum in different ambient spaces");
    std::vector<RatVec> gens = a.basis_;
    gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
    return Subspace::span(a.ambient_, gens);
}

std::vector<RatVec> rational_kernel_basis(std::size_t n, std::vector<RatVec> rows) {
    std::vector<std::size_t> pivots = rref(rows);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<RatVec> kernel;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec k(n, Rat(0));
        k[f] = 1;
        for (std::size_t i = 0; i < rows.size(); ++i) k[pivots[i]] = -rows[i][f];
        kernel.push_back(std::move(k));
    }
    return kernel;
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    require(a.ambient_ == b.ambient_, ErrorKind::DimensionMismatch,
            "subspace intersection in different ambient spaces");
    std::vector<RatVec> rows;
    for (const IntVec& eq : a.complement_equations()) rows.push_back(to_rat(eq));
    for (const IntVec& eq : b.complement_equations()) rows.push_back(to_rat(eq));
    return Subspace::span(a.ambient_, rational_kernel_basis(a.ambient_, std::move(rows)));
}

Subspace span_of_columns(const IntMatrix& m, const std::vector<std::size_t>& selection) {
    std::vector<RatVec> gens;
    for (std::size_t j : selection) {
        require(j < m.cols(), ErrorKind::DimensionMismatch, "column index out of range");
        gens.push_back(to_rat(m.column(j)));
    }
    return Subspace::span(m.rows(), gens);
}

bool subspace_membership(const Subspace& s, const RatVec& v) { return s.contains(v); }

std::vector<std::size_t> columns_inside_subspace(const IntMatrix& m, const Subspace& s) {
    require(m.rows() == s.ambient_dim(), ErrorKind::DimensionMismatch,
            "matrix rows must match subspace ambient dimension");
    std::vector<std::size_t> inside;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (s.contains(m.column(j))) inside.push_back(j);
    return inside;
}

std::vector<std::size_t> extend_basis(const IntMatrix& m,
                                      const std::vector<std::size_t>& fixed,
                                      const std::vector<std::size_t>& candidates,
                                      const Subspace& target) {
    std::vector<std::size_t> chosen = fixed;
    std::vector<RatVec> gens;
    for (std::size_t j : fixed) {
        require(target.contains(m.column(j)), ErrorKind::SpanFailure,
                "fixed column outside target subspace");
        gens.push_back(to_rat(m.column(j)));
    }
    require(rank_of_rows(gens) == gens.size(), ErrorKind::SpanFailure,
            "fixed columns are dependent");

    std::vector<std::size_t> order = candidates;
    std::sort(order.begin(), order.end());
    for (std::size_t j : order) {
        if (chosen.size() == target.dim()) break;
        if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
        const RatVec col = to_rat(m.column(j));
        if (!target.contains(col)) continue;
        gens.push_back(col);
        if (rank_of_rows(gens) == gens.size()) {
            chosen.push_back(j);
        } else {
            gens.pop_back();
        }
    }
    require(chosen.size() == target.dim(), ErrorKind::SpanFailure,
            "candidates do not span the target subspace");
    return chosen;
}

RatVec solve_in_basis(const IntMatrix& basis, const IntVec& d) {
    require(basis.rows() == basis.cols(), ErrorKind::DimensionMismatch,
            "basis matrix must be square");
    require(d.size() == basis.rows(), ErrorKind::DimensionMismatch,
            "right-hand side dimension mismatch");
    const std::size_t n = basis.rows();
    std::vector<RatVec> rows(n, RatVec(n + 1, Rat(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) rows[r][c] = Rat(basis.at(r, c));
        rows[r][n] = Rat(d[r]);
    }
    const std::vector<std::size_t> pivots = rref(rows);
    if (pivots.size() != n || pivots.back() == n)
        raise(ErrorKind::SingularBasis, "basis matrix is singular");
    RatVec lambda(n);
    for (std::size_t r = 0; r < n; ++r) lambda[pivots[r]] = rows[r][n];
    return lambda;
}

IntMatrix kernel_lattice_basis(std::size_t n, const std::vector<IntVec>& equation_rows) {
    const std::size_t r = equation_rows.size();
    // Rows of [E^T | I]: integer combinations are exactly pairs (E x, x).
    std::vector<IntVec> left(n, IntVec(r, Int(0)));
    std::vector<IntVec> right(n, IntVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            require(equation_rows[k].size() == n, ErrorKind::DimensionMismatch,
                    "equation row dimension mismatch");
            left[i][k] = equation_rows[k][i];
        }
        right[i][i] = 1;
    }

    std::size_t top = 0;
    for (std::size_t col = 0; col < r && top < n; ++col) {
        // Euclid on the column: reduce to a single nonzero entry at `top`.
        while (true) {
            std::size_t best = n;
            for (std::size_t i = top; i < n; ++i) {
                if (left[i][col] == 0) continue;
                if (best == n || abs(left[i][col]) < abs(left[best][col])) best = i;
            }
            if (best == n) break;  // column clear below top
            bool others = false;
            for (std::size_t i = top; i < n; ++i) {
                if (i == best || left[i][col] == 0) continue;
                others = true;
                const Int q = left[i][col] / left[best][col];  // truncated is fine
                if (q != 0) {
                    for (std::size_t k = col; k < r; ++k) left[i][k] -= q * left[best][k];
                    for (std::size_t k = 0; k < n; ++k) right[i][k] -= q * right[best][k];
                }
            }
            if (!others) {
                std::swap(left[best], left[top]);
                std::swap(right[best], right[top]);
                if (left[top][col] < 0) {
                    for (auto& v : left[top]) v = -v;
                    for (auto& v : right[top]) v = -v;
                }
                ++top;
                break;
            }
        }
    }

    std::vector<IntVec> kernel_cols;
    for (std::size_t i = top; i < n; ++i) kernel_cols.push_back(right[i]);
    if (kernel_cols.empty()) return IntMatrix(n, 0);
    return IntMatrix::from_columns(kernel_cols);
}

std::optional<RatVec> solve_linear_system(const std::vector<RatVec>& rows,
                                          const RatVec& rhs) {
    require(rows.size() == rhs.size(), ErrorKind::DimensionMismatch,
            "system shape mismatch");
    if (rows.empty()) return RatVec{};
    const std::size_t n = rows[0].size();
    std::vector<RatVec> aug(rows.size(), RatVec(n + 1, Rat(0)));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = 0; c < n; ++c) aug[i][c] = rows[i][c];
        aug[i][n] = rhs[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
    return x;
}

}  // namespace udca
