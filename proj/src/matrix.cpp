#include "udca/matrix.hpp"

#include "udca/errors.hpp"

namespace udca {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    require(!rows.empty(), ErrorKind::EmptyInput, "matrix needs at least one row");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == m.cols_, ErrorKind::DimensionMismatch,
                "ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<IntVec> rv;
    for (const auto& row : rows) {
        IntVec r;
        for (int x : row) r.emplace_back(x);
        rv.push_back(std::move(r));
    }
    return from_rows(rv);
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
    require(!cols.empty(), ErrorKind::EmptyInput, "matrix needs at least one column");
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        require(cols[c].size() == m.rows_, ErrorKind::DimensionMismatch,
                "ragged matrix columns");
        for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntVec IntMatrix::column(std::size_t c) const {
    IntVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

IntVec IntMatrix::row(std::size_t r) const {
    IntVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

IntMatrix IntMatrix::columns_subset(const std::vector<std::size_t>& idx) const {
    IntMatrix m(rows_, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
        require(idx[c] < cols_, ErrorKind::DimensionMismatch, "column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) m.at(r, c) = at(r, idx[c]);
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    require(cols_ == rhs.rows_, ErrorKind::DimensionMismatch, "matrix product shape");
    IntMatrix m(rows_, rhs.cols_);
    for (std::size_t c = 0; c < rhs.cols_; ++c)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& f = rhs.at(k, c);
            if (f == 0) continue;
            for (std::size_t r = 0; r < rows_; ++r) m.at(r, c) += at(r, k) * f;
        }
    return m;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    require(v.size() == cols_, ErrorKind::DimensionMismatch, "matrix-vector shape");
    IntVec out(rows_, Int(0));
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) out[r] += at(r, c) * v[c];
    }
    return out;
}

RatVec IntMatrix::apply(const RatVec& v) const {
    require(v.size() == cols_, ErrorKind::DimensionMismatch, "matrix-vector shape");
    RatVec out(rows_, Rat(0));
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c] == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) out[r] += Rat(at(r, c)) * v[c];
    }
    return out;
}

}  // namespace udca
