#pragma once

#include "udca/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace udca {

/// Dense exact integer matrix, column-major. Columns are the natural unit
/// here (unimodular systems are column configurations).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    /// Row-major construction, matching the JSON schema and the way
    /// matrices are written in source.
    static IntMatrix from_rows(const std::vector<IntVec>& rows);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static IntMatrix from_columns(const std::vector<IntVec>& cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }
    Int& at(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }

    IntVec column(std::size_t c) const;
    IntVec row(std::size_t r) const;

    IntMatrix columns_subset(const std::vector<std::size_t>& idx) const;
    IntMatrix transposed() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVec apply(const IntVec& v) const;    // this * v
    RatVec apply(const RatVec& v) const;

    bool operator==(const IntMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;  // column-major
};

}  // namespace udca
