#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace posetcoh {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector column(std::size_t j) const;
    IntVector row(std::size_t i) const;

    bool is_zero() const;
    IntMatrix transposed() const;

    /// Columns [first, first + count).
    IntMatrix column_range(std::size_t first, std::size_t count) const;
    IntMatrix row_range(std::size_t first, std::size_t count) const;
    /// Same matrix without its all-zero columns.
    IntMatrix without_zero_columns() const;

    /// Copies `block` into this matrix with its top-left corner at (row, col).
    void set_block(std::size_t row, std::size_t col, const IntMatrix& block);

    IntVector apply(const IntVector& x) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    IntMatrix operator-() const;
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// [a | b]; row counts must agree.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [a ; b]; column counts must agree.
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal sum.
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// Exact determinant by fraction-free elimination (Bareiss). Square input only.
Integer determinant(const IntMatrix& m);

}  // namespace posetcoh
