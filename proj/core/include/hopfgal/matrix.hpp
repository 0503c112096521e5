#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfgal/scalar.hpp"

namespace hopfgal {

// Dense row-major matrix of exact scalars. A linear map is a (rows x cols)
// matrix acting on column vectors; vectors are (n x 1) matrices or flat
// std::vector<Scalar> depending on context.
class Matrix {
public:
  Matrix() : field_(Field::Q()) {}
  Matrix(size_t rows, size_t cols, const Field& f)
      : rows_(rows), cols_(cols), field_(f),
        data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(size_t n, const Field& f);
  static Matrix zero(size_t rows, size_t cols, const Field& f) {
    return Matrix(rows, cols, f);
  }
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          size_t cols, const Field& f);
  static Matrix row(const std::vector<Scalar>& v, const Field& f);
  static Matrix column(const std::vector<Scalar>& v, const Field& f);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  std::vector<Scalar> row_vec(size_t r) const;
  std::vector<Scalar> col_vec(size_t c) const;

  // Stack o below this (same cols).
  Matrix vstack(const Matrix& o) const;
  // Place o to the right of this (same rows).
  Matrix hstack(const Matrix& o) const;

private:
  size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

// Kronecker product with the project-wide convention
// index(i, j) = i * dim_b + j on both rows and columns: (a (x) b) realizes
// the tensor product of the linear maps a and b.
Matrix kron(const Matrix& a, const Matrix& b);

// The flip map V (x) W -> W (x) V as a permutation matrix in the kron basis.
Matrix tensor_swap(size_t dim_v, size_t dim_w, const Field& f);

struct RrefResult {
  Matrix rref;                  // canonical reduced row-echelon form of m
  size_t rank = 0;
  std::vector<size_t> pivots;   // pivot columns, strictly increasing
  Matrix kernel;                // rows form the canonical basis of ker(m)
  std::optional<Matrix> solution;  // present iff rhs given and consistent
};

// Gauss-Jordan to the canonical RREF; deterministic pivoting (leftmost
// nonzero column, topmost available row). If rhs is given, also solves
// m * x = rhs column-by-column; solution is the one with zeros at the
// free (non-pivot) coordinates.
RrefResult rref_solve(const Matrix& m,
                      const std::optional<Matrix>& rhs = std::nullopt);

size_t rank_of(const Matrix& m);

// Inverse of a square matrix; input_error when singular.
Matrix inverse(const Matrix& m);

std::vector<Scalar> zero_vector(size_t n, const Field& f);
std::vector<Scalar> unit_vector(size_t n, size_t i, const Field& f);

}  // namespace hopfgal
