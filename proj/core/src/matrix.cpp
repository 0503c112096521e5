#include "hopfgal/matrix.hpp"

namespace hopfgal {

Matrix Matrix::identity(size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         size_t cols, const Field& f) {
  Matrix m(rows.size(), cols, f);
  for (size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "ragged row in matrix construction");
    for (size_t c = 0; c < cols; ++c) {
      require(rows[r][c].field() == f, "matrix entry from different field");
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::row(const std::vector<Scalar>& v, const Field& f) {
  return from_rows({v}, v.size(), f);
}

Matrix Matrix::column(const std::vector<Scalar>& v, const Field& f) {
  Matrix m(v.size(), 1, f);
  for (size_t i = 0; i < v.size(); ++i) {
    require(v[i].field() == f, "matrix entry from different field");
    m.at(i, 0) = v[i];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(field_ == o.field_, "matrix product across different fields");
  require(cols_ == o.rows_, "matrix product shape mismatch");
  Matrix out(rows_, o.cols_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_,
          "matrix sum shape/field mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_,
          "matrix difference shape/field mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
    return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  require(v.size() == cols_, "matrix apply shape mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<Scalar> Matrix::row_vec(size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

std::vector<Scalar> Matrix::col_vec(size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) out.push_back(at(i, c));
  return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  require(cols_ == o.cols_ && field_ == o.field_, "vstack shape mismatch");
  Matrix out(rows_ + o.rows_, cols_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (size_t i = 0; i < o.rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = o.at(i, j);
  return out;
}

Matrix Matrix::hstack(const Matrix& o) const {
  require(rows_ == o.rows_ && field_ == o.field_, "hstack shape mismatch");
  Matrix out(rows_, cols_ + o.cols_, field_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (size_t j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field(), "kron across different fields");
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b.at(k, l);
          if (!bkl.is_zero())
            out.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return out;
}

Matrix tensor_swap(size_t dim_v, size_t dim_w, const Field& f) {
  Matrix out(dim_v * dim_w, dim_v * dim_w, f);
  for (size_t i = 0; i < dim_v; ++i)
    for (size_t j = 0; j < dim_w; ++j)
      out.at(j * dim_v + i, i * dim_w + j) = Scalar::one(f);
  return out;
}

RrefResult rref_solve(const Matrix& m, const std::optional<Matrix>& rhs) {
  require(m.rows() > 0 && m.cols() > 0, "rref of an empty matrix");
  if (rhs) {
    require(rhs->rows() == m.rows(), "rhs row count mismatch");
    require(rhs->field() == m.field(), "rhs field mismatch");
  }
  const Field f = m.field();
  const size_t n = m.rows(), d = m.cols();
  const size_t aug = rhs ? rhs->cols() : 0;

  Matrix work = rhs ? m.hstack(*rhs) : m;

  RrefResult res;
  size_t row = 0;
  for (size_t col = 0; col < d && row < n; ++col) {
    size_t pr = n;  // topmost available row with a nonzero in this column
    for (size_t r = row; r < n; ++r)
      if (!work.at(r, col).is_zero()) { pr = r; break; }
    if (pr == n) continue;
    if (pr != row)
      for (size_t j = 0; j < d + aug; ++j)
        std::swap(work.at(pr, j), work.at(row, j));
    Scalar piv_inv = work.at(row, col).inv();
    for (size_t j = col; j < d + aug; ++j) work.at(row, j) *= piv_inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == row) continue;
      Scalar c = work.at(r, col);
      if (c.is_zero()) continue;
      for (size_t j = col; j < d + aug; ++j)
        work.at(r, j) -= c * work.at(row, j);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = res.pivots.size();

  res.rref = Matrix(n, d, f);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < d; ++c) res.rref.at(r, c) = work.at(r, c);

  // kernel basis: one row per free column, canonical form (value 1 at the
  // free column, back-filled pivot entries); rows listed by free column.
  std::vector<bool> is_pivot(d, false);
  for (size_t c : res.pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> ker_rows;
  for (size_t c = 0; c < d; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(d, Scalar::zero(f));
    v[c] = Scalar::one(f);
    for (size_t pi = 0; pi < res.pivots.size(); ++pi)
      v[res.pivots[pi]] = -res.rref.at(pi, c);
    ker_rows.push_back(std::move(v));
  }
  res.kernel = ker_rows.empty() ? Matrix(0, d, f)
                                : Matrix::from_rows(ker_rows, d, f);

  if (rhs) {
    bool consistent = true;
    for (size_t r = res.rank; r < n && consistent; ++r)
      for (size_t j = 0; j < aug; ++j)
        if (!work.at(r, d + j).is_zero()) { consistent = false; break; }
    if (consistent) {
      Matrix sol(d, aug, f);
      for (size_t pi = 0; pi < res.pivots.size(); ++pi)
        for (size_t j = 0; j < aug; ++j)
          sol.at(res.pivots[pi], j) = work.at(pi, d + j);
      res.solution = std::move(sol);
    }
  }
  return res;
}

size_t rank_of(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref_solve(m).rank;
}

Matrix inverse(const Matrix& m) {
  require(m.rows() == m.cols(), "inverse of a non-square matrix");
  auto r = rref_solve(m, Matrix::identity(m.rows(), m.field()));
  require(r.rank == m.rows() && r.solution, "inverse of a singular matrix");
  return *r.solution;
}

std::vector<Scalar> zero_vector(size_t n, const Field& f) {
  return std::vector<Scalar>(n, Scalar::zero(f));
}

std::vector<Scalar> unit_vector(size_t n, size_t i, const Field& f) {
  auto v = zero_vector(n, f);
  v[i] = Scalar::one(f);
  return v;
}

}  // namespace hopfgal
