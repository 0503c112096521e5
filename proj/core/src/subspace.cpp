#include "hopfgal/subspace.hpp"

namespace hopfgal {

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols(), rows.field());
  if (rows.rows() == 0) return s;
  auto r = rref_solve(rows);
  if (r.rank == 0) return s;
  Matrix b(r.rank, rows.cols(), rows.field());
  for (size_t i = 0; i < r.rank; ++i)
    for (size_t j = 0; j < rows.cols(); ++j) b.at(i, j) = r.rref.at(i, j);
  s.basis_ = std::move(b);
  return s;
}

Subspace Subspace::span(const std::vector<std::vector<Scalar>>& rows,
                        size_t ambient, const Field& f) {
  if (rows.empty()) return Subspace(ambient, f);
  return span(Matrix::from_rows(rows, ambient, f));
}

Subspace Subspace::full(size_t ambient, const Field& f) {
  return span(Matrix::identity(ambient, f));
}

std::vector<size_t> Subspace::pivots() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < basis_.rows(); ++i)
    for (size_t j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) { out.push_back(j); break; }
  return out;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  require(v.size() == ambient_, "vector/subspace ambient mismatch");
  // reduce v against the RREF basis
  std::vector<Scalar> w = v;
  auto piv = pivots();
  for (size_t i = 0; i < piv.size(); ++i) {
    const Scalar& c = w[piv[i]];
    if (c.is_zero()) continue;
    Scalar cc = c;
    for (size_t j = 0; j < ambient_; ++j) w[j] -= cc * basis_.at(i, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  require(ambient_ == o.ambient_ && field_ == o.field_,
          "subspace ambient mismatch");
  for (size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_.row_vec(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  require(ambient_ == o.ambient_ && field_ == o.field_,
          "subspace ambient mismatch");
  if (dim() == 0) return o;
  if (o.dim() == 0) return *this;
  return span(basis_.vstack(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  require(ambient_ == o.ambient_ && field_ == o.field_,
          "subspace ambient mismatch");
  if (dim() == 0 || o.dim() == 0) return Subspace(ambient_, field_);
  // x = u A = v B; solve [A^T | -B^T] (u,v)^T = 0 and map u back through A.
  Matrix lhs = basis_.transpose().hstack(o.basis_.transpose().scaled(
      -Scalar::one(field_)));
  auto r = rref_solve(lhs);
  if (r.kernel.rows() == 0) return Subspace(ambient_, field_);
  std::vector<std::vector<Scalar>> rows;
  for (size_t k = 0; k < r.kernel.rows(); ++k) {
    std::vector<Scalar> x(ambient_, Scalar::zero(field_));
    for (size_t i = 0; i < dim(); ++i) {
      const Scalar& u = r.kernel.at(k, i);
      if (u.is_zero()) continue;
      for (size_t j = 0; j < ambient_; ++j) x[j] += u * basis_.at(i, j);
    }
    rows.push_back(std::move(x));
  }
  return span(rows, ambient_, field_);
}

std::vector<Scalar> Subspace::coordinates(const std::vector<Scalar>& v) const {
  require(v.size() == ambient_, "vector/subspace ambient mismatch");
  std::vector<Scalar> w = v;
  auto piv = pivots();
  std::vector<Scalar> coords(dim(), Scalar::zero(field_));
  for (size_t i = 0; i < piv.size(); ++i) {
    Scalar c = w[piv[i]];
    coords[i] = c;
    if (c.is_zero()) continue;
    for (size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
  }
  for (const auto& x : w)
    require(x.is_zero(), "vector not in subspace");
  return coords;
}

std::vector<std::vector<Scalar>> Subspace::quotient_reps() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (size_t c : pivots()) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> reps;
  for (size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) reps.push_back(unit_vector(ambient_, c, field_));
  return reps;
}

Matrix Subspace::quotient_projection() const {
  // v = (coords in basis) + (coords at free columns after reduction); the
  // quotient coordinates of v are the reduced values at the free columns.
  auto piv = pivots();
  std::vector<bool> is_pivot(ambient_, false);
  for (size_t c : piv) is_pivot[c] = true;
  size_t q = ambient_ - dim();
  Matrix proj(q, ambient_, field_);
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  // e_c for a free column c reduces to itself; e_{piv} reduces to
  // e_{piv} - basis_row, leaving -basis entries at the free columns.
  for (size_t k = 0; k < free_cols.size(); ++k)
    proj.at(k, free_cols[k]) = Scalar::one(field_);
  for (size_t pi = 0; pi < piv.size(); ++pi)
    for (size_t k = 0; k < free_cols.size(); ++k)
      proj.at(k, piv[pi]) = -basis_.at(pi, free_cols[k]);
  return proj;
}

Subspace kernel_space(const Matrix& m) {
  if (m.rows() == 0) return Subspace::full(m.cols(), m.field());
  auto r = rref_solve(m);
  return Subspace::span(r.kernel);
}

Subspace column_space(const Matrix& m) {
  return Subspace::span(m.transpose());
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  require(m.rows() == target.ambient(), "preimage ambient mismatch");
  // m v in span(B rows) <=> exists u: m v - B^T u = 0
  if (target.dim() == 0) return kernel_space(m);
  Matrix lhs = m.hstack(target.basis().transpose().scaled(
      -Scalar::one(m.field())));
  auto ker = rref_solve(lhs).kernel;
  std::vector<std::vector<Scalar>> rows;
  for (size_t k = 0; k < ker.rows(); ++k) {
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    for (size_t j = 0; j < m.cols(); ++j) v[j] = ker.at(k, j);
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, m.cols(), m.field());
}

Subspace image(const Matrix& m, const Subspace& s) {
  require(m.cols() == s.ambient(), "image ambient mismatch");
  std::vector<std::vector<Scalar>> rows;
  for (size_t i = 0; i < s.dim(); ++i)
    rows.push_back(m.apply(s.basis().row_vec(i)));
  return Subspace::span(rows, m.rows(), m.field());
}

}  // namespace hopfgal
