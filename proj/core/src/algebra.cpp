#include "hopfgal/algebra.hpp"

#include "hopfgal/polyroot.hpp"

namespace hopfgal {

std::vector<Scalar> FinAlgebra::product(const std::vector<Scalar>& a,
                                        const std::vector<Scalar>& b) const {
  require(a.size() == dim && b.size() == dim, "product dimension mismatch");
  std::vector<Scalar> ab(dim * dim, Scalar::zero(field));
  for (size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim; ++j)
      if (!b[j].is_zero()) ab[i * dim + j] = a[i] * b[j];
  }
  return mul.apply(ab);
}

Matrix FinAlgebra::left_mul(const std::vector<Scalar>& a) const {
  Matrix out(dim, dim, field);
  for (size_t j = 0; j < dim; ++j) {
    auto col = product(a, unit_vector(dim, j, field));
    for (size_t i = 0; i < dim; ++i) out.at(i, j) = col[i];
  }
  return out;
}

bool FinAlgebra::is_associative(std::string* witness) const {
  Matrix id = Matrix::identity(dim, field);
  Matrix lhs = mul * kron(mul, id);
  Matrix rhs = mul * kron(id, mul);
  if (lhs == rhs) return true;
  if (witness) {
    for (size_t c = 0; c < lhs.cols(); ++c)
      for (size_t r = 0; r < dim; ++r)
        if (lhs.at(r, c) != rhs.at(r, c)) {
          size_t k = c % dim, ij = c / dim;
          *witness = "associativity fails on basis triple (" +
                     std::to_string(ij / dim) + "," + std::to_string(ij % dim) +
                     "," + std::to_string(k) + ")";
          return false;
        }
  }
  return false;
}

bool FinAlgebra::is_unital(std::string* witness) const {
  Matrix id = Matrix::identity(dim, field);
  bool left = mul * kron(unit, id) == id;
  bool right = mul * kron(id, unit) == id;
  if (left && right) return true;
  if (witness) *witness = left ? "right unit law fails" : "left unit law fails";
  return false;
}

bool FinAlgebra::is_commutative() const {
  return mul * tensor_swap(dim, dim, field) == mul;
}

bool FinAlgebra::is_field_extension() const {
  if (!is_associative() || !is_unital() || !is_commutative()) return false;
  // etale test: the trace-form Gram matrix tr(M_{e_i e_j}) is nonsingular
  // exactly when A is a product of separable field extensions (K perfect)
  std::vector<Matrix> ops;
  ops.reserve(dim);
  for (size_t i = 0; i < dim; ++i) ops.push_back(left_mul(unit_vector(dim, i, field)));
  auto trace_of = [&](const std::vector<Scalar>& v) {
    Scalar t = Scalar::zero(field);
    for (size_t i = 0; i < dim; ++i)
      if (!v[i].is_zero())
        for (size_t a = 0; a < dim; ++a) t += v[i] * ops[i].at(a, a);
    return t;
  };
  Matrix gram(dim, dim, field);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      gram.at(i, j) = trace_of(mul.col_vec(i * dim + j));
  if (rank_of(gram) != dim) return false;

  if (!field.is_rational()) {
    // factor count over GF(p): dim ker(x -> x^p  -  x) equals the number of
    // field factors (Berlekamp)
    Matrix frob(dim, dim, field);
    for (size_t j = 0; j < dim; ++j) {
      std::vector<Scalar> acc = unit_vec();
      for (uint32_t e = 0; e < field.p; ++e)
        acc = e == 0 ? unit_vector(dim, j, field)
                     : product(acc, unit_vector(dim, j, field));
      for (size_t i = 0; i < dim; ++i) frob.at(i, j) = acc[i];
    }
    return kernel_space(frob - Matrix::identity(dim, field)).dim() == 1;
  }
  // over Q: in a field, a multiplication operator has a rational eigenvalue
  // only for scalar elements; probe basis vectors, pairwise sums/differences
  // and products for proper rational eigenspaces
  auto splits = [&](const std::vector<Scalar>& v) {
    Matrix m = left_mul(v);
    for (const Scalar& lam : rational_roots(char_poly(m), field)) {
      size_t k = kernel_space(m - Matrix::identity(dim, field).scaled(lam)).dim();
      if (k != 0 && k != dim) return true;
    }
    return false;
  };
  for (size_t i = 0; i < dim; ++i) {
    auto ei = unit_vector(dim, i, field);
    if (splits(ei)) return false;
    for (size_t j = i + 1; j < dim; ++j) {
      auto s = ei, d = ei;
      s[j] += Scalar::one(field);
      d[j] -= Scalar::one(field);
      if (splits(s) || splits(d) || splits(product(ei, unit_vector(dim, j, field))))
        return false;
    }
  }
  return true;
}

void FinAlgebra::validate(const std::string& name) const {
  require(mul.rows() == dim && mul.cols() == dim * dim,
          name + ": multiplication tensor has wrong shape");
  require(unit.rows() == dim && unit.cols() == 1,
          name + ": unit has wrong shape");
  require(mul.field() == field && unit.field() == field,
          name + ": tensor field mismatch");
  std::string w;
  require(is_associative(&w), name + ": " + w);
  require(is_unital(&w), name + ": " + w);
}

bool FinCoalgebra::is_coassociative(std::string* witness) const {
  Matrix id = Matrix::identity(dim, field);
  Matrix lhs = kron(comul, id) * comul;
  Matrix rhs = kron(id, comul) * comul;
  if (lhs == rhs) return true;
  if (witness) {
    for (size_t c = 0; c < dim; ++c)
      for (size_t r = 0; r < lhs.rows(); ++r)
        if (lhs.at(r, c) != rhs.at(r, c)) {
          *witness = "coassociativity fails on basis element " +
                     std::to_string(c);
          return false;
        }
  }
  return false;
}

bool FinCoalgebra::is_counital(std::string* witness) const {
  Matrix id = Matrix::identity(dim, field);
  bool left = kron(counit, id) * comul == id;
  bool right = kron(id, counit) * comul == id;
  if (left && right) return true;
  if (witness)
    *witness = left ? "right counit law fails" : "left counit law fails";
  return false;
}

bool FinCoalgebra::is_cocommutative() const {
  return tensor_swap(dim, dim, field) * comul == comul;
}

void FinCoalgebra::validate(const std::string& name) const {
  require(comul.rows() == dim * dim && comul.cols() == dim,
          name + ": comultiplication has wrong shape");
  require(counit.rows() == 1 && counit.cols() == dim,
          name + ": counit has wrong shape");
  require(comul.field() == field && counit.field() == field,
          name + ": tensor field mismatch");
  std::string w;
  require(is_coassociative(&w), name + ": " + w);
  require(is_counital(&w), name + ": " + w);
}

FinCoalgebra dualize(const FinAlgebra& a) {
  FinCoalgebra c;
  c.dim = a.dim;
  c.field = a.field;
  c.comul = a.mul.transpose();
  c.counit = a.unit.transpose();
  return c;
}

FinAlgebra dualize(const FinCoalgebra& c) {
  FinAlgebra a;
  a.dim = c.dim;
  a.field = c.field;
  a.mul = c.comul.transpose();
  a.unit = c.counit.transpose();
  return a;
}

}  // namespace hopfgal
