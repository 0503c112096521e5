#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/subspace.hpp"

namespace hopfgal {

// A finite-dimensional algebra as structure tensors: mul is the matrix of
// m: A (x) A -> A (shape d x d^2, tensor columns indexed (i,j) -> i*d + j),
// unit the column of u: K -> A.
struct FinAlgebra {
  size_t dim = 0;
  Matrix mul;   // d x d^2
  Matrix unit;  // d x 1
  Field field = Field::Q();

  // product of two coordinate vectors
  std::vector<Scalar> product(const std::vector<Scalar>& a,
                              const std::vector<Scalar>& b) const;
  std::vector<Scalar> unit_vec() const { return unit.col_vec(0); }
  // matrix of left multiplication by a
  Matrix left_mul(const std::vector<Scalar>& a) const;

  bool is_associative(std::string* witness = nullptr) const;
  bool is_unital(std::string* witness = nullptr) const;
  bool is_commutative() const;
  // Fieldness battery: commutative + unital + associative, and the left
  // multiplication operator of every nonzero probe (basis vectors, pairwise
  // sums and differences) is invertible. Catches bad fixtures, e.g. any
  // product algebra in any basis.
  bool is_field_extension() const;

  void validate(const std::string& name) const;  // input_error on violation
};

// A finite-dimensional coalgebra: comul the matrix of Delta: C -> C (x) C
// (shape d^2 x d), counit the row of eps: C -> K.
struct FinCoalgebra {
  size_t dim = 0;
  Matrix comul;   // d^2 x d
  Matrix counit;  // 1 x d
  Field field = Field::Q();

  bool is_coassociative(std::string* witness = nullptr) const;
  bool is_counital(std::string* witness = nullptr) const;
  bool is_cocommutative() const;

  void validate(const std::string& name) const;
};

// Dual coalgebra of an algebra and dual algebra of a coalgebra via the
// dual-basis formulas: the structure matrices transpose.
FinCoalgebra dualize(const FinAlgebra& a);
FinAlgebra dualize(const FinCoalgebra& c);

}  // namespace hopfgal
