#pragma once

#include <vector>

#include "hopfgal/matrix.hpp"

namespace hopfgal {

// A subspace of K^n held as the unique RREF basis of its row space (no zero
// rows, pivot entries 1, zeros above and below pivots, pivot columns strictly
// increasing). Two Subspace values are equal iff their canonical forms are.
class Subspace {
public:
  Subspace() = default;
  Subspace(size_t ambient, const Field& f)
      : ambient_(ambient), field_(f), basis_(0, ambient, f) {}

  static Subspace span(const Matrix& rows);
  static Subspace span(const std::vector<std::vector<Scalar>>& rows,
                       size_t ambient, const Field& f);
  static Subspace full(size_t ambient, const Field& f);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Field& field() const { return field_; }
  const Matrix& basis() const { return basis_; }
  std::vector<size_t> pivots() const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& o) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  // Coordinates of v in the basis; input_error if v is outside the subspace.
  std::vector<Scalar> coordinates(const std::vector<Scalar>& v) const;

  // Representatives of a basis of ambient/this: the standard basis vectors at
  // the non-pivot columns of the RREF basis, in increasing column order.
  std::vector<std::vector<Scalar>> quotient_reps() const;

  // Matrix of the projection ambient -> ambient/this in the quotient_reps
  // basis (rows = quotient coordinates).
  Matrix quotient_projection() const;

private:
  size_t ambient_ = 0;
  Field field_ = Field::Q();
  Matrix basis_;
};

// {x : x in a and x in b} via the kernel of the stacked-basis system.
Subspace kernel_space(const Matrix& m);

// Column span of m as a Subspace of K^rows.
Subspace column_space(const Matrix& m);

// Preimage {v : m * v in target} as a subspace of the domain.
Subspace preimage(const Matrix& m, const Subspace& target);

// Image of a subspace under a linear map.
Subspace image(const Matrix& m, const Subspace& s);

}  // namespace hopfgal
