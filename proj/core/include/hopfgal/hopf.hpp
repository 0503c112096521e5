#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/algebra.hpp"
#include "hopfgal/perm.hpp"

namespace hopfgal {

// A finite-dimensional Hopf algebra as five structure tensors on one space.
struct HopfAlgebraData {
  size_t dim = 0;
  Field field = Field::Q();
  FinAlgebra algebra;     // mul (d x d^2), unit (d x 1)
  FinCoalgebra coalgebra; // comul (d^2 x d), counit (1 x d)
  Matrix antipode;        // d x d

  const Matrix& mul() const { return algebra.mul; }
  const Matrix& unit() const { return algebra.unit; }
  const Matrix& comul() const { return coalgebra.comul; }
  const Matrix& counit() const { return coalgebra.counit; }

  std::vector<Scalar> unit_vec() const { return algebra.unit_vec(); }
  std::vector<Scalar> product(const std::vector<Scalar>& a,
                              const std::vector<Scalar>& b) const {
    return algebra.product(a, b);
  }
  Scalar counit_of(const std::vector<Scalar>& v) const;

  void validate(const std::string& name) const;  // all axioms, input_error
};

struct AxiomReport {
  bool algebra = false;
  bool coalgebra = false;
  bool bialgebra = false;
  bool antipode = false;
  bool cocommutative = false;
  bool commutative = false;
  std::string witness;  // first violated identity, with basis index

  bool hopf_ok() const { return algebra && coalgebra && bialgebra && antipode; }
};

AxiomReport verify_axioms(const HopfAlgebraData& h);

// Group algebra K[G] on the sorted element list of g: elements grouplike,
// S(g) = g^-1.
HopfAlgebraData group_algebra(const PermGroup& g, const Field& field);

// Dual Hopf algebra: all five tensors transpose.
HopfAlgebraData dualize_hopf(const HopfAlgebraData& h);

// Antipode as the convolution inverse of the identity; input_error when the
// convolution system is singular (no antipode exists).
Matrix solve_antipode(const FinAlgebra& a, const FinCoalgebra& c);

struct GrouplikeReport {
  std::vector<std::vector<Scalar>> grouplikes;  // vectors of C, Delta x = x(x)x
  bool fully_split = true;  // all common eigenspaces extracted over K
  size_t unsplit_dim = 0;   // dimension that resisted rational splitting
};

// Grouplikes of a coalgebra, as K-rational characters of the dual algebra
// found by iterative eigenspace splitting; input_error if the dual algebra
// is not commutative.
GrouplikeReport grouplikes(const FinCoalgebra& c);

struct ClassifiedSubspace {
  Subspace subspace;
  bool left_ideal = false;
  bool right_ideal = false;
  bool two_sided_coideal = false;
  bool hopf_ideal = false;
  bool subalgebra = false;
  bool subcoalgebra = false;
  bool hopf_subalgebra = false;
  bool normal_hopf_subalgebra = false;
};

ClassifiedSubspace classify_subspace(const HopfAlgebraData& h,
                                     const Subspace& s);

enum class NewmanSchneiderDir { phi, psi };

// The inverse bijections between left ideal two-sided coideals and Hopf
// subalgebras of a cocommutative H:
//   phi(I) = left H/I-coinvariants {h : pi(h_(1)) (x) h_(2) = pi(1) (x) h},
//   psi(A) = H A+  with  A+ = A  ∩ ker eps.
Subspace newman_schneider(const HopfAlgebraData& h, const Subspace& x,
                          NewmanSchneiderDir dir);

enum class QuotientLevel { coalgebra, module_coalgebra, hopf };

struct QuotientStructure {
  Matrix projection;  // q x d, quotient coordinates on the complement basis
  Matrix section;     // d x q, the quotient_reps of the ideal
  FinCoalgebra coalg;
  std::optional<Matrix> action;  // H (x) H/I -> H/I at module_coalgebra level
  std::optional<HopfAlgebraData> hopf;  // at hopf level
};

QuotientStructure quotient_structure(const HopfAlgebraData& h,
                                     const Subspace& i, QuotientLevel level);

// Structure-tensor equality of h1 and h2 under the basis matching
// e_i -> f_{match[i]}.
bool hopf_equal_under_matching(const HopfAlgebraData& h1,
                               const HopfAlgebraData& h2,
                               const std::vector<size_t>& match);

// Span of g n - g n' over g in G, n, n' in N, inside K[G]; the kernel of
// K[G] -> K[G/N].
Subspace group_coset_kernel(const PermGroup& g, const PermGroup& n,
                            const Field& field);

// K[N] as a subspace of K[G] for a subgroup N.
Subspace subgroup_algebra_span(const PermGroup& g, const PermGroup& n,
                               const Field& field);

}  // namespace hopfgal
