#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/hopf.hpp"

namespace hopfgal {

// A field extension L/K presented as a commutative K-algebra with a left
// H-action: act is the matrix of H (x) L -> L (shape dL x dH*dL).
struct ModuleAlgebraDatum {
  HopfAlgebraData hopf;
  FinAlgebra algebra;  // L
  Matrix action;       // dL x (dH * dL)

  size_t dim_h() const { return hopf.dim; }
  size_t dim_l() const { return algebra.dim; }
  const Field& field() const { return hopf.field; }

  // matrix of the operator y -> h . y
  Matrix action_of(const std::vector<Scalar>& h) const;
  std::vector<Scalar> act(const std::vector<Scalar>& h,
                          const std::vector<Scalar>& x) const;
};

struct ModuleAlgebraReport {
  bool unital_action = false;
  bool associative_action = false;
  bool module_algebra_law = false;   // h.(xy) = (h1.x)(h2.y), h.1 = eps(h)1
  bool algebra_commutative = false;
  bool algebra_is_field = false;
  bool hopf_valid = false;
  std::string witness;

  bool ok(bool require_field = true) const {
    return unital_action && associative_action && module_algebra_law &&
           algebra_commutative && hopf_valid &&
           (algebra_is_field || !require_field);
  }
};

ModuleAlgebraReport verify_module_algebra(const ModuleAlgebraDatum& d);

// can: L (x) H -> End_K(L), x (x) h -> (y -> x (h.y)); End_K(L) in the
// row-major elementary-matrix basis E_ij.
struct CanonicalMapReport {
  Matrix can;          // dL^2 x (dL * dH)
  size_t rank = 0;
  bool bijective = false;
};

CanonicalMapReport canonical_map(const ModuleAlgebraDatum& d);

// L^F = {x : h.x = eps(h) x for h in a basis of f}, one stacked kernel.
Subspace fixed_space(const ModuleAlgebraDatum& d, const Subspace& f);

// J(L0) = {h : h.x = 0 for all x in l0}; certifies the left-ideal and
// eps-vanishing flags of Prop HopfIdeal(a).
Subspace annihilator(const ModuleAlgebraDatum& d, const Subspace& l0);

struct IntermediateField {
  Subspace l0;          // subspace of L, multiplicatively closed, contains 1
  Subspace j;           // J(L0) in H
  bool h_subextension = false;  // can0 bijective
  bool h_stable = false;        // H . L0 in L0
  bool h_normal = false;        // both
  size_t can0_rank = 0;
  std::optional<size_t> can0p_rank;  // rank of can0': L0 (x) H/J -> End(L0)
};

// Decides the flags of Lemma Hsubext / Def stable; input_error unless l0 is
// a subfield containing K.1.
IntermediateField subextension_flags(const ModuleAlgebraDatum& d,
                                     const Subspace& l0);

// One row of the finite correspondence.
struct LatticeRow {
  Subspace ideal;          // I, left ideal two-sided coideal
  Subspace l0;             // L^I
  Subspace hopf_subalgebra;  // phi(I), the Hopf-subalgebra view
  bool hopf_ideal = false;
  bool h_stable = false;
  bool h_normal = false;
};

struct CorrespondenceLattice {
  std::vector<LatticeRow> rows;  // input order
  // pairwise inclusion of ideals: incl[i][j] = (I_i subset of I_j)
  std::vector<std::vector<bool>> ideal_inclusion;
};

// Runs Psi then Phi on every candidate and certifies the round trips
// (Phi Psi = id, Psi Phi = id), subextension flags, inclusion reversal and
// the normal sub-correspondence. Assertion failures are theorem_errors.
CorrespondenceLattice correspondence_lattice(
    const ModuleAlgebraDatum& d, const std::vector<Subspace>& ideal_candidates);

// Compositum and intersection of H-subextensions, with the identities
// L1 L2 = L^(H1 cap H2) and L1 cap L2 = L^(I1 + I2) certified.
struct LatticePair {
  IntermediateField compositum;
  IntermediateField intersection;
};

LatticePair lattice_ops(const ModuleAlgebraDatum& d,
                        const IntermediateField& l1,
                        const IntermediateField& l2);

// L/L0 is L0 (x) H0-Galois (Prop subs(b)): checks the restricted canonical
// map onto End_{L0}(L) and the preimage identity of Prop subs(a).
bool relative_galois_check(const ModuleAlgebraDatum& d,
                           const IntermediateField& l0);

// Dual side: coaction rho: L -> L (x) H*, second canonical map
// can*: L (x) L -> L (x) H*.
struct DualSideDatum {
  HopfAlgebraData h_dual;
  Matrix coaction;   // (dL * dH) x dL
  Matrix can_star;   // (dL * dH) x (dL * dL)
  bool can_star_bijective = false;
};

DualSideDatum coaction_side(const ModuleAlgebraDatum& d);

// The four-fold coincidence of Lemma invariants_coinvariants for a left
// ideal two-sided coideal I: L^I = rho^-1(L (x) (H/I)*) = L^(co H0*) = L^(H0)
// with H0 = phi(I). Returns the common subspace; theorem_error on mismatch.
Subspace invariants_coincidence(const ModuleAlgebraDatum& d,
                                const DualSideDatum& ds, const Subspace& i);

// can is a coalgebra morphism for the dual coalgebra structure on End_K(L)
// (matrix-level statement of Lemma cancoalgmap in fixed bases).
bool canonical_map_is_coalgebra_morphism(const ModuleAlgebraDatum& d);

// Base change along an embedding e: L -> Ltilde of K-algebras: the module
// algebra Ltilde (x) L with H acting through the second factor. The result
// is not a field when Ltilde strictly contains L; verify with
// require_field = false.
struct BaseChangeDatum {
  ModuleAlgebraDatum extended;  // algebra Ltilde (x) L
  Matrix embed_l;               // L -> Ltilde (x) L, x -> 1 (x) x
  Matrix embed_lt;              // Ltilde -> Ltilde (x) L, y -> y (x) 1
};

BaseChangeDatum base_change(const ModuleAlgebraDatum& d,
                            const FinAlgebra& ltilde, const Matrix& embedding);

// (Ltilde (x) L)^(Ltilde (x) F) = Ltilde (x) L^F, checked exactly.
bool base_change_invariants_commute(const ModuleAlgebraDatum& d,
                                    const BaseChangeDatum& bc,
                                    const Subspace& f);

// Classical companion: the module algebra of a group G of K-algebra
// automorphisms acting on L via matrices indexed by sorted group elements.
ModuleAlgebraDatum classical_module_algebra(const PermGroup& g,
                                            const FinAlgebra& l,
                                            const std::vector<Matrix>& auto_mats,
                                            const Field& field);

}  // namespace hopfgal
