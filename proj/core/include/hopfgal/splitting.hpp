#pragma once

#include <string>
#include <vector>

#include "hopfgal/module_algebra.hpp"

namespace hopfgal {

// Normal closure Ltilde/K with explicit automorphism group: matrices, a
// composition table over labels, and the labels of G' = Gal(Ltilde/L).
// validate() derives the permutation model, L = Ltilde^G', the coset datum
// and the per-coset embeddings L -> Ltilde.
struct SplittingDatum {
  FinAlgebra closure_algebra;              // Ltilde
  std::vector<std::string> labels;
  std::vector<Matrix> autos;               // one per label
  std::vector<std::vector<size_t>> table;  // table[a][b] = label of a after b
  std::vector<size_t> gprime_labels;

  // derived by validate()
  PermGroup g;                         // regular permutation model
  PermGroup g_prime;
  std::vector<size_t> label_of_element;  // g element index -> label
  std::vector<size_t> element_of_label;
  Subspace l_subspace;                 // L inside Ltilde
  FinAlgebra l_algebra;                // L on its RREF basis
  Matrix l_embedding;                  // L -> Ltilde (dt x dl)
  CosetDatum cosets;
  std::vector<Matrix> coset_embedding;  // per coset: L -> Ltilde

  void validate();  // input_error naming the violated invariant
};

// One Hopf-Galois structure on L/K: the regular subgroup N, the conjugation
// G-action, the descended Hopf algebra H = (Ltilde[N])^G and its action on L.
struct HGStructure {
  PermGroup n_grp;
  GroupAction g_action;          // G acting on N by lambda-conjugation
  std::vector<size_t> beta;      // N element index -> coset index
  Subspace h_in_ln;              // H as a subspace of Ltilde[N]
  ModuleAlgebraDatum datum;      // H with its action on L
  CanonicalMapReport can;
};

// Structure tensors of Ltilde[N] use the right-translation group law
// n * m = m o n (permutation composition); this is the convention under
// which beta matches the classical structure to K[G].
HGStructure descend_hopf_and_action(const SplittingDatum& datum,
                                    const PermGroup& n_grp);

// The Greither-Pareigis census: one HGStructure per regular subgroup of
// Perm(G/G') normalized by lambda(G), every canonical map verified
// bijective. jobs > 1 descends candidates in parallel (deterministic order).
std::vector<HGStructure> enumerate_structures(const SplittingDatum& datum,
                                              size_t jobs = 1);

// The right-regular candidate (the classical structure when G' = 1).
PermGroup right_regular_candidate(const SplittingDatum& datum);

// For G' = 1: certifies the descended classical H equals K[G]
// tensor-for-tensor under the beta-induced basis matching, including the
// action tensor.
void verify_classical_recovery(const SplittingDatum& datum,
                               const HGStructure& s);

// One row of the group-side correspondence.
struct GroupSideRow {
  PermGroup v;              // G-equivariant subgroup of N
  PermGroup u;              // {g : gG' in beta(V)}
  Subspace ideal;           // I in H coordinates
  Subspace l0;              // L^I = L cap Ltilde^U, in L coordinates
  bool v_normal = false;
  bool hopf_ideal = false;
  bool h_normal = false;
};

struct GroupSideReport {
  std::vector<GroupSideRow> rows;
  CorrespondenceLattice ideal_lattice;  // the ideal-side view of the same rows
};

// Enumerates equivariant subgroups, builds each ideal two ways
// (H ∩ ker(Ltilde[N] -> Ltilde[N/V]) and psi(H ∩ Ltilde[V])), certifies
// L^I = L^U, the item-by-item match with correspondence_lattice, and the
// normal sub-correspondence.
GroupSideReport group_side_correspondence(const SplittingDatum& datum,
                                          const HGStructure& s);

// Classical splitting datum for GF(p^n)/GF(p): G = <Frobenius>, G' = 1.
SplittingDatum gf_splitting_datum(uint32_t p, size_t n);

// Splitting datum of the rational cubic x^3 - 2: Ltilde = Q[c,w]/(c^3-2,
// w^2+w+1), G isomorphic to S3. with_gprime selects G' = <complex
// conjugation> (L = Q(cbrt 2)) or G' = 1 (L = Ltilde).
SplittingDatum qx32_splitting_datum(bool gprime_conjugation);

}  // namespace hopfgal
