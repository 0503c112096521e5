#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/module_algebra.hpp"

namespace hopfgal {

// Finite-depth projective system of groups: G_1 <- G_2 <- ... <- G_d with
// surjective homomorphisms, the truncated model of a profinite group.
// maps[k] sends element indices of groups[k+1] to element indices of
// groups[k].
struct GroupTower {
  std::vector<PermGroup> groups;
  std::vector<std::vector<size_t>> maps;

  size_t depth() const { return groups.size(); }
  void validate() const;  // surjective homomorphism per level
};

// Finite-depth projective system of Hopf algebras along Hopf surjections,
// the truncated model of a proartinian Hopf algebra. maps[k] is the matrix
// of p_k: H_{k+1} ->> H_k.
struct HopfTower {
  std::vector<HopfAlgebraData> levels;
  std::vector<Matrix> maps;

  size_t depth() const { return levels.size(); }
  // composite H_d -> H_k (identity for k = d-1 ... index from 0)
  Matrix composite_to(size_t k) const;
};

struct TowerLevelCheck {
  bool surjective = false;
  bool algebra_map = false;
  bool coalgebra_map = false;
  bool antipode_map = false;
  bool kernel_hopf_ideal = false;
  bool ok() const {
    return surjective && algebra_map && coalgebra_map && antipode_map &&
           kernel_hopf_ideal;
  }
};

struct HopfTowerReport {
  std::vector<TowerLevelCheck> levels;  // one per map
  bool ok = false;
  std::string witness;
};

HopfTowerReport validate_hopf_tower(const HopfTower& t);

// H_k = K[G_k] with the induced surjections.
HopfTower completed_group_algebra(const GroupTower& t, const Field& field);

// Nested module algebras: H_k acting on L_k with L_1 <= L_2 <= ... <= L_d,
// the H_{k+1}-action on the embedded L_k factoring through the tower map.
struct ModuleAlgebraTower {
  std::vector<ModuleAlgebraDatum> levels;
  std::vector<Matrix> field_maps;  // L_k -> L_{k+1}

  size_t depth() const { return levels.size(); }
  // composite L_k -> L_d
  Matrix embed_to_top(size_t k) const;
  // input_error naming the broken compatibility; also certifies
  // L_k = (L_d)^(ker(H_d -> H_k)) (the discrete-module filtration)
  void validate(const HopfTower& ht) const;
};

struct TowerHgLevel {
  size_t can_self_rank = 0;      // can_k: L_k (x) H_k -> End_K(L_k)
  bool can_self_bijective = false;
  size_t can_rel_rank = 0;       // can_{I_k}: L_d (x) H_k -> Hom_K(L_k, L_d)
  bool can_rel_bijective = false;
  bool square_commutes = true;   // with the next level, last level vacuous
};

struct TowerHgReport {
  std::vector<TowerHgLevel> levels;
  bool galois_to_depth = false;
};

// Level-wise canonical maps relative to the top field plus the per-level
// self checks, and the commuting squares between consecutive levels.
TowerHgReport tower_hg_check(const HopfTower& ht, const ModuleAlgebraTower& mt);

// Level subspaces C_k <= H_k with p(C_{k+1}) = C_k; open-model when the
// quotient dimension stabilizes before the top (the truncated reading of
// "pulled back from a finite level").
struct IdealTower {
  std::vector<Subspace> levels;
  bool open_model = false;
};

struct TowerCorrespondenceRow {
  std::vector<PermGroup> subgroups;     // V_k, image-compatible
  IdealTower ideals;                    // C_k = psi(K[V_k])
  std::vector<Subspace> fixed_fields;   // L_k^(C_k), in L_k coordinates
  bool stabilizes = false;              // quotient sizes constant at the top
};

struct TowerCorrespondenceReport {
  std::vector<TowerCorrespondenceRow> rows;
};

// The truncated infinite correspondence for completed-group-algebra towers:
// actions[k] is the G_k-action on N_k = the k-th group of nt (for classical
// towers N_k is G_k itself with the trivial action). Enumerates all
// image-compatible equivariant subgroup towers, builds the ideal towers,
// certifies level-wise Phi/Psi, the annihilator towers, inclusion reversal,
// and stabilization <-> finite fixed-field tower.
TowerCorrespondenceReport tower_correspondence(
    const HopfTower& ht, const ModuleAlgebraTower& mt, const GroupTower& nt,
    const std::vector<GroupAction>& actions);

struct RestrictedDualLevel {
  bool can_bijective = false;
  bool can_dagger_bijective = false;
  bool action_roundtrip = false;  // action rebuilt from the coaction
  bool dual_injection_ok = true;  // H_k* -> H_{k+1}* is a Hopf injection
};

struct RestrictedDualReport {
  std::vector<RestrictedDualLevel> levels;
  bool ok = false;
};

// The colimit-model dual side: level coactions, can-dagger relative to the
// top field, and the dual injections between levels; certifies the
// level-wise equivalence can bijective <-> can-dagger bijective (also in
// the negative).
RestrictedDualReport restricted_dual_check(const HopfTower& ht,
                                           const ModuleAlgebraTower& mt);

// Builders for the shipped tower shapes.
struct ClassicalGfTower {
  GroupTower galois_groups;   // C_{p^1} <- ... (Frobenius restrictions)
  GroupTower n_groups;        // the same groups as the N-side
  std::vector<GroupAction> actions;  // trivial: the classical structure
  HopfTower hopf;
  ModuleAlgebraTower fields;
};

// GF(p^(m^k))/GF(p) for k = 1..depth: the classical Galois tower with
// cyclic level groups of order m^k.
ClassicalGfTower classical_gf_tower(uint32_t p, size_t m, size_t depth);

// Constant tower on one group.
GroupTower constant_group_tower(const PermGroup& g, size_t depth);

// The 2-adic procyclic tower C_{m^1} <- C_{m^2} <- ... (reduction maps).
GroupTower procyclic_tower(size_t m, size_t depth);

}  // namespace hopfgal
