#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfgal/errors.hpp"

namespace hopfgal {

// Permutation of {0..n-1}; composition convention (s * t)(i) = s(t(i)),
// fixed project-wide.
class Perm {
public:
  Perm() = default;
  explicit Perm(size_t degree);              // identity
  explicit Perm(std::vector<size_t> images); // input_error unless a bijection

  static Perm cycle(size_t degree, const std::vector<size_t>& pts);

  size_t degree() const { return img_.size(); }
  size_t operator()(size_t i) const { return img_[i]; }
  const std::vector<size_t>& images() const { return img_; }

  Perm operator*(const Perm& o) const;  // this after o
  Perm inverse() const;
  bool is_identity() const;
  size_t order() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string to_string() const;  // image array, e.g. "[1,0,2]"

private:
  std::vector<size_t> img_;
};

// A finite permutation group materialized as its full, lexicographically
// sorted element list. Desk scale only; closure beyond `order_bound` fails.
class PermGroup {
public:
  PermGroup() = default;

  size_t degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(size_t i) const { return elements_[i]; }

  // Index of p in the sorted element list; input_error if absent.
  size_t index_of(const Perm& p) const;
  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& g) const;
  bool is_abelian() const;
  bool is_transitive() const;
  // transitive with trivial point stabilizers and order == degree
  bool is_regular() const;
  bool normalizes(const PermGroup& n) const;  // this <= Normalizer(n)
  bool is_normal_in(const PermGroup& g) const;

  bool operator==(const PermGroup& o) const {
    return degree_ == o.degree_ && elements_ == o.elements_;
  }
  bool operator<(const PermGroup& o) const { return elements_ < o.elements_; }

  friend PermGroup closure(size_t degree, const std::vector<Perm>& gens,
                           size_t order_bound);

private:
  size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // sorted, closed, inverse-closed, with id
};

inline constexpr size_t kDefaultClosureBound = 720;
inline constexpr size_t kDefaultRegularDegreeBound = 8;
inline constexpr size_t kDefaultSubgroupOrderBound = 24;

PermGroup closure(size_t degree, const std::vector<Perm>& gens,
                  size_t order_bound = kDefaultClosureBound);

PermGroup trivial_group(size_t degree);
PermGroup cyclic_group(size_t n);         // <(0 1 ... n-1)> in Sym(n)
PermGroup symmetric_group(size_t n);
PermGroup klein_regular();                // the regular V4 in Sym(4)

// Left cosets hG' of g_prime in g, listed with 1G' first and then ordered by
// minimal element, plus lambda(g): the image of g acting by left translation
// on the coset list.
struct CosetDatum {
  std::vector<std::vector<size_t>> cosets;  // element indices into g, sorted
  std::vector<size_t> coset_of;             // element index -> coset index
  PermGroup lambda;                         // lambda(G) <= Sym(#cosets)
  std::vector<Perm> lambda_of;              // g element index -> its lambda perm
};

CosetDatum coset_datum(const PermGroup& g, const PermGroup& g_prime);

// Every subgroup of g (literal subgroups, not up to conjugacy), sorted.
std::vector<PermGroup> all_subgroups(
    const PermGroup& g, size_t order_bound = kDefaultSubgroupOrderBound);

// All regular subgroups of Sym(n), via backtracking over the group
// operations on {0..n-1} with identity 0 that they induce.
std::vector<PermGroup> regular_subgroups(
    size_t n, size_t degree_bound = kDefaultRegularDegreeBound);

// Greither-Pareigis census: regular subgroups N of Perm(G/G') with
// lambda(G) <= Normalizer(N).
std::vector<PermGroup> hg_candidates(const PermGroup& g,
                                     const PermGroup& g_prime);

// Action of a group A on the element set of a group N by group
// automorphisms, held as a lookup table.
struct GroupAction {
  PermGroup acting;  // A
  PermGroup target;  // N
  // table[a][n] = index in target of a . (target element n)
  std::vector<std::vector<size_t>> table;

  size_t act(size_t a, size_t n) const { return table[a][n]; }
  void validate() const;  // input_error naming the broken axiom
};

// The action of g by conjugation with lambda(g) on a subgroup N of the coset
// permutations: g . n = lambda(g) n lambda(g)^-1.
GroupAction conjugation_action(const PermGroup& g, const CosetDatum& cd,
                               const PermGroup& n_grp);

// Subgroups V of act.target with a.V = V for all a; normal_only additionally
// requires V normal in the target.
std::vector<PermGroup> equivariant_subgroups(const GroupAction& act,
                                             bool normal_only);

// Lemma-level correspondence V -> U = {g : gG' in beta(V)} with its
// verification battery. beta maps the index of n in n_grp to the coset index
// (1G').n = n(0); it is passed explicitly so the hypotheses are checked on
// data, not assumed.
struct GpActResult {
  PermGroup u;
  bool iso_check = false;     // N/V -> G/U is a bijection
  size_t n_mod_v = 0, g_mod_u = 0;
};

GpActResult gp_act_correspondence(const PermGroup& g,
                                  const PermGroup& g_prime,
                                  const PermGroup& n_grp,
                                  const GroupAction& act,
                                  const std::vector<size_t>& beta,
                                  const PermGroup& v);

// The canonical beta for a regular N on the coset set: n -> n(0).
std::vector<size_t> orbit_beta(const PermGroup& n_grp);

}  // namespace hopfgal
