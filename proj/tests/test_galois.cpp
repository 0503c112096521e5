#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfgal/gf.hpp"
#include "hopfgal/module_algebra.hpp"

using namespace hopfgal;

namespace {

// classical Galois datum GF(p^n)/GF(p) with G = <Frobenius>
ModuleAlgebraDatum gf_classical(uint32_t p, size_t n) {
  GfExtension gf = gf_extension(p, n);
  PermGroup g = n == 1 ? trivial_group(1) : cyclic_group(n);
  std::vector<Matrix> mats;
  Matrix acc = Matrix::identity(n, Field::Fp(p));
  for (size_t k = 0; k < g.order(); ++k) {
    mats.push_back(acc);
    acc = gf.frobenius * acc;
  }
  return classical_module_algebra(g, gf.algebra, mats, Field::Fp(p));
}

ModuleAlgebraDatum trivial_action_datum(const HopfAlgebraData& h,
                                        const FinAlgebra& l) {
  ModuleAlgebraDatum d;
  d.hopf = h;
  d.algebra = l;
  const size_t dl = l.dim, dh = h.dim;
  d.action = Matrix(dl, dh * dl, h.field);
  for (size_t i = 0; i < dh; ++i) {
    Scalar e = h.counit().at(0, i);
    for (size_t b = 0; b < dl; ++b) d.action.at(b, i * dl + b) = e;
  }
  return d;
}

Subspace k_line(const ModuleAlgebraDatum& d) {
  return Subspace::span({d.algebra.unit_vec()}, d.dim_l(), d.field());
}

// psi(K[<subgroup>]) inside the classical K[C_n]
Subspace subgroup_ideal(const ModuleAlgebraDatum& d, const PermGroup& g,
                        const PermGroup& sub) {
  return newman_schneider(d.hopf, subgroup_algebra_span(g, sub, d.field()),
                          NewmanSchneiderDir::psi);
}

}  // namespace

TEST_CASE("module algebra verification: trivial and Frobenius actions") {
  auto h = group_algebra(cyclic_group(2), Field::Fp(2));
  GfExtension gf4 = gf_extension(2, 2);
  auto triv = trivial_action_datum(h, gf4.algebra);
  CHECK(verify_module_algebra(triv).ok());

  auto frob = gf_classical(2, 2);
  CHECK(verify_module_algebra(frob).ok());

  // corrupted action: swap the two rows of the action tensor
  auto bad = frob;
  for (size_t c = 0; c < bad.action.cols(); ++c)
    std::swap(bad.action.at(0, c), bad.action.at(1, c));
  auto rep = verify_module_algebra(bad);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("canonical map: 1x1, Frobenius, trivial") {
  // L = K, H = K
  auto k = gf_classical(2, 1);
  auto r = canonical_map(k);
  CHECK(r.can.rows() == 1);
  CHECK(r.bijective);

  auto frob = gf_classical(2, 2);
  auto rf = canonical_map(frob);
  CHECK(rf.rank == 4);
  CHECK(rf.bijective);

  auto h = group_algebra(cyclic_group(2), Field::Fp(2));
  auto triv = trivial_action_datum(h, gf_extension(2, 2).algebra);
  auto rt = canonical_map(triv);
  CHECK(rt.rank == 2);
  CHECK_FALSE(rt.bijective);
}

TEST_CASE("fixed spaces: zero ideal, augmentation ideal, subgroup ideal") {
  auto d = gf_classical(2, 4);
  CHECK(fixed_space(d, Subspace(4, Field::Fp(2))) ==
        Subspace::full(4, Field::Fp(2)));
  // classical Galois: L^(ker eps) = K  (the H-invariants of L are just K)
  CHECK(fixed_space(d, kernel_space(d.hopf.counit())) == k_line(d));

  PermGroup c4 = cyclic_group(4);
  PermGroup c2 = closure(4, {c4.element(2)});
  Subspace i = subgroup_ideal(d, c4, c2);
  Subspace gf4_in_16 = fixed_space(d, i);
  CHECK(gf4_in_16.dim() == 2);
  // it is the fixed field of Frobenius^2
  Matrix fr2 = d.action_of(unit_vector(4, 2, d.field()));
  Matrix id = Matrix::identity(4, d.field());
  CHECK(gf4_in_16 == kernel_space(fr2 - id));
}

TEST_CASE("annihilators: K, L, and the quadratic subfield of GF(16)") {
  auto d = gf_classical(2, 4);
  CHECK(annihilator(d, k_line(d)) == kernel_space(d.hopf.counit()));
  CHECK(annihilator(d, Subspace::full(4, d.field())).dim() == 0);

  PermGroup c4 = cyclic_group(4);
  PermGroup c2 = closure(4, {c4.element(2)});
  Subspace i = subgroup_ideal(d, c4, c2);
  Subspace l0 = fixed_space(d, i);
  CHECK(annihilator(d, l0) == i);
  CHECK(i.dim() == 2);
}

TEST_CASE("subextension flags: degenerate fields") {
  auto d = gf_classical(2, 4);
  auto at_k = subextension_flags(d, k_line(d));
  CHECK(at_k.h_subextension);
  CHECK(at_k.h_stable);
  CHECK(at_k.h_normal);
  auto at_l = subextension_flags(d, Subspace::full(4, d.field()));
  CHECK(at_l.h_subextension);
  CHECK(at_l.h_stable);

  // not multiplicatively closed: the line through x (x^2 = x+1 outside)
  CHECK_THROWS_AS(
      subextension_flags(d, Subspace::span({unit_vector(4, 1, d.field())}, 4,
                                           d.field())),
      input_error);
}

TEST_CASE("Galois connection on GF(16) subfields") {
  auto d = gf_classical(2, 4);
  PermGroup c4 = cyclic_group(4);
  std::vector<Subspace> fields;
  for (const PermGroup& sub : all_subgroups(c4))
    fields.push_back(fixed_space(d, subgroup_ideal(d, c4, sub)));
  for (const Subspace& a : fields)
    for (const Subspace& b : fields) {
      if (b.contains(a))
        CHECK(annihilator(d, a).contains(annihilator(d, b)));
    }
  for (const Subspace& a : fields) {
    Subspace j = annihilator(d, a);
    CHECK(annihilator(d, fixed_space(d, j)) == j);  // J(L^(J(L0))) = J(L0)
  }
}

TEST_CASE("correspondence lattice of GF(16)/GF(2): three rows") {
  auto d = gf_classical(2, 4);
  PermGroup c4 = cyclic_group(4);
  std::vector<Subspace> candidates;
  for (const PermGroup& sub : all_subgroups(c4))
    candidates.push_back(subgroup_ideal(d, c4, sub));
  REQUIRE(candidates.size() == 3);
  auto lat = correspondence_lattice(d, candidates);
  CHECK(lat.rows.size() == 3);
  std::vector<size_t> dims;
  for (const auto& row : lat.rows) dims.push_back(row.l0.dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<size_t>{1, 2, 4});
  for (const auto& row : lat.rows) {
    CHECK(row.hopf_ideal);  // C4 abelian: every subgroup ideal is Hopf
    CHECK(row.h_normal);
  }
}

TEST_CASE("lattice operations on GF(64)/GF(2)") {
  auto d = gf_classical(2, 6);
  PermGroup c6 = cyclic_group(6);
  // L1 = GF(4) = fixed field of <F^2>, L2 = GF(8) = fixed field of <F^3>
  PermGroup f2 = closure(6, {c6.element(2)});
  PermGroup f3 = closure(6, {c6.element(3)});
  auto l1 = subextension_flags(d, fixed_space(d, subgroup_ideal(d, c6, f2)));
  auto l2 = subextension_flags(d, fixed_space(d, subgroup_ideal(d, c6, f3)));
  CHECK(l1.l0.dim() == 2);
  CHECK(l2.l0.dim() == 3);
  auto pair = lattice_ops(d, l1, l2);
  CHECK(pair.compositum.l0 == Subspace::full(6, d.field()));
  CHECK(pair.intersection.l0 == k_line(d));

  // exhaustive pairs over the full subgroup lattice
  std::vector<IntermediateField> fields;
  for (const PermGroup& sub : all_subgroups(c6))
    fields.push_back(
        subextension_flags(d, fixed_space(d, subgroup_ideal(d, c6, sub))));
  for (const auto& a : fields)
    for (const auto& b : fields) CHECK_NOTHROW(lattice_ops(d, a, b));
}

TEST_CASE("lattice ops: idempotence") {
  auto d = gf_classical(2, 4);
  PermGroup c4 = cyclic_group(4);
  PermGroup c2 = closure(4, {c4.element(2)});
  auto l1 = subextension_flags(d, fixed_space(d, subgroup_ideal(d, c4, c2)));
  auto pair = lattice_ops(d, l1, l1);
  CHECK(pair.compositum.l0 == l1.l0);
  CHECK(pair.intersection.l0 == l1.l0);
}

TEST_CASE("relative Galois check on every subextension of GF(16)") {
  auto d = gf_classical(2, 4);
  PermGroup c4 = cyclic_group(4);
  for (const PermGroup& sub : all_subgroups(c4)) {
    auto flags =
        subextension_flags(d, fixed_space(d, subgroup_ideal(d, c4, sub)));
    CHECK(relative_galois_check(d, flags));
  }
}

TEST_CASE("coaction side: Frobenius bijective, trivial H degenerate") {
  auto frob = gf_classical(2, 2);
  auto ds = coaction_side(frob);
  CHECK(ds.can_star_bijective);

  // H = K acting on GF(4): rho(x) = x (x) 1, can* the multiplication map
  auto h1 = group_algebra(trivial_group(1), Field::Fp(2));
  auto d = trivial_action_datum(h1, gf_extension(2, 2).algebra);
  auto ds2 = coaction_side(d);
  CHECK_FALSE(ds2.can_star_bijective);
  CHECK_FALSE(canonical_map(d).bijective);
}

TEST_CASE("four-fold invariants coincidence on GF(16)") {
  auto d = gf_classical(2, 4);
  auto ds = coaction_side(d);
  PermGroup c4 = cyclic_group(4);
  for (const PermGroup& sub : all_subgroups(c4)) {
    Subspace i = subgroup_ideal(d, c4, sub);
    Subspace common = invariants_coincidence(d, ds, i);
    CHECK(common == fixed_space(d, i));
  }
}

TEST_CASE("can is a coalgebra morphism in fixed bases") {
  CHECK(canonical_map_is_coalgebra_morphism(gf_classical(2, 2)));
  CHECK(canonical_map_is_coalgebra_morphism(gf_classical(2, 4)));
  CHECK(canonical_map_is_coalgebra_morphism(gf_classical(3, 3)));
}

TEST_CASE("base change GF(4) -> GF(16)") {
  auto d = gf_classical(2, 2);
  GfExtension gf4 = gf_extension(2, 2);
  GfExtension gf16 = gf_extension(2, 4);
  Matrix emb = gf_embedding(gf4, gf16);
  auto bc = base_change(d, gf16.algebra, emb);
  CHECK(bc.extended.algebra.dim == 8);  // dimension multiplies by [Lt:K]
  auto rep = verify_module_algebra(bc.extended);
  CHECK(rep.ok(/*require_field=*/false));
  CHECK_FALSE(rep.algebra_is_field);  // GF(16) (x) GF(4) is not a field

  // invariants commute with base change for every F in the battery
  CHECK(base_change_invariants_commute(d, bc,
                                       kernel_space(d.hopf.counit())));
  CHECK(base_change_invariants_commute(d, bc, Subspace(2, d.field())));
  CHECK(base_change_invariants_commute(d, bc, Subspace::full(2, d.field())));

  // identity base change: ltilde = L
  auto bc_id = base_change(d, gf4.algebra, Matrix::identity(2, d.field()));
  CHECK(bc_id.extended.algebra.dim == 4);
  CHECK(verify_module_algebra(bc_id.extended).ok(false));
}

TEST_CASE("base change rejects non-ring maps") {
  auto d = gf_classical(2, 2);
  GfExtension gf16 = gf_extension(2, 4);
  Matrix bad(4, 2, d.field());
  bad.at(0, 0) = Scalar::one(d.field());
  bad.at(1, 1) = Scalar::one(d.field());  // x -> x, not a ring map into GF(16)
  CHECK_THROWS_AS(base_change(d, gf16.algebra, bad), input_error);
}

TEST_CASE("cocommutativity and full invariants on Hopf-Galois fixtures") {
  for (auto [p, n] : std::vector<std::pair<uint32_t, size_t>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    auto d = gf_classical(p, n);
    CHECK(verify_axioms(d.hopf).cocommutative);
    CHECK(canonical_map(d).bijective);
    CHECK(fixed_space(d, kernel_space(d.hopf.counit())) == k_line(d));
  }
}

TEST_CASE("GF(2) subspace oracle enumerates every subspace") {
  auto subs = all_subspaces_gf2(4);
  CHECK(subs.size() == 67);  // 1 + 15 + 35 + 15 + 1
  auto subs3 = all_subspaces_gf2(3);
  CHECK(subs3.size() == 16);  // 1 + 7 + 7 + 1
  // spot check: all distinct
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = i + 1; j < subs.size(); ++j) CHECK(subs[i] != subs[j]);
}
