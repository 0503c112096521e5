#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hopfgal/perm.hpp"

using namespace hopfgal;

namespace {

// Independent census oracle for regular subgroups: filter the full subgroup
// list of Sym(n) (a different code path than the backtracking search).
std::vector<PermGroup> regular_subgroups_oracle(size_t n) {
  std::vector<PermGroup> out;
  for (const PermGroup& h : all_subgroups(symmetric_group(n)))
    if (h.is_regular()) out.push_back(h);
  return out;
}

}  // namespace

TEST_CASE("perm basics and composition convention") {
  Perm s({1, 2, 0});  // 0->1->2->0
  Perm t({1, 0, 2});  // swap 0,1
  // (s*t)(i) = s(t(i))
  CHECK((s * t)(0) == 2);
  CHECK((s * t)(1) == 1);
  CHECK((s * t)(2) == 0);
  CHECK(s.inverse() * s == Perm(3));
  CHECK(s.order() == 3);
  CHECK(Perm::cycle(4, {0, 1, 2, 3}).order() == 4);
  CHECK_THROWS_AS(Perm({0, 0, 1}), input_error);
}

TEST_CASE("closure: trivial, C4, S3") {
  CHECK(closure(3, {}).order() == 1);
  CHECK(closure(4, {Perm::cycle(4, {0, 1, 2, 3})}).order() == 4);
  PermGroup s3 = closure(3, {Perm::cycle(3, {0, 1}), Perm::cycle(3, {0, 1, 2})});
  CHECK(s3.order() == 6);
  // multiplication-table closure: every pairwise product is present
  for (const Perm& a : s3.elements())
    for (const Perm& b : s3.elements()) CHECK(s3.contains(a * b));
  for (const Perm& a : s3.elements()) CHECK(s3.contains(a.inverse()));
}

TEST_CASE("closure order bound") {
  CHECK_THROWS_AS(closure(5, {Perm::cycle(5, {0, 1}),
                              Perm::cycle(5, {0, 1, 2, 3, 4})}, 100),
                  input_error);
}

TEST_CASE("coset datum: G' = G and G' = 1") {
  PermGroup g = symmetric_group(3);
  auto cd_full = coset_datum(g, g);
  CHECK(cd_full.cosets.size() == 1);
  CHECK(cd_full.lambda.order() == 1);

  auto cd_triv = coset_datum(g, trivial_group(3));
  CHECK(cd_triv.cosets.size() == 6);
  CHECK(cd_triv.lambda.order() == 6);
  CHECK(cd_triv.lambda.is_regular());  // left regular representation
  // identity coset first
  CHECK(cd_triv.cosets[0][0] == g.index_of(Perm(3)));
}

TEST_CASE("coset datum: S3 over <(0 1)> is faithful") {
  PermGroup g = symmetric_group(3);
  PermGroup gp = closure(3, {Perm::cycle(3, {0, 1})});
  auto cd = coset_datum(g, gp);
  CHECK(cd.cosets.size() == 3);
  CHECK(cd.lambda.order() == 6);  // trivial core: kernel of the action is 1
  CHECK(cd.lambda.is_transitive());
}

TEST_CASE("coset datum requires a subgroup") {
  PermGroup c4 = cyclic_group(4);
  PermGroup other = closure(4, {Perm::cycle(4, {0, 1})});
  CHECK_THROWS_AS(coset_datum(c4, other), input_error);
}

TEST_CASE("all_subgroups counts: C4 -> 3, S3 -> 6, Klein -> 5") {
  CHECK(all_subgroups(cyclic_group(4)).size() == 3);
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);
  CHECK(all_subgroups(klein_regular()).size() == 5);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
  CHECK_THROWS_AS(all_subgroups(symmetric_group(5)), input_error);
}

TEST_CASE("regular subgroups: n = 1, 3, 4") {
  CHECK(regular_subgroups(1).size() == 1);
  CHECK(regular_subgroups(3).size() == 1);
  auto r4 = regular_subgroups(4);
  CHECK(r4.size() == 4);
  size_t cyclic = 0, klein = 0;
  for (const auto& n : r4) {
    bool has4 = false;
    for (const Perm& p : n.elements())
      if (p.order() == 4) has4 = true;
    (has4 ? cyclic : klein) += 1;
  }
  CHECK(cyclic == 3);
  CHECK(klein == 1);
  CHECK_THROWS_AS(regular_subgroups(9), input_error);
}

TEST_CASE("regular subgroups agree with the all-subgroup oracle") {
  for (size_t n : {2u, 3u, 4u}) {
    auto fast = regular_subgroups(n);
    auto oracle = regular_subgroups_oracle(n);
    REQUIRE(fast.size() == oracle.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == oracle[i]);
  }
}

TEST_CASE("hg_candidates: S3/C2 -> 1, C4 -> 2, Klein -> 4") {
  PermGroup s3 = symmetric_group(3);
  PermGroup gp = closure(3, {Perm::cycle(3, {0, 1})});
  CHECK(hg_candidates(s3, gp).size() == 1);

  PermGroup c4 = cyclic_group(4);
  auto cands4 = hg_candidates(c4, trivial_group(4));
  CHECK(cands4.size() == 2);

  PermGroup v4 = klein_regular();
  CHECK(hg_candidates(v4, trivial_group(4)).size() == 4);

  // re-verify normalization independently by conjugating every generator
  auto cd = coset_datum(c4, trivial_group(4));
  for (const auto& n : cands4) {
    CHECK(n.is_regular());
    for (const Perm& g : cd.lambda.elements())
      for (const Perm& v : n.generators())
        CHECK(n.contains(g * v * g.inverse()));
  }
}

TEST_CASE("equivariant subgroups under the trivial action") {
  PermGroup c4 = cyclic_group(4);
  GroupAction act;
  act.acting = trivial_group(1);
  act.target = c4;
  act.table.assign(1, std::vector<size_t>(c4.order()));
  for (size_t i = 0; i < c4.order(); ++i) act.table[0][i] = i;
  act.validate();
  CHECK(equivariant_subgroups(act, false).size() == 3);
}

TEST_CASE("equivariant subgroups of lambda(S3) under conjugation") {
  PermGroup s3 = symmetric_group(3);
  auto cd = coset_datum(s3, trivial_group(3));
  GroupAction act = conjugation_action(s3, cd, cd.lambda);
  auto eq = equivariant_subgroups(act, false);
  CHECK(eq.size() == 3);  // 1, the A3 copy, lambda(S3): the normal subgroups
  std::vector<size_t> orders;
  for (const auto& v : eq) orders.push_back(v.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<size_t>{1, 3, 6});
  auto eqn = equivariant_subgroups(act, true);
  CHECK(eqn.size() == 3);  // all three are normal in S3
}

TEST_CASE("equivariant subgroups of the Klein group under lambda(C4)") {
  PermGroup c4 = cyclic_group(4);
  auto cd = coset_datum(c4, trivial_group(4));
  PermGroup klein = klein_regular();
  GroupAction act = conjugation_action(c4, cd, klein);
  auto eq = equivariant_subgroups(act, false);
  CHECK(eq.size() == 3);  // {1}, one order-2 subgroup, N
  std::vector<size_t> orders;
  for (const auto& v : eq) orders.push_back(v.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<size_t>{1, 2, 4});
}

TEST_CASE("gp_act correspondence: degenerate V") {
  PermGroup c4 = cyclic_group(4);
  auto cd = coset_datum(c4, trivial_group(4));
  PermGroup n = cd.lambda;  // regular
  GroupAction act = conjugation_action(c4, cd, n);
  auto beta = orbit_beta(n);

  auto full = gp_act_correspondence(c4, trivial_group(4), n, act, beta, n);
  CHECK(full.iso_check);
  CHECK(full.u == c4);
  CHECK(full.n_mod_v == 1);

  auto triv = gp_act_correspondence(c4, trivial_group(4), n, act, beta,
                                    trivial_group(4));
  CHECK(triv.iso_check);
  CHECK(triv.u.order() == 1);
  CHECK(triv.n_mod_v == 4);
  CHECK(triv.g_mod_u == 4);
}

TEST_CASE("gp_act correspondence: Klein V inside C4 datum") {
  PermGroup c4 = cyclic_group(4);
  auto cd = coset_datum(c4, trivial_group(4));
  PermGroup klein = klein_regular();
  GroupAction act = conjugation_action(c4, cd, klein);
  auto beta = orbit_beta(klein);
  // the equivariant order-2 subgroup
  auto eq = equivariant_subgroups(act, false);
  const PermGroup* v2 = nullptr;
  for (const auto& v : eq)
    if (v.order() == 2) v2 = &v;
  REQUIRE(v2 != nullptr);
  auto res = gp_act_correspondence(c4, trivial_group(4), klein, act, beta, *v2);
  CHECK(res.iso_check);
  CHECK(res.u.order() == 2);
  CHECK(res.n_mod_v == 2);
  CHECK(res.g_mod_u == 2);
  CHECK(res.u.order() * klein.order() == c4.order() * v2->order());
}

TEST_CASE("gp_act correspondence rejects non-equivariant V") {
  PermGroup c4 = cyclic_group(4);
  auto cd = coset_datum(c4, trivial_group(4));
  PermGroup klein = klein_regular();
  GroupAction act = conjugation_action(c4, cd, klein);
  auto beta = orbit_beta(klein);
  // a non-equivariant order-2 subgroup: conjugation by the 4-cycle moves it
  auto subs = all_subgroups(klein);
  const PermGroup* bad = nullptr;
  for (const auto& v : subs) {
    if (v.order() != 2) continue;
    bool eq = true;
    for (size_t a = 0; a < c4.order() && eq; ++a)
      for (const Perm& p : v.elements())
        if (!v.contains(klein.element(act.act(a, klein.index_of(p))))) {
          eq = false;
          break;
        }
    if (!eq) bad = &v;
  }
  REQUIRE(bad != nullptr);
  CHECK_THROWS_AS(
      gp_act_correspondence(c4, trivial_group(4), klein, act, beta, *bad),
      input_error);
}
