#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hopfgal/hopf.hpp"

using namespace hopfgal;

namespace {

PermGroup a3() { return closure(3, {Perm::cycle(3, {0, 1, 2})}); }

Subspace line(const std::vector<Scalar>& v, size_t dim, const Field& f) {
  return Subspace::span({v}, dim, f);
}

}  // namespace

TEST_CASE("group algebra of the trivial group is the base field") {
  auto h = group_algebra(trivial_group(1), Field::Q());
  CHECK(h.dim == 1);
  CHECK(h.mul() == Matrix::identity(1, Field::Q()));
  CHECK(h.antipode == Matrix::identity(1, Field::Q()));
  auto rep = verify_axioms(h);
  CHECK(rep.hopf_ok());
  CHECK(rep.commutative);
  CHECK(rep.cocommutative);
}

TEST_CASE("K[C2] over GF(3): antipode is the identity") {
  auto h = group_algebra(cyclic_group(2), Field::Fp(3));
  CHECK(h.dim == 2);
  CHECK(h.antipode == Matrix::identity(2, Field::Fp(3)));
  CHECK(verify_axioms(h).hopf_ok());
}

TEST_CASE("K[S3] over Q: cocommutative, not commutative") {
  auto h = group_algebra(symmetric_group(3), Field::Q());
  CHECK(h.dim == 6);
  auto rep = verify_axioms(h);
  CHECK(rep.hopf_ok());
  CHECK(rep.cocommutative);
  CHECK_FALSE(rep.commutative);
}

TEST_CASE("corrupted antipode is reported with a witness") {
  auto h = group_algebra(cyclic_group(3), Field::Q());
  h.antipode = Matrix::identity(3, Field::Q());
  auto rep = verify_axioms(h);
  CHECK(rep.algebra);
  CHECK(rep.coalgebra);
  CHECK(rep.bialgebra);
  CHECK_FALSE(rep.antipode);
  CHECK(rep.witness.find("antipode") != std::string::npos);
}

TEST_CASE("solve_antipode recovers the group-algebra antipode") {
  for (const Field& f : {Field::Q(), Field::Fp(5)}) {
    auto h = group_algebra(symmetric_group(3), f);
    CHECK(solve_antipode(h.algebra, h.coalgebra) == h.antipode);
  }
}

TEST_CASE("dual of K[C2] over Q splits") {
  auto h = group_algebra(cyclic_group(2), Field::Q());
  auto hd = dualize_hopf(h);
  CHECK(hd.algebra.is_commutative());
  CHECK(verify_axioms(hd).hopf_ok());
  // function algebra on 2 points: two characters, i.e. two grouplikes in the
  // dual coalgebra of K[C2]^* -- which is K[C2] itself
  auto g = grouplikes(hd.coalgebra);
  CHECK(g.grouplikes.size() == 2);
  CHECK(g.fully_split);
}

TEST_CASE("double dual is the identity tensor-for-tensor") {
  auto h = group_algebra(symmetric_group(3), Field::Q());
  auto hdd = dualize_hopf(dualize_hopf(h));
  CHECK(hdd.mul() == h.mul());
  CHECK(hdd.unit() == h.unit());
  CHECK(hdd.comul() == h.comul());
  CHECK(hdd.counit() == h.counit());
  CHECK(hdd.antipode == h.antipode);
}

TEST_CASE("dual of K[C4] over GF(5) has 4 characters") {
  auto h = group_algebra(cyclic_group(4), Field::Fp(5));
  auto hd = dualize_hopf(h);
  CHECK(hd.algebra.is_commutative());
  // grouplikes of the dual coalgebra = characters of C4 over GF(5); GF(5)
  // contains the 4th roots of unity, so all 4 are rational
  auto g = grouplikes(hd.coalgebra);
  CHECK(g.grouplikes.size() == 4);
  CHECK(g.fully_split);
}

TEST_CASE("grouplikes of K[C2] are the group elements") {
  auto h = group_algebra(cyclic_group(2), Field::Q());
  auto g = grouplikes(h.coalgebra);
  REQUIRE(g.grouplikes.size() == 2);
  for (const auto& x : g.grouplikes) {
    auto dx = h.comul().apply(x);
    for (size_t a = 0; a < 2; ++a)
      for (size_t b = 0; b < 2; ++b) CHECK(dx[a * 2 + b] == x[a] * x[b]);
    CHECK(h.counit_of(x).is_one());
  }
  // distinct grouplikes are linearly independent
  Matrix m = Matrix::from_rows(g.grouplikes, 2, Field::Q());
  CHECK(rank_of(m) == 2);
}

TEST_CASE("dual of GF(2)[C2] is local: one grouplike") {
  auto h = group_algebra(cyclic_group(2), Field::Fp(2));
  auto g = grouplikes(dualize_hopf(h).coalgebra);
  CHECK(g.grouplikes.size() == 1);
  CHECK_FALSE(g.fully_split);
  CHECK(g.unsplit_dim == 1);
}

TEST_CASE("dual of Q x Q x Q: three coordinate projections") {
  Field q = Field::Q();
  FinAlgebra a;
  a.dim = 3;
  a.field = q;
  a.mul = Matrix(3, 9, q);
  for (size_t i = 0; i < 3; ++i) a.mul.at(i, i * 3 + i) = Scalar::one(q);
  a.unit = Matrix(3, 1, q);
  for (size_t i = 0; i < 3; ++i) a.unit.at(i, 0) = Scalar::one(q);
  a.validate("QxQxQ");
  auto g = grouplikes(dualize(a));
  REQUIRE(g.grouplikes.size() == 3);
  // the characters are the coordinate projections e_i^*
  for (size_t i = 0; i < 3; ++i) {
    bool found = false;
    for (const auto& x : g.grouplikes)
      if (x == unit_vector(3, i, q)) found = true;
    CHECK(found);
  }
}

TEST_CASE("grouplikes require a commutative dual") {
  auto h = group_algebra(symmetric_group(3), Field::Q());
  // dual algebra of K[S3]-as-coalgebra is commutative (functions), fine;
  // but the dual of the dual Hopf algebra's coalgebra is K[S3]* with
  // multiplication of K[S3]: non-commutative
  auto hd = dualize_hopf(h);
  CHECK_THROWS_AS(grouplikes(hd.coalgebra), input_error);
}

TEST_CASE("classify: augmentation ideal of K[C4]") {
  auto h = group_algebra(cyclic_group(4), Field::Q());
  Subspace ker_eps = kernel_space(h.counit());
  auto cls = classify_subspace(h, ker_eps);
  CHECK(cls.left_ideal);
  CHECK(cls.right_ideal);
  CHECK(cls.two_sided_coideal);
  CHECK(cls.hopf_ideal);
  CHECK_FALSE(cls.subalgebra);  // no unit
}

TEST_CASE("classify: K[A3] inside K[S3] is a normal Hopf subalgebra") {
  PermGroup s3 = symmetric_group(3);
  auto h = group_algebra(s3, Field::Q());
  Subspace ka3 = subgroup_algebra_span(s3, a3(), Field::Q());
  auto cls = classify_subspace(h, ka3);
  CHECK(cls.subalgebra);
  CHECK(cls.subcoalgebra);
  CHECK(cls.hopf_subalgebra);
  CHECK(cls.normal_hopf_subalgebra);
  CHECK_FALSE(cls.left_ideal);

  // a non-normal Hopf subalgebra: K[<(0 1)>]
  Subspace kc2 =
      subgroup_algebra_span(s3, closure(3, {Perm::cycle(3, {0, 1})}),
                            Field::Q());
  auto cls2 = classify_subspace(h, kc2);
  CHECK(cls2.hopf_subalgebra);
  CHECK_FALSE(cls2.normal_hopf_subalgebra);
}

TEST_CASE("classify: K(g - g^2) in K[C3] is a coideal but not an ideal") {
  Field q = Field::Q();
  auto h = group_algebra(cyclic_group(3), q);
  std::vector<Scalar> v(3, Scalar::zero(q));
  v[1] = Scalar::one(q);
  v[2] = -Scalar::one(q);
  auto cls = classify_subspace(h, line(v, 3, q));
  CHECK(cls.two_sided_coideal);
  CHECK_FALSE(cls.left_ideal);
  CHECK_FALSE(cls.right_ideal);
}

TEST_CASE("Newman-Schneider: psi(K[A3]) has dimension 4") {
  PermGroup s3 = symmetric_group(3);
  auto h = group_algebra(s3, Field::Q());
  Subspace ka3 = subgroup_algebra_span(s3, a3(), Field::Q());
  Subspace i = newman_schneider(h, ka3, NewmanSchneiderDir::psi);
  CHECK(i.dim() == 4);  // dim K[S3] - dim K[S3/A3]
}

TEST_CASE("Newman-Schneider: trivial pairs") {
  auto h = group_algebra(cyclic_group(3), Field::Q());
  Field q = Field::Q();
  Subspace k1 = line(h.unit_vec(), 3, q);
  CHECK(newman_schneider(h, k1, NewmanSchneiderDir::psi).dim() == 0);
  Subspace zero(3, q);
  CHECK(newman_schneider(h, zero, NewmanSchneiderDir::phi) == k1);
}

TEST_CASE("Newman-Schneider round trips over subgroup lattices") {
  auto check_lattice = [](const PermGroup& g, const Field& f) {
    auto h = group_algebra(g, f);
    for (const PermGroup& n : all_subgroups(g)) {
      Subspace a = subgroup_algebra_span(g, n, f);
      auto acls = classify_subspace(h, a);
      CHECK(acls.hopf_subalgebra);
      CHECK(acls.normal_hopf_subalgebra == n.is_normal_in(g));

      Subspace i = newman_schneider(h, a, NewmanSchneiderDir::psi);
      CHECK(i.dim() == g.order() - g.order() / n.order());
      auto icls = classify_subspace(h, i);
      CHECK(icls.left_ideal);
      CHECK(icls.two_sided_coideal);
      // Hopf-ideal <-> normal restriction of the correspondence
      CHECK(icls.hopf_ideal == n.is_normal_in(g));

      CHECK(newman_schneider(h, i, NewmanSchneiderDir::phi) == a);
      CHECK(newman_schneider(h, a, NewmanSchneiderDir::psi) == i);

      // the ideal is exactly the span of gn - gn'
      CHECK(i == group_coset_kernel(g, n, f));
    }
  };
  for (const Field& f : {Field::Q(), Field::Fp(5)}) {
    check_lattice(cyclic_group(4), f);
    check_lattice(symmetric_group(3), f);
    check_lattice(klein_regular(), f);
  }
}

TEST_CASE("Newman-Schneider preconditions") {
  auto h = group_algebra(cyclic_group(4), Field::Q());
  Field q = Field::Q();
  // not a coideal: the line through a group element g (eps(g) = 1)
  Subspace bad = line(unit_vector(4, 1, q), 4, q);
  CHECK_THROWS_AS(newman_schneider(h, bad, NewmanSchneiderDir::phi),
                  input_error);
  // not a subalgebra: ker eps
  CHECK_THROWS_AS(newman_schneider(h, kernel_space(h.counit()),
                                   NewmanSchneiderDir::psi),
                  input_error);
}

TEST_CASE("sub-basics: sums of ideals, intersections of Hopf subalgebras") {
  PermGroup g = symmetric_group(3);
  Field f = Field::Fp(5);
  auto h = group_algebra(g, f);
  auto subs = all_subgroups(g);
  std::vector<Subspace> ideals, hopf_subs;
  for (const PermGroup& n : subs) {
    Subspace a = subgroup_algebra_span(g, n, f);
    hopf_subs.push_back(a);
    ideals.push_back(newman_schneider(h, a, NewmanSchneiderDir::psi));
  }
  for (const Subspace& i1 : ideals)
    for (const Subspace& i2 : ideals) {
      auto cls = classify_subspace(h, i1.sum(i2));
      CHECK(cls.left_ideal);
      CHECK(cls.two_sided_coideal);
    }
  for (const Subspace& a1 : hopf_subs)
    for (const Subspace& a2 : hopf_subs)
      CHECK(classify_subspace(h, a1.intersect(a2)).hopf_subalgebra);
}

TEST_CASE("quotient by the augmentation ideal is K") {
  auto h = group_algebra(cyclic_group(4), Field::Q());
  auto qs = quotient_structure(h, kernel_space(h.counit()),
                               QuotientLevel::hopf);
  REQUIRE(qs.hopf.has_value());
  CHECK(qs.hopf->dim == 1);
  CHECK(qs.hopf->mul() == Matrix::identity(1, Field::Q()));
}

TEST_CASE("K[C4]/psi(K[C2]) is K[C2] as a Hopf algebra") {
  PermGroup c4 = cyclic_group(4);
  Field q = Field::Q();
  auto h = group_algebra(c4, q);
  PermGroup c2 = closure(4, {c4.element(2)});  // the order-2 subgroup <g^2>
  REQUIRE(c2.order() == 2);
  Subspace i = newman_schneider(h, subgroup_algebra_span(c4, c2, q),
                                NewmanSchneiderDir::psi);
  auto qs = quotient_structure(h, i, QuotientLevel::hopf);
  REQUIRE(qs.hopf.has_value());
  REQUIRE(qs.hopf->dim == 2);

  // match quotient classes to the coset permutation group
  auto cd = coset_datum(c4, c2);
  auto reps = i.quotient_reps();
  std::vector<size_t> match;
  for (const auto& rep : reps) {
    size_t col = 0;
    while (rep[col].is_zero()) ++col;
    match.push_back(cd.lambda.index_of(cd.lambda_of[col]));
  }
  CHECK(hopf_equal_under_matching(*qs.hopf,
                                  group_algebra(cd.lambda, q), match));
}

TEST_CASE("K[S3]/psi(K[A3]) is K[C2]") {
  PermGroup s3 = symmetric_group(3);
  Field q = Field::Q();
  auto h = group_algebra(s3, q);
  Subspace i = newman_schneider(h, subgroup_algebra_span(s3, a3(), q),
                                NewmanSchneiderDir::psi);
  auto qs = quotient_structure(h, i, QuotientLevel::hopf);
  REQUIRE(qs.hopf.has_value());
  REQUIRE(qs.hopf->dim == 2);
  auto cd = coset_datum(s3, a3());
  auto reps = i.quotient_reps();
  std::vector<size_t> match;
  for (const auto& rep : reps) {
    size_t col = 0;
    while (rep[col].is_zero()) ++col;
    match.push_back(cd.lambda.index_of(cd.lambda_of[col]));
  }
  CHECK(hopf_equal_under_matching(*qs.hopf,
                                  group_algebra(cd.lambda, q), match));
}

TEST_CASE("quotient levels enforce classification preconditions") {
  Field q = Field::Q();
  auto h = group_algebra(cyclic_group(3), q);
  // coideal that is not an ideal
  std::vector<Scalar> v(3, Scalar::zero(q));
  v[1] = Scalar::one(q);
  v[2] = -Scalar::one(q);
  Subspace cod = line(v, 3, q);
  CHECK_NOTHROW(quotient_structure(h, cod, QuotientLevel::coalgebra));
  CHECK_THROWS_AS(quotient_structure(h, cod, QuotientLevel::module_coalgebra),
                  input_error);
}
