#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hopfgal/matrix.hpp"
#include "hopfgal/subspace.hpp"
#include "support/testutil.hpp"

using namespace hopfgal;
using testutil::Rng;

TEST_CASE("scalar arithmetic and normalization") {
  Scalar a = Scalar::rational(2, 4);
  CHECK(a.to_string() == "1/2");
  CHECK((a + a).to_string() == "1");
  Scalar b = Scalar::rational(-3, -6);
  CHECK(b == a);
  CHECK((a - a).is_zero());
  CHECK((Scalar::rational(7, 3) * Scalar::rational(3, 7)).is_one());

  Scalar r = Scalar::residue(5, 12);
  CHECK(r.to_string() == "2");
  CHECK((r.inv() * r).is_one());
  CHECK((-Scalar::residue(5, 0)).is_zero());

  CHECK_THROWS_AS(Scalar::rational(1, 2) + Scalar::residue(5, 1), input_error);
  CHECK_THROWS_AS(Field::Fp(6), input_error);
}

TEST_CASE("scalar parsing round trips") {
  Field q = Field::Q();
  for (const char* s : {"0", "7", "-7", "3/4", "-12/35"}) {
    Scalar v = Scalar::parse(q, s);
    CHECK(v.to_string() == s);
  }
  CHECK(Scalar::parse(q, "4/8").to_string() == "1/2");
  Field f7 = Field::Fp(7);
  CHECK(Scalar::parse(f7, "12").to_string() == "5");
  CHECK(Scalar::parse(f7, "-1").to_string() == "6");
  CHECK_THROWS_AS(Scalar::parse(q, "x"), input_error);
  CHECK(Field::parse("F31") == Field::Fp(31));
  CHECK(Field::parse("Q") == Field::Q());
  CHECK_THROWS_AS(Field::parse("R"), input_error);
}

TEST_CASE("rref identity case over Q") {
  Field q = Field::Q();
  Matrix id = Matrix::identity(2, q);
  Matrix rhs = Matrix::column({Scalar::of_int(q, 1), Scalar::of_int(q, 2)}, q);
  auto r = rref_solve(id, rhs);
  CHECK(r.rank == 2);
  CHECK(r.kernel.rows() == 0);
  REQUIRE(r.solution.has_value());
  CHECK(r.solution->at(0, 0) == Scalar::of_int(q, 1));
  CHECK(r.solution->at(1, 0) == Scalar::of_int(q, 2));
}

TEST_CASE("rref repeated row over GF(2)") {
  Field f2 = Field::Fp(2);
  Matrix m(2, 2, f2);
  m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = Scalar::one(f2);
  auto r = rref_solve(m);
  CHECK(r.rank == 1);
  REQUIRE(r.kernel.rows() == 1);
  CHECK(r.kernel.at(0, 0) == Scalar::one(f2));
  CHECK(r.kernel.at(0, 1) == Scalar::one(f2));
}

TEST_CASE("rank-nullity on random GF(5) matrices vs full-pivot oracle") {
  Field f5 = Field::Fp(5);
  Rng rng(20240601);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix m = testutil::random_matrix(rng, 6, 6, f5);
    auto r = rref_solve(m);
    CHECK(r.rank + r.kernel.rows() == 6);
    CHECK(r.rank == testutil::rank_full_pivot(m));
    // kernel really annihilates
    for (size_t k = 0; k < r.kernel.rows(); ++k)
      CHECK(m.apply(r.kernel.row_vec(k)) == zero_vector(6, f5));
  }
}

TEST_CASE("rref solution is exact when consistent") {
  Field q = Field::Q();
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = testutil::random_matrix(rng, 4, 6, q, 3);
    Matrix x = testutil::random_matrix(rng, 6, 1, q, 3);
    Matrix rhs = m * x;
    auto r = rref_solve(m, rhs);
    REQUIRE(r.solution.has_value());
    CHECK(m * *r.solution == rhs);
  }
}

TEST_CASE("canonical form idempotence") {
  Field f3 = Field::Fp(3);
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = testutil::random_matrix(rng, 4, 5, f3);
    Subspace s = Subspace::span(m);
    CHECK(Subspace::span(s.basis()) == s);
  }
}

TEST_CASE("kron identities") {
  Field q = Field::Q();
  CHECK(kron(Matrix::identity(2, q), Matrix::identity(3, q)) ==
        Matrix::identity(6, q));

  Rng rng(5);
  Matrix a = testutil::random_matrix(rng, 3, 3, q, 4);
  Matrix b = testutil::random_matrix(rng, 2, 2, q, 4);
  auto x = testutil::random_matrix(rng, 3, 1, q, 4).col_vec(0);
  auto y = testutil::random_matrix(rng, 2, 1, q, 4).col_vec(0);
  // (a (x) b)(x (x) y) = (a x) (x) (b y)
  std::vector<Scalar> xy(6, Scalar::zero(q));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 2; ++j) xy[i * 2 + j] = x[i] * y[j];
  auto lhs = kron(a, b).apply(xy);
  auto ax = a.apply(x);
  auto by = b.apply(y);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 2; ++j) CHECK(lhs[i * 2 + j] == ax[i] * by[j]);
}

TEST_CASE("kron rank multiplicativity") {
  Field f5 = Field::Fp(5);
  Rng rng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = testutil::random_matrix(rng, 3, 3, f5);
    Matrix b = testutil::random_matrix(rng, 3, 3, f5);
    CHECK(rank_of(kron(a, b)) == rank_of(a) * rank_of(b));
  }
}

TEST_CASE("subspace idempotence and complements") {
  Field q = Field::Q();
  Subspace e1 = Subspace::span({unit_vector(2, 0, q)}, 2, q);
  Subspace e2 = Subspace::span({unit_vector(2, 1, q)}, 2, q);
  CHECK(e1.sum(e1) == e1);
  CHECK(e1.intersect(e1) == e1);
  CHECK(e1.contains(e1));
  CHECK(e1.sum(e2) == Subspace::full(2, q));
  CHECK(e1.intersect(e2).dim() == 0);
}

TEST_CASE("Grassmann identity on random GF(3) pairs with exhaustive check") {
  Field f3 = Field::Fp(3);
  Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    Subspace a = Subspace::span(testutil::random_matrix(rng, 1 + rng.below(4), 6, f3));
    Subspace b = Subspace::span(testutil::random_matrix(rng, 1 + rng.below(4), 6, f3));
    Subspace s = a.sum(b);
    Subspace i = a.intersect(b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
  // a small exhaustive cross-check of intersection membership over GF(3)^3
  Subspace a = Subspace::span({{Scalar::of_int(f3, 1), Scalar::of_int(f3, 1),
                                Scalar::of_int(f3, 0)},
                               {Scalar::of_int(f3, 0), Scalar::of_int(f3, 1),
                                Scalar::of_int(f3, 1)}},
                              3, f3);
  Subspace b = Subspace::span({{Scalar::of_int(f3, 1), Scalar::of_int(f3, 2),
                                Scalar::of_int(f3, 2)},
                               {Scalar::of_int(f3, 1), Scalar::of_int(f3, 0),
                                Scalar::of_int(f3, 1)}},
                              3, f3);
  Subspace inter = a.intersect(b);
  size_t members = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        std::vector<Scalar> v{Scalar::of_int(f3, x), Scalar::of_int(f3, y),
                              Scalar::of_int(f3, z)};
        bool in_both = a.contains(v) && b.contains(v);
        if (in_both) ++members;
        CHECK(in_both == inter.contains(v));
      }
  CHECK(members == testutil::count_points(inter));
}

TEST_CASE("quotient representatives are the non-pivot unit vectors") {
  Field q = Field::Q();
  Subspace s = Subspace::span({{Scalar::of_int(q, 1), Scalar::of_int(q, 2),
                                Scalar::of_int(q, 0), Scalar::of_int(q, 1)}},
                              4, q);
  auto reps = s.quotient_reps();
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == unit_vector(4, 1, q));
  CHECK(reps[1] == unit_vector(4, 2, q));
  CHECK(reps[2] == unit_vector(4, 3, q));
  // projection kills s and is the identity on the reps' coordinates
  Matrix pi = s.quotient_projection();
  CHECK(pi.apply(s.basis().row_vec(0)) == zero_vector(3, q));
  for (size_t k = 0; k < reps.size(); ++k)
    CHECK(pi.apply(reps[k]) == unit_vector(3, k, q));
}

TEST_CASE("field mismatch errors") {
  Field q = Field::Q();
  Field f2 = Field::Fp(2);
  Matrix a = Matrix::identity(2, q);
  Matrix b = Matrix::identity(2, f2);
  CHECK_THROWS_AS(a * b, input_error);
  CHECK_THROWS_AS(kron(a, b), input_error);
  CHECK_THROWS_AS(rref_solve(a, b), input_error);
  CHECK_THROWS_AS(Subspace::span(a).sum(Subspace::span(b)), input_error);
}
