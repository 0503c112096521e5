#include "hopfgal/hopf.hpp"

#include "hopfgal/polyroot.hpp"

#include <algorithm>

namespace hopfgal {

Scalar HopfAlgebraData::counit_of(const std::vector<Scalar>& v) const {
  return coalgebra.counit.apply(v)[0];
}

void HopfAlgebraData::validate(const std::string& name) const {
  require(algebra.dim == dim && coalgebra.dim == dim,
          name + ": component dimension mismatch");
  require(antipode.rows() == dim && antipode.cols() == dim,
          name + ": antipode has wrong shape");
  AxiomReport r = verify_axioms(*this);
  require(r.hopf_ok(), name + ": " + r.witness);
}

namespace {

// (Delta(a) Delta(b))[(x,y)] with the componentwise product on H (x) H,
// iterating only nonzero tensor entries.
std::vector<Scalar> tensor_square_product(const HopfAlgebraData& h,
                                          const std::vector<Scalar>& da,
                                          const std::vector<Scalar>& db) {
  const size_t d = h.dim;
  const Field& f = h.field;
  std::vector<Scalar> out(d * d, Scalar::zero(f));
  for (size_t ab = 0; ab < d * d; ++ab) {
    if (da[ab].is_zero()) continue;
    size_t a = ab / d, b = ab % d;
    for (size_t ce = 0; ce < d * d; ++ce) {
      if (db[ce].is_zero()) continue;
      size_t c = ce / d, e = ce % d;
      Scalar coeff = da[ab] * db[ce];
      auto ac = h.product(unit_vector(d, a, f), unit_vector(d, c, f));
      auto be = h.product(unit_vector(d, b, f), unit_vector(d, e, f));
      for (size_t x = 0; x < d; ++x) {
        if (ac[x].is_zero()) continue;
        for (size_t y = 0; y < d; ++y)
          if (!be[y].is_zero()) out[x * d + y] += coeff * ac[x] * be[y];
      }
    }
  }
  return out;
}

}  // namespace

AxiomReport verify_axioms(const HopfAlgebraData& h) {
  AxiomReport rep;
  const size_t d = h.dim;
  const Field& f = h.field;
  std::string w;

  rep.algebra = h.algebra.is_associative(&w) && h.algebra.is_unital(&w);
  if (!rep.algebra && rep.witness.empty()) rep.witness = "algebra: " + w;

  rep.coalgebra = h.coalgebra.is_coassociative(&w) && h.coalgebra.is_counital(&w);
  if (!rep.coalgebra && rep.witness.empty()) rep.witness = "coalgebra: " + w;

  // bialgebra: Delta and eps are algebra maps
  rep.bialgebra = true;
  {
    auto one = h.unit_vec();
    std::vector<Scalar> d1 = h.comul().apply(one);
    std::vector<Scalar> one_one(d * d, Scalar::zero(f));
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b) one_one[a * d + b] = one[a] * one[b];
    if (d1 != one_one) {
      rep.bialgebra = false;
      if (rep.witness.empty()) rep.witness = "bialgebra: Delta(1) != 1 (x) 1";
    }
    if (h.counit_of(one) != Scalar::one(f)) {
      rep.bialgebra = false;
      if (rep.witness.empty()) rep.witness = "bialgebra: eps(1) != 1";
    }
    for (size_t i = 0; i < d && rep.bialgebra; ++i) {
      auto di = h.comul().col_vec(i);
      Scalar ei = h.counit().at(0, i);
      for (size_t j = 0; j < d; ++j) {
        auto prod = h.product(unit_vector(d, i, f), unit_vector(d, j, f));
        if (h.counit_of(prod) != ei * h.counit().at(0, j)) {
          rep.bialgebra = false;
          if (rep.witness.empty())
            rep.witness = "bialgebra: eps not multiplicative at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
        auto lhs = h.comul().apply(prod);
        auto dj = h.comul().col_vec(j);
        auto rhs = tensor_square_product(h, di, dj);
        if (lhs != rhs) {
          rep.bialgebra = false;
          if (rep.witness.empty())
            rep.witness = "bialgebra: Delta not multiplicative at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
      }
    }
  }

  // antipode: S(h1) h2 = eps(h) 1 = h1 S(h2) columnwise
  rep.antipode = true;
  for (size_t j = 0; j < d && rep.antipode; ++j) {
    auto dj = h.comul().col_vec(j);
    std::vector<Scalar> left(d, Scalar::zero(f)), right(d, Scalar::zero(f));
    for (size_t ab = 0; ab < d * d; ++ab) {
      if (dj[ab].is_zero()) continue;
      size_t a = ab / d, b = ab % d;
      auto sa = h.antipode.col_vec(a);
      auto sb = h.antipode.col_vec(b);
      auto l = h.product(sa, unit_vector(d, b, f));
      auto r = h.product(unit_vector(d, a, f), sb);
      for (size_t x = 0; x < d; ++x) {
        left[x] += dj[ab] * l[x];
        right[x] += dj[ab] * r[x];
      }
    }
    Scalar ej = h.counit().at(0, j);
    auto target = h.unit_vec();
    for (auto& t : target) t *= ej;
    if (left != target || right != target) {
      rep.antipode = false;
      if (rep.witness.empty())
        rep.witness = "antipode law fails at basis index " + std::to_string(j);
    }
  }

  rep.cocommutative = h.coalgebra.is_cocommutative();
  rep.commutative = h.algebra.is_commutative();
  return rep;
}

HopfAlgebraData group_algebra(const PermGroup& g, const Field& field) {
  const size_t d = g.order();
  HopfAlgebraData h;
  h.dim = d;
  h.field = field;
  h.algebra.dim = d;
  h.algebra.field = field;
  h.algebra.mul = Matrix(d, d * d, field);
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) {
      size_t ab = g.index_of(g.element(a) * g.element(b));
      h.algebra.mul.at(ab, a * d + b) = Scalar::one(field);
    }
  size_t id_idx = g.index_of(Perm(g.degree()));
  h.algebra.unit = Matrix(d, 1, field);
  h.algebra.unit.at(id_idx, 0) = Scalar::one(field);

  h.coalgebra.dim = d;
  h.coalgebra.field = field;
  h.coalgebra.comul = Matrix(d * d, d, field);
  h.coalgebra.counit = Matrix(1, d, field);
  for (size_t a = 0; a < d; ++a) {
    h.coalgebra.comul.at(a * d + a, a) = Scalar::one(field);
    h.coalgebra.counit.at(0, a) = Scalar::one(field);
  }

  h.antipode = Matrix(d, d, field);
  for (size_t a = 0; a < d; ++a)
    h.antipode.at(g.index_of(g.element(a).inverse()), a) = Scalar::one(field);

  h.validate("group_algebra(" + std::to_string(g.order()) + ")");
  return h;
}

HopfAlgebraData dualize_hopf(const HopfAlgebraData& h) {
  HopfAlgebraData out;
  out.dim = h.dim;
  out.field = h.field;
  out.algebra.dim = h.dim;
  out.algebra.field = h.field;
  out.algebra.mul = h.comul().transpose();
  out.algebra.unit = h.counit().transpose();
  out.coalgebra.dim = h.dim;
  out.coalgebra.field = h.field;
  out.coalgebra.comul = h.mul().transpose();
  out.coalgebra.counit = h.unit().transpose();
  out.antipode = h.antipode.transpose();
  return out;
}

Matrix solve_antipode(const FinAlgebra& a, const FinCoalgebra& c) {
  require(a.dim == c.dim && a.field == c.field,
          "antipode solve: algebra/coalgebra mismatch");
  const size_t d = a.dim;
  const Field& f = a.field;
  // mul (S (x) id) comul = unit counit, linear in the d^2 entries of S
  Matrix sys(d * d, d * d, f);
  Matrix rhs(d * d, 1, f);
  Matrix target = a.unit * c.counit;  // d x d
  for (size_t j = 0; j < d; ++j) {
    auto dj = c.comul.col_vec(j);
    for (size_t x = 0; x < d; ++x) rhs.at(x * d + j, 0) = target.at(x, j);
    for (size_t ab = 0; ab < d * d; ++ab) {
      if (dj[ab].is_zero()) continue;
      size_t aa = ab / d, b = ab % d;
      // S(e_aa) contributes sum_k S_{k,aa} e_k; product e_k e_b
      for (size_t k = 0; k < d; ++k) {
        auto prod = a.mul.col_vec(k * d + b);
        for (size_t x = 0; x < d; ++x)
          if (!prod[x].is_zero())
            sys.at(x * d + j, k * d + aa) += dj[ab] * prod[x];
      }
    }
  }
  auto sol = rref_solve(sys, rhs);
  require(sol.solution.has_value() && sol.rank == d * d,
          "no antipode: convolution system is singular");
  Matrix s(d, d, f);
  for (size_t k = 0; k < d; ++k)
    for (size_t aa = 0; aa < d; ++aa) s.at(k, aa) = sol.solution->at(k * d + aa, 0);
  return s;
}

// ---------------------------------------------------------------------------
// grouplikes: characters of the dual algebra by eigenspace splitting

GrouplikeReport grouplikes(const FinCoalgebra& c) {
  FinAlgebra a = dualize(c);
  require(a.is_commutative(),
          "grouplike extraction requires a commutative dual algebra");
  const size_t d = c.dim;
  const Field& f = c.field;
  GrouplikeReport rep;

  struct Piece {
    Subspace w;
    std::vector<Scalar> eigen;  // eigenvalue of T_i per processed operator
  };
  std::vector<Piece> pieces{{Subspace::full(d, f), {}}};
  for (size_t i = 0; i < d; ++i) {
    Matrix t = a.left_mul(unit_vector(d, i, f)).transpose();
    std::vector<Piece> next;
    for (const Piece& piece : pieces) {
      const Subspace& w = piece.w;
      const size_t k = w.dim();
      // restriction of t to w (t-invariant: common eigenspace of commuting ops)
      Matrix r(k, k, f);
      for (size_t j = 0; j < k; ++j) {
        auto col = w.coordinates(t.apply(w.basis().row_vec(j)));
        for (size_t x = 0; x < k; ++x) r.at(x, j) = col[x];
      }
      size_t covered = 0;
      for (const Scalar& lam : rational_roots(char_poly(r), f)) {
        Matrix shifted = r - Matrix::identity(k, f).scaled(lam);
        Subspace eig = kernel_space(shifted);
        if (eig.dim() == 0) continue;
        std::vector<std::vector<Scalar>> rows;
        for (size_t e = 0; e < eig.dim(); ++e) {
          std::vector<Scalar> v(d, Scalar::zero(f));
          for (size_t j = 0; j < k; ++j) {
            const Scalar& cj = eig.basis().at(e, j);
            if (cj.is_zero()) continue;
            for (size_t x = 0; x < d; ++x) v[x] += cj * w.basis().at(j, x);
          }
          rows.push_back(std::move(v));
        }
        Piece np{Subspace::span(rows, d, f), piece.eigen};
        np.eigen.push_back(lam);
        covered += np.w.dim();
        next.push_back(std::move(np));
      }
      rep.unsplit_dim += k - covered;
    }
    pieces = std::move(next);
  }
  rep.fully_split = rep.unsplit_dim == 0;

  for (const Piece& piece : pieces) {
    // for a character x, x(a_i) is exactly its i-th coordinate
    const std::vector<Scalar>& x = piece.eigen;
    auto dx = c.comul.apply(x);
    bool grouplike = true;
    for (size_t p2 = 0; p2 < d * d && grouplike; ++p2)
      if (dx[p2] != x[p2 / d] * x[p2 % d]) grouplike = false;
    if (grouplike && c.counit.apply(x)[0] == Scalar::one(f))
      rep.grouplikes.push_back(x);
  }
  std::sort(rep.grouplikes.begin(), rep.grouplikes.end(),
            [](const auto& u, const auto& v) {
              for (size_t i = 0; i < u.size(); ++i) {
                if (u[i] == v[i]) continue;
                return u[i].to_string() < v[i].to_string();
              }
              return false;
            });
  rep.grouplikes.erase(std::unique(rep.grouplikes.begin(),
                                   rep.grouplikes.end()),
                       rep.grouplikes.end());
  return rep;
}

// ---------------------------------------------------------------------------

ClassifiedSubspace classify_subspace(const HopfAlgebraData& h,
                                     const Subspace& s) {
  require(s.ambient() == h.dim && s.field() == h.field,
          "subspace does not live in H");
  const size_t d = h.dim;
  const Field& f = h.field;
  ClassifiedSubspace out;
  out.subspace = s;

  auto sbasis = [&](size_t j) { return s.basis().row_vec(j); };

  out.left_ideal = true;
  out.right_ideal = true;
  for (size_t i = 0; i < d && (out.left_ideal || out.right_ideal); ++i) {
    auto ei = unit_vector(d, i, f);
    for (size_t j = 0; j < s.dim(); ++j) {
      if (out.left_ideal && !s.contains(h.product(ei, sbasis(j))))
        out.left_ideal = false;
      if (out.right_ideal && !s.contains(h.product(sbasis(j), ei)))
        out.right_ideal = false;
    }
  }

  // two-sided coideal: eps(s) = 0 and Delta(s) in H (x) s + s (x) H
  out.two_sided_coideal = true;
  for (size_t j = 0; j < s.dim(); ++j)
    if (!h.counit_of(sbasis(j)).is_zero()) out.two_sided_coideal = false;
  if (out.two_sided_coideal && s.dim() > 0) {
    std::vector<std::vector<Scalar>> gens;
    Matrix id = Matrix::identity(d, f);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < s.dim(); ++j) {
        gens.push_back(kron(Matrix::column(unit_vector(d, i, f), f),
                            Matrix::column(sbasis(j), f)).col_vec(0));
        gens.push_back(kron(Matrix::column(sbasis(j), f),
                            Matrix::column(unit_vector(d, i, f), f)).col_vec(0));
      }
    Subspace hs_sh = Subspace::span(gens, d * d, f);
    for (size_t j = 0; j < s.dim(); ++j)
      if (!hs_sh.contains(h.comul().apply(sbasis(j))))
        out.two_sided_coideal = false;
  }

  bool antipode_stable = true;
  for (size_t j = 0; j < s.dim(); ++j)
    if (!s.contains(h.antipode.apply(sbasis(j)))) antipode_stable = false;

  out.hopf_ideal = out.left_ideal && out.right_ideal &&
                   out.two_sided_coideal && antipode_stable;

  // subalgebra: unital and multiplicatively closed
  out.subalgebra = s.contains(h.unit_vec());
  for (size_t i = 0; i < s.dim() && out.subalgebra; ++i)
    for (size_t j = 0; j < s.dim(); ++j)
      if (!s.contains(h.product(sbasis(i), sbasis(j)))) {
        out.subalgebra = false;
        break;
      }

  // subcoalgebra: Delta(s) in s (x) s
  out.subcoalgebra = true;
  if (s.dim() > 0) {
    std::vector<std::vector<Scalar>> gens;
    for (size_t i = 0; i < s.dim(); ++i)
      for (size_t j = 0; j < s.dim(); ++j)
        gens.push_back(kron(Matrix::column(sbasis(i), f),
                            Matrix::column(sbasis(j), f)).col_vec(0));
    Subspace ss = Subspace::span(gens, d * d, f);
    for (size_t j = 0; j < s.dim(); ++j)
      if (!ss.contains(h.comul().apply(sbasis(j)))) out.subcoalgebra = false;
  }

  out.hopf_subalgebra = out.subalgebra && out.subcoalgebra && antipode_stable;

  // normal: h_(1) x S(h_(2)) and S(h_(1)) x h_(2) stay in s
  out.normal_hopf_subalgebra = out.hopf_subalgebra;
  for (size_t i = 0; i < d && out.normal_hopf_subalgebra; ++i) {
    auto di = h.comul().col_vec(i);
    for (size_t j = 0; j < s.dim(); ++j) {
      std::vector<Scalar> adl(d, Scalar::zero(f)), adr(d, Scalar::zero(f));
      for (size_t ab = 0; ab < d * d; ++ab) {
        if (di[ab].is_zero()) continue;
        size_t a = ab / d, b = ab % d;
        auto l = h.product(h.product(unit_vector(d, a, f), sbasis(j)),
                           h.antipode.col_vec(b));
        auto r = h.product(h.product(h.antipode.col_vec(a), sbasis(j)),
                           unit_vector(d, b, f));
        for (size_t x = 0; x < d; ++x) {
          adl[x] += di[ab] * l[x];
          adr[x] += di[ab] * r[x];
        }
      }
      if (!s.contains(adl) || !s.contains(adr)) {
        out.normal_hopf_subalgebra = false;
        break;
      }
    }
  }
  return out;
}

Subspace newman_schneider(const HopfAlgebraData& h, const Subspace& x,
                          NewmanSchneiderDir dir) {
  require(verify_axioms(h).cocommutative,
          "Newman-Schneider correspondence needs a cocommutative H");
  const size_t d = h.dim;
  const Field& f = h.field;
  ClassifiedSubspace cls = classify_subspace(h, x);
  if (dir == NewmanSchneiderDir::phi) {
    require(cls.left_ideal && cls.two_sided_coideal,
            "phi needs a left ideal two-sided coideal");
    Matrix pi = x.quotient_projection();           // q x d
    Matrix id = Matrix::identity(d, f);
    Matrix m = kron(pi, id) * h.comul();           // qd x d
    Matrix pi1 = pi * h.unit();                    // q x 1
    m = m - kron(pi1, id);
    return kernel_space(m);
  }
  require(cls.hopf_subalgebra, "psi needs a Hopf subalgebra");
  Subspace aplus = x.intersect(kernel_space(h.counit()));
  std::vector<std::vector<Scalar>> rows;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < aplus.dim(); ++j)
      rows.push_back(
          h.product(unit_vector(d, i, f), aplus.basis().row_vec(j)));
  return Subspace::span(rows, d, f);
}

QuotientStructure quotient_structure(const HopfAlgebraData& h,
                                     const Subspace& i, QuotientLevel level) {
  ClassifiedSubspace cls = classify_subspace(h, i);
  require(cls.two_sided_coideal, "quotient needs a two-sided coideal");
  if (level != QuotientLevel::coalgebra)
    require(cls.left_ideal, "module-coalgebra quotient needs a left ideal");
  if (level == QuotientLevel::hopf)
    require(cls.hopf_ideal, "Hopf quotient needs a Hopf ideal");

  const size_t d = h.dim;
  const Field& f = h.field;
  QuotientStructure out;
  out.projection = i.quotient_projection();
  auto reps = i.quotient_reps();
  const size_t q = reps.size();
  out.section = Matrix(d, q, f);
  for (size_t c = 0; c < q; ++c)
    for (size_t r = 0; r < d; ++r) out.section.at(r, c) = reps[c][r];

  out.coalg.dim = q;
  out.coalg.field = f;
  out.coalg.comul = kron(out.projection, out.projection) * h.comul() * out.section;
  out.coalg.counit = h.counit() * out.section;
  out.coalg.validate("quotient coalgebra");

  if (level != QuotientLevel::coalgebra) {
    out.action = out.projection * h.mul() * kron(Matrix::identity(d, f),
                                                 out.section);
    // well-definedness: the action kills H (x) I
    for (size_t a = 0; a < d; ++a)
      for (size_t j = 0; j < i.dim(); ++j) {
        auto v = h.product(unit_vector(d, a, f), i.basis().row_vec(j));
        certify(out.projection.apply(v) == zero_vector(q, f),
                "quotient action not well-defined");
      }
  }
  if (level == QuotientLevel::hopf) {
    HopfAlgebraData qh;
    qh.dim = q;
    qh.field = f;
    qh.algebra.dim = q;
    qh.algebra.field = f;
    qh.algebra.mul = out.projection * h.mul() * kron(out.section, out.section);
    qh.algebra.unit = out.projection * h.unit();
    qh.coalgebra = out.coalg;
    qh.antipode = out.projection * h.antipode * out.section;
    qh.validate("quotient Hopf algebra");
    out.hopf = std::move(qh);
  }
  return out;
}

bool hopf_equal_under_matching(const HopfAlgebraData& h1,
                               const HopfAlgebraData& h2,
                               const std::vector<size_t>& match) {
  if (h1.dim != h2.dim || !(h1.field == h2.field)) return false;
  const size_t d = h1.dim;
  Matrix p(d, d, h1.field);  // e_i -> f_{match[i]}
  for (size_t i = 0; i < d; ++i) p.at(match[i], i) = Scalar::one(h1.field);
  bool ok = p * h1.algebra.mul == h2.algebra.mul * kron(p, p);
  ok = ok && p * h1.algebra.unit == h2.algebra.unit;
  ok = ok && kron(p, p) * h1.comul() == h2.comul() * p;
  ok = ok && h1.counit() == h2.counit() * p;
  ok = ok && p * h1.antipode == h2.antipode * p;
  return ok;
}

Subspace group_coset_kernel(const PermGroup& g, const PermGroup& n,
                            const Field& field) {
  require(n.is_subgroup_of(g), "N is not a subgroup of G");
  const size_t d = g.order();
  std::vector<std::vector<Scalar>> rows;
  for (size_t gi = 0; gi < d; ++gi)
    for (const Perm& w : n.elements()) {
      if (w.is_identity()) continue;
      size_t gn = g.index_of(g.element(gi) * w);
      std::vector<Scalar> v(d, Scalar::zero(field));
      v[gi] += Scalar::one(field);
      v[gn] -= Scalar::one(field);
      rows.push_back(std::move(v));
    }
  return Subspace::span(rows, d, field);
}

Subspace subgroup_algebra_span(const PermGroup& g, const PermGroup& n,
                               const Field& field) {
  require(n.is_subgroup_of(g), "N is not a subgroup of G");
  std::vector<std::vector<Scalar>> rows;
  for (const Perm& w : n.elements())
    rows.push_back(unit_vector(g.order(), g.index_of(w), field));
  return Subspace::span(rows, g.order(), field);
}

}  // namespace hopfgal
