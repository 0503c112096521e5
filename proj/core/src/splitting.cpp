#include "hopfgal/splitting.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hopfgal/gf.hpp"

namespace hopfgal {

namespace {

bool is_ring_map(const FinAlgebra& a, const Matrix& m) {
  if (m.apply(a.unit_vec()) != a.unit_vec()) return false;
  const size_t d = a.dim;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      auto lhs = m.apply(a.product(unit_vector(d, i, a.field),
                                   unit_vector(d, j, a.field)));
      auto rhs = a.product(m.apply(unit_vector(d, i, a.field)),
                           m.apply(unit_vector(d, j, a.field)));
      if (lhs != rhs) return false;
    }
  return true;
}

// fixed space of a set of operators on Ltilde
Subspace fixed_by(const std::vector<Matrix>& ops, size_t dim, const Field& f) {
  Matrix stacked(0, dim, f);
  Matrix id = Matrix::identity(dim, f);
  for (const Matrix& m : ops) stacked = stacked.vstack(m - id);
  if (stacked.rows() == 0) return Subspace::full(dim, f);
  return kernel_space(stacked);
}

}  // namespace

void SplittingDatum::validate() {
  const size_t ng = labels.size();
  require(ng > 0, "no automorphisms");
  require(autos.size() == ng && table.size() == ng,
          "labels, matrices and table sizes disagree");
  closure_algebra.validate("closure algebra");
  const Field& f = closure_algebra.field;
  const size_t dt = closure_algebra.dim;

  for (size_t a = 0; a < ng; ++a) {
    require(autos[a].rows() == dt && autos[a].cols() == dt,
            "automorphism '" + labels[a] + "' has wrong shape");
    require(is_ring_map(closure_algebra, autos[a]),
            "automorphism '" + labels[a] + "' is not a ring map");
    require(rank_of(autos[a]) == dt,
            "automorphism '" + labels[a] + "' is singular");
  }
  for (size_t a = 0; a < ng; ++a) {
    require(table[a].size() == ng, "group table row has wrong size");
    for (size_t b = 0; b < ng; ++b) {
      require(table[a][b] < ng, "group table entry out of range");
      require(autos[table[a][b]] == autos[a] * autos[b],
              "group table violation at (" + labels[a] + ", " + labels[b] +
                  "): matrix of the product differs");
    }
  }
  // identity label
  size_t id_label = ng;
  for (size_t a = 0; a < ng && id_label == ng; ++a) {
    bool is_id = true;
    for (size_t b = 0; b < ng; ++b)
      if (table[a][b] != b) { is_id = false; break; }
    if (is_id) id_label = a;
  }
  require(id_label < ng, "group table has no identity");

  // regular permutation model of the table
  std::vector<Perm> perms;
  for (size_t a = 0; a < ng; ++a) {
    std::vector<size_t> img(ng);
    for (size_t b = 0; b < ng; ++b) img[b] = table[a][b];
    perms.emplace_back(std::move(img));
  }
  g = closure(ng, perms);
  require(g.order() == ng, "group table is not closed");
  element_of_label.assign(ng, 0);
  label_of_element.assign(ng, 0);
  for (size_t a = 0; a < ng; ++a) {
    size_t e = g.index_of(perms[a]);
    element_of_label[a] = e;
    label_of_element[e] = a;
  }

  require(dt == ng, "dim Ltilde != |G| (closure is not Galois over K)");
  std::vector<Matrix> all_ops = autos;
  Subspace fixed_all = fixed_by(all_ops, dt, f);
  require(fixed_all == Subspace::span({closure_algebra.unit_vec()}, dt, f),
          "Ltilde^G != K.1");

  std::vector<Perm> gp_perms;
  for (size_t lbl : gprime_labels) {
    require(lbl < ng, "G' label out of range");
    gp_perms.push_back(perms[lbl]);
  }
  g_prime = closure(ng, gp_perms);

  std::vector<Matrix> gp_ops;
  for (const Perm& p : g_prime.elements())
    gp_ops.push_back(autos[label_of_element[g.index_of(p)]]);
  l_subspace = fixed_by(gp_ops, dt, f);

  cosets = coset_datum(g, g_prime);
  require(l_subspace.dim() == cosets.cosets.size(), "dim L != [G:G']");

  const size_t dl = l_subspace.dim();
  l_embedding = l_subspace.basis().transpose();
  l_algebra.dim = dl;
  l_algebra.field = f;
  l_algebra.mul = Matrix(dl, dl * dl, f);
  for (size_t i = 0; i < dl; ++i)
    for (size_t j = 0; j < dl; ++j) {
      auto prod = closure_algebra.product(l_subspace.basis().row_vec(i),
                                          l_subspace.basis().row_vec(j));
      auto coords = l_subspace.coordinates(prod);
      for (size_t k = 0; k < dl; ++k) l_algebra.mul.at(k, i * dl + j) = coords[k];
    }
  l_algebra.unit = Matrix::column(
      l_subspace.coordinates(closure_algebra.unit_vec()), f);
  l_algebra.validate("L");

  coset_embedding.clear();
  for (const auto& coset : cosets.cosets) {
    Matrix emb = autos[label_of_element[coset[0]]] * l_embedding;
    for (size_t m : coset)
      require(autos[label_of_element[m]] * l_embedding == emb,
              "coset embedding depends on the representative");
    coset_embedding.push_back(std::move(emb));
  }
  // Dedekind-style identification Hom_K(L, Ltilde) = Ltilde[G/G']: the coset
  // embeddings are Ltilde-linearly independent
  const size_t nc = cosets.cosets.size();
  Matrix dep(dt * dl, nc * dt, f);
  for (size_t c = 0; c < nc; ++c)
    for (size_t t = 0; t < dt; ++t) {
      Matrix scaled = closure_algebra.left_mul(unit_vector(dt, t, f)) *
                      coset_embedding[c];
      for (size_t a = 0; a < dt; ++a)
        for (size_t b = 0; b < dl; ++b)
          dep.at(a * dl + b, c * dt + t) = scaled.at(a, b);
    }
  require(rank_of(dep) == nc * dt,
          "coset embeddings are Ltilde-linearly dependent");
}

namespace {

struct LnSpace {
  size_t nn = 0, dt = 0;
  Field f = Field::Q();

  size_t idx(size_t n, size_t t) const { return n * dt + t; }
  std::vector<Scalar> block(const std::vector<Scalar>& v, size_t n) const {
    return {v.begin() + n * dt, v.begin() + (n + 1) * dt};
  }
};

}  // namespace

HGStructure descend_hopf_and_action(const SplittingDatum& datum,
                                    const PermGroup& n_grp) {
  const Field& f = datum.closure_algebra.field;
  const size_t dt = datum.closure_algebra.dim;
  const size_t nn = n_grp.order();
  const size_t dl = datum.l_algebra.dim;
  require(n_grp.degree() == datum.cosets.cosets.size(),
          "N degree does not match the coset count");
  require(n_grp.is_regular(), "N is not regular");
  require(datum.cosets.lambda.normalizes(n_grp),
          "N is not normalized by lambda(G)");

  HGStructure s;
  s.n_grp = n_grp;
  s.g_action = conjugation_action(datum.g, datum.cosets, n_grp);
  s.beta = orbit_beta(n_grp);

  LnSpace ln{nn, dt, f};

  // H = (Ltilde[N])^G: kernel of the stacked semilinear operators
  Matrix stacked(0, nn * dt, f);
  Matrix id = Matrix::identity(nn * dt, f);
  const auto& gens = datum.g.generators().empty()
                         ? std::vector<Perm>{Perm(datum.g.degree())}
                         : datum.g.generators();
  for (const Perm& gen : gens) {
    size_t e = datum.g.index_of(gen);
    const Matrix& m = datum.autos[datum.label_of_element[e]];
    Matrix op(nn * dt, nn * dt, f);
    for (size_t n = 0; n < nn; ++n) {
      size_t gn = s.g_action.act(e, n);
      for (size_t tr = 0; tr < dt; ++tr)
        for (size_t tc = 0; tc < dt; ++tc)
          if (!m.at(tr, tc).is_zero())
            op.at(ln.idx(gn, tr), ln.idx(n, tc)) = m.at(tr, tc);
    }
    stacked = stacked.vstack(op - id);
  }
  s.h_in_ln = stacked.rows() == 0 ? Subspace::full(nn * dt, f)
                                  : kernel_space(stacked);
  certify(s.h_in_ln.dim() == nn,
          "descent dimension mismatch: dim H = " +
              std::to_string(s.h_in_ln.dim()) + ", expected " +
              std::to_string(nn));

  auto hvec = [&](size_t i) { return s.h_in_ln.basis().row_vec(i); };

  // multiplication in Ltilde[N] with the right-translation law n*m = m o n
  auto ln_product = [&](const std::vector<Scalar>& u,
                        const std::vector<Scalar>& v) {
    std::vector<Scalar> w(nn * dt, Scalar::zero(f));
    for (size_t n = 0; n < nn; ++n) {
      auto un = ln.block(u, n);
      bool un_zero = true;
      for (const auto& x : un)
        if (!x.is_zero()) { un_zero = false; break; }
      if (un_zero) continue;
      for (size_t m2 = 0; m2 < nn; ++m2) {
        auto vm = ln.block(v, m2);
        bool vm_zero = true;
        for (const auto& x : vm)
          if (!x.is_zero()) { vm_zero = false; break; }
        if (vm_zero) continue;
        size_t k = n_grp.index_of(n_grp.element(m2) * n_grp.element(n));
        auto prod = datum.closure_algebra.product(un, vm);
        for (size_t t = 0; t < dt; ++t) w[ln.idx(k, t)] += prod[t];
      }
    }
    return w;
  };

  HopfAlgebraData h;
  h.dim = nn;
  h.field = f;
  h.algebra.dim = nn;
  h.algebra.field = f;
  h.algebra.mul = Matrix(nn, nn * nn, f);
  for (size_t i = 0; i < nn; ++i)
    for (size_t j = 0; j < nn; ++j) {
      auto w = ln_product(hvec(i), hvec(j));
      certify(s.h_in_ln.contains(w), "descent: H is not closed under product");
      auto coords = s.h_in_ln.coordinates(w);
      for (size_t k = 0; k < nn; ++k) h.algebra.mul.at(k, i * nn + j) = coords[k];
    }
  {
    std::vector<Scalar> one(nn * dt, Scalar::zero(f));
    size_t id_n = n_grp.index_of(Perm(n_grp.degree()));
    auto u = datum.closure_algebra.unit_vec();
    for (size_t t = 0; t < dt; ++t) one[ln.idx(id_n, t)] = u[t];
    certify(s.h_in_ln.contains(one), "descent: 1 not in H");
    h.algebra.unit = Matrix::column(s.h_in_ln.coordinates(one), f);
  }

  // comultiplication: solve Delta(h_k) = sum d_ij (h_i (x)_Ltilde h_j) over K
  {
    Matrix sys(nn * nn * dt, nn * nn, f);
    for (size_t col = 0; col < nn * nn; ++col) {
      size_t i = col / nn, j = col % nn;
      for (size_t n = 0; n < nn; ++n)
        for (size_t m2 = 0; m2 < nn; ++m2) {
          auto prod = datum.closure_algebra.product(ln.block(hvec(i), n),
                                                    ln.block(hvec(j), m2));
          for (size_t t = 0; t < dt; ++t)
            sys.at((n * nn + m2) * dt + t, col) = prod[t];
        }
    }
    Matrix rhs(nn * nn * dt, nn, f);
    for (size_t k = 0; k < nn; ++k)
      for (size_t n = 0; n < nn; ++n) {
        auto b = ln.block(hvec(k), n);
        for (size_t t = 0; t < dt; ++t) rhs.at((n * nn + n) * dt + t, k) = b[t];
      }
    auto sol = rref_solve(sys, rhs);
    certify(sol.rank == nn * nn,
            "descent: h_i (x) h_j do not form an Ltilde-basis");
    certify(sol.solution.has_value(),
            "descent: comultiplication is not K-rational");
    h.coalgebra.dim = nn;
    h.coalgebra.field = f;
    h.coalgebra.comul = Matrix(nn * nn, nn, f);
    for (size_t col = 0; col < nn * nn; ++col)
      for (size_t k = 0; k < nn; ++k)
        h.coalgebra.comul.at(col, k) = sol.solution->at(col, k);
  }

  // counit: eps(h_k) = sum_n (h_k)_n, must be K-rational
  {
    h.coalgebra.counit = Matrix(1, nn, f);
    auto u = datum.closure_algebra.unit_vec();
    size_t lead = 0;
    while (u[lead].is_zero()) ++lead;
    for (size_t k = 0; k < nn; ++k) {
      std::vector<Scalar> total(dt, Scalar::zero(f));
      for (size_t n = 0; n < nn; ++n) {
        auto b = ln.block(hvec(k), n);
        for (size_t t = 0; t < dt; ++t) total[t] += b[t];
      }
      Scalar c = total[lead] / u[lead];
      std::vector<Scalar> check = total;
      for (size_t t = 0; t < dt; ++t) check[t] -= c * u[t];
      certify(check == zero_vector(dt, f), "descent: counit not K-rational");
      h.coalgebra.counit.at(0, k) = c;
    }
  }

  // antipode: S(sum u_n n) = sum u_n n^{-1}
  {
    h.antipode = Matrix(nn, nn, f);
    for (size_t k = 0; k < nn; ++k) {
      std::vector<Scalar> sv(nn * dt, Scalar::zero(f));
      for (size_t n = 0; n < nn; ++n) {
        size_t ninv = n_grp.index_of(n_grp.element(n).inverse());
        auto b = ln.block(hvec(k), n);
        for (size_t t = 0; t < dt; ++t) sv[ln.idx(ninv, t)] = b[t];
      }
      certify(s.h_in_ln.contains(sv), "descent: S does not preserve H");
      auto coords = s.h_in_ln.coordinates(sv);
      for (size_t i = 0; i < nn; ++i) h.antipode.at(i, k) = coords[i];
    }
  }

  AxiomReport axioms = verify_axioms(h);
  certify(axioms.hopf_ok(), "descended H fails the Hopf axioms: " +
                                axioms.witness);

  // action: (sum u_n n) . y = sum u_n emb_{beta(n)}(y)
  Matrix action(dl, nn * dl, f);
  for (size_t i = 0; i < nn; ++i)
    for (size_t b = 0; b < dl; ++b) {
      std::vector<Scalar> w(dt, Scalar::zero(f));
      for (size_t n = 0; n < nn; ++n) {
        auto emb_y = datum.coset_embedding[s.beta[n]].apply(
            unit_vector(dl, b, f));
        auto prod = datum.closure_algebra.product(ln.block(hvec(i), n), emb_y);
        for (size_t t = 0; t < dt; ++t) w[t] += prod[t];
      }
      certify(datum.l_subspace.contains(w), "descent: action leaves L");
      auto coords = datum.l_subspace.coordinates(w);
      for (size_t a = 0; a < dl; ++a) action.at(a, i * dl + b) = coords[a];
    }

  s.datum.hopf = std::move(h);
  s.datum.algebra = datum.l_algebra;
  s.datum.action = std::move(action);

  auto marep = verify_module_algebra(s.datum);
  certify(marep.ok(), "descended datum is not a module algebra: " +
                          marep.witness);
  s.can = canonical_map(s.datum);
  certify(s.can.bijective, "descended structure has a non-bijective can");
  return s;
}

std::vector<HGStructure> enumerate_structures(const SplittingDatum& datum,
                                              size_t jobs) {
  std::vector<PermGroup> cands = hg_candidates(datum.g, datum.g_prime);
  std::vector<HGStructure> out(cands.size());
  if (jobs <= 1 || cands.size() <= 1) {
    for (size_t i = 0; i < cands.size(); ++i)
      out[i] = descend_hopf_and_action(datum, cands[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(cands.size());
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  size_t threads = std::min(jobs, cands.size());
  for (size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= cands.size()) return;
        try {
          out[i] = descend_hopf_and_action(datum, cands[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

PermGroup right_regular_candidate(const SplittingDatum& datum) {
  require(datum.g_prime.order() == 1,
          "right-regular candidate needs G' = 1");
  const size_t nc = datum.cosets.cosets.size();
  std::vector<Perm> gens;
  for (const Perm& h : datum.g.generators()) {
    std::vector<size_t> img(nc);
    for (size_t c = 0; c < nc; ++c) {
      size_t rep = datum.cosets.cosets[c][0];
      img[c] = datum.cosets.coset_of[datum.g.index_of(datum.g.element(rep) * h)];
    }
    gens.emplace_back(std::move(img));
  }
  return closure(nc, gens);
}

void verify_classical_recovery(const SplittingDatum& datum,
                               const HGStructure& s) {
  require(datum.g_prime.order() == 1, "classical recovery needs G' = 1");
  certify(s.n_grp == right_regular_candidate(datum),
          "structure is not the right-regular one");
  const size_t nn = s.n_grp.order();
  std::vector<size_t> match(nn);
  for (size_t i = 0; i < nn; ++i)
    match[i] = datum.cosets.cosets[s.beta[i]][0];
  HopfAlgebraData kg = group_algebra(datum.g, datum.closure_algebra.field);
  certify(hopf_equal_under_matching(s.datum.hopf, kg, match),
          "classical H differs from K[G] tensor-for-tensor");
  // action tensors match: basis i acts as the group element match[i]
  const size_t dl = datum.l_algebra.dim;
  const Field& f = datum.closure_algebra.field;
  for (size_t i = 0; i < nn; ++i) {
    Matrix expect(dl, dl, f);
    const Matrix& m = datum.autos[datum.label_of_element[match[i]]];
    for (size_t b = 0; b < dl; ++b) {
      auto col = datum.l_subspace.coordinates(
          m.apply(datum.l_subspace.basis().row_vec(b)));
      for (size_t a = 0; a < dl; ++a) expect.at(a, b) = col[a];
    }
    certify(s.datum.action_of(unit_vector(nn, i, f)) == expect,
            "classical action differs from the Galois action");
  }
}

GroupSideReport group_side_correspondence(const SplittingDatum& datum,
                                          const HGStructure& s) {
  const Field& f = datum.closure_algebra.field;
  const size_t dt = datum.closure_algebra.dim;
  const size_t nn = s.n_grp.order();
  LnSpace ln{nn, dt, f};

  GroupSideReport report;
  auto beta = s.beta;

  for (const PermGroup& v : equivariant_subgroups(s.g_action, false)) {
    GroupSideRow row;
    row.v = v;
    auto gp = gp_act_correspondence(datum.g, datum.g_prime, s.n_grp,
                                    s.g_action, beta, v);
    row.u = gp.u;
    row.v_normal = v.is_normal_in(s.n_grp);

    // L^U inside Ltilde, then inside L
    std::vector<Matrix> u_ops;
    for (const Perm& u : row.u.elements())
      u_ops.push_back(datum.autos[datum.label_of_element[datum.g.index_of(u)]]);
    Subspace lu_tilde = fixed_by(u_ops, dt, f);
    Subspace lu = preimage(datum.l_embedding, lu_tilde);

    // ideal, route 1: H cap Ltilde (x) ker(Ltilde[N] -> Ltilde[N/V])
    std::vector<std::vector<Scalar>> ker_rows;
    for (size_t n = 0; n < nn; ++n)
      for (const Perm& w : v.elements()) {
        if (w.is_identity()) continue;
        size_t vn = s.n_grp.index_of(w * s.n_grp.element(n));
        for (size_t t = 0; t < dt; ++t) {
          std::vector<Scalar> r(nn * dt, Scalar::zero(f));
          r[ln.idx(n, t)] = Scalar::one(f);
          r[ln.idx(vn, t)] = -Scalar::one(f);
          ker_rows.push_back(std::move(r));
        }
      }
    Subspace w_v = Subspace::span(ker_rows, nn * dt, f);
    Subspace i1_amb = s.h_in_ln.intersect(w_v);
    std::vector<std::vector<Scalar>> i1_rows;
    for (size_t r = 0; r < i1_amb.dim(); ++r)
      i1_rows.push_back(s.h_in_ln.coordinates(i1_amb.basis().row_vec(r)));
    Subspace i1 = Subspace::span(i1_rows, nn, f);

    // ideal, route 2: psi(H cap Ltilde[V])
    std::vector<std::vector<Scalar>> lv_rows;
    for (const Perm& w : v.elements())
      for (size_t t = 0; t < dt; ++t)
        lv_rows.push_back(
            unit_vector(nn * dt, ln.idx(s.n_grp.index_of(w), t), f));
    Subspace lv = Subspace::span(lv_rows, nn * dt, f);
    Subspace hp_amb = s.h_in_ln.intersect(lv);
    std::vector<std::vector<Scalar>> hp_rows;
    for (size_t r = 0; r < hp_amb.dim(); ++r)
      hp_rows.push_back(s.h_in_ln.coordinates(hp_amb.basis().row_vec(r)));
    Subspace hprime = Subspace::span(hp_rows, nn, f);
    certify(hprime.dim() == v.order(),
            "descended Hopf subalgebra has wrong dimension");
    Subspace i2 = newman_schneider(s.datum.hopf, hprime,
                                   NewmanSchneiderDir::psi);
    certify(i1 == i2, "kernel-descent ideal differs from psi(Ltilde[V]^G)");

    row.ideal = i1;
    certify(row.ideal.dim() == nn - gp.n_mod_v, "ideal dimension mismatch");
    auto cls = classify_subspace(s.datum.hopf, row.ideal);
    certify(cls.left_ideal && cls.two_sided_coideal,
            "group-side ideal fails classification");
    row.hopf_ideal = cls.hopf_ideal;
    certify(row.hopf_ideal == row.v_normal,
            "Hopf ideals do not match normal subgroups");

    row.l0 = fixed_space(s.datum, row.ideal);
    certify(row.l0 == lu, "L^I != L^U");
    row.h_normal = subextension_flags(s.datum, row.l0).h_normal;
    certify(row.h_normal == row.v_normal,
            "H-normal fields do not match normal subgroups");
    report.rows.push_back(std::move(row));
  }

  std::vector<Subspace> candidates;
  for (const auto& row : report.rows) candidates.push_back(row.ideal);
  report.ideal_lattice = correspondence_lattice(s.datum, candidates);
  for (size_t r = 0; r < report.rows.size(); ++r) {
    certify(report.ideal_lattice.rows[r].l0 == report.rows[r].l0,
            "ideal-side and group-side lattices disagree");
    certify(report.ideal_lattice.rows[r].h_normal == report.rows[r].h_normal,
            "ideal-side and group-side normality disagree");
  }
  return report;
}

SplittingDatum gf_splitting_datum(uint32_t p, size_t n) {
  GfExtension gf = gf_extension(p, n);
  SplittingDatum d;
  d.closure_algebra = gf.algebra;
  Matrix acc = Matrix::identity(n, Field::Fp(p));
  for (size_t k = 0; k < n; ++k) {
    d.labels.push_back(k == 0 ? "1" : "F^" + std::to_string(k));
    d.autos.push_back(acc);
    acc = gf.frobenius * acc;
  }
  d.table.assign(n, std::vector<size_t>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) d.table[a][b] = (a + b) % n;
  d.gprime_labels = {0};
  d.validate();
  return d;
}

SplittingDatum qx32_splitting_datum(bool gprime_conjugation) {
  Field q = Field::Q();
  // basis c^i w^j at index i + 3j: 1, c, c^2, w, wc, wc^2
  const size_t d6 = 6;
  auto idx = [](size_t i, size_t j) { return i + 3 * j; };
  // reduce c^i w^j with i < 6, j < 3 into the basis
  auto reduced = [&](size_t i, size_t j, const Scalar& coeff) {
    std::vector<Scalar> v(d6, Scalar::zero(q));
    Scalar c = coeff;
    if (i >= 3) {
      c = c * Scalar::of_int(q, 2);
      i -= 3;
    }
    j %= 3;
    if (j < 2) {
      v[idx(i, j)] += c;
    } else {
      // w^2 = -1 - w
      v[idx(i, 0)] -= c;
      v[idx(i, 1)] -= c;
    }
    return v;
  };

  SplittingDatum d;
  d.closure_algebra.dim = d6;
  d.closure_algebra.field = q;
  d.closure_algebra.mul = Matrix(d6, d6 * d6, q);
  for (size_t i1 = 0; i1 < 3; ++i1)
    for (size_t j1 = 0; j1 < 2; ++j1)
      for (size_t i2 = 0; i2 < 3; ++i2)
        for (size_t j2 = 0; j2 < 2; ++j2) {
          auto v = reduced(i1 + i2, j1 + j2, Scalar::one(q));
          size_t col = idx(i1, j1) * d6 + idx(i2, j2);
          for (size_t k = 0; k < d6; ++k)
            d.closure_algebra.mul.at(k, col) = v[k];
        }
  d.closure_algebra.unit = Matrix(d6, 1, q);
  d.closure_algebra.unit.at(0, 0) = Scalar::one(q);

  // automorphism c -> w^a c, w -> w^b for a in {0,1,2}, b in {1,2}
  auto auto_matrix = [&](size_t a, size_t b) {
    Matrix m(d6, d6, q);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 2; ++j) {
        // image of c^i w^j is w^(a i + b j) c^i
        size_t wexp = (a * i + b * j) % 3;
        auto v = reduced(i, wexp, Scalar::one(q));
        for (size_t k = 0; k < d6; ++k) m.at(k, idx(i, j)) = v[k];
      }
    return m;
  };
  const char* names[6] = {"1", "s", "s2", "t", "st", "s2t"};
  size_t ai = 0;
  for (size_t b : {1u, 2u})
    for (size_t a = 0; a < 3; ++a) {
      d.labels.push_back(names[ai++]);
      d.autos.push_back(auto_matrix(a, b));
    }
  const size_t ng = 6;
  d.table.assign(ng, std::vector<size_t>(ng));
  for (size_t x = 0; x < ng; ++x)
    for (size_t y = 0; y < ng; ++y) {
      Matrix prod = d.autos[x] * d.autos[y];
      size_t found = ng;
      for (size_t z = 0; z < ng; ++z)
        if (d.autos[z] == prod) { found = z; break; }
      require(found < ng, "x^3-2 automorphisms not closed");
      d.table[x][y] = found;
    }
  d.gprime_labels = gprime_conjugation ? std::vector<size_t>{3}
                                       : std::vector<size_t>{0};
  d.validate();
  return d;
}

}  // namespace hopfgal
