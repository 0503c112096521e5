#include "hopfgal/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hopfgal {

Perm::Perm(size_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), size_t{0});
}

Perm::Perm(std::vector<size_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (size_t v : img_) {
    require(v < img_.size() && !seen[v], "image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::cycle(size_t degree, const std::vector<size_t>& pts) {
  std::vector<size_t> img(degree);
  std::iota(img.begin(), img.end(), size_t{0});
  for (size_t i = 0; i < pts.size(); ++i) {
    require(pts[i] < degree, "cycle point out of range");
    img[pts[i]] = pts[(i + 1) % pts.size()];
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
  require(degree() == o.degree(), "composing permutations of different degree");
  std::vector<size_t> img(degree());
  for (size_t i = 0; i < degree(); ++i) img[i] = img_[o.img_[i]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<size_t> img(degree());
  for (size_t i = 0; i < degree(); ++i) img[img_[i]] = i;
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

size_t Perm::order() const {
  Perm p = *this;
  size_t k = 1;
  while (!p.is_identity()) {
    p = *this * p;
    ++k;
  }
  return k;
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

size_t PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  require(it != elements_.end() && *it == p, "element not in group");
  return static_cast<size_t>(it - elements_.begin());
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  for (const Perm& p : elements_)
    if (!g.contains(p)) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  for (const Perm& a : generators_)
    for (const Perm& b : generators_)
      if (!(a * b == b * a)) return false;
  return true;
}

bool PermGroup::is_transitive() const {
  std::vector<bool> hit(degree_, false);
  for (const Perm& p : elements_) hit[p(0)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool PermGroup::is_regular() const {
  if (order() != degree_ || !is_transitive()) return false;
  for (const Perm& p : elements_)
    if (!p.is_identity())
      for (size_t i = 0; i < degree_; ++i)
        if (p(i) == i) return false;
  return true;
}

bool PermGroup::normalizes(const PermGroup& n) const {
  for (const Perm& g : elements_) {
    Perm gi = g.inverse();
    for (const Perm& v : n.generators())
      if (!n.contains(g * v * gi)) return false;
  }
  return true;
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
  return is_subgroup_of(g) && g.normalizes(*this);
}

PermGroup closure(size_t degree, const std::vector<Perm>& gens,
                  size_t order_bound) {
  for (const Perm& p : gens)
    require(p.degree() == degree, "generator degree mismatch");
  std::set<Perm> elems;
  elems.insert(Perm(degree));
  std::vector<Perm> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier)
      for (const Perm& g : gens) {
        Perm h = g * e;
        if (elems.insert(h).second) {
          require(elems.size() <= order_bound,
                  "group order exceeds bound " + std::to_string(order_bound));
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  PermGroup out;
  out.degree_ = degree;
  out.generators_ = gens;
  out.elements_.assign(elems.begin(), elems.end());
  return out;
}

PermGroup trivial_group(size_t degree) { return closure(degree, {}); }

PermGroup cyclic_group(size_t n) {
  std::vector<size_t> pts(n);
  std::iota(pts.begin(), pts.end(), size_t{0});
  return closure(n, {Perm::cycle(n, pts)});
}

PermGroup symmetric_group(size_t n) {
  if (n <= 1) return trivial_group(n == 0 ? 1 : n);
  std::vector<Perm> gens{Perm::cycle(n, {0, 1})};
  if (n > 2) {
    std::vector<size_t> pts(n);
    std::iota(pts.begin(), pts.end(), size_t{0});
    gens.push_back(Perm::cycle(n, pts));
  }
  return closure(n, gens);
}

PermGroup klein_regular() {
  return closure(4, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
}

CosetDatum coset_datum(const PermGroup& g, const PermGroup& g_prime) {
  require(g_prime.is_subgroup_of(g), "G' is not a subgroup of G");
  CosetDatum cd;
  const size_t n = g.order();
  cd.coset_of.assign(n, n);

  std::vector<std::vector<size_t>> cosets;
  for (size_t i = 0; i < n; ++i) {
    if (cd.coset_of[i] != n) continue;
    std::vector<size_t> coset;
    for (const Perm& h : g_prime.elements())
      coset.push_back(g.index_of(g.element(i) * h));
    std::sort(coset.begin(), coset.end());
    for (size_t e : coset) cd.coset_of[e] = cosets.size();
    cosets.push_back(std::move(coset));
  }
  // order: coset of the identity first, then by minimal element index
  size_t id_idx = g.index_of(Perm(g.degree()));
  std::vector<size_t> order(cosets.size());
  std::iota(order.begin(), order.end(), size_t{0});
  size_t id_coset = cd.coset_of[id_idx];
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (a == id_coset) return b != id_coset;
    if (b == id_coset) return false;
    return cosets[a][0] < cosets[b][0];
  });
  std::vector<size_t> rank(cosets.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  cd.cosets.resize(cosets.size());
  for (size_t i = 0; i < cosets.size(); ++i)
    cd.cosets[rank[i]] = std::move(cosets[i]);
  for (size_t e = 0; e < n; ++e) cd.coset_of[e] = rank[cd.coset_of[e]];

  // lambda(g): hG' -> ghG'
  cd.lambda_of.reserve(n);
  std::vector<Perm> lam_gens;
  for (size_t i = 0; i < n; ++i) {
    std::vector<size_t> img(cd.cosets.size());
    for (size_t c = 0; c < cd.cosets.size(); ++c) {
      size_t rep = cd.cosets[c][0];
      img[c] = cd.coset_of[g.index_of(g.element(i) * g.element(rep))];
    }
    cd.lambda_of.emplace_back(std::move(img));
  }
  for (const Perm& gen : g.generators().empty()
                             ? std::vector<Perm>{Perm(g.degree())}
                             : g.generators())
    lam_gens.push_back(cd.lambda_of[g.index_of(gen)]);
  cd.lambda = closure(cd.cosets.size(), lam_gens);
  return cd;
}

namespace {

void collect_subgroups(const PermGroup& g, std::set<PermGroup>& found) {
  // BFS over the subgroup lattice: extend each known subgroup by one element.
  std::vector<PermGroup> frontier{trivial_group(g.degree())};
  found.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<PermGroup> next;
    for (const PermGroup& h : frontier)
      for (const Perm& e : g.elements()) {
        if (h.contains(e)) continue;
        std::vector<Perm> gens = h.generators();
        gens.push_back(e);
        PermGroup ext = closure(g.degree(), gens, g.order());
        if (found.insert(ext).second) next.push_back(std::move(ext));
      }
    frontier = std::move(next);
  }
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g, size_t order_bound) {
  require(g.order() <= order_bound,
          "subgroup enumeration bound exceeded (order " +
              std::to_string(g.order()) + " > " + std::to_string(order_bound) +
              ")");
  std::set<PermGroup> found;
  collect_subgroups(g, found);
  return {found.begin(), found.end()};
}

namespace {

bool fixed_point_free(const Perm& p) {
  for (size_t i = 0; i < p.degree(); ++i)
    if (p(i) == i) return false;
  return true;
}

// Closure that fails fast unless the result stays a plausible regular
// subgroup: order <= n, non-identity elements fixed-point-free, at most one
// element mapping 0 to any given point.
bool regular_closure(size_t n, const std::vector<Perm>& gens, PermGroup& out) {
  std::set<Perm> elems;
  elems.insert(Perm(n));
  std::vector<bool> zero_image(n, false);
  zero_image[0] = true;
  std::vector<Perm> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier)
      for (const Perm& g : gens) {
        Perm h = g * e;
        if (elems.count(h)) continue;
        if (!h.is_identity() && !fixed_point_free(h)) return false;
        size_t z = h(0);
        if (zero_image[z]) return false;  // two elements send 0 to z
        if (elems.size() == n) return false;
        zero_image[z] = true;
        elems.insert(h);
        next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  out = closure(n, gens, n);
  return true;
}

void regular_search(size_t n, const PermGroup& partial,
                    const std::vector<std::vector<Perm>>& candidates,
                    std::set<PermGroup>& found) {
  if (partial.order() == n) {
    found.insert(partial);
    return;
  }
  // smallest point not yet an image of 0
  std::vector<bool> hit(n, false);
  for (const Perm& p : partial.elements()) hit[p(0)] = true;
  size_t target = 0;
  while (hit[target]) ++target;
  for (const Perm& c : candidates[target]) {
    std::vector<Perm> gens = partial.elements();  // full list keeps closure cheap
    gens.push_back(c);
    PermGroup ext;
    if (!regular_closure(n, gens, ext)) continue;
    if (n % ext.order() != 0) continue;
    regular_search(n, ext, candidates, found);
  }
}

}  // namespace

std::vector<PermGroup> regular_subgroups(size_t n, size_t degree_bound) {
  require(n >= 1, "regular_subgroups needs n >= 1");
  require(n <= degree_bound,
          "regular-subgroup degree bound exceeded (" + std::to_string(n) +
              " > " + std::to_string(degree_bound) + ")");
  if (n == 1) return {trivial_group(1)};
  // candidates[i]: fixed-point-free permutations sending 0 to i whose order
  // divides n (any element of a regular subgroup qualifies)
  std::vector<std::vector<Perm>> candidates(n);
  std::vector<size_t> img(n);
  std::iota(img.begin(), img.end(), size_t{0});
  do {
    Perm p(img);
    if (!fixed_point_free(p)) continue;
    if (n % p.order() != 0) continue;
    candidates[p(0)].push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));

  std::set<PermGroup> found;
  regular_search(n, trivial_group(n), candidates, found);
  return {found.begin(), found.end()};
}

std::vector<PermGroup> hg_candidates(const PermGroup& g,
                                     const PermGroup& g_prime) {
  CosetDatum cd = coset_datum(g, g_prime);
  std::vector<PermGroup> out;
  for (const PermGroup& n : regular_subgroups(cd.cosets.size()))
    if (cd.lambda.normalizes(n)) out.push_back(n);
  return out;
}

void GroupAction::validate() const {
  const size_t na = acting.order(), nn = target.order();
  require(table.size() == na, "action table has wrong acting size");
  for (const auto& row : table) {
    require(row.size() == nn, "action table has wrong target size");
    for (size_t v : row) require(v < nn, "action table index out of range");
  }
  size_t id_a = acting.index_of(Perm(acting.degree()));
  for (size_t x = 0; x < nn; ++x)
    require(table[id_a][x] == x, "action: identity does not act trivially");
  for (size_t a = 0; a < na; ++a)
    for (size_t b = 0; b < na; ++b) {
      size_t ab = acting.index_of(acting.element(a) * acting.element(b));
      for (size_t x = 0; x < nn; ++x)
        require(table[ab][x] == table[a][table[b][x]],
                "action: (ab).x != a.(b.x)");
    }
  for (size_t a = 0; a < na; ++a)
    for (size_t x = 0; x < nn; ++x)
      for (size_t y = 0; y < nn; ++y) {
        size_t xy = target.index_of(target.element(x) * target.element(y));
        size_t lhs = table[a][xy];
        size_t rhs = target.index_of(target.element(table[a][x]) *
                                     target.element(table[a][y]));
        require(lhs == rhs, "action: a.(xy) != (a.x)(a.y)");
      }
}

GroupAction conjugation_action(const PermGroup& g, const CosetDatum& cd,
                               const PermGroup& n_grp) {
  GroupAction act;
  act.acting = g;
  act.target = n_grp;
  act.table.resize(g.order());
  for (size_t a = 0; a < g.order(); ++a) {
    const Perm& lam = cd.lambda_of[a];
    Perm lam_inv = lam.inverse();
    act.table[a].resize(n_grp.order());
    for (size_t x = 0; x < n_grp.order(); ++x)
      act.table[a][x] = n_grp.index_of(lam * n_grp.element(x) * lam_inv);
  }
  act.validate();
  return act;
}

std::vector<PermGroup> equivariant_subgroups(const GroupAction& act,
                                             bool normal_only) {
  std::vector<PermGroup> out;
  for (const PermGroup& v : all_subgroups(act.target)) {
    bool ok = true;
    for (size_t a = 0; a < act.acting.order() && ok; ++a)
      for (const Perm& p : v.elements()) {
        size_t im = act.act(a, act.target.index_of(p));
        if (!v.contains(act.target.element(im))) { ok = false; break; }
      }
    if (ok && normal_only && !v.is_normal_in(act.target)) ok = false;
    if (ok) out.push_back(v);
  }
  return out;
}

std::vector<size_t> orbit_beta(const PermGroup& n_grp) {
  std::vector<size_t> beta(n_grp.order());
  for (size_t i = 0; i < n_grp.order(); ++i) beta[i] = n_grp.element(i)(0);
  return beta;
}

GpActResult gp_act_correspondence(const PermGroup& g,
                                  const PermGroup& g_prime,
                                  const PermGroup& n_grp,
                                  const GroupAction& act,
                                  const std::vector<size_t>& beta,
                                  const PermGroup& v) {
  CosetDatum cd = coset_datum(g, g_prime);
  const size_t nc = cd.cosets.size();
  require(n_grp.degree() == nc, "N degree does not match coset count");
  require(n_grp.is_regular(), "N is not regular on the cosets");

  // hypothesis battery, verified on the data
  require(beta.size() == n_grp.order(), "beta has wrong size");
  std::vector<bool> hit(nc, false);
  for (size_t i = 0; i < n_grp.order(); ++i) {
    require(beta[i] == n_grp.element(i)(0), "beta is not the orbit map of 1G'");
    require(beta[i] < nc && !hit[beta[i]], "beta is not bijective");
    hit[beta[i]] = true;
  }
  require(act.target == n_grp && act.acting == g, "action groups mismatch");
  for (size_t a = 0; a < g.order(); ++a) {
    const Perm& lam = cd.lambda_of[a];
    for (size_t x = 0; x < n_grp.order(); ++x) {
      const Perm& n = n_grp.element(x);
      const Perm& gn = n_grp.element(act.act(a, x));
      for (size_t c = 0; c < nc; ++c)
        require(lam(n(c)) == gn(lam(c)),
                "compatibility g.((hG').n) = (ghG').(g.n) fails");
    }
  }
  bool v_equivariant = true;
  for (size_t a = 0; a < g.order() && v_equivariant; ++a)
    for (const Perm& p : v.elements())
      if (!v.contains(n_grp.element(act.act(a, n_grp.index_of(p))))) {
        v_equivariant = false;
        break;
      }
  require(v_equivariant, "V is not G-equivariant");
  require(v.is_subgroup_of(n_grp), "V is not a subgroup of N");

  // U = {g : gG' in beta(V)}
  std::vector<bool> in_beta_v(nc, false);
  for (const Perm& p : v.elements()) in_beta_v[beta[n_grp.index_of(p)]] = true;
  std::vector<Perm> u_elems;
  for (size_t i = 0; i < g.order(); ++i)
    if (in_beta_v[cd.coset_of[i]]) u_elems.push_back(g.element(i));

  GpActResult res;
  res.u = closure(g.degree(), u_elems, g.order());
  certify(res.u.order() == u_elems.size(),
          "U = preimage of beta(V) is not closed under composition");
  certify(g_prime.is_subgroup_of(res.u), "U does not contain G'");

  // pr_U((gG').v) = gU for all g in G, v in V
  auto u_coset_key = [&](size_t coset_idx) {
    // gU as the sorted element-index set, keyed by its minimum
    size_t rep = cd.cosets[coset_idx][0];
    size_t best = g.order();
    for (const Perm& u : res.u.elements())
      best = std::min(best, g.index_of(g.element(rep) * u));
    return best;
  };
  std::vector<size_t> pr_u(nc);
  for (size_t c = 0; c < nc; ++c) pr_u[c] = u_coset_key(c);
  for (size_t c = 0; c < nc; ++c)
    for (const Perm& p : v.elements())
      certify(pr_u[p(c)] == pr_u[c], "pr_U((gG').v) != gU");

  // induced map N/V -> G/U on right-composition cosets V o n
  std::set<size_t> gu_classes(pr_u.begin(), pr_u.end());
  std::set<std::vector<size_t>> nv_classes;
  for (const Perm& n : n_grp.elements()) {
    std::vector<size_t> cls;
    for (const Perm& w : v.elements())
      cls.push_back(n_grp.index_of(w * n));
    std::sort(cls.begin(), cls.end());
    nv_classes.insert(cls);
  }
  std::set<size_t> image;
  bool well_defined = true;
  for (const auto& cls : nv_classes) {
    std::set<size_t> targets;
    for (size_t idx : cls) targets.insert(pr_u[beta[idx]]);
    if (targets.size() != 1) well_defined = false;
    image.insert(*targets.begin());
  }
  res.n_mod_v = nv_classes.size();
  res.g_mod_u = gu_classes.size();
  res.iso_check = well_defined && image.size() == nv_classes.size() &&
                  nv_classes.size() == gu_classes.size();
  certify(res.iso_check, "induced map N/V -> G/U is not a bijection");
  certify(res.u.order() * n_grp.order() == g.order() * v.order(),
          "|U| |N| != |G| |V|");
  return res;
}

}  // namespace hopfgal
