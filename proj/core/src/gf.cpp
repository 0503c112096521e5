#include "hopfgal/gf.hpp"

#include <algorithm>

namespace hopfgal {

namespace {

// dense polynomials over GF(p), constant term first, no trailing zeros
using Poly = std::vector<uint32_t>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + uint64_t(a[i]) * b[j]) % p;
  return trim(c);
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

Poly poly_rem(Poly a, const Poly& m, uint32_t p) {
  a = trim(std::move(a));
  uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    uint64_t c = uint64_t(a.back()) * lead_inv % p;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t sub = c * m[i] % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

bool divides(const Poly& d, const Poly& f, uint32_t p) {
  return poly_rem(f, d, p).empty();
}

// enumerate monic polynomials of exact degree deg in lexicographic order on
// (c_0, ..., c_{deg-1})
bool next_monic(Poly& f, uint32_t p) {
  for (size_t i = 0; i + 1 < f.size(); ++i) {
    if (++f[i] < p) return true;
    f[i] = 0;
  }
  return false;
}

bool is_irreducible(const Poly& f, uint32_t p) {
  size_t n = f.size() - 1;
  if (n == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  for (size_t d = 1; 2 * d <= n; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    do {
      if (divides(g, f, p)) return false;
    } while (next_monic(g, p));
  }
  return true;
}

}  // namespace

std::vector<uint32_t> least_irreducible(uint32_t p, size_t n) {
  require(n >= 1, "degree must be positive");
  Poly f(n + 1, 0);
  f[n] = 1;
  do {
    if (is_irreducible(f, p)) return f;
  } while (next_monic(f, p));
  throw input_error("no irreducible polynomial found");  // unreachable
}

GfExtension gf_extension(uint32_t p, size_t n) {
  require(is_prime(p), "p must be prime");
  double size = 1;
  for (size_t i = 0; i < n; ++i) size *= p;
  require(size <= 65536.0, "p^n exceeds 2^16");

  GfExtension gf;
  gf.p = p;
  gf.n = n;
  gf.modulus = least_irreducible(p, n);
  Field f = Field::Fp(p);

  gf.algebra.dim = n;
  gf.algebra.field = f;
  gf.algebra.mul = Matrix(n, n * n, f);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Poly xi(i + 1, 0), xj(j + 1, 0);
      xi[i] = 1;
      xj[j] = 1;
      Poly prod = poly_rem(poly_mul(xi, xj, p), gf.modulus, p);
      for (size_t k = 0; k < prod.size(); ++k)
        gf.algebra.mul.at(k, i * n + j) = Scalar::residue(p, prod[k]);
    }
  gf.algebra.unit = Matrix(n, 1, f);
  gf.algebra.unit.at(0, 0) = Scalar::one(f);
  gf.algebra.validate("GF(" + std::to_string(p) + "^" + std::to_string(n) + ")");

  gf.frobenius = Matrix(n, n, f);
  for (size_t j = 0; j < n; ++j) {
    Poly xj(j + 1, 0);
    xj[j] = 1;
    // x^(j p) mod modulus
    Poly acc{1};
    for (uint32_t e = 0; e < p; ++e)
      acc = poly_rem(poly_mul(acc, xj, p), gf.modulus, p);
    for (size_t k = 0; k < acc.size(); ++k)
      gf.frobenius.at(k, j) = Scalar::residue(p, acc[k]);
  }
  return gf;
}

Matrix gf_embedding(const GfExtension& small, const GfExtension& big) {
  require(small.p == big.p && big.n % small.n == 0,
          "no embedding: small field does not divide the big one");
  const uint32_t p = big.p;
  Field f = Field::Fp(p);
  const size_t n = big.n;
  // scan elements of the big field in lexicographic coordinate order for a
  // root of the small modulus
  std::vector<uint32_t> coords(n, 0);
  auto as_vec = [&]() {
    std::vector<Scalar> v(n, Scalar::zero(f));
    for (size_t i = 0; i < n; ++i) v[i] = Scalar::residue(p, coords[i]);
    return v;
  };
  auto bump = [&]() {
    for (size_t i = n; i-- > 0;) {
      if (++coords[i] < p) return true;
      coords[i] = 0;
    }
    return false;
  };
  do {
    std::vector<Scalar> y = as_vec();
    // evaluate the small modulus at y
    std::vector<Scalar> acc = zero_vector(n, f);
    std::vector<Scalar> pow = big.algebra.unit_vec();
    for (size_t k = 0; k < small.modulus.size(); ++k) {
      Scalar c = Scalar::residue(p, small.modulus[k]);
      for (size_t t = 0; t < n; ++t) acc[t] += c * pow[t];
      if (k + 1 < small.modulus.size()) pow = big.algebra.product(pow, y);
    }
    bool is_root = true;
    for (const auto& a : acc)
      if (!a.is_zero()) { is_root = false; break; }
    if (is_root) {
      // a root of an irreducible degree-m polynomial generates GF(p^m);
      // exclude the degenerate constant-coordinate fake when m = 1
      Matrix e(n, small.n, f);
      std::vector<Scalar> pw = big.algebra.unit_vec();
      for (size_t j = 0; j < small.n; ++j) {
        for (size_t i = 0; i < n; ++i) e.at(i, j) = pw[i];
        if (j + 1 < small.n) pw = big.algebra.product(pw, y);
      }
      if (rank_of(e) == small.n) return e;
    }
  } while (bump());
  throw input_error("no root of the small modulus in the big field");
}

std::vector<Subspace> all_subspaces_gf2(size_t dim) {
  require(dim <= 4, "GF(2) subspace oracle limited to dim <= 4");
  Field f2 = Field::Fp(2);
  const uint32_t points = 1u << dim;
  auto vec_of = [&](uint32_t bits) {
    std::vector<Scalar> v(dim, Scalar::zero(f2));
    for (size_t i = 0; i < dim; ++i)
      if (bits & (1u << i)) v[i] = Scalar::one(f2);
    return v;
  };
  // span closure on bitmask sets over the point set
  std::vector<uint64_t> seen;
  std::vector<Subspace> out;
  // iterate over all subsets of nonzero vectors of size <= dim
  std::vector<uint32_t> nz;
  for (uint32_t v = 1; v < points; ++v) nz.push_back(v);
  std::vector<size_t> idx;
  auto emit = [&](const std::vector<uint32_t>& gens) {
    uint64_t span = 1;  // bit 0: the zero vector
    std::vector<uint32_t> members{0};
    for (uint32_t g : gens) {
      if (span & (1ull << g)) continue;
      std::vector<uint32_t> added;
      for (uint32_t m : members) added.push_back(m ^ g);
      for (uint32_t a : added)
        if (!(span & (1ull << a))) {
          span |= 1ull << a;
          members.push_back(a);
        }
    }
    if (std::find(seen.begin(), seen.end(), span) != seen.end()) return;
    seen.push_back(span);
    std::vector<std::vector<Scalar>> rows;
    for (uint32_t m : members)
      if (m) rows.push_back(vec_of(m));
    out.push_back(Subspace::span(rows, dim, f2));
  };
  // subsets of size 0..dim via simple index recursion
  std::vector<uint32_t> gens;
  auto rec = [&](auto&& self, size_t start, size_t remaining) -> void {
    emit(gens);
    if (remaining == 0) return;
    for (size_t i = start; i < nz.size(); ++i) {
      gens.push_back(nz[i]);
      self(self, i + 1, remaining - 1);
      gens.pop_back();
    }
  };
  rec(rec, 0, dim);
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (size_t i = 0; i < a.dim(); ++i)
      for (size_t j = 0; j < a.ambient(); ++j) {
        bool av = !a.basis().at(i, j).is_zero();
        bool bv = !b.basis().at(i, j).is_zero();
        if (av != bv) return bv;
      }
    return false;
  });
  return out;
}

}  // namespace hopfgal
