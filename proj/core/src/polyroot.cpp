#include "hopfgal/polyroot.hpp"

#include <algorithm>

#include <gmpxx.h>

namespace hopfgal {

// Berkowitz, as declared in the header.
std::vector<Scalar> char_poly(const Matrix& m) {
  const size_t n = m.rows();
  const Field& f = m.field();
  std::vector<Scalar> v{Scalar::one(f)};
  for (size_t i = 0; i < n; ++i) {
    // Toeplitz column: t0 = 1, t1 = -A[i][i], t_{k+2} = -(R M^k C)
    std::vector<Scalar> t(i + 2, Scalar::zero(f));
    t[0] = Scalar::one(f);
    t[1] = -m.at(i, i);
    if (i > 0) {
      std::vector<Scalar> cur(i);  // M^k C
      for (size_t r = 0; r < i; ++r) cur[r] = m.at(r, i);
      for (size_t k = 0; k + 2 < t.size(); ++k) {
        Scalar dot = Scalar::zero(f);
        for (size_t r = 0; r < i; ++r) dot += m.at(i, r) * cur[r];
        t[k + 2] = -dot;
        if (k + 3 < t.size()) {
          std::vector<Scalar> nxt(i, Scalar::zero(f));
          for (size_t r = 0; r < i; ++r)
            for (size_t s = 0; s < i; ++s) nxt[r] += m.at(r, s) * cur[s];
          cur = std::move(nxt);
        }
      }
    }
    std::vector<Scalar> nv(i + 2, Scalar::zero(f));
    for (size_t a2 = 0; a2 < nv.size(); ++a2)
      for (size_t b = 0; b < v.size(); ++b)
        if (a2 >= b && a2 - b < t.size()) nv[a2] += t[a2 - b] * v[b];
    v = std::move(nv);
  }
  return v;
}

Scalar poly_eval(const std::vector<Scalar>& coeffs, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (const Scalar& c : coeffs) acc = acc * x + c;
  return acc;
}

namespace {

constexpr uint32_t kPrimeScanBound = 1u << 20;

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class rest = n;
  for (mpz_class p = 2; p * p <= rest && p < 1000000; p == 2 ? p = 3 : p += 2) {
    unsigned e = 0;
    while (rest % p == 0) { rest /= p; ++e; }
    if (e) factors.emplace_back(p, e);
  }
  if (rest > 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0)
      throw input_error("rational root search: coefficient too large to factor");
    factors.emplace_back(rest, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    size_t old = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < old; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs,
                                   const Field& f) {
  std::vector<Scalar> roots;
  if (!f.is_rational()) {
    require(f.p <= kPrimeScanBound,
            "root scan limited to p <= 2^20");
    for (uint32_t r = 0; r < f.p; ++r) {
      Scalar x = Scalar::residue(f.p, r);
      if (poly_eval(coeffs, x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  // clear denominators
  mpz_class lcm = 1;
  for (const Scalar& c : coeffs)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rat().get_den().get_mpz_t());
  std::vector<mpz_class> ic;
  for (const Scalar& c : coeffs) {
    mpq_class q = c.rat() * mpq_class(lcm);
    ic.push_back(q.get_num());
  }
  // strip zero constant terms; 0 is then a root
  size_t nz_end = ic.size();
  while (nz_end > 1 && ic[nz_end - 1] == 0) --nz_end;
  if (nz_end != ic.size()) roots.push_back(Scalar::zero(f));
  if (nz_end <= 1) return roots;
  const mpz_class lead = ic[0], cons = ic[nz_end - 1];
  auto nums = divisors_of(cons);
  auto dens = divisors_of(lead);
  std::vector<Scalar> trimmed;
  for (size_t i = 0; i < nz_end; ++i)
    trimmed.push_back(Scalar::rational(mpq_class(ic[i])));
  for (const auto& n : nums)
    for (const auto& d : dens)
      for (int sign : {1, -1}) {
        Scalar x = Scalar::rational(mpq_class(sign * n, d));
        if (poly_eval(trimmed, x).is_zero()) {
          if (std::find(roots.begin(), roots.end(), x) == roots.end())
            roots.push_back(x);
        }
      }
  return roots;
}


}  // namespace hopfgal
