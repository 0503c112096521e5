#include "hopfgal/scalar.hpp"

#include <cstdlib>

namespace hopfgal {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::Fp(uint32_t p) {
  require(is_prime(p), "field modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::prime, p};
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F" + std::to_string(p);
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return Q();
  require(s.size() >= 2 && s[0] == 'F', "unknown field descriptor '" + s + "'");
  char* end = nullptr;
  unsigned long p = std::strtoul(s.c_str() + 1, &end, 10);
  require(end && *end == '\0' && p > 0 && p < (1ull << 31),
          "unknown field descriptor '" + s + "'");
  return Fp(static_cast<uint32_t>(p));
}

namespace {

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t acc = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

}  // namespace

Scalar Scalar::one(const Field& f) {
  Scalar s(f);
  if (f.is_rational())
    s.q_ = 1;
  else
    s.r_ = f.p == 1 ? 0 : 1;
  return s;
}

Scalar Scalar::of_int(const Field& f, long v) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = v;
  } else {
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += f.p;
    s.r_ = static_cast<uint64_t>(m);
  }
  return s;
}

Scalar Scalar::rational(long num, long den) {
  require(den != 0, "rational with zero denominator");
  Scalar s(Field::Q());
  s.q_ = mpq_class(num, den);
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s(Field::Q());
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::residue(uint32_t p, uint64_t v) {
  Field f = Field::Fp(p);
  Scalar s(f);
  s.r_ = v % p;
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = q_ - o.q_;
  else
    s.r_ = (r_ + field_.p - o.r_) % field_.p;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = r_ * o.r_ % field_.p;
  return s;
}

Scalar Scalar::inv() const {
  require(!is_zero(), "inverse of zero");
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_pow(r_, field_.p - 2, field_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inv();
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  if (!field_.is_rational()) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
  require(!s.empty(), "empty scalar literal");
  if (f.is_rational()) {
    Scalar out(f);
    try {
      out.q_ = mpq_class(s);
    } catch (const std::invalid_argument&) {
      throw input_error("bad rational literal '" + s + "'");
    }
    require(out.q_.get_den() != 0, "bad rational literal '" + s + "'");
    out.q_.canonicalize();
    return out;
  }
  // residue: optional sign, digits
  mpz_class z;
  try {
    z = mpz_class(s);
  } catch (const std::invalid_argument&) {
    throw input_error("bad residue literal '" + s + "'");
  }
  mpz_class m = z % f.p;
  if (m < 0) m += f.p;
  return residue(f.p, m.get_ui());
}

}  // namespace hopfgal
