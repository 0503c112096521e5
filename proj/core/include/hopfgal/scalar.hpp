#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hopfgal/errors.hpp"

namespace hopfgal {

// Base-field descriptor. Either the rationals or a prime field F_p, p < 2^31.
// Every container (matrix, subspace, algebra, ...) carries one; mixing
// descriptors in an operation is an input_error, never a silent coercion.
struct Field {
  enum class Kind : uint8_t { rational, prime };

  Kind kind = Kind::rational;
  uint32_t p = 0;  // modulus, meaningful for Kind::prime only

  static Field Q() { return Field{Kind::rational, 0}; }
  static Field Fp(uint32_t p);

  bool is_rational() const { return kind == Kind::rational; }
  bool operator==(const Field& o) const = default;

  std::string to_string() const;         // "Q" or "F<p>"
  static Field parse(const std::string& s);
};

bool is_prime(uint32_t n);

// An exact field element. Rationals are kept canonicalized (gcd = 1,
// positive denominator, GMP's invariant); residues in [0, p).
class Scalar {
public:
  Scalar() : field_(Field::Q()), q_(0) {}
  explicit Scalar(const Field& f) : field_(f), q_(0), r_(0) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long v);
  static Scalar rational(long num, long den);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(uint32_t p, uint64_t v);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const { return *this == one(field_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // input_error on division by zero
  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Rational value (Kind::rational only).
  const mpq_class& rat() const { return q_; }
  // Residue value (Kind::prime only).
  uint32_t res() const { return static_cast<uint32_t>(r_); }

  // Decimal serialization: "n" or "n/d" for rationals, "r" for residues.
  std::string to_string() const;
  static Scalar parse(const Field& f, const std::string& s);

private:
  void check_same(const Scalar& o) const {
    require(field_ == o.field_, "scalar arithmetic across different fields");
  }

  Field field_;
  mpq_class q_;
  uint64_t r_ = 0;
};

}  // namespace hopfgal
