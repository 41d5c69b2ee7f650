#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "strathom/error.hpp"

namespace strathom::linalg {

/// Base field: the rationals or a prime field F_p (p < 2^31).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(const std::string& text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator (GMP canonical form); prime-field values live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }
  /// Parses "3", "-2/5" (rationals) or an integer reduced mod p.
  static Scalar parse(const Field& field, const std::string& text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Only meaningful over Q.
  const mpq_class& rational() const { return q_; }
  /// Only meaningful over F_p.
  std::uint64_t residue() const { return v_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  /// this -= a * b, fused to avoid a temporary in elimination loops.
  void sub_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  std::uint64_t mod_ = 0;  // 0 means rational
  mpq_class q_;
  std::uint64_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace strathom::linalg
