#pragma once

#include <functional>
#include <string>
#include <vector>

#include "strathom/linalg/matrix.hpp"

namespace strathom::linalg {

/// Univariate polynomial, coefficients low degree first; zero has no terms.
class Poly {
 public:
  explicit Poly(const Field& field) : field_(field) {}
  Poly(const Field& field, std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly x(const Field& field);
  /// t - root
  static Poly linear(const Scalar& root);

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(int i) const;
  const Scalar& lead() const { return c_.back(); }
  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& t) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcd {
  Poly g;  // monic gcd
  Poly s;  // s*a + t*b == g
  Poly t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// Squarefree part (product of the distinct irreducible factors).
Poly squarefree_part(const Poly& p);

/// Rational roots of a polynomial over Q (distinct, ascending). Candidates are
/// enumerated from divisors of the end coefficients; returns what it can when
/// those integers are too large to factor by trial division.
std::vector<Scalar> rational_roots(const Poly& p);

/// Complete factorisation of a squarefree polynomial over F_p into monic
/// irreducibles (distinct-degree then Cantor-Zassenhaus, fixed seed).
std::vector<Poly> factor_squarefree_fp(const Poly& p);

/// Splits monic p into pairwise coprime, non-constant factors whose product is
/// p. Over F_p this is the full primary decomposition; over Q every rational
/// root is separated and the remaining part kept whole. A single entry means
/// no split was found.
std::vector<Poly> coprime_factors(const Poly& p);

/// Minimal polynomial of the linear map v -> step(v) restricted to the cyclic
/// closure of `start` (both 1×N rows). With start = unit of an algebra and step
/// = multiplication by x this is the minimal polynomial of x.
Poly minimal_polynomial(const Matrix& start, const std::function<Matrix(const Matrix&)>& step);

/// Minimal polynomial of a square matrix.
Poly minimal_polynomial(const Matrix& m);

/// p(m) for a square matrix m.
Matrix evaluate(const Poly& p, const Matrix& m);

}  // namespace strathom::linalg
