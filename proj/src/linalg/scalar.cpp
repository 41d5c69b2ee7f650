#include "strathom/linalg/scalar.hpp"

#include <ostream>

namespace strathom {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MalformedRelation: return "MalformedRelation";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::NotSubmodule: return "NotSubmodule";
    case ErrorKind::RadicalUnavailable: return "RadicalUnavailable";
    case ErrorKind::NotDirected: return "NotDirected";
    case ErrorKind::NotPartialTilting: return "NotPartialTilting";
    case ErrorKind::NotHereditary: return "NotHereditary";
    case ErrorKind::NotExceptional: return "NotExceptional";
    case ErrorKind::InvalidResolution: return "InvalidResolution";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

namespace linalg {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, "modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::Parse, "bad field '" + text + "'");
    }
    return prime(std::stoull(digits));
  }
  throw Error(ErrorKind::Parse, "bad field '" + text + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const { return is_rational() ? "Q" : "Fp:" + std::to_string(p_); }

Scalar::Scalar(const Field& field, long value) : mod_(field.characteristic()) {
  if (mod_ == 0) {
    q_ = value;
  } else {
    const auto p = static_cast<long long>(mod_);
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : mod_(field.characteristic()) {
  if (value.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (mod_ == 0) {
    // mpq_set assumes a positive denominator, so copy the parts separately.
    q_.get_num() = value.get_num();
    q_.get_den() = value.get_den();
    q_.canonicalize();
  } else {
    const std::uint64_t num = reduce_mod(value.get_num(), mod_);
    const std::uint64_t den = reduce_mod(value.get_den(), mod_);
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod p");
    v_ = num * pow_mod(den, mod_ - 2, mod_) % mod_;
  }
}

Scalar Scalar::parse(const Field& field, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::Parse, "bad scalar '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(field, q);
}

Field Scalar::field() const { return Field(mod_); }

bool Scalar::is_zero() const { return mod_ == 0 ? sgn(q_) == 0 : v_ == 0; }

bool Scalar::is_one() const { return mod_ == 0 ? q_ == 1 : v_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (mod_ != o.mod_) throw Error(ErrorKind::DomainMismatch, "scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (mod_ == 0) {
    r.q_ = -q_;
  } else if (v_ != 0) {
    r.v_ = mod_ - v_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (mod_ == 0) {
    q_ += o.q_;
  } else {
    v_ = (v_ + o.v_) % mod_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (mod_ == 0) {
    q_ -= o.q_;
  } else {
    v_ = (v_ + mod_ - o.v_) % mod_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (mod_ == 0) {
    q_ *= o.q_;
  } else {
    v_ = v_ * o.v_ % mod_;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar r = *this;
  if (mod_ == 0) {
    r.q_ = 1 / q_;
  } else {
    r.v_ = pow_mod(v_, mod_ - 2, mod_);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  check_same(a);
  check_same(b);
  if (mod_ == 0) {
    // q_ -= a*b without a temporary Scalar; mpq has no fused op, but this
    // still skips the wrapper copies.
    mpq_class t = a.q_ * b.q_;
    q_ -= t;
  } else {
    v_ = (v_ + mod_ - a.v_ * b.v_ % mod_) % mod_;
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ != b.mod_) return false;
  return a.mod_ == 0 ? a.q_ == b.q_ : a.v_ == b.v_;
}

std::string Scalar::to_string() const { return mod_ == 0 ? q_.get_str() : std::to_string(v_); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace linalg
}  // namespace strathom
