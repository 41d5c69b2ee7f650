#include "strathom/linalg/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "strathom/linalg/rref.hpp"

namespace strathom::linalg {

Poly::Poly(const Field& field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (const auto& s : c_) {
    if (s.field() != field_) throw Error(ErrorKind::DomainMismatch, "Poly: coefficient from another field");
  }
  trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::x(const Field& field) { return Poly(field, {Scalar::zero(field), Scalar::one(field)}); }

Poly Poly::linear(const Scalar& root) { return Poly(root.field(), {-root, Scalar::one(root.field())}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Scalar::zero(field_);
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = lead().inverse();
  Poly out = *this;
  for (auto& s : out.c_) s *= inv;
  return out;
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
  return Poly(field_, std::move(d));
}

Scalar Poly::eval(const Scalar& t) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.field_, std::move(r));
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& s = c_[static_cast<std::size_t>(i)];
    if (s.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !s.is_one()) os << s.to_string();
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field f = a.field();
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly(f), a};
  std::vector<Scalar> q(static_cast<std::size_t>(da - db + 1), Scalar::zero(f));
  const Scalar inv = b.lead().inverse();
  for (int i = da; i >= db; --i) {
    const Scalar c = rem[static_cast<std::size_t>(i)] * inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)].sub_mul(c, b.coeffs()[static_cast<std::size_t>(j)]);
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const Field f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Scalar::one(f)), s1(f);
  Poly t0(f), t1 = Poly::constant(Scalar::one(f));
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Poly s2 = s0 - qr.quotient * s1;
    Poly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Poly inv = Poly::constant(r0.lead().inverse());
  return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

// p-th root of a polynomial whose exponents are all multiples of p (over F_p
// the Frobenius fixes scalars).
Poly pth_root(const Poly& a, std::uint64_t p) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) out.push_back(a.coeffs()[i]);
  return Poly(a.field(), std::move(out));
}

Poly powmod(Poly base, const mpz_class& exp, const Poly& mod) {
  const Field f = mod.field();
  Poly result = Poly::constant(Scalar::one(f));
  base = divmod(base, mod).remainder;
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, mod).remainder;
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = divmod(result * base, mod).remainder;
  }
  return result;
}

Poly exact_div(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  std::vector<mpz_class> out;
  if (m == 0) return out;
  // Trial division is only sensible for small end coefficients.
  if (m > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  return out;
}

}  // namespace

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  const Field f = p.field();
  if (f.is_rational()) return exact_div(p, gcd(p, p.derivative())).monic();
  // Over F_p: strip repeated factors, recursing through p-th roots.
  const Poly d = p.derivative();
  if (d.is_zero()) return squarefree_part(pth_root(p, f.characteristic()));
  const Poly g = gcd(p, d);
  const Poly core = exact_div(p, g).monic();
  if (g.degree() == 0) return core;
  // Factors of g not already in core appear with multiplicity divisible by p.
  Poly rest = g;
  for (Poly h = gcd(rest, core); h.degree() > 0; h = gcd(rest, core)) rest = exact_div(rest, h);
  if (rest.degree() <= 0) return core;
  return core * squarefree_part(rest.monic());
}

std::vector<Scalar> rational_roots(const Poly& p) {
  const Field f = p.field();
  if (!f.is_rational()) throw Error(ErrorKind::DomainMismatch, "rational_roots needs coefficients in Q");
  std::vector<Scalar> roots;
  if (p.degree() <= 0) return roots;
  // Scale to integer coefficients.
  mpz_class lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coeffs()) ints.emplace_back(mpz_class(c.rational() * lcm));
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar::zero(f));
  const auto num_div = divisors(ints[low]);
  const auto den_div = divisors(ints.back());
  for (const auto& a : num_div) {
    for (const auto& b : den_div) {
      for (int sign : {1, -1}) {
        const Scalar cand(f, mpq_class(sign * a, b));
        if (p.eval(cand).is_zero() &&
            std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Scalar& x, const Scalar& y) { return x.rational() < y.rational(); });
  return roots;
}

std::vector<Poly> factor_squarefree_fp(const Poly& input) {
  const Field f = input.field();
  if (f.is_rational()) throw Error(ErrorKind::DomainMismatch, "factor_squarefree_fp needs a prime field");
  const std::uint64_t p = f.characteristic();
  std::vector<Poly> out;
  Poly rest = input.monic();
  if (rest.degree() <= 0) return out;

  // Distinct-degree split.
  std::vector<std::pair<Poly, int>> dd;
  const Poly x = Poly::x(f);
  Poly h = x;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, mpz_class(static_cast<unsigned long>(p)), rest);
    const Poly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      dd.emplace_back(g, d);
      rest = exact_div(rest, g).monic();
      h = divmod(h, rest).remainder;
    }
  }
  if (rest.degree() > 0) dd.emplace_back(rest, rest.degree());

  // Equal-degree split (Cantor-Zassenhaus).
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  for (auto& [g, d] : dd) {
    std::vector<Poly> pending{g};
    while (!pending.empty()) {
      Poly cur = pending.back();
      pending.pop_back();
      if (cur.degree() == d) {
        out.push_back(cur.monic());
        continue;
      }
      for (;;) {
        std::vector<Scalar> r;
        for (int i = 0; i < cur.degree(); ++i) r.emplace_back(f, static_cast<long>(coef(rng)));
        const Poly a(f, r);
        if (a.degree() <= 0) continue;
        Poly b(f);
        if (p == 2) {
          Poly t = a;
          Poly acc = a;
          for (int i = 1; i < d; ++i) {
            t = divmod(t * t, cur).remainder;
            acc += t;
          }
          b = acc;
        } else {
          mpz_class e;
          mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
          e = (e - 1) / 2;
          b = powmod(a, e, cur) - Poly::constant(Scalar::one(f));
        }
        const Poly s = gcd(b, cur);
        if (s.degree() > 0 && s.degree() < cur.degree()) {
          pending.push_back(s);
          pending.push_back(exact_div(cur, s).monic());
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      const auto x = a.coeff(i).residue(), y = b.coeff(i).residue();
      if (x != y) return x < y;
    }
    return false;
  });
  return out;
}

std::vector<Poly> coprime_factors(const Poly& input) {
  const Poly p = input.monic();
  if (p.degree() <= 0) return {};
  const Field f = p.field();
  std::vector<Poly> irreducible_parts;
  const Poly sq = squarefree_part(p);
  if (f.is_rational()) {
    Poly rest = sq;
    for (const auto& r : rational_roots(sq)) {
      irreducible_parts.push_back(Poly::linear(r));
      rest = exact_div(rest, Poly::linear(r));
    }
    if (rest.degree() > 0) irreducible_parts.push_back(rest.monic());
  } else {
    irreducible_parts = factor_squarefree_fp(sq);
  }
  // Collect the full power of each part dividing p.
  std::vector<Poly> out;
  Poly rest = p;
  for (const auto& g : irreducible_parts) {
    Poly power = Poly::constant(Scalar::one(f));
    for (;;) {
      DivMod qr = divmod(rest, g);
      if (!qr.remainder.is_zero()) break;
      rest = std::move(qr.quotient);
      power = power * g;
    }
    out.push_back(power.monic());
  }
  return out;
}

Poly minimal_polynomial(const Matrix& start, const std::function<Matrix(const Matrix&)>& step) {
  const Field f = start.field();
  std::vector<Matrix> powers{start};
  for (;;) {
    const Matrix next = step(powers.back());
    Matrix stacked = powers.front();
    for (std::size_t i = 1; i < powers.size(); ++i) stacked = vstack(stacked, powers[i]);
    // coefficients c with c * stacked == next
    auto sol = solve_linear(stacked.transpose(), next.transpose());
    if (sol) {
      std::vector<Scalar> c;
      for (std::size_t i = 0; i < powers.size(); ++i) c.push_back(-(*sol)(i, 0));
      c.push_back(Scalar::one(f));
      return Poly(f, std::move(c));
    }
    powers.push_back(next);
  }
}

Poly minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "minimal_polynomial of non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(Scalar::one(f));
  auto flatten = [&](const Matrix& a) { return Matrix(f, 1, n * n, a.entries()); };
  auto unflatten = [&](const Matrix& v) { return Matrix(f, n, n, v.entries()); };
  return minimal_polynomial(flatten(Matrix::identity(f, n)),
                            [&](const Matrix& v) { return flatten(unflatten(v) * m); });
}

Matrix evaluate(const Poly& p, const Matrix& m) {
  const Field f = m.field();
  Matrix acc(f, m.rows(), m.cols());
  const Matrix id = Matrix::identity(f, m.rows());
  for (int i = p.degree(); i >= 0; --i) acc = acc * m + id.scaled(p.coeff(i));
  return acc;
}

}  // namespace strathom::linalg
