#include "strathom/linalg/radical.hpp"

#include "strathom/linalg/rref.hpp"
#include "strathom/linalg/subspace.hpp"

namespace strathom::linalg {

namespace {

using u128 = unsigned __int128;

Scalar trace(const Matrix& m) {
  Scalar t = Scalar::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Matrix combine(const Field& f, const std::vector<Matrix>& basis, const Matrix& coeffs, std::size_t row) {
  const std::size_t n = basis.front().rows();
  Matrix out(f, n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!coeffs(row, k).is_zero()) out += basis[k].scaled(coeffs(row, k));
  }
  return out;
}

// tr(lift(a)^(p^i)) / p^i mod p, with lift the entrywise residue in [0, p).
std::uint64_t lifted_trace(const Matrix& a, std::uint64_t p, unsigned i) {
  const std::size_t n = a.rows();
  u128 mod = p;
  for (unsigned k = 0; k < i; ++k) mod *= p;  // p^(i+1)
  std::vector<u128> x(n * n);
  for (std::size_t r = 0; r < n * n; ++r) x[r] = a(r / n, r % n).residue();
  auto mul = [&](const std::vector<u128>& u, const std::vector<u128>& v) {
    std::vector<u128> w(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        if (u[r * n + k] == 0) continue;
        for (std::size_t c = 0; c < n; ++c) w[r * n + c] = (w[r * n + c] + u[r * n + k] * v[k * n + c]) % mod;
      }
    }
    return w;
  };
  for (unsigned k = 0; k < i; ++k) {
    std::vector<u128> y = x;
    for (std::uint64_t e = 1; e < p; ++e) y = mul(y, x);
    x = std::move(y);
  }
  u128 t = 0;
  for (std::size_t r = 0; r < n; ++r) t = (t + x[r * n + r]) % mod;
  u128 div = mod / p;
  return static_cast<std::uint64_t>((t / div) % p);
}

}  // namespace

bool is_nilpotent_span(const std::vector<Matrix>& elements) {
  if (elements.empty()) return true;
  const Field& f = elements.front().field();
  const std::size_t n = elements.front().rows();
  auto flatten = [&](const std::vector<Matrix>& ms) {
    Matrix out(f, ms.size(), n * n);
    for (std::size_t k = 0; k < ms.size(); ++k) {
      for (std::size_t e = 0; e < n * n; ++e) out(k, e) = ms[k](e / n, e % n);
    }
    return out;
  };
  auto unflatten = [&](const Matrix& row) {
    Matrix m(f, n, n);
    for (std::size_t e = 0; e < n * n; ++e) m(e / n, e % n) = row(0, e);
    return m;
  };
  Subspace power(flatten(elements));
  while (power.dim() > 0) {
    std::vector<Matrix> next;
    for (std::size_t i = 0; i < power.dim(); ++i) {
      const Matrix x = unflatten(power.basis().row(i));
      for (const auto& y : elements) next.push_back(x * y);
    }
    Subspace s(flatten(next));
    if (s.dim() >= power.dim()) return false;
    power = std::move(s);
  }
  return true;
}

Matrix matrix_algebra_radical(const std::vector<Matrix>& basis) {
  if (basis.empty()) throw Error(ErrorKind::InvalidArgument, "radical of an empty basis");
  const Field f = basis.front().field();
  const std::size_t d = basis.size();
  const std::size_t n = basis.front().rows();
  const std::uint64_t p = f.characteristic();

  // Current ideal I as coefficient rows; start from the whole algebra.
  Matrix ideal = Matrix::identity(f, d);
  unsigned levels = 0;
  if (p != 0 && p <= n) {
    std::uint64_t q = p;
    while (q <= n) {
      ++levels;
      q *= p;
    }
  }
  for (unsigned i = 0; i <= levels && ideal.rows() > 0; ++i) {
    std::vector<Matrix> members;
    for (std::size_t r = 0; r < ideal.rows(); ++r) members.push_back(combine(f, basis, ideal, r));
    // Form G(r, j) = g_i(x_r b_j); the next ideal is its left kernel inside I.
    Matrix form(f, members.size(), d);
    for (std::size_t r = 0; r < members.size(); ++r) {
      for (std::size_t j = 0; j < d; ++j) {
        const Matrix prod = members[r] * basis[j];
        form(r, j) = i == 0 ? trace(prod) : Scalar(f, static_cast<long>(lifted_trace(prod, p, i)));
      }
    }
    const Matrix k = left_kernel(form);
    ideal = k.rows() ? k * ideal : Matrix(f, 0, d);
  }
  std::vector<Matrix> members;
  for (std::size_t r = 0; r < ideal.rows(); ++r) members.push_back(combine(f, basis, ideal, r));
  if (!is_nilpotent_span(members)) {
    throw Error(ErrorKind::RadicalUnavailable, "radical computation did not yield a nilpotent ideal");
  }
  return ideal.rows() ? Subspace(ideal).basis() : ideal;
}

}  // namespace strathom::linalg
