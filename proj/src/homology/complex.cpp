#include "strathom/homology/complex.hpp"

#include "strathom/linalg/rref.hpp"

namespace strathom::homology {

namespace {

Matrix restricted(const FDAlgebra& a, std::size_t w, std::size_t u, const Matrix& x) {
  Matrix out = a.zero();
  for (auto i : a.block(w, u)) out(0, i) = x(0, i);
  return out;
}

// Inverse of x : P_u -> P_w (x in e_w A e_u) as an element of e_u A e_w, if x is an isomorphism.
std::optional<Matrix> iso_inverse(const FDAlgebra& a, std::size_t u, std::size_t w, const Matrix& x) {
  if (x.is_zero()) return std::nullopt;
  const auto ys = a.block(u, w);
  if (ys.empty()) return std::nullopt;
  // y * x = e_u and x * y = e_w, linear in the coefficients of y.
  Matrix lhs(a.field(), 2 * a.dim(), ys.size());
  Matrix rhs(a.field(), 2 * a.dim(), 1);
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const Matrix y = a.basis_vector(ys[k]);
    const Matrix yx = a.mul(y, x), xy = a.mul(x, y);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      lhs(j, k) = yx(0, j);
      lhs(a.dim() + j, k) = xy(0, j);
    }
  }
  rhs(a.idempotent(u), 0) = Scalar::one(a.field());
  rhs(a.dim() + a.idempotent(w), 0) = Scalar::one(a.field());
  const auto c = linalg::solve_linear(lhs, rhs);
  if (!c) return std::nullopt;
  Matrix y = a.zero();
  for (std::size_t k = 0; k < ys.size(); ++k) y(0, ys[k]) = (*c)(k, 0);
  return y;
}

struct IsoEntry {
  std::size_t diff, s, t;
  Matrix inverse;
};

std::optional<IsoEntry> find_iso(const ProjComplex& c) {
  const FDAlgebra& a = *c.algebra;
  for (std::size_t i = 0; i < c.diffs.size(); ++i) {
    const ProjMap& d = c.diffs[i];
    for (std::size_t s = 0; s < d.source.size(); ++s) {
      for (std::size_t t = 0; t < d.target.size(); ++t) {
        if (auto inv = iso_inverse(a, d.source[s], d.target[t], d.entry[s][t])) return IsoEntry{i, s, t, *inv};
      }
    }
  }
  return std::nullopt;
}

template <class T>
std::vector<T> without(const std::vector<T>& v, std::size_t k) {
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != k) out.push_back(v[i]);
  }
  return out;
}

void cancel(ProjComplex& c, const IsoEntry& e) {
  const FDAlgebra& a = *c.algebra;
  ProjMap& d = c.diffs[e.diff];
  ProjMap next = ProjMap::zero(a, without(d.source, e.s), without(d.target, e.t));
  for (std::size_t s = 0, s2 = 0; s < d.source.size(); ++s) {
    if (s == e.s) continue;
    for (std::size_t t = 0, t2 = 0; t < d.target.size(); ++t) {
      if (t == e.t) continue;
      Matrix x = d.entry[s][t];
      if (!d.entry[s][e.t].is_zero() && !d.entry[e.s][t].is_zero()) {
        x -= a.mul(a.mul(d.entry[e.s][t], e.inverse), d.entry[s][e.t]);
      }
      next.entry[s2][t2++] = std::move(x);
    }
    ++s2;
  }
  if (e.diff > 0) {
    ProjMap& prev = c.diffs[e.diff - 1];
    prev.target = without(prev.target, e.s);
    for (auto& row : prev.entry) row = without(row, e.s);
  }
  if (e.diff + 1 < c.diffs.size()) {
    ProjMap& after = c.diffs[e.diff + 1];
    after.source = without(after.source, e.t);
    after.entry = without(after.entry, e.t);
  }
  c.terms[e.diff] = next.source;
  c.terms[e.diff + 1] = next.target;
  d = std::move(next);
}

std::vector<ProjSum> sums(const ProjComplex& c) {
  std::vector<ProjSum> out;
  for (const auto& t : c.terms) out.push_back(proj_sum(c.algebra, t));
  return out;
}

}  // namespace

const std::vector<std::size_t>& ProjComplex::term(int degree) const {
  static const std::vector<std::size_t> empty;
  if (degree < lowest || degree > highest()) return empty;
  return terms[static_cast<std::size_t>(degree - lowest)];
}

bool ProjComplex::is_zero() const {
  for (const auto& t : terms) {
    if (!t.empty()) return false;
  }
  return true;
}

bool is_complex(const ProjComplex& c) {
  if (!c.algebra) return false;
  const FDAlgebra& a = *c.algebra;
  if (c.terms.empty()) return c.diffs.empty();
  if (c.diffs.size() + 1 != c.terms.size()) return false;
  for (std::size_t i = 0; i < c.diffs.size(); ++i) {
    const ProjMap& d = c.diffs[i];
    if (d.source != c.terms[i] || d.target != c.terms[i + 1]) return false;
    if (d.entry.size() != d.source.size()) return false;
    for (std::size_t s = 0; s < d.source.size(); ++s) {
      if (d.entry[s].size() != d.target.size()) return false;
      for (std::size_t t = 0; t < d.target.size(); ++t) {
        const Matrix& x = d.entry[s][t];
        if (x.rows() != 1 || x.cols() != a.dim()) return false;
        if (restricted(a, d.target[t], d.source[s], x) != x) return false;
      }
    }
    if (i + 1 < c.diffs.size() && !compose(a, d, c.diffs[i + 1]).is_zero()) return false;
  }
  return true;
}

bool is_minimal(const ProjComplex& c) { return !find_iso(c); }

MinimizeResult minimize_complex(const ProjComplex& c) {
  if (!is_complex(c)) throw Error(ErrorKind::InvalidArgument, "not a complex of projectives");
  MinimizeResult out{c, 0, 0};
  while (auto e = find_iso(out.complex)) {
    cancel(out.complex, *e);
    ++out.cancellations;
  }
  out.complex.minimal = true;
  std::optional<int> lo, hi;
  for (int n = out.complex.lowest; n <= out.complex.highest(); ++n) {
    if (out.complex.term(n).empty()) continue;
    if (!lo) lo = n;
    hi = n;
  }
  out.length = lo ? static_cast<std::size_t>(*hi - *lo) : 0;
  return out;
}

std::map<int, std::size_t> cohomology_dims(const ProjComplex& c) {
  const FDAlgebra& a = *c.algebra;
  const auto s = sums(c);
  std::vector<Matrix> d;
  for (std::size_t i = 0; i < c.diffs.size(); ++i) d.push_back(total_matrix(a, s[i], s[i + 1], c.diffs[i]));
  std::map<int, std::size_t> out;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    const Matrix* in = i > 0 ? &d[i - 1] : nullptr;
    const Matrix* outgoing = i < d.size() ? &d[i] : nullptr;
    out[c.lowest + static_cast<int>(i)] = middle_homology(s[i].module.total_dim(), in, outgoing);
  }
  return out;
}

std::map<int, std::size_t> hom_to_regular_dims(const ProjComplex& c) {
  const Representation reg = rep::regular(c.algebra);
  // Hom(X, A) has Hom(X^j, A) in degree -j; the coboundary from X^(j+1) uses d^j.
  std::vector<Matrix> h;
  for (const auto& d : c.diffs) h.push_back(hom_into(reg, d));
  std::map<int, std::size_t> out;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    std::size_t dim = 0;
    for (auto u : c.terms[i]) dim += reg.dim(u);
    const Matrix* in = i < h.size() ? &h[i] : nullptr;
    const Matrix* outgoing = i > 0 ? &h[i - 1] : nullptr;
    out[-(c.lowest + static_cast<int>(i))] = middle_homology(dim, in, outgoing);
  }
  return out;
}

std::optional<int> r_invariant(const ProjComplex& c) {
  std::optional<int> r;
  for (const auto& [n, d] : cohomology_dims(c)) {
    if (d) r = n;
  }
  return r;
}

std::optional<int> s_invariant(const ProjComplex& c) {
  std::optional<int> s;
  for (const auto& [n, d] : hom_to_regular_dims(c)) {
    if (d) s = n;
  }
  return s;
}

ProjComplex staircase(const AlgebraPtr& fx43, std::size_t m) {
  const FDAlgebra& a = *fx43;
  auto find = [&](const std::string& label) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.basis(i).label == label) return a.basis_vector(i);
    }
    throw Error(ErrorKind::InvalidArgument, "staircase needs a basis element '" + label + "'");
  };
  const auto v1 = a.vertex_index("1"), v2 = a.vertex_index("2");
  if (!v1 || !v2) throw Error(ErrorKind::InvalidArgument, "staircase needs vertices 1 and 2");
  const Matrix ab = find("alpha*beta"), b = find("beta");
  ProjComplex c{fx43, -static_cast<int>(m), {}, {}, false};
  for (std::size_t i = 0; i < m; ++i) c.terms.push_back({*v2});
  c.terms.push_back({*v1});
  for (std::size_t i = 0; i < m; ++i) {
    const bool last = i + 1 == m;
    ProjMap d = ProjMap::zero(a, {*v2}, {last ? *v1 : *v2});
    d.entry[0][0] = last ? b : ab;
    c.diffs.push_back(std::move(d));
  }
  return c;
}

}  // namespace strathom::homology
