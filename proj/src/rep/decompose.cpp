#include "strathom/rep/decompose.hpp"

#include <random>

#include "strathom/linalg/poly.hpp"
#include "strathom/linalg/radical.hpp"
#include "strathom/linalg/rref.hpp"
#include "strathom/rep/morphism.hpp"

namespace strathom::rep {

namespace {

using linalg::Poly;

Matrix flatten(const Matrix& m) {
  Matrix out(m.field(), 1, m.rows() * m.cols());
  for (std::size_t e = 0; e < m.rows() * m.cols(); ++e) out(0, e) = m(e / m.cols(), e % m.cols());
  return out;
}

Matrix unflatten(const Matrix& row, std::size_t n) {
  Matrix out(row.field(), n, n);
  for (std::size_t e = 0; e < n * n; ++e) out(e / n, e % n) = row(0, e);
  return out;
}

Matrix stack_flat(const Field& f, std::size_t n, const std::vector<Matrix>& ms) {
  Matrix out(f, ms.size(), n * n);
  for (std::size_t k = 0; k < ms.size(); ++k) out.set_block(k, 0, flatten(ms[k]));
  return out;
}

Subspace flat_span(const Field& f, std::size_t n, const std::vector<Matrix>& ms) {
  return ms.empty() ? Subspace(f, n * n) : Subspace(stack_flat(f, n, ms));
}

Matrix combine(const std::vector<Matrix>& basis, const Matrix& coeffs, std::size_t row) {
  Matrix out(basis.front().field(), basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!coeffs(row, k).is_zero()) out += basis[k].scaled(coeffs(row, k));
  }
  return out;
}

bool is_idempotent(const Matrix& e) { return e * e == e; }

Matrix lift_idempotent(Matrix e) {
  const Scalar three(e.field(), 3), two(e.field(), 2);
  while (!is_idempotent(e)) {
    const Matrix e2 = e * e;
    e = e2.scaled(three) - (e2 * e).scaled(two);
  }
  return e;
}

// Endomorphism algebra of a module as a span of total matrices, with its
// radical, and reduction modulo the radical.
struct EndContext {
  Field field;
  std::size_t n = 0;
  std::vector<Matrix> basis;
  std::vector<Matrix> radical;
  Subspace radical_flat;

  EndContext(const Representation& m, std::vector<Matrix> b) : field(m.field()), n(m.total_dim()), basis(std::move(b)) {
    const Matrix coeffs = linalg::matrix_algebra_radical(basis);
    for (std::size_t r = 0; r < coeffs.rows(); ++r) radical.push_back(combine(basis, coeffs, r));
    radical_flat = flat_span(field, n, radical);
  }

  std::size_t semisimple_dim() const { return basis.size() - radical.size(); }
  Matrix reduce(const Matrix& x) const { return radical_flat.reduce(flatten(x)); }
  bool in_radical(const Matrix& x) const { return reduce(x).is_zero(); }

  Poly minpoly_mod_radical(const Matrix& x) const {
    return linalg::minimal_polynomial(reduce(Matrix::identity(field, n)),
                                      [&](const Matrix& v) { return reduce(unflatten(v, n) * x); });
  }
};

// Idempotent from a pair of coprime factors of the exact minimal polynomial.
std::optional<Matrix> crt_idempotent(const Matrix& x) {
  const Poly f = linalg::minimal_polynomial(x);
  const auto factors = linalg::coprime_factors(f);
  if (factors.size() < 2) return std::nullopt;
  Poly rest = Poly::constant(Scalar::one(x.field()));
  for (std::size_t k = 1; k < factors.size(); ++k) rest = rest * factors[k];
  const auto eg = linalg::ext_gcd(factors.front(), rest);
  return linalg::evaluate(eg.t * rest, x);
}

// Left identity of the right ideal y E modulo the radical, lifted to E.
std::optional<Matrix> right_ideal_idempotent(const EndContext& ctx, const Matrix& y) {
  std::vector<Matrix> gens;
  for (const auto& b : ctx.basis) gens.push_back(y * b);
  // Representatives of a basis of (yE + rad) / rad.
  std::vector<Matrix> reps;
  Subspace seen = ctx.radical_flat;
  for (const auto& g : gens) {
    const Matrix fg = flatten(g);
    if (seen.contains(fg)) continue;
    seen = seen.sum(Subspace(fg));
    reps.push_back(g);
  }
  if (reps.empty() || reps.size() == ctx.semisimple_dim()) return std::nullopt;
  // Unknowns c_k with sum_k c_k reps[k] reps[l] = reps[l] mod rad for every l.
  const std::size_t r = reps.size();
  const std::size_t len = ctx.n * ctx.n;
  Matrix lhs(ctx.field, r * len, r);
  Matrix rhs(ctx.field, r * len, 1);
  for (std::size_t l = 0; l < r; ++l) {
    const Matrix target = ctx.reduce(reps[l]);
    for (std::size_t e = 0; e < len; ++e) rhs(l * len + e, 0) = target(0, e);
    for (std::size_t k = 0; k < r; ++k) {
      const Matrix prod = ctx.reduce(reps[k] * reps[l]);
      for (std::size_t e = 0; e < len; ++e) lhs(l * len + e, k) = prod(0, e);
    }
  }
  const auto c = linalg::solve_linear(lhs, rhs);
  if (!c) return std::nullopt;
  Matrix eps(ctx.field, ctx.n, ctx.n);
  for (std::size_t k = 0; k < r; ++k) eps += reps[k].scaled((*c)(k, 0));
  return lift_idempotent(eps);
}

// A nontrivial idempotent of the candidate, or nullopt when it gives none.
std::optional<Matrix> idempotent_from(const EndContext& ctx, const Matrix& x) {
  if (ctx.in_radical(x)) return std::nullopt;
  const Poly f = ctx.minpoly_mod_radical(x);
  if (f.degree() <= 1) return std::nullopt;
  if (linalg::coprime_factors(f).size() >= 2) return crt_idempotent(x);
  const Poly h = linalg::squarefree_part(f);
  if (h.degree() < f.degree()) return right_ideal_idempotent(ctx, linalg::evaluate(h, x));
  return std::nullopt;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_rational()) return Scalar(f, static_cast<long>(rng() % 7) - 3);
  return Scalar(f, static_cast<long>(rng() % f.characteristic()));
}

std::optional<Matrix> find_idempotent(const EndContext& ctx, const DecomposeOptions& opts) {
  if (ctx.semisimple_dim() <= 1) return std::nullopt;
  const auto& b = ctx.basis;
  auto accept = [&](const std::optional<Matrix>& e) {
    return e && !e->is_zero() && *e != Matrix::identity(ctx.field, ctx.n);
  };
  for (const auto& x : b) {
    if (auto e = idempotent_from(ctx, x); accept(e)) return e;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (auto e = idempotent_from(ctx, b[i] * b[j]); accept(e)) return e;
      if (j > i) {
        if (auto e = idempotent_from(ctx, b[i] + b[j]); accept(e)) return e;
      }
    }
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.random_candidates; ++t) {
    Matrix x(ctx.field, ctx.n, ctx.n);
    for (const auto& y : b) x += y.scaled(random_scalar(ctx.field, rng));
    if (auto e = idempotent_from(ctx, x); accept(e)) return e;
  }
  return std::nullopt;
}

// Submodule x*e with maps to and from the ambient module.
Summand image_summand(const Representation& m, const Matrix& e) {
  SubRep sub = submodule_rep(m, Subspace(e));
  // projection * inclusion == e
  auto pt = linalg::solve_linear(sub.inclusion.transpose(), e.transpose());
  if (!pt) throw Error(ErrorKind::InvalidArgument, "idempotent image does not split");
  return {std::move(sub.module), std::move(sub.inclusion), pt->transpose()};
}

void split_into(const Representation& m, const DecomposeOptions& opts, std::vector<Summand>& out) {
  if (m.total_dim() == 0) return;
  const Matrix id = Matrix::identity(m.field(), m.total_dim());
  std::vector<Matrix> end = hom_space(m, m);
  std::optional<Matrix> e;
  if (end.size() > 1) {
    EndContext ctx(m, std::move(end));
    e = find_idempotent(ctx, opts);
  }
  if (!e) {
    out.push_back({m, id, id});
    return;
  }
  for (const Matrix& part : {*e, id - *e}) {
    const Summand s = image_summand(m, part);
    std::vector<Summand> inner;
    split_into(s.module, opts, inner);
    for (auto& t : inner) out.push_back({std::move(t.module), t.inclusion * s.inclusion, s.projection * t.projection});
  }
}

// Indecomposables x, y are isomorphic iff some basis composite x -> y -> x is invertible.
bool indecomposables_isomorphic(const Representation& x, const Representation& y) {
  if (x.dims() != y.dims()) return false;
  if (x.total_dim() == 0) return true;
  const auto fs = hom_space(x, y);
  if (fs.empty()) return false;
  const auto gs = hom_space(y, x);
  for (const auto& f : fs) {
    for (const auto& g : gs) {
      if (linalg::rank(f * g) == x.total_dim()) return true;
    }
  }
  return false;
}

// Exhaustive search over F_p for an invertible combination; nullopt when the
// hom space is too large to enumerate.
std::optional<bool> exhaustive_invertible(const std::vector<Matrix>& homs, std::size_t n) {
  const Field& f = homs.front().field();
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < homs.size(); ++k) {
    total *= p;
    if (total > 4096) return std::nullopt;
  }
  for (std::uint64_t c = 1; c < total; ++c) {
    std::uint64_t rest = c;
    Matrix x(f, n, n);
    for (const auto& h : homs) {
      const auto digit = rest % p;
      rest /= p;
      if (digit) x += h.scaled(Scalar(f, static_cast<long>(digit)));
    }
    if (linalg::rank(x) == n) return true;
  }
  return false;
}

}  // namespace

Subspace matrix_algebra_radical(const std::vector<Matrix>& basis) {
  const Matrix coeffs = linalg::matrix_algebra_radical(basis);
  return coeffs.rows() ? Subspace(coeffs) : Subspace(basis.front().field(), basis.size());
}

std::vector<Summand> split_indecomposables(const Representation& m, const DecomposeOptions& opts) {
  std::vector<Summand> out;
  split_into(m, opts, out);
  return out;
}

std::vector<DecompositionEntry> decompose(const Representation& m, const DecomposeOptions& opts) {
  std::vector<DecompositionEntry> out;
  for (auto& s : split_indecomposables(m, opts)) {
    bool found = false;
    for (auto& entry : out) {
      if (indecomposables_isomorphic(entry.module, s.module)) {
        ++entry.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) out.push_back({std::move(s.module), 1});
  }
  return out;
}

bool is_indecomposable(const Representation& m, const DecomposeOptions& opts) {
  return m.total_dim() > 0 && split_indecomposables(m, opts).size() == 1;
}

std::size_t summand_count(const Representation& m) { return split_indecomposables(m).size(); }

bool is_isomorphic(const Representation& m, const Representation& n) {
  if (m.algebra_ptr() != n.algebra_ptr() || m.dims() != n.dims()) return false;
  if (m.total_dim() == 0) return true;
  const auto homs = hom_space(m, n);
  if (homs.empty()) return false;
  const Field& f = m.field();
  const std::size_t d = m.total_dim();
  if (f.is_rational()) {
    std::mt19937_64 rng(0x5eed);
    Matrix x(f, d, d);
    for (const auto& h : homs) x += h.scaled(Scalar(f, static_cast<long>(rng() % 2001) - 1000));
    if (linalg::rank(x) == d) return true;
  } else if (auto found = exhaustive_invertible(homs, d)) {
    return *found;
  }
  auto a = decompose(m);
  auto b = decompose(n);
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool matched = false;
    for (std::size_t k = 0; k < b.size() && !matched; ++k) {
      if (used[k] || b[k].multiplicity != x.multiplicity) continue;
      if (indecomposables_isomorphic(x.module, b[k].module)) matched = used[k] = true;
    }
    if (!matched) return false;
  }
  return true;
}

EndomorphismAlgebra endomorphism_algebra(const Representation& m, const std::string& name,
                                         const DecomposeOptions& opts) {
  const Field& f = m.field();
  const std::size_t n = m.total_dim();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "endomorphism algebra of the zero module");
  std::vector<Summand> summands = split_indecomposables(m, opts);
  const std::size_t r = summands.size();
  std::vector<Matrix> idem;
  for (const auto& s : summands) idem.push_back(s.projection * s.inclusion);

  const std::vector<Matrix> end = hom_space(m, m);
  const Matrix rad_coeffs = linalg::matrix_algebra_radical(end);
  std::vector<Matrix> rad;
  for (std::size_t k = 0; k < rad_coeffs.rows(); ++k) rad.push_back(combine(end, rad_coeffs, k));

  // Block (k, l) = e_k ∘ E ∘ e_l, whose matrices are idem[l] * F * idem[k].
  algebra::FDAlgebra::Parts parts;
  parts.field = f;
  parts.name = name;
  parts.origin = "abstract";
  std::vector<Matrix> chosen;
  std::vector<bool> in_rad;
  for (std::size_t k = 0; k < r; ++k) parts.vertices.push_back(std::to_string(k + 1));
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < r; ++l) {
      std::vector<Matrix> block;
      if (k == l) {
        parts.idempotents.push_back(chosen.size());
        block.push_back(idem[k]);
      }
      const std::size_t fixed = block.size();
      Subspace span = flat_span(f, n, block);
      std::vector<bool> block_rad(block.size(), false);
      auto offer = [&](const Matrix& x, bool radical) {
        const Matrix fx = flatten(x);
        if (span.contains(fx)) return;
        span = span.sum(Subspace(fx));
        block.push_back(x);
        block_rad.push_back(radical);
      };
      for (const auto& x : rad) offer(idem[l] * x * idem[k], true);
      for (const auto& x : end) offer(idem[l] * x * idem[k], false);
      for (std::size_t i = 0; i < block.size(); ++i) {
        const std::size_t idx = chosen.size();
        std::string label = i < fixed ? "e_" + std::to_string(k + 1) : "b" + std::to_string(idx);
        algebra::BasisElement be{label, k, l, {}};
        if (i >= fixed) {
          be.word = {parts.generators.size()};
          parts.generators.push_back(idx);
        }
        parts.basis.push_back(std::move(be));
        chosen.push_back(block[i]);
        in_rad.push_back(block_rad[i]);
      }
    }
  }
  const std::size_t d = chosen.size();
  if (d != end.size()) throw Error(ErrorKind::InvalidArgument, "Peirce blocks do not span the endomorphism algebra");
  const Matrix basis_t = stack_flat(f, n, chosen).transpose();
  parts.table.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (parts.basis[i].target != parts.basis[j].source) continue;
      const Matrix prod = chosen[j] * chosen[i];  // b_i ∘ b_j
      if (prod.is_zero()) continue;
      const auto c = linalg::solve_linear(basis_t, flatten(prod).transpose());
      if (!c) throw Error(ErrorKind::InvalidArgument, "endomorphisms not closed under composition");
      algebra::SparseVec sv;
      for (std::size_t k = 0; k < d; ++k) {
        if (!(*c)(k, 0).is_zero()) sv.emplace_back(k, (*c)(k, 0));
      }
      parts.table[i * d + j] = std::move(sv);
    }
  }
  std::vector<std::size_t> rad_idx;
  for (std::size_t i = 0; i < d; ++i) {
    if (in_rad[i]) rad_idx.push_back(i);
  }
  parts.radical = rad_idx.empty() ? Subspace(f, d) : Subspace(Matrix::identity(f, d).select_rows(rad_idx));
  auto alg = std::make_shared<algebra::FDAlgebra>(std::move(parts));
  return {std::move(alg), std::move(chosen), std::move(summands)};
}

}  // namespace strathom::rep
