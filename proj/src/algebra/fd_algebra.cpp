#include "strathom/algebra/fd_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strathom/linalg/radical.hpp"
#include "strathom/linalg/rref.hpp"

namespace strathom::algebra {

namespace {

Subspace regular_radical(const FDAlgebra& a) {
  std::vector<Matrix> action;
  action.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) action.push_back(a.right_mult(a.basis_vector(i)));
  const Matrix rad = linalg::matrix_algebra_radical(action);
  return rad.rows() ? Subspace(rad) : Subspace(a.field(), a.dim());
}

}  // namespace

FDAlgebra::FDAlgebra(Parts parts) : p_(std::move(parts)) {
  const std::size_t n = p_.basis.size();
  if (p_.table.size() != n * n) throw Error(ErrorKind::ShapeMismatch, "structure table has the wrong size");
  if (p_.idempotents.size() != p_.vertices.size()) {
    throw Error(ErrorKind::ShapeMismatch, "one idempotent per vertex expected");
  }
  if (!p_.radical) p_.radical = regular_radical(*this);
}

std::optional<std::size_t> FDAlgebra::vertex_index(const std::string& name) const {
  for (std::size_t v = 0; v < p_.vertices.size(); ++v) {
    if (p_.vertices[v] == name) return v;
  }
  return std::nullopt;
}

Matrix FDAlgebra::mul(const Matrix& a, const Matrix& b) const {
  const std::size_t n = dim();
  Matrix out(field(), 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& x = a(0, i);
    if (x.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& y = b(0, j);
      if (y.is_zero()) continue;
      const Scalar xy = x * y;
      for (const auto& [k, c] : product(i, j)) out(0, k) += xy * c;
    }
  }
  return out;
}

Matrix FDAlgebra::unit() const {
  Matrix u(field(), 1, dim());
  for (auto i : p_.idempotents) u(0, i) = Scalar::one(field());
  return u;
}

Matrix FDAlgebra::basis_vector(std::size_t i) const {
  Matrix v(field(), 1, dim());
  v(0, i) = Scalar::one(field());
  return v;
}

Matrix FDAlgebra::right_mult(const Matrix& a) const {
  const std::size_t n = dim();
  Matrix out(field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& y = a(0, j);
      if (y.is_zero()) continue;
      for (const auto& [k, c] : product(i, j)) out(i, k) += y * c;
    }
  }
  return out;
}

Matrix FDAlgebra::left_mult(const Matrix& a) const {
  const std::size_t n = dim();
  Matrix out(field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar& x = a(0, i);
      if (x.is_zero()) continue;
      for (const auto& [k, c] : product(i, j)) out(j, k) += x * c;
    }
  }
  return out;
}

std::vector<std::size_t> FDAlgebra::block(std::size_t u, std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (p_.basis[i].source == u && p_.basis[i].target == v) out.push_back(i);
  }
  return out;
}

Quiver FDAlgebra::quiver() const {
  if (p_.presentation) return p_.presentation->quiver;
  Quiver q;
  q.vertices = p_.vertices;
  const Subspace& rad = radical();
  Matrix sq(field(), 0, dim());
  for (std::size_t i = 0; i < rad.dim(); ++i) {
    for (std::size_t j = 0; j < rad.dim(); ++j) sq = vstack(sq, mul(rad.basis().row(i), rad.basis().row(j)));
  }
  const Subspace rad2(sq);
  // Both spaces are sums of Peirce blocks, so dimensions split blockwise.
  for (std::size_t u = 0; u < num_vertices(); ++u) {
    for (std::size_t v = 0; v < num_vertices(); ++v) {
      const auto idx = block(u, v);
      const auto count_in = [&](const Subspace& s) {
        return rank(s.basis().select_cols(idx));
      };
      const std::size_t arrows = count_in(rad) - count_in(rad2);
      for (std::size_t k = 0; k < arrows; ++k) {
        q.arrows.push_back({"x_" + p_.vertices[u] + "_" + p_.vertices[v] + (arrows > 1 ? "_" + std::to_string(k + 1) : ""), u, v});
      }
    }
  }
  return q;
}

std::string FDAlgebra::element_to_string(const Matrix& a) const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& c = a(0, i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += c.to_string() + "*";
    out += p_.basis[i].label;
  }
  return out.empty() ? "0" : out;
}

AlgebraPtr opposite_algebra(const FDAlgebra& a) {
  FDAlgebra::Parts parts = a.parts();
  parts.name = a.name().empty() ? "" : a.name() + "^op";
  const std::size_t n = a.dim();
  for (auto& b : parts.basis) {
    std::swap(b.source, b.target);
    std::reverse(b.word.begin(), b.word.end());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) parts.table[i * n + j] = a.product(j, i);
  }
  if (parts.presentation) {
    for (auto& arrow : parts.presentation->quiver.arrows) std::swap(arrow.source, arrow.target);
    for (auto& rel : parts.presentation->relations) {
      for (auto& term : rel) std::reverse(term.path.begin(), term.path.end());
    }
    parts.presentation->name = parts.name;
    // Labels follow the reversed words.
    for (auto& b : parts.basis) {
      if (!b.word.empty()) b.label = word_label(parts.presentation->quiver, b.word, b.source);
    }
  }
  return std::make_shared<FDAlgebra>(std::move(parts));
}

Subspace idempotent_ideal(const FDAlgebra& a, const std::vector<std::size_t>& e_vertices) {
  const std::set<std::size_t> e(e_vertices.begin(), e_vertices.end());
  Matrix rows(a.field(), 0, a.dim());
  std::vector<Matrix> parts;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!e.count(a.basis(i).target)) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.basis(j).source != a.basis(i).target) continue;
      Matrix r(a.field(), 1, a.dim());
      for (const auto& [k, c] : a.product(i, j)) r(0, k) = c;
      parts.push_back(std::move(r));
    }
  }
  Matrix all(a.field(), parts.size(), a.dim());
  for (std::size_t r = 0; r < parts.size(); ++r) all.set_block(r, 0, parts[r]);
  return Subspace(all);
}

AlgebraPtr quotient_by_idempotent_ideal(const FDAlgebra& a, const std::vector<std::size_t>& e_vertices) {
  const std::size_t n = a.dim();
  const std::set<std::size_t> e(e_vertices.begin(), e_vertices.end());
  for (auto v : e) {
    if (v >= a.num_vertices()) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
  }
  // Reversed columns make pivots prefer later (longer) basis elements, so the
  // surviving basis keeps the short paths.
  std::vector<std::size_t> rev(n);
  for (std::size_t i = 0; i < n; ++i) rev[i] = n - 1 - i;
  const Subspace ideal(idempotent_ideal(a, e_vertices).basis().select_cols(rev));
  std::vector<std::size_t> keep;
  for (auto c : ideal.complement_columns()) keep.push_back(n - 1 - c);
  std::sort(keep.begin(), keep.end());
  std::vector<std::size_t> pos(n, std::size_t(-1));
  for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = k;

  auto project = [&](const Matrix& v) {
    const Matrix r = ideal.reduce(v.select_cols(rev));
    Matrix out(a.field(), 1, keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) out(0, k) = r(0, n - 1 - keep[k]);
    return out;
  };

  FDAlgebra::Parts parts;
  parts.field = a.field();
  parts.name = a.name().empty() ? "" : a.name() + "/AeA";
  parts.origin = "quotient";
  std::vector<std::size_t> vmap(a.num_vertices(), std::size_t(-1));
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    if (e.count(v)) continue;
    vmap[v] = parts.vertices.size();
    parts.vertices.push_back(a.vertices()[v]);
    parts.idempotents.push_back(pos.at(a.idempotent(v)));
  }
  const bool from_presentation = a.presentation().has_value();
  std::vector<std::size_t> gen_map(a.generators().size(), std::size_t(-1));
  if (from_presentation) {
    for (std::size_t g = 0; g < a.generators().size(); ++g) {
      const std::size_t b = a.generators()[g];
      if (pos[b] == std::size_t(-1)) continue;
      gen_map[g] = parts.generators.size();
      parts.generators.push_back(pos[b]);
    }
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    BasisElement b = a.basis(keep[k]);
    b.source = vmap.at(b.source);
    b.target = vmap.at(b.target);
    if (from_presentation) {
      for (auto& letter : b.word) letter = gen_map.at(letter);
    } else if (!b.word.empty()) {
      b.word = {parts.generators.size()};
      parts.generators.push_back(k);
    }
    parts.basis.push_back(std::move(b));
  }
  const std::size_t m = keep.size();
  parts.table.assign(m * m, {});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (a.product(keep[i], keep[j]).empty()) continue;
      const Matrix prod = project(a.mul(a.basis_vector(keep[i]), a.basis_vector(keep[j])));
      SparseVec sv;
      for (std::size_t k = 0; k < m; ++k) {
        if (!prod(0, k).is_zero()) sv.emplace_back(k, prod(0, k));
      }
      parts.table[i * m + j] = std::move(sv);
    }
  }
  Matrix rad_rows(a.field(), a.radical().dim(), m);
  for (std::size_t r = 0; r < a.radical().dim(); ++r) rad_rows.set_block(r, 0, project(a.radical().basis().row(r)));
  parts.radical = Subspace(rad_rows);
  return std::make_shared<FDAlgebra>(std::move(parts));
}

AlgebraPtr corner_algebra(const FDAlgebra& a, const std::vector<std::size_t>& e_vertices) {
  const std::set<std::size_t> e(e_vertices.begin(), e_vertices.end());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (e.count(a.basis(i).source) && e.count(a.basis(i).target)) keep.push_back(i);
  }
  std::vector<std::size_t> pos(a.dim(), std::size_t(-1));
  for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = k;
  FDAlgebra::Parts parts;
  parts.field = a.field();
  parts.name = a.name().empty() ? "" : a.name() + "_corner";
  parts.origin = "abstract";
  std::vector<std::size_t> vmap(a.num_vertices(), std::size_t(-1));
  for (auto v : e) {
    vmap[v] = parts.vertices.size();
    parts.vertices.push_back(a.vertices().at(v));
    parts.idempotents.push_back(pos.at(a.idempotent(v)));
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    BasisElement b = a.basis(keep[k]);
    b.source = vmap[b.source];
    b.target = vmap[b.target];
    if (!b.word.empty()) {
      b.word = {parts.generators.size()};
      parts.generators.push_back(k);
    }
    parts.basis.push_back(std::move(b));
  }
  const std::size_t m = keep.size();
  parts.table.assign(m * m, {});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      SparseVec sv;
      for (const auto& [k, c] : a.product(keep[i], keep[j])) sv.emplace_back(pos.at(k), c);
      parts.table[i * m + j] = std::move(sv);
    }
  }
  parts.radical = Subspace(a.radical().basis().select_cols(keep));
  return std::make_shared<FDAlgebra>(std::move(parts));
}

bool is_directed(const FDAlgebra& a) { return !a.quiver().has_oriented_cycle(); }

bool is_nilpotent_ideal(const FDAlgebra& a, const Subspace& s) {
  Subspace power = s;
  while (power.dim() > 0) {
    std::vector<Matrix> rows;
    for (std::size_t i = 0; i < power.dim(); ++i) {
      for (std::size_t j = 0; j < s.dim(); ++j) {
        Matrix p = a.mul(power.basis().row(i), s.basis().row(j));
        if (!p.is_zero()) rows.push_back(std::move(p));
      }
    }
    Matrix all(a.field(), rows.size(), a.dim());
    for (std::size_t r = 0; r < rows.size(); ++r) all.set_block(r, 0, rows[r]);
    Subspace next = rows.empty() ? Subspace(a.field(), a.dim()) : Subspace(all);
    if (next.dim() >= power.dim()) return false;
    power = std::move(next);
  }
  return true;
}

bool check_associative(const FDAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix ij = a.mul(a.basis_vector(i), a.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        const Matrix left = a.mul(ij, a.basis_vector(k));
        const Matrix right = a.mul(a.basis_vector(i), a.mul(a.basis_vector(j), a.basis_vector(k)));
        if (left != right) return false;
      }
    }
  }
  return true;
}

bool check_unit(const FDAlgebra& a) {
  const Matrix one = a.unit();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Matrix b = a.basis_vector(i);
    if (a.mul(one, b) != b || a.mul(b, one) != b) return false;
  }
  for (std::size_t u = 0; u < a.num_vertices(); ++u) {
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
      const Matrix p = a.mul(a.basis_vector(a.idempotent(u)), a.basis_vector(a.idempotent(v)));
      if (p != (u == v ? a.basis_vector(a.idempotent(u)) : a.zero())) return false;
    }
  }
  return true;
}

}  // namespace strathom::algebra
