#include "strathom/homology/projmap.hpp"

#include "strathom/linalg/rref.hpp"

namespace strathom::homology {

namespace {

// Basis index of each coordinate of P_u, in the order used by rep::projective.
std::vector<std::size_t> coordinate_basis(const FDAlgebra& a, std::size_t u) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < a.num_vertices(); ++t) {
    for (auto i : a.block(u, t)) out.push_back(i);
  }
  return out;
}

// Coordinates in P_u of an element of e_u A.
Matrix to_local(const FDAlgebra& a, std::size_t u, const Matrix& element) {
  const auto basis = coordinate_basis(a, u);
  Matrix out(a.field(), 1, basis.size());
  for (std::size_t q = 0; q < basis.size(); ++q) out(0, q) = element(0, basis[q]);
  return out;
}

Matrix from_local(const FDAlgebra& a, std::size_t u, const Matrix& coords) {
  const auto basis = coordinate_basis(a, u);
  Matrix out(a.field(), 1, a.dim());
  for (std::size_t q = 0; q < basis.size(); ++q) out(0, basis[q]) = coords(0, q);
  return out;
}

}  // namespace

ProjMap ProjMap::zero(const FDAlgebra& a, std::vector<std::size_t> source, std::vector<std::size_t> target) {
  ProjMap f{std::move(source), std::move(target), {}};
  f.entry.assign(f.source.size(), std::vector<Matrix>(f.target.size(), a.zero()));
  return f;
}

bool ProjMap::is_zero() const {
  for (const auto& row : entry) {
    for (const auto& x : row) {
      if (!x.is_zero()) return false;
    }
  }
  return true;
}

ProjMap compose(const FDAlgebra& a, const ProjMap& f, const ProjMap& g) {
  if (f.target != g.source) throw Error(ErrorKind::ShapeMismatch, "composing projective maps with mismatched terms");
  ProjMap h = ProjMap::zero(a, f.source, g.target);
  for (std::size_t s = 0; s < f.source.size(); ++s) {
    for (std::size_t t = 0; t < f.target.size(); ++t) {
      if (f.entry[s][t].is_zero()) continue;
      for (std::size_t r = 0; r < g.target.size(); ++r) {
        if (!g.entry[t][r].is_zero()) h.entry[s][r] += a.mul(g.entry[t][r], f.entry[s][t]);
      }
    }
  }
  return h;
}

ProjSum proj_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return {{}, Representation::zero(alg), {}, {}};
  std::vector<Representation> parts;
  for (auto v : vertices) parts.push_back(rep::projective(alg, v));
  rep::SumData sum = rep::direct_sum(parts);
  return {vertices, std::move(sum.sum), std::move(sum.injections), std::move(sum.projections)};
}

Matrix total_matrix(const FDAlgebra& a, const ProjSum& src, const ProjSum& tgt, const ProjMap& f) {
  Matrix out(a.field(), src.module.total_dim(), tgt.module.total_dim());
  for (std::size_t s = 0; s < f.source.size(); ++s) {
    const auto basis = coordinate_basis(a, f.source[s]);
    for (std::size_t t = 0; t < f.target.size(); ++t) {
      const Matrix& x = f.entry[s][t];
      if (x.is_zero()) continue;
      const std::size_t w = f.target[t];
      Matrix local(a.field(), basis.size(), tgt.injections[t].rows());
      for (std::size_t q = 0; q < basis.size(); ++q) {
        local.set_block(q, 0, to_local(a, w, a.mul(x, a.basis_vector(basis[q]))));
      }
      out += src.projections[s] * local * tgt.injections[t];
    }
  }
  return out;
}

ProjMap element_form(const FDAlgebra& a, const ProjSum& src, const ProjSum& tgt, const Matrix& total) {
  ProjMap f = ProjMap::zero(a, src.vertices, tgt.vertices);
  for (std::size_t s = 0; s < src.vertices.size(); ++s) {
    const std::size_t u = src.vertices[s];
    const Matrix gen = to_local(a, u, a.basis_vector(a.idempotent(u)));
    const Matrix image = gen * src.injections[s] * total;
    for (std::size_t t = 0; t < tgt.vertices.size(); ++t) {
      f.entry[s][t] = from_local(a, tgt.vertices[t], image * tgt.projections[t]);
    }
  }
  return f;
}

Matrix hom_into(const Representation& n, const ProjMap& f) {
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (auto w : f.target) row_off.push_back(row_off.back() + n.dim(w));
  for (auto u : f.source) col_off.push_back(col_off.back() + n.dim(u));
  Matrix out(n.field(), row_off.back(), col_off.back());
  for (std::size_t s = 0; s < f.source.size(); ++s) {
    for (std::size_t t = 0; t < f.target.size(); ++t) {
      if (f.entry[s][t].is_zero()) continue;
      out.set_block(row_off[t], col_off[s], n.action_block(f.entry[s][t], f.target[t], f.source[s]));
    }
  }
  return out;
}

Matrix tensor_with(const Representation& l, const ProjMap& f) {
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (auto u : f.source) row_off.push_back(row_off.back() + l.dim(u));
  for (auto w : f.target) col_off.push_back(col_off.back() + l.dim(w));
  Matrix out(l.field(), row_off.back(), col_off.back());
  for (std::size_t s = 0; s < f.source.size(); ++s) {
    for (std::size_t t = 0; t < f.target.size(); ++t) {
      if (f.entry[s][t].is_zero()) continue;
      out.set_block(row_off[s], col_off[t], l.action_block(f.entry[s][t], f.source[s], f.target[t]));
    }
  }
  return out;
}

std::size_t middle_homology(std::size_t dim_v, const Matrix* a, const Matrix* b) {
  std::size_t r = 0;
  if (a && a->rows() && a->cols()) r += linalg::rank(*a);
  if (b && b->rows() && b->cols()) r += linalg::rank(*b);
  return dim_v - r;
}

}  // namespace strathom::homology
