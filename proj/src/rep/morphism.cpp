#include "strathom/rep/morphism.hpp"

#include "strathom/linalg/rref.hpp"

namespace strathom::rep {

namespace {

Matrix stack(const Field& f, std::size_t cols, const std::vector<Matrix>& parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) rows += p.rows();
  Matrix out(f, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

Subspace span_rows(const Field& f, std::size_t cols, const std::vector<Matrix>& parts) {
  const Matrix all = stack(f, cols, parts);
  return all.rows() ? Subspace(all) : Subspace(f, cols);
}

// Rows of u lying in vertex v, in local coordinates of M e_v.
Subspace local_part(const Representation& m, const Subspace& u, std::size_t v) {
  const Matrix blk = u.basis().block(0, m.offset(v), u.dim(), m.dim(v));
  return blk.rows() ? Subspace(blk) : Subspace(m.field(), m.dim(v));
}

void require_same_algebra(const Representation& m, const Representation& n) {
  if (m.algebra_ptr() != n.algebra_ptr()) throw Error(ErrorKind::DomainMismatch, "modules over different algebras");
}

}  // namespace

Representation simple(AlgebraPtr alg, std::size_t v) {
  const FDAlgebra& a = *alg;
  if (v >= a.num_vertices()) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
  bool generators_radical = true;
  for (auto gi : a.generators()) generators_radical = generators_radical && a.radical().contains(a.basis_vector(gi));
  if (!generators_radical) return top(projective(alg, v)).module;
  std::vector<std::size_t> dims(a.num_vertices(), 0);
  dims[v] = 1;
  std::vector<Matrix> gens;
  for (auto gi : a.generators()) gens.emplace_back(a.field(), dims[a.basis(gi).source], dims[a.basis(gi).target]);
  return Representation(std::move(alg), std::move(dims), std::move(gens));
}

std::vector<Matrix> hom_space(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const FDAlgebra& a = m.algebra();
  const Field& f = a.field();
  const std::size_t nv = a.num_vertices();
  std::vector<std::size_t> var_off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) var_off[v + 1] = var_off[v] + m.dim(v) * n.dim(v);
  const std::size_t nvars = var_off[nv];
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return var_off[v] + r * n.dim(v) + c; };

  std::size_t neq = 0;
  for (auto gi : a.generators()) neq += m.dim(a.basis(gi).source) * n.dim(a.basis(gi).target);
  Matrix eq(f, neq, nvars);
  std::size_t row = 0;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& gb = a.basis(a.generators()[g]);
    const std::size_t s = gb.source, t = gb.target;
    const Matrix& rm = m.generator_map(g);
    const Matrix& rn = n.generator_map(g);
    // (rho_M(g) f_t - f_s rho_N(g))(i, j) = 0
    for (std::size_t i = 0; i < m.dim(s); ++i) {
      for (std::size_t j = 0; j < n.dim(t); ++j, ++row) {
        for (std::size_t k = 0; k < m.dim(t); ++k) {
          if (!rm(i, k).is_zero()) eq(row, var(t, k, j)) += rm(i, k);
        }
        for (std::size_t k = 0; k < n.dim(s); ++k) {
          if (!rn(k, j).is_zero()) eq(row, var(s, i, k)) -= rn(k, j);
        }
      }
    }
  }
  const Matrix ker = linalg::kernel_basis(eq);
  std::vector<Matrix> out;
  out.reserve(ker.cols());
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Matrix h(f, m.total_dim(), n.total_dim());
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t r = 0; r < m.dim(v); ++r) {
        for (std::size_t s = 0; s < n.dim(v); ++s) h(m.offset(v) + r, n.offset(v) + s) = ker(var(v, r, s), c);
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_space(m, n).size(); }

bool is_morphism(const Representation& m, const Representation& n, const Matrix& f) {
  if (m.algebra_ptr() != n.algebra_ptr()) return false;
  if (f.rows() != m.total_dim() || f.cols() != n.total_dim()) return false;
  const FDAlgebra& a = m.algebra();
  for (std::size_t u = 0; u < a.num_vertices(); ++u) {
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
      if (u != v && !f.block(m.offset(u), n.offset(v), m.dim(u), n.dim(v)).is_zero()) return false;
    }
  }
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& gb = a.basis(a.generators()[g]);
    const Matrix fs = f.block(m.offset(gb.source), n.offset(gb.source), m.dim(gb.source), n.dim(gb.source));
    const Matrix ft = f.block(m.offset(gb.target), n.offset(gb.target), m.dim(gb.target), n.dim(gb.target));
    if (m.generator_map(g) * ft != fs * n.generator_map(g)) return false;
  }
  return true;
}

bool is_submodule(const Representation& m, const Subspace& u) {
  if (u.ambient() != m.total_dim()) return false;
  const FDAlgebra& a = m.algebra();
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    if (!u.contains_all(u.basis() * m.basis_action(a.idempotent(v)))) return false;
  }
  for (auto gi : a.generators()) {
    if (!u.contains_all(u.basis() * m.basis_action(gi))) return false;
  }
  return true;
}

Subspace generated_submodule(const Representation& m, const Matrix& rows) {
  std::vector<Matrix> parts;
  const FDAlgebra& a = m.algebra();
  for (std::size_t i = 0; i < a.dim(); ++i) parts.push_back(rows * m.basis_action(i));
  return span_rows(m.field(), m.total_dim(), parts);
}

SubRep submodule_rep(const Representation& m, const Subspace& u) {
  const FDAlgebra& a = m.algebra();
  const Field& f = m.field();
  std::vector<Subspace> parts;
  std::vector<Matrix> global;  // basis of U e_v in total coordinates
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    parts.push_back(local_part(m, u, v));
    Matrix g(f, parts.back().dim(), m.total_dim());
    g.set_block(0, m.offset(v), parts.back().basis());
    global.push_back(std::move(g));
    dims.push_back(parts.back().dim());
  }
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& gb = a.basis(a.generators()[g]);
    const Matrix images = parts[gb.source].basis() * m.generator_map(g);
    auto coords = parts[gb.target].coordinates(images);
    if (!coords) throw Error(ErrorKind::NotSubmodule, "subspace is not closed under " + gb.label);
    gens.push_back(std::move(*coords));
  }
  return {Representation(m.algebra_ptr(), std::move(dims), std::move(gens)), stack(f, m.total_dim(), global)};
}

QuotientRep quotient_module(const Representation& m, const Subspace& u) {
  if (!is_submodule(m, u)) throw Error(ErrorKind::NotSubmodule, "quotient by a subspace that is not a submodule");
  const FDAlgebra& a = m.algebra();
  const Field& f = m.field();
  const std::size_t nv = a.num_vertices();
  std::vector<Subspace> parts;
  std::vector<std::vector<std::size_t>> comp;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < nv; ++v) {
    parts.push_back(local_part(m, u, v));
    comp.push_back(parts.back().complement_columns());
    dims.push_back(comp.back().size());
  }
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& gb = a.basis(a.generators()[g]);
    const Matrix rows = m.generator_map(g).select_rows(comp[gb.source]);
    gens.push_back(parts[gb.target].quotient_coordinates(rows));
  }
  Representation q(m.algebra_ptr(), dims, std::move(gens));
  Matrix proj(f, m.total_dim(), q.total_dim());
  for (std::size_t v = 0; v < nv; ++v) {
    const Matrix local = parts[v].quotient_coordinates(Matrix::identity(f, m.dim(v)));
    proj.set_block(m.offset(v), q.offset(v), local);
  }
  return {std::move(q), std::move(proj)};
}

MorphismParts morphism_parts(const Representation& m, const Representation& n, const Matrix& f) {
  if (!is_morphism(m, n, f)) throw Error(ErrorKind::InvalidArgument, "not a module morphism");
  const Matrix lk = linalg::left_kernel(f);
  const Subspace ker = lk.rows() ? Subspace(lk) : Subspace(m.field(), m.total_dim());
  const Subspace img = f.rows() ? Subspace(f) : Subspace(m.field(), n.total_dim());
  return {submodule_rep(m, ker), img, quotient_module(n, img)};
}

Subspace trace_submodule(const Representation& x, const Representation& m) {
  return span_rows(m.field(), m.total_dim(), hom_space(x, m));
}

Subspace radical_submodule(const Representation& m) {
  const Subspace& rad = m.algebra().radical();
  std::vector<Matrix> parts;
  for (std::size_t i = 0; i < rad.dim(); ++i) parts.push_back(m.action(rad.basis().row(i)));
  return span_rows(m.field(), m.total_dim(), parts);
}

QuotientRep top(const Representation& m) { return quotient_module(m, radical_submodule(m)); }

ProjectiveCover projective_cover(const Representation& m) {
  const FDAlgebra& a = m.algebra();
  const Field& f = m.field();
  Subspace covered = radical_submodule(m);
  std::vector<std::size_t> vertices;
  Matrix gens(f, 0, m.total_dim());
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    for (std::size_t r = 0; r < m.dim(v); ++r) {
      if (covered.dim() == m.total_dim()) break;
      Matrix x(f, 1, m.total_dim());
      x(0, m.offset(v) + r) = Scalar::one(f);
      if (covered.contains(x)) continue;
      vertices.push_back(v);
      gens = vstack(gens, x);
      covered = covered.sum(generated_submodule(m, x));
    }
  }
  std::vector<Representation> parts;
  for (auto v : vertices) parts.push_back(projective(m.algebra_ptr(), v));
  if (parts.empty()) {
    Representation z = Representation::zero(m.algebra_ptr());
    return {{}, z, Matrix(f, 0, m.total_dim()), gens};
  }
  SumData sum = direct_sum(parts);
  Matrix map(f, sum.sum.total_dim(), m.total_dim());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const std::size_t v = vertices[k];
    const Representation& p = parts[k];
    // Basis element b of e_v A (in e_v A e_t) maps to gen_k * b.
    Matrix phi(f, p.total_dim(), m.total_dim());
    const Matrix gv = gens.row(k).block(0, m.offset(v), 1, m.dim(v));
    std::vector<std::size_t> local(a.num_vertices(), 0);
    for (std::size_t t = 0; t < a.num_vertices(); ++t) {
      for (auto i : a.block(v, t)) {
        phi.set_block(p.offset(t) + local[t]++, m.offset(t), gv * m.basis_block(i));
      }
    }
    map += sum.projections[k] * phi;
  }
  return {std::move(vertices), std::move(sum.sum), std::move(map), std::move(gens)};
}

std::vector<std::size_t> top_multiplicities(const Representation& m) {
  std::vector<std::size_t> out(m.algebra().num_vertices(), 0);
  for (auto v : projective_cover(m).vertices) ++out[v];
  return out;
}

}  // namespace strathom::rep
