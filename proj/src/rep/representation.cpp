#include "strathom/rep/representation.hpp"

#include "strathom/linalg/rref.hpp"

namespace strathom::rep {

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> generator_maps)
    : alg_(std::move(alg)), dims_(std::move(dims)), gens_(std::move(generator_maps)) {
  const FDAlgebra& a = *alg_;
  if (dims_.size() != a.num_vertices()) throw Error(ErrorKind::ShapeMismatch, "one dimension per vertex expected");
  if (gens_.size() != a.generators().size()) throw Error(ErrorKind::ShapeMismatch, "one matrix per generator expected");
  offsets_.resize(dims_.size());
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    offsets_[v] = total_;
    total_ += dims_[v];
  }
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    const auto& b = a.basis(a.generators()[g]);
    if (gens_[g].rows() != dims_[b.source] || gens_[g].cols() != dims_[b.target]) {
      throw Error(ErrorKind::ShapeMismatch, "generator '" + b.label + "' needs a " + std::to_string(dims_[b.source]) +
                                                "x" + std::to_string(dims_[b.target]) + " matrix");
    }
    if (gens_[g].field() != a.field()) throw Error(ErrorKind::DomainMismatch, "generator matrix over another field");
  }
  basis_blocks_.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& b = a.basis(i);
    Matrix m = Matrix::identity(a.field(), dims_[b.source]);
    for (auto g : b.word) m = m * gens_[g];
    basis_blocks_.push_back(std::move(m));
  }
  // rho(b) rho(g) == rho(b g) for every basis element b and generator g.
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& b = a.basis(i);
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      const std::size_t gi = a.generators()[g];
      const auto& gb = a.basis(gi);
      if (gb.source != b.target) continue;
      Matrix expect(a.field(), dims_[b.source], dims_[gb.target]);
      for (const auto& [k, c] : a.product(i, gi)) expect += basis_blocks_[k].scaled(c);
      if (basis_blocks_[i] * gens_[g] != expect) {
        throw Error(ErrorKind::InvalidModule, "relation violated at " + b.label + " * " + gb.label);
      }
    }
  }
}

Representation Representation::zero(AlgebraPtr alg) {
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < alg->generators().size(); ++g) gens.emplace_back(alg->field(), 0, 0);
  const std::size_t n = alg->num_vertices();
  return Representation(std::move(alg), std::vector<std::size_t>(n, 0), std::move(gens));
}

Matrix Representation::action(const Matrix& a) const {
  Matrix out(field(), total_, total_);
  for (std::size_t i = 0; i < alg_->dim(); ++i) {
    const Scalar& c = a(0, i);
    if (c.is_zero()) continue;
    const auto& b = alg_->basis(i);
    const Matrix& blk = basis_blocks_[i];
    for (std::size_t r = 0; r < blk.rows(); ++r) {
      for (std::size_t s = 0; s < blk.cols(); ++s) {
        if (!blk(r, s).is_zero()) out(offsets_[b.source] + r, offsets_[b.target] + s) += c * blk(r, s);
      }
    }
  }
  return out;
}

Matrix Representation::basis_action(std::size_t i) const { return action(alg_->basis_vector(i)); }

Matrix Representation::action_block(const Matrix& a, std::size_t s, std::size_t t) const {
  Matrix out(field(), dims_[s], dims_[t]);
  for (std::size_t i = 0; i < alg_->dim(); ++i) {
    const Scalar& c = a(0, i);
    if (c.is_zero()) continue;
    const auto& b = alg_->basis(i);
    if (b.source != s || b.target != t) continue;
    out += basis_blocks_[i].scaled(c);
  }
  return out;
}

Matrix Representation::vertex_rows(std::size_t v) const {
  Matrix out(field(), dims_[v], total_);
  for (std::size_t r = 0; r < dims_[v]; ++r) out(r, offsets_[v] + r) = Scalar::one(field());
  return out;
}

std::string Representation::dim_vector_string() const {
  std::string out = "(";
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    if (v) out += ",";
    out += std::to_string(dims_[v]);
  }
  return out + ")";
}

Representation projective(AlgebraPtr alg, std::size_t v) {
  const FDAlgebra& a = *alg;
  if (v >= a.num_vertices()) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
  const std::size_t nv = a.num_vertices();
  std::vector<std::size_t> dims(nv, 0);
  std::vector<std::size_t> local(a.dim(), std::size_t(-1));  // position inside its vertex space
  for (std::size_t t = 0; t < nv; ++t) {
    for (auto i : a.block(v, t)) local[i] = dims[t]++;
  }
  std::vector<Matrix> gens;
  for (auto gi : a.generators()) {
    const auto& gb = a.basis(gi);
    Matrix m(a.field(), dims[gb.source], dims[gb.target]);
    for (auto i : a.block(v, gb.source)) {
      for (const auto& [k, c] : a.product(i, gi)) m(local[i], local[k]) += c;
    }
    gens.push_back(std::move(m));
  }
  return Representation(std::move(alg), std::move(dims), std::move(gens));
}

Matrix projective_coordinates(const FDAlgebra& a, std::size_t v, const Matrix& x) {
  std::size_t total = 0;
  for (std::size_t t = 0; t < a.num_vertices(); ++t) total += a.block(v, t).size();
  Matrix out(a.field(), 1, total);
  std::size_t k = 0;
  for (std::size_t t = 0; t < a.num_vertices(); ++t) {
    for (auto i : a.block(v, t)) out(0, k++) = x(0, i);
  }
  return out;
}

Representation regular(AlgebraPtr alg) {
  std::vector<Representation> parts;
  for (std::size_t v = 0; v < alg->num_vertices(); ++v) parts.push_back(projective(alg, v));
  if (parts.empty()) return Representation::zero(alg);
  return direct_sum(parts).sum;
}

SumData direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "direct_sum of an empty list");
  const AlgebraPtr& alg = parts.front().algebra_ptr();
  const FDAlgebra& a = *alg;
  const std::size_t nv = a.num_vertices();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& p : parts) {
    if (p.algebra_ptr() != alg) throw Error(ErrorKind::DomainMismatch, "direct_sum over different algebras");
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& gb = a.basis(a.generators()[g]);
    Matrix m(a.field(), dims[gb.source], dims[gb.target]);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.generator_map(g));
      r += p.dim(gb.source);
      c += p.dim(gb.target);
    }
    gens.push_back(std::move(m));
  }
  SumData out{Representation(alg, dims, std::move(gens)), {}, {}};
  std::vector<std::size_t> used(nv, 0);
  for (const auto& p : parts) {
    Matrix inj(a.field(), p.total_dim(), out.sum.total_dim());
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t i = 0; i < p.dim(v); ++i) inj(p.offset(v) + i, out.sum.offset(v) + used[v] + i) = Scalar::one(a.field());
      used[v] += p.dim(v);
    }
    out.projections.push_back(inj.transpose());
    out.injections.push_back(std::move(inj));
  }
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) { return direct_sum({a, b}).sum; }

Representation power(const Representation& m, std::size_t n) {
  if (n == 0) return Representation::zero(m.algebra_ptr());
  return direct_sum(std::vector<Representation>(n, m)).sum;
}

ActionModule from_action(AlgebraPtr alg, std::size_t n, const std::vector<Matrix>& basis_actions) {
  const FDAlgebra& a = *alg;
  if (basis_actions.size() != a.dim()) throw Error(ErrorKind::ShapeMismatch, "one action matrix per basis element expected");
  const std::size_t nv = a.num_vertices();
  std::vector<Subspace> spaces;
  std::vector<std::size_t> dims;
  Matrix change(a.field(), 0, n);
  for (std::size_t v = 0; v < nv; ++v) {
    const Matrix& p = basis_actions[a.idempotent(v)];
    spaces.emplace_back(p.rows() ? p : Matrix(a.field(), 0, n));
    dims.push_back(spaces.back().dim());
    change = vstack(change, spaces.back().basis());
  }
  if (change.rows() != n) throw Error(ErrorKind::InvalidModule, "idempotent images do not decompose the space");
  std::vector<Matrix> gens;
  for (auto gi : a.generators()) {
    const auto& gb = a.basis(gi);
    const Matrix images = spaces[gb.source].basis() * basis_actions[gi];
    auto coords = spaces[gb.target].coordinates(images);
    if (!coords) throw Error(ErrorKind::InvalidModule, "action of " + gb.label + " leaves its Peirce block");
    gens.push_back(std::move(*coords));
  }
  return {Representation(std::move(alg), std::move(dims), std::move(gens)), std::move(change)};
}

bool same_presentation(const Representation& m, const Representation& n) {
  return m.algebra_ptr() == n.algebra_ptr() && m.dims() == n.dims() && m.generator_maps() == n.generator_maps();
}

}  // namespace strathom::rep
