#include "strathom/tilting/tilting.hpp"

#include <algorithm>

#include "strathom/linalg/rref.hpp"

namespace strathom::tilting {

namespace {

using homology::ext_dim;
using homology::proj_dim;

Matrix flatten(const Matrix& m) {
  Matrix out(m.field(), 1, m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(0, r * m.cols() + c) = m(r, c);
  }
  return out;
}

std::size_t span_dim(const linalg::Field& f, std::size_t width, const std::vector<Matrix>& ms) {
  if (ms.empty() || width == 0) return 0;
  Matrix rows(f, ms.size(), width);
  for (std::size_t i = 0; i < ms.size(); ++i) rows.set_block(i, 0, flatten(ms[i]));
  return linalg::rank(rows);
}

// Right inverse of a surjection q (X q = I).
Matrix section(const Matrix& q) {
  const auto x = linalg::solve_linear(q.transpose(), Matrix::identity(q.field(), q.cols()));
  if (!x) throw Error(ErrorKind::InvalidArgument, "map is not surjective");
  return x->transpose();
}

rep::SumData copies(const Representation& m, std::size_t n) {
  return rep::direct_sum(std::vector<Representation>(n, m));
}

bool dim_at_most(const DimVerdict& d, std::size_t bound) {
  return d.kind == DimVerdict::Kind::Finite && d.value <= bound;
}

}  // namespace

std::vector<Representation> basic_summands(const Representation& m) {
  std::vector<Representation> out;
  if (m.is_zero()) return out;
  for (auto& entry : rep::decompose(m)) out.push_back(std::move(entry.module));
  return out;
}

bool in_add(const Representation& x, const Representation& t) {
  if (x.is_zero()) return true;
  const auto ts = basic_summands(t);
  for (const auto& y : basic_summands(x)) {
    const bool found = std::any_of(ts.begin(), ts.end(), [&](const Representation& z) {
      return z.dims() == y.dims() && rep::is_isomorphic(z, y);
    });
    if (!found) return false;
  }
  return true;
}

Matrix regular_coordinates(const AlgebraPtr& a, const Matrix& x) {
  std::vector<Representation> parts;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) parts.push_back(rep::projective(a, v));
  const rep::SumData sd = rep::direct_sum(parts);
  Matrix out(a->field(), 1, sd.sum.total_dim());
  for (std::size_t v = 0; v < parts.size(); ++v) out += rep::projective_coordinates(*a, v, x) * sd.injections[v];
  return out;
}

void validate_resolution(const Representation& t, const TResolution& res) {
  const Representation reg = rep::regular(t.algebra_ptr());
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidResolution, why); };
  if (!rep::is_morphism(reg, res.t0, res.iota)) fail("A -> T0 is not a module map");
  if (!rep::is_morphism(res.t0, res.t1, res.pi)) fail("T0 -> T1 is not a module map");
  if (linalg::rank(res.iota) != reg.total_dim()) fail("A -> T0 is not injective");
  if (res.t1.total_dim() && linalg::rank(res.pi) != res.t1.total_dim()) fail("T0 -> T1 is not surjective");
  if (res.t1.total_dim() && !(res.iota * res.pi).is_zero()) fail("composite A -> T1 is nonzero");
  if (res.t0.total_dim() != reg.total_dim() + res.t1.total_dim()) fail("sequence is not exact in the middle");
  if (!in_add(res.t0, t)) fail("T0 is not in add(T)");
  if (!in_add(res.t1, t)) fail("T1 is not in add(T)");
}

TResolution approximation_sequence(const Representation& t) {
  const AlgebraPtr& a = t.algebra_ptr();
  const Representation reg = rep::regular(a);
  const auto xs = basic_summands(t);
  if (xs.empty()) throw Error(ErrorKind::InvalidArgument, "approximation by the zero module");
  struct Coord {
    std::size_t summand;
    Matrix map;
  };
  std::vector<Coord> coords;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    for (auto& f : rep::hom_space(reg, xs[k])) coords.push_back({k, std::move(f)});
  }
  std::vector<std::vector<std::vector<Matrix>>> homs(xs.size(), std::vector<std::vector<Matrix>>(xs.size()));
  for (std::size_t k = 0; k < xs.size(); ++k) {
    for (std::size_t j = 0; j < xs.size(); ++j) homs[k][j] = rep::hom_space(xs[k], xs[j]);
  }
  // Every map A -> X_j factors through the kept coordinates.
  auto approximates = [&](const std::vector<bool>& keep) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      std::vector<Matrix> images;
      for (std::size_t c = 0; c < coords.size(); ++c) {
        if (!keep[c]) continue;
        for (const auto& g : homs[coords[c].summand][j]) images.push_back(coords[c].map * g);
      }
      if (span_dim(a->field(), reg.total_dim() * xs[j].total_dim(), images) != xs[j].total_dim()) return false;
    }
    return true;
  };
  std::vector<bool> keep(coords.size(), true);
  for (std::size_t c = 0; c < coords.size(); ++c) {
    keep[c] = false;
    if (!approximates(keep)) keep[c] = true;
  }
  std::vector<Representation> parts;
  std::vector<const Matrix*> maps;
  for (std::size_t c = 0; c < coords.size(); ++c) {
    if (!keep[c]) continue;
    parts.push_back(xs[coords[c].summand]);
    maps.push_back(&coords[c].map);
  }
  const rep::SumData t0 = rep::direct_sum(parts);
  Matrix iota(a->field(), reg.total_dim(), t0.sum.total_dim());
  for (std::size_t k = 0; k < parts.size(); ++k) iota += *maps[k] * t0.injections[k];
  const rep::MorphismParts mp = rep::morphism_parts(reg, t0.sum, iota);
  return {t0.sum, mp.cokernel.module, iota, mp.cokernel.projection};
}

namespace {

TiltingCertificate first_two_conditions(const Representation& t, std::size_t cap) {
  TiltingCertificate cert;
  cert.t = t;
  cert.pd = proj_dim(t, std::max<std::size_t>(cap, 2));
  if (!dim_at_most(cert.pd, 1)) cert.failures.push_back("projective dimension exceeds 1 (" + cert.pd.to_string() + ")");
  cert.ext1 = ext_dim(t, t, 1);
  if (cert.ext1) cert.failures.push_back("Ext^1(T, T) has dimension " + std::to_string(cert.ext1));
  return cert;
}

}  // namespace

TiltingCertificate check_tilting(const Representation& t, std::size_t cap) {
  TiltingCertificate cert = first_two_conditions(t, cap);
  if (t.is_zero()) {
    cert.failures.push_back("T is zero");
    return cert;
  }
  TResolution res = approximation_sequence(t);
  const std::size_t dim_a = t.algebra().dim();
  if (linalg::rank(res.iota) != dim_a) {
    cert.failures.push_back("the left add(T)-approximation of A is not injective");
  } else if (!in_add(res.t1, t)) {
    cert.failures.push_back("the cokernel of the left add(T)-approximation of A is not in add(T)");
  } else {
    cert.resolution = std::move(res);
  }
  cert.tilting = cert.failures.empty();
  return cert;
}

TiltingCertificate check_tilting(const Representation& t, const TResolution& res, std::size_t cap) {
  TiltingCertificate cert = first_two_conditions(t, cap);
  try {
    validate_resolution(t, res);
    cert.resolution = res;
  } catch (const Error& e) {
    cert.failures.push_back(e.what());
  }
  cert.tilting = cert.failures.empty();
  return cert;
}

TResolution idempotent_resolution(const AlgebraPtr& a, const std::vector<std::size_t>& e_vertices) {
  const Representation reg = rep::regular(a);
  std::vector<Representation> ep;
  for (auto v : e_vertices) ep.push_back(rep::projective(a, v));
  if (ep.empty()) {
    return {reg, Representation::zero(a), Matrix::identity(a->field(), reg.total_dim()),
            Matrix(a->field(), reg.total_dim(), 0)};
  }
  const rep::SumData e = rep::direct_sum(ep);
  const rep::SumData t0 = rep::direct_sum({reg, e.sum});
  return {t0.sum, e.sum, t0.injections[0], t0.projections[1]};
}

ExtClasses ext1_classes(const Representation& e, const Representation& m) {
  const auto res = homology::minimal_projective_resolution(e, 1);
  ExtClasses out{res->covers.at(0), res->kernels.at(0), {}};
  const Representation& omega = out.syzygy.module;
  if (omega.is_zero() || m.is_zero()) return out;
  const std::size_t width = omega.total_dim() * m.total_dim();
  Matrix restricted(m.field(), 0, width);
  for (const auto& h : rep::hom_space(out.cover.projective, m)) restricted = vstack(restricted, flatten(out.syzygy.inclusion * h));
  Subspace span = restricted.rows() ? Subspace(restricted) : Subspace(m.field(), width);
  for (auto& f : rep::hom_space(omega, m)) {
    const Matrix ff = flatten(f);
    if (span.contains(ff)) continue;
    span = span.sum(Subspace(ff));
    out.classes.push_back(std::move(f));
  }
  return out;
}

UniversalExtension universal_extension(const Representation& e, const Representation& m) {
  const linalg::Field& f = m.field();
  ExtClasses ext = ext1_classes(e, m);
  const std::size_t n = ext.classes.size();
  if (n == 0) {
    return {m, Representation::zero(m.algebra_ptr()), 0, Matrix::identity(f, m.total_dim()), Matrix(f, m.total_dim(), 0)};
  }
  // Pushout of P^n <- (Ωe)^n -> m.
  const rep::SumData pn = copies(ext.cover.projective, n);
  const rep::SumData on = copies(ext.syzygy.module, n);
  const rep::SumData en = copies(e, n);
  const rep::SumData s = rep::direct_sum({pn.sum, m});
  Matrix g(f, on.sum.total_dim(), s.sum.total_dim());
  for (std::size_t i = 0; i < n; ++i) {
    g += on.projections[i] * (ext.syzygy.inclusion * pn.injections[i] * s.injections[0] - ext.classes[i] * s.injections[1]);
  }
  const Subspace u = rep::generated_submodule(s.sum, g);
  const rep::QuotientRep q = rep::quotient_module(s.sum, u);
  Matrix down(f, s.sum.total_dim(), en.sum.total_dim());
  for (std::size_t i = 0; i < n; ++i) down += s.projections[0] * pn.projections[i] * ext.cover.map * en.injections[i];
  return {q.module, en.sum, n, s.injections[1] * q.projection, section(q.projection) * down};
}

BongartzComplement bongartz_complement(const Representation& m, std::size_t cap) {
  if (m.is_zero()) throw Error(ErrorKind::NotPartialTilting, "zero module");
  if (!dim_at_most(proj_dim(m, std::max<std::size_t>(cap, 2)), 1)) {
    throw Error(ErrorKind::NotPartialTilting, "projective dimension exceeds 1");
  }
  if (ext_dim(m, m, 1)) throw Error(ErrorKind::NotPartialTilting, "Ext^1(M, M) is nonzero");
  const AlgebraPtr& a = m.algebra_ptr();
  BongartzComplement out;
  out.sequence = universal_extension(m, rep::regular(a));
  const auto ms = basic_summands(m);
  std::vector<Representation> all = ms, extra;
  for (auto& y : basic_summands(out.sequence.extension)) {
    const bool known = std::any_of(ms.begin(), ms.end(), [&](const Representation& z) {
      return z.dims() == y.dims() && rep::is_isomorphic(z, y);
    });
    if (known) continue;
    all.push_back(y);
    extra.push_back(std::move(y));
  }
  out.tilting = rep::direct_sum(all).sum;
  out.complement = extra.empty() ? Representation::zero(a) : rep::direct_sum(extra).sum;
  out.resolution = {out.sequence.extension, out.sequence.quotient, out.sequence.inclusion, out.sequence.projection};
  return out;
}

Ell ell(const TResolution& res) {
  const Subspace trace = rep::trace_submodule(res.t1, res.t0);
  const rep::QuotientRep q = rep::quotient_module(res.t0, trace);
  return {q.module, res.iota * q.projection, trace.dim()};
}

Ell left_approximation(const Representation& t1, const Representation& m) {
  const UniversalExtension ue = universal_extension(t1, m);
  const Subspace trace = rep::trace_submodule(t1, ue.extension);
  const rep::QuotientRep q = rep::quotient_module(ue.extension, trace);
  return {q.module, ue.inclusion * q.projection, trace.dim()};
}

InducedEpi induced_epi(const AlgebraPtr& a, const Ell& l) {
  if (l.module.is_zero()) throw Error(ErrorKind::InvalidArgument, "ell(A) is zero; B is the zero algebra");
  InducedEpi out{a, rep::endomorphism_algebra(l.module, "B"), {}};
  const FDAlgebra& b = *out.b.algebra;
  const linalg::Field& f = a->field();
  const Matrix xi = regular_coordinates(a, a->unit()) * l.unit;
  Matrix images(f, b.dim(), l.module.total_dim());
  for (std::size_t j = 0; j < b.dim(); ++j) images.set_block(j, 0, xi * out.b.action[j]);
  Matrix targets(f, a->dim(), l.module.total_dim());
  for (std::size_t i = 0; i < a->dim(); ++i) targets.set_block(i, 0, xi * l.module.basis_action(i));
  const auto c = linalg::solve_linear(images.transpose(), targets.transpose());
  if (!c) throw Error(ErrorKind::InvalidArgument, "unit(1) does not generate ell(A) over its endomorphisms");
  out.phi = c->transpose();
  return out;
}

bool is_unital_multiplicative(const FDAlgebra& a, const FDAlgebra& b, const Matrix& phi) {
  if (phi.rows() != a.dim() || phi.cols() != b.dim()) return false;
  if (a.unit() * phi != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Matrix lhs = a.mul(a.basis_vector(i), a.basis_vector(j)) * phi;
      if (lhs != b.mul(phi.row(i), phi.row(j))) return false;
    }
  }
  return true;
}

Representation restriction_right(const AlgebraPtr& a, const FDAlgebra& b, const Matrix& phi) {
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < a->dim(); ++i) actions.push_back(b.right_mult(phi.row(i)));
  return rep::from_action(a, b.dim(), actions).module;
}

Representation restriction_left(const AlgebraPtr& a_op, const FDAlgebra& b, const Matrix& phi) {
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < a_op->dim(); ++i) actions.push_back(b.left_mult(phi.row(i)));
  return rep::from_action(a_op, b.dim(), actions).module;
}

Verdict is_homological_epi(const AlgebraPtr& a, const FDAlgebra& b, const Matrix& phi, std::size_t cap) {
  if (!is_unital_multiplicative(*a, b, phi)) throw Error(ErrorKind::InvalidArgument, "phi is not an algebra map");
  const Representation br = restriction_right(a, b, phi);
  // A homological epimorphism gives Ext_A(B, B) = Ext_B(B, B) = 0 in positive degrees.
  const Verdict exceptional = homology::is_exceptional(br, cap);
  if (exceptional == Verdict::False) return Verdict::False;
  const Representation bl = restriction_left(algebra::opposite_algebra(*a), b, phi);
  if (homology::tensor_dim(br, bl) != b.dim()) return Verdict::False;
  if (exceptional == Verdict::True && homology::global_dim(a, cap).kind == DimVerdict::Kind::Finite) return Verdict::True;
  const auto res = homology::minimal_projective_resolution(br, cap);
  std::size_t last = cap;
  bool complete = false;
  if (res->status == homology::ResolutionStatus::Terminated) {
    last = res->length;
    complete = true;
  } else if (res->status == homology::ResolutionStatus::Periodic && res->period_start + res->period < cap) {
    last = res->period_start + res->period;
    complete = true;
  }
  for (std::size_t k = 1; k <= last; ++k) {
    if (homology::tor_dim(br, bl, k)) return Verdict::False;
  }
  return complete ? Verdict::True : Verdict::Unknown;
}

}  // namespace strathom::tilting
