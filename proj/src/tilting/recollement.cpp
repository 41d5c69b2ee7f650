#include "strathom/tilting/recollement.hpp"

#include "strathom/linalg/rref.hpp"

namespace strathom::tilting {

namespace {

RecollementDatum assemble(const Representation& t, const TResolution& res, const Representation& c_module,
                          std::size_t cap) {
  const AlgebraPtr& a = t.algebra_ptr();
  RecollementDatum d;
  d.a = a;
  const TiltingCertificate cert = check_tilting(t, res, cap);
  for (const auto& f : cert.failures) d.failures.push_back("not a tilting resolution: " + f);
  d.ell = ell(res);
  if (d.ell.module.is_zero()) {
    d.homological_epi = Verdict::True;
  } else {
    d.epi = induced_epi(a, d.ell);
    const FDAlgebra& b = *d.epi->b.algebra;
    if (!is_unital_multiplicative(*a, b, d.epi->phi)) {
      d.failures.push_back("phi is not a unital algebra map");
      d.homological_epi = Verdict::Unknown;
    } else {
      d.homological_epi = is_homological_epi(a, b, d.epi->phi, cap);
    }
    d.n_b = basic_summands(d.ell.module).size();
  }
  d.c = c_side(c_module, cap);
  d.n_a = a->num_vertices();
  d.n_c = d.c.rank;
  if (d.homological_epi != Verdict::True) {
    d.failures.push_back(std::string("homological epimorphism hypothesis: ") + homology::to_string(d.homological_epi));
  }
  if (d.c.pd.kind != DimVerdict::Kind::Finite) {
    d.failures.push_back("projective dimension of T1 over C: " + d.c.pd.to_string());
  }
  if (d.ok() && !d.ranks_additive()) d.failures.push_back("K0 ranks are not additive");
  return d;
}

}  // namespace

std::string AlgebraSignature::to_string() const {
  return "dim " + std::to_string(dim) + ", center " + std::to_string(center_dim) + ", radical " +
         std::to_string(radical_dim) + (commutative ? ", commutative" : ", noncommutative");
}

std::size_t center_dim(const FDAlgebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return 0;
  Matrix m(a.field(), n, n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const Matrix z = a.basis_vector(j);
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix b = a.basis_vector(i);
      m.set_block(j, i * n, a.mul(z, b) - a.mul(b, z));
    }
  }
  return n - linalg::rank(m);
}

AlgebraSignature signature(const FDAlgebra& a) {
  AlgebraSignature s;
  s.dim = a.dim();
  s.center_dim = center_dim(a);
  s.radical_dim = a.radical().dim();
  s.commutative = s.center_dim == s.dim;
  return s;
}

CSide c_side(const Representation& t1, std::size_t cap) {
  CSide out{t1, std::nullopt, DimVerdict::finite(0), 0};
  if (t1.is_zero()) return out;
  out.c = rep::endomorphism_algebra(t1, "C");
  const AlgebraPtr c_op = algebra::opposite_algebra(*out.c->algebra);
  const Representation left = rep::from_action(c_op, t1.total_dim(), out.c->action).module;
  out.pd = homology::proj_dim(left, cap);
  out.rank = basic_summands(t1).size();
  return out;
}

RecollementDatum recollement_from_tilting(const Representation& t, const TResolution& res, std::size_t cap) {
  return assemble(t, res, res.t1, cap);
}

Representation idempotent_ideal_module(const AlgebraPtr& a, const std::vector<std::size_t>& e_vertices) {
  const Subspace j = algebra::idempotent_ideal(*a, e_vertices);
  const Representation reg = rep::regular(a);
  if (j.dim() == 0) return Representation::zero(a);
  Matrix rows(a->field(), j.dim(), reg.total_dim());
  for (std::size_t r = 0; r < j.dim(); ++r) rows.set_block(r, 0, regular_coordinates(a, j.basis().row(r)));
  return rep::submodule_rep(reg, Subspace(rows)).module;
}

HeredityReport heredity_check_and_recollement(const AlgebraPtr& a, const std::vector<std::size_t>& e_vertices,
                                              std::size_t cap) {
  HeredityReport out;
  out.quotient = algebra::quotient_by_idempotent_ideal(*a, e_vertices);
  out.corner = algebra::corner_algebra(*a, e_vertices);
  const Representation j = idempotent_ideal_module(a, e_vertices);
  out.projective = j.is_zero() || rep::projective_cover(j).projective.total_dim() == j.total_dim();
  out.semisimple_corner = out.corner->radical().dim() == 0;
  out.datum = recollement_from_tilting(rep::regular(a), idempotent_resolution(a, e_vertices), cap);
  if (!out.projective) out.datum.failures.insert(out.datum.failures.begin(), "AeA is not projective");
  if (!out.semisimple_corner) out.datum.failures.insert(out.datum.failures.begin(), "eAe is not semisimple");
  return out;
}

RecollementDatum perpendicular_epi(const Representation& x, std::size_t cap) {
  const AlgebraPtr& a = x.algebra_ptr();
  const DimVerdict gd = homology::global_dim(a, cap);
  if (gd.kind != DimVerdict::Kind::Finite || gd.value > 1) throw Error(ErrorKind::NotHereditary, "global dimension " + gd.to_string());
  if (homology::is_exceptional(x, cap) != Verdict::True) throw Error(ErrorKind::NotExceptional, "module is not exceptional");
  for (const auto& entry : rep::decompose(x)) {
    if (entry.multiplicity > 1) throw Error(ErrorKind::InvalidArgument, "module is not multiplicity-free");
  }
  const BongartzComplement bc = bongartz_complement(x, cap);
  TResolution res = bc.resolution;
  if (bc.sequence.n == 0) {
    // Split copy of x so that T1 generates the same subcategory as x.
    const rep::SumData t0 = rep::direct_sum({res.t0, x});
    res = {t0.sum, x, res.iota * t0.injections[0], t0.projections[1]};
  }
  return assemble(bc.tilting, res, x, cap);
}

}  // namespace strathom::tilting
