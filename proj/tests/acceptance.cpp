// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gen.hpp"
#include "strathom/algebra/fixtures.hpp"
#include "strathom/homology/complex.hpp"
#include "strathom/linalg/rref.hpp"
#include "strathom/rep/decompose.hpp"
#include "strathom/rep/morphism.hpp"
#include "strathom/tilting/stratify.hpp"

using namespace strathom;
using namespace strathom::tilting;
using algebra::fixture;
using homology::ProjComplex;
using linalg::Field;
using linalg::Scalar;
using rep::is_isomorphic;
using rep::projective;
using rep::simple;

namespace {

// Every quantity is an exact integer or an exact field element.
constexpr long kTolerance = 0;
constexpr std::size_t kCap = 20;

bool near(long observed, long expected) { return std::labs(observed - expected) <= kTolerance; }

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }
  void eq(long observed, long expected, const std::string& what) {
    check(near(observed, expected), what + " = " + std::to_string(observed) + ", expected " + std::to_string(expected));
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failed_.empty(); }

  void print(int n, const std::string& title) const {
    std::string line = std::string(passed() ? "PASS" : "FAIL") + " criterion " + std::to_string(n) + ": " + title;
    for (const auto& f : failed_) line += "; failed: " + f;
    for (const auto& s : notes_) line += "; " + s;
    std::puts(line.c_str());
  }

 private:
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
};

// Successful recollements seen anywhere in this run.
std::vector<RecollementDatum> g_recollements;

void record(const RecollementDatum& d) {
  if (d.ok()) g_recollements.push_back(d);
}

Matrix element(const FDAlgebra& a, const std::string& label) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.basis(i).label == label) return a.basis_vector(i);
  }
  throw Error(ErrorKind::InvalidArgument, "no basis element " + label);
}

Representation projective_mod(const AlgebraPtr& a, std::size_t v, const std::string& label) {
  const Representation p = projective(a, v);
  const Matrix x = rep::projective_coordinates(*a, v, element(*a, label));
  return rep::quotient_module(p, rep::generated_submodule(p, x)).module;
}

Representation sum(const std::vector<Representation>& parts) { return rep::direct_sum(parts).sum; }

bool is_signature(const AlgebraSignature& s, std::size_t dim, std::size_t center, std::size_t radical) {
  return s.dim == dim && s.center_dim == center && s.radical_dim == radical;
}

// Quotients P_v / P_v rad^k: every indecomposable of a linear quiver.
std::vector<Representation> uniserial_modules(const AlgebraPtr& a) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    const Representation p = projective(a, v);
    Subspace layer(Matrix::identity(a->field(), p.total_dim()));
    std::vector<Subspace> layers;
    while (layer.dim() > 0) {
      const rep::SubRep s = rep::submodule_rep(p, layer);
      const Subspace r = rep::radical_submodule(s.module);
      layer = r.dim() ? Subspace(r.basis() * s.inclusion) : Subspace(a->field(), p.total_dim());
      layers.push_back(layer);
    }
    for (const auto& l : layers) {
      Representation q = rep::quotient_module(p, l).module;
      const bool seen = std::any_of(out.begin(), out.end(), [&](const Representation& m) { return is_isomorphic(m, q); });
      if (!seen) out.push_back(std::move(q));
    }
  }
  return out;
}

// Kronecker indecomposables of total dimension at most 5: preprojective,
// preinjective and regular at 0, 1 and infinity.
std::vector<Representation> kronecker_modules(const AlgebraPtr& a) {
  const Field f = a->field();
  const auto make = [&](std::size_t d1, std::size_t d2, const Matrix& ma, const Matrix& mb) {
    std::vector<Matrix> gens;
    for (auto g : a->generators()) gens.push_back(a->basis(g).label == "a" ? ma : mb);
    return Representation(a, {d1, d2}, gens);
  };
  std::vector<Representation> out;
  for (std::size_t n = 0; n <= 2; ++n) {
    Matrix ma(f, n, n + 1), mb(f, n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      ma(i, i) = Scalar::one(f);
      mb(i, i + 1) = Scalar::one(f);
    }
    out.push_back(make(n, n + 1, ma, mb));
    out.push_back(make(n + 1, n, ma.transpose(), mb.transpose()));
  }
  for (std::size_t n = 1; n <= 2; ++n) {
    for (int lambda : {0, 1, -1}) {
      Matrix id = Matrix::identity(f, n), jordan(f, n, n);
      for (std::size_t i = 0; i < n; ++i) {
        jordan(i, i) = Scalar(f, lambda < 0 ? 0L : static_cast<long>(lambda));
        if (i + 1 < n) jordan(i, i + 1) = Scalar::one(f);
      }
      out.push_back(lambda < 0 ? make(n, n, jordan, id) : make(n, n, id, jordan));
    }
  }
  return out;
}

bool in_perpendicular(const Representation& t1, const Representation& n) {
  return rep::hom_dim(t1, n) == 0 && homology::ext_dim(t1, n, 1) == 0;
}

// Composing with the unit A -> ell(A) identifies Hom(ell A, N) with
// Hom(A, N) = N for N perpendicular to T1.
bool adjunction_holds(const Ell& l, const Representation& n) {
  const auto homs = rep::hom_space(l.module, n);
  if (homs.size() != n.total_dim()) return false;
  if (homs.empty()) return true;
  Matrix images(n.field(), homs.size(), l.unit.rows() * n.total_dim());
  for (std::size_t i = 0; i < homs.size(); ++i) {
    const Matrix g = l.unit * homs[i];
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t c = 0; c < g.cols(); ++c) images(i, r * g.cols() + c) = g(r, c);
    }
  }
  return linalg::rank(images) == homs.size();
}

Criterion criterion1() {
  Criterion c;
  const auto a = fixture("FX-42");
  const Representation t = rep::regular(a);
  const TResolution res = idempotent_resolution(a, {1});
  c.check(check_tilting(t, res, kCap).tilting, "A with 0 -> A -> P1+P2+P2 -> P2 -> 0 is tilting");
  c.check(rep::same_presentation(res.t1, projective(a, 1)), "T1 = P2");
  const RecollementDatum d = recollement_from_tilting(t, res, kCap);
  c.check(rep::same_presentation(d.ell.module, simple(a, 0)), "ell(A) = S1");
  c.eq(d.epi ? static_cast<long>(d.epi->b.algebra->dim()) : 0, 1, "dim B");
  c.check(d.homological_epi == Verdict::True, std::string("homological epi ") + homology::to_string(d.homological_epi));
  c.check(d.c.c && is_signature(signature(*d.c.c->algebra), 2, 2, 1), "C has the signature of k[x]/x^2");
  c.check(d.c.pd.kind == DimVerdict::Kind::Infinite, "pd T1 over C^op " + d.c.pd.to_string());
  if (d.c.c) {
    const auto c_op = algebra::opposite_algebra(*d.c.c->algebra);
    const Representation left = rep::from_action(c_op, d.c.t1.total_dim(), d.c.c->action).module;
    c.check(homology::minimal_projective_resolution(left, kCap)->status == homology::ResolutionStatus::Periodic,
            "resolution of T1 over C^op is periodic");
  }
  c.check(!d.ok(), "the recollement hypotheses fail on pd T1");
  return c;
}

Criterion criterion2() {
  Criterion c;
  const auto a = fixture("FX-43");
  const Representation t = sum({projective(a, 1), simple(a, 1)});
  const TResolution res = approximation_sequence(t);
  const RecollementDatum d = recollement_from_tilting(t, res, kCap);
  record(d);
  c.check(is_isomorphic(d.ell.module, rep::power(projective_mod(a, 1, "alpha*beta"), 2)), "ell(A) = (2/1)^2");
  c.check(d.epi.has_value(), "B exists");
  if (d.epi) {
    const FDAlgebra& b = *d.epi->b.algebra;
    c.check(is_signature(signature(b), 4, 1, 0) && !signature(b).commutative, "B has the signature of M2(k)");
    c.check(d.epi->apply(element(*a, "beta")).is_zero(), "phi(beta) = 0");
  }
  c.check(d.ok(), "recollement_from_tilting succeeds");
  c.eq(static_cast<long>(d.n_a), 2, "rank K0(A)");
  c.eq(static_cast<long>(d.n_b), 1, "rank K0(B)");
  c.eq(static_cast<long>(d.n_c), 1, "rank K0(C)");
  c.check(homology::global_dim(a, kCap) == DimVerdict::finite(2), "gldim = Finite(2)");
  return c;
}

Criterion criterion3() {
  Criterion c;
  const auto a = fixture("FX-41");
  const Representation t1 = projective_mod(a, 1, "delta");
  const Representation t = sum({projective(a, 0), projective(a, 1), t1});
  const TResolution res = approximation_sequence(t);
  const Ell l = ell(res);
  const Representation m = projective_mod(a, 1, "alpha*beta");
  const Verdict ex = homology::is_exceptional(l.module, kCap);
  c.check(ex == Verdict::False, std::string("is_exceptional(ell A) ") + homology::to_string(ex));
  const std::size_t literal = homology::ext_dim(simple(a, 0), m, 2);
  c.check(literal >= 1, "Ext^2(S1, M) = " + std::to_string(literal));
  const InducedEpi epi = induced_epi(a, l);
  const Verdict v = is_homological_epi(a, *epi.b.algebra, epi.phi, kCap);
  c.check(v == Verdict::False, std::string("homological epi ") + homology::to_string(v));
  c.note("Ext^2(M, S1) = " + std::to_string(homology::ext_dim(m, simple(a, 0), 2)) + ", is_exceptional(ell A) " +
         homology::to_string(ex) + ", homological epi " + homology::to_string(v));
  return c;
}

Criterion criterion4() {
  Criterion c;
  const auto a = fixture("FX-A3");
  const Representation t = sum({projective(a, 0), projective(a, 2), simple(a, 2)});
  const TResolution res = approximation_sequence(t);
  c.check(check_tilting(t, res, kCap).tilting, "T = P1+P3+S3 is tilting");
  const RecollementDatum d = recollement_from_tilting(t, res, kCap);
  record(d);
  c.eq(static_cast<long>(d.ell.trace_dim), 0, "dim trace of T1 in T0");
  c.check(is_isomorphic(d.ell.module, res.t0), "ell(A) = T0");
  c.eq(static_cast<long>(d.ell.module.total_dim()), 7, "dim ell(A)");
  c.check(d.epi && linalg::rank(d.epi->phi) == a->dim(), "phi injective");
  c.check(d.homological_epi == Verdict::True, std::string("homological epi ") + homology::to_string(d.homological_epi));
  c.check(d.ok(), "recollement_from_tilting succeeds");
  c.eq(static_cast<long>(d.n_a), 3, "rank K0(A)");
  c.eq(static_cast<long>(d.n_b), 2, "rank K0(B)");
  c.eq(static_cast<long>(d.n_c), 1, "rank K0(C)");
  return c;
}

Criterion criterion5() {
  Criterion c;
  for (const auto& [name, leaves] : std::vector<std::pair<std::string, long>>{{"FX-A3", 3}, {"FX-CAN222", 5}}) {
    const auto a = fixture(name);
    const StratificationTree t = stratify(a);
    c.eq(static_cast<long>(t.leaf_count()), leaves, name + " leaves");
    for (const auto& l : t.leaves()) c.eq(static_cast<long>(l.dim), 1, name + " leaf dim");
    const auto orders = legal_sink_orders(a);
    std::size_t agree = 0;
    for (const auto& order : orders) {
      const StratificationTree other = stratify(a, order);
      agree += compare_factor_multisets(t, other);
    }
    c.eq(static_cast<long>(agree), static_cast<long>(orders.size()), name + " sink orders with equal factors");
    c.note(name + ": " + std::to_string(orders.size()) + " sink orders");
  }
  return c;
}

Criterion criterion6() {
  Criterion c;
  for (const auto& [name, count] : std::vector<std::pair<std::string, long>>{{"FX-A2", 3}, {"FX-A3", 6}}) {
    const auto a = fixture(name);
    const auto inds = uniserial_modules(a);
    c.eq(static_cast<long>(inds.size()), count, name + " indecomposables");
    std::size_t exceptional = 0, counterexamples = 0, tilting_count = 0;
    for (std::size_t mask = 1; mask < (1u << inds.size()); ++mask) {
      std::vector<Representation> parts;
      for (std::size_t i = 0; i < inds.size(); ++i) {
        if (mask >> i & 1) parts.push_back(inds[i]);
      }
      const Representation t = sum(parts);
      if (homology::is_exceptional(t, kCap) != Verdict::True) continue;
      ++exceptional;
      const bool complete = parts.size() == a->num_vertices();
      const bool tilt = check_tilting(t, kCap).tilting;
      const bool perp_trivial =
          std::none_of(inds.begin(), inds.end(), [&](const Representation& n) { return in_perpendicular(t, n); });
      if (complete != tilt || tilt != perp_trivial) ++counterexamples;
      tilting_count += tilt;
      record(perpendicular_epi(t, kCap));
    }
    c.eq(static_cast<long>(counterexamples), 0, name + " counterexamples");
    c.note(name + ": " + std::to_string(exceptional) + " exceptional, " + std::to_string(tilting_count) + " tilting");
  }
  return c;
}

Criterion criterion7() {
  Criterion c;
  const auto a = fixture("FX-43");
  for (std::size_t m = 1; m <= 6; ++m) {
    const std::string tag = "m=" + std::to_string(m);
    const ProjComplex x = homology::staircase(a, m);
    const auto res = homology::minimize_complex(x);
    const bool unchanged = res.cancellations == 0 && res.complex.terms == x.terms && res.complex.lowest == x.lowest;
    c.check(unchanged, tag + " minimization changed the complex");
    c.eq(static_cast<long>(res.length), static_cast<long>(m), tag + " length");
    const auto coh = homology::cohomology_dims(res.complex);
    const auto homs = homology::hom_to_regular_dims(res.complex);
    long r_hom = -1000, s_hom = -1000;
    for (const auto& [n, d] : coh) {
      if (d) r_hom = std::max<long>(r_hom, n);
    }
    for (const auto& [n, d] : homs) {
      if (d) s_hom = std::max<long>(s_hom, n);
    }
    // The minimal complex occupies exactly the degrees [-s, r].
    long top = res.complex.lowest, bottom = res.complex.highest();
    for (int n = res.complex.lowest; n <= res.complex.highest(); ++n) {
      if (!res.complex.term(n).empty()) {
        top = n;
        bottom = std::min<long>(bottom, n);
      }
    }
    c.eq(r_hom, top, tag + " r");
    c.eq(s_hom, -bottom, tag + " s");
    c.eq(r_hom + s_hom, static_cast<long>(m), tag + " r + s");
  }
  return c;
}

Criterion criterion8() {
  Criterion c;
  std::mt19937_64 rng(2024);

  std::size_t rank_nullity = 0;
  std::uniform_int_distribution<std::size_t> dim(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const Field f = gen::field(rng);
    const Matrix m = gen::matrix(rng, f, dim(rng), dim(rng));
    const Matrix k = linalg::kernel_basis(m);
    rank_nullity += linalg::rank(m) + k.cols() == m.cols() && (m * k).is_zero();
  }
  c.eq(static_cast<long>(rank_nullity), 200, "rank-nullity matrices");

  for (const auto& name : algebra::fixture_names()) {
    const auto a = fixture(name);
    c.check(algebra::check_associative(*a) && algebra::check_unit(*a), name + " associativity and unit");
  }

  for (const char* name : {"FX-A2", "FX-A3", "FX-KRON"}) {
    const auto a = fixture(name);
    const auto q = a->quiver();
    const auto mods = std::string(name) == "FX-KRON" ? kronecker_modules(a) : uniserial_modules(a);
    std::size_t bad = 0;
    for (const auto& m : mods) {
      if (!rep::is_indecomposable(m)) ++bad;
      for (const auto& n : mods) {
        long euler = 0;
        for (std::size_t v = 0; v < a->num_vertices(); ++v) euler += static_cast<long>(m.dim(v) * n.dim(v));
        for (const auto& e : q.arrows) euler -= static_cast<long>(m.dim(e.source) * n.dim(e.target));
        const long form = static_cast<long>(rep::hom_dim(m, n)) - static_cast<long>(homology::ext_dim(m, n, 1));
        if (!near(form, euler)) ++bad;
      }
    }
    c.eq(static_cast<long>(bad), 0, std::string(name) + " Euler-form violations");
  }

  std::size_t proj_hom = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto& names = algebra::fixture_names();
    const auto a = fixture(names[rng() % names.size()]);
    std::vector<Representation> parts;
    for (std::size_t k = 0; k < 1 + rng() % 2; ++k) parts.push_back(projective(a, rng() % a->num_vertices()));
    const Representation p = sum(parts);
    Matrix row(a->field(), 1, p.total_dim());
    for (std::size_t j = 0; j < p.total_dim(); ++j) row(0, j) = gen::small_scalar(rng, a->field(), -1, 1);
    const Subspace u = rep::generated_submodule(p, row);
    const Representation m = rng() % 2 ? rep::quotient_module(p, u).module : rep::submodule_rep(p, u).module;
    bool ok = true;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) ok = ok && rep::hom_dim(projective(a, v), m) == m.dim(v);
    proj_hom += ok;
  }
  c.eq(static_cast<long>(proj_hom), 50, "projective-Hom modules");

  std::size_t adjunctions = 0, tested = 0;
  const auto e42 = fixture("FX-42");
  const auto e43 = fixture("FX-43");
  const auto a3 = fixture("FX-A3");
  const std::vector<std::pair<AlgebraPtr, TResolution>> examples{
      {e42, idempotent_resolution(e42, {1})},
      {e43, approximation_sequence(sum({projective(e43, 1), simple(e43, 1)}))},
      {a3, approximation_sequence(sum({projective(a3, 0), projective(a3, 2), simple(a3, 2)}))}};
  for (const auto& [a, res] : examples) {
    const Ell l = ell(res);
    std::vector<Representation> pool{l.module};
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      pool.push_back(simple(a, v));
      pool.push_back(projective(a, v));
      pool.push_back(rep::power(simple(a, v), 2));
    }
    for (const auto& n : pool) {
      if (n.is_zero() || !in_perpendicular(res.t1, n)) continue;
      ++tested;
      adjunctions += adjunction_holds(l, n);
    }
  }
  c.check(tested >= 3, "adjunction pool has perpendicular modules");
  c.eq(static_cast<long>(adjunctions), static_cast<long>(tested), "adjunction equalities");

  record(heredity_check_and_recollement(e43, {0}, kCap).datum);
  record(heredity_check_and_recollement(a3, {2}, kCap).datum);
  std::size_t additive = 0;
  for (const auto& d : g_recollements) additive += d.ranks_additive();
  c.eq(static_cast<long>(additive), static_cast<long>(g_recollements.size()), "additive K0 ranks");
  c.note(std::to_string(g_recollements.size()) + " successful recollements, " + std::to_string(tested) + " adjunction checks");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
      {"FX-42 pipeline with the non-minimal resolution", criterion1},
      {"FX-43 pipeline, ell(A) = (2/1)^2, ranks 2 = 1 + 1", criterion2},
      {"FX-41 negative case", criterion3},
      {"FX-A3 with T = P1+P3+S3, ranks 3 = 2 + 1", criterion4},
      {"stratifications of FX-A3 and FX-CAN222 over all sink orders", criterion5},
      {"multiplicity-free exceptional modules of FX-A2 and FX-A3", criterion6},
      {"staircase complexes m = 1..6", criterion7},
      {"property suites", criterion8}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    c.print(static_cast<int>(i + 1), criteria[i].first);
    failures += !c.passed();
  }
  return failures ? 1 : 0;
}
