#include <random>

#include "doctest.h"
#include "strathom/algebra/fixtures.hpp"
#include "strathom/homology/complex.hpp"
#include "strathom/homology/resolution.hpp"
#include "strathom/rep/decompose.hpp"

using namespace strathom;
using namespace strathom::homology;
using algebra::fixture;
using rep::projective;
using rep::simple;

namespace {

constexpr std::size_t kCap = 12;

Representation random_module(std::mt19937_64& rng, const AlgebraPtr& alg) {
  std::uniform_int_distribution<std::size_t> count(1, 3), vertex(0, alg->num_vertices() - 1);
  std::vector<Representation> parts;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) parts.push_back(projective(alg, vertex(rng)));
  const Representation p = rep::direct_sum(parts).sum;
  Matrix rows(alg->field(), 1 + rng() % 2, p.total_dim());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    const std::size_t v = vertex(rng);
    for (std::size_t c = 0; c < p.dim(v); ++c) rows(r, p.offset(v) + c) = Scalar(alg->field(), static_cast<long>(rng() % 5) - 2);
  }
  const Subspace u = rep::generated_submodule(p, rows);
  if (rng() % 2) return rep::submodule_rep(p, u).module;
  return rep::quotient_module(p, u).module;
}

// 2 -> 1 and 3 with top 2 over FX-41: alpha and delta act by 1.
Representation fx41_m(const AlgebraPtr& a) {
  const Field f = a->field();
  std::vector<Matrix> gens;
  for (auto gi : a->generators()) {
    const auto& b = a->basis(gi);
    Matrix m(f, 1, 1);
    if (b.label == "alpha" || b.label == "delta") m(0, 0) = Scalar::one(f);
    gens.push_back(m);
  }
  return Representation(a, {1, 1, 1}, gens);
}

ProjMap random_unipotent(std::mt19937_64& rng, const FDAlgebra& a, const std::vector<std::size_t>& term) {
  ProjMap g = ProjMap::zero(a, term, term);
  for (std::size_t s = 0; s < term.size(); ++s) {
    g.entry[s][s] = a.basis_vector(a.idempotent(term[s]));
    for (std::size_t t = s + 1; t < term.size(); ++t) {
      for (auto i : a.block(term[t], term[s])) g.entry[s][t](0, i) = Scalar(a.field(), static_cast<long>(rng() % 3) - 1);
    }
  }
  return g;
}

ProjMap inverse_unipotent(const FDAlgebra& a, const ProjMap& g) {
  // (1 + N)^-1 = sum (-N)^k
  ProjMap n = g;
  for (std::size_t s = 0; s < g.source.size(); ++s) n.entry[s][s] = a.zero();
  ProjMap result = ProjMap::zero(a, g.source, g.target);
  for (std::size_t s = 0; s < g.source.size(); ++s) result.entry[s][s] = g.entry[s][s];
  ProjMap power = result;
  for (std::size_t k = 1; k <= g.source.size(); ++k) {
    power = compose(a, power, n);
    for (std::size_t s = 0; s < g.source.size(); ++s) {
      for (std::size_t t = 0; t < g.target.size(); ++t) {
        if (k % 2) {
          result.entry[s][t] -= power.entry[s][t];
        } else {
          result.entry[s][t] += power.entry[s][t];
        }
      }
    }
  }
  return result;
}

// x plus contractible pieces P -> P, then conjugated by unipotent automorphisms.
ProjComplex disguise(std::mt19937_64& rng, const ProjComplex& x, std::size_t pieces) {
  const FDAlgebra& a = *x.algebra;
  ProjComplex c = x;
  for (std::size_t p = 0; p < pieces && c.diffs.size() > 0; ++p) {
    const std::size_t i = rng() % c.diffs.size();
    const std::size_t u = rng() % a.num_vertices();
    ProjMap& d = c.diffs[i];
    d.source.push_back(u);
    d.target.push_back(u);
    for (auto& row : d.entry) row.push_back(a.zero());
    d.entry.push_back(std::vector<Matrix>(d.target.size(), a.zero()));
    d.entry.back().back() = a.basis_vector(a.idempotent(u));
    if (i > 0) {
      ProjMap& prev = c.diffs[i - 1];
      prev.target.push_back(u);
      for (auto& row : prev.entry) row.push_back(a.zero());
    }
    if (i + 1 < c.diffs.size()) {
      ProjMap& next = c.diffs[i + 1];
      next.source.push_back(u);
      next.entry.push_back(std::vector<Matrix>(next.target.size(), a.zero()));
    }
    c.terms[i] = d.source;
    c.terms[i + 1] = d.target;
  }
  for (std::size_t n = 0; n < c.terms.size(); ++n) {
    const ProjMap g = random_unipotent(rng, a, c.terms[n]);
    const ProjMap gi = inverse_unipotent(a, g);
    if (n > 0) c.diffs[n - 1] = compose(a, c.diffs[n - 1], g);
    if (n < c.diffs.size()) c.diffs[n] = compose(a, gi, c.diffs[n]);
  }
  return c;
}

}  // namespace

TEST_CASE("resolutions of projectives and simples") {
  for (const auto& name : algebra::fixture_names()) {
    const auto a = fixture(name);
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      const auto r = minimal_projective_resolution(projective(a, v), kCap);
      CHECK(r->status == ResolutionStatus::Terminated);
      CHECK(r->length == 0);
      CHECK(proj_dim(projective(a, v), kCap) == DimVerdict::finite(0));
    }
  }
  const auto loop = algebra::build_algebra(algebra::truncated_loop(2));
  const auto r = minimal_projective_resolution(simple(loop, 0), kCap);
  CHECK(r->status == ResolutionStatus::Periodic);
  CHECK(r->period == 1);
  CHECK(proj_dim(simple(loop, 0), kCap).kind == DimVerdict::Kind::Infinite);

  const auto a43 = fixture("FX-43");
  const auto s1 = minimal_projective_resolution(simple(a43, 0), kCap);
  CHECK(s1->status == ResolutionStatus::Terminated);
  CHECK(s1->length == 2);
  CHECK(s1->terms == std::vector<std::vector<std::size_t>>{{0}, {1}, {0}});
  CHECK(s1->status_string() == "Terminated(2)");
}

TEST_CASE("resolution differentials compose to zero and are radical") {
  std::mt19937_64 rng(11);
  for (const auto& name : algebra::fixture_names()) {
    const auto a = fixture(name);
    for (int t = 0; t < 3; ++t) {
      const Representation m = random_module(rng, a);
      const auto r = minimal_projective_resolution(m, 6);
      for (std::size_t k = 0; k + 1 < r->differentials.size(); ++k) {
        CHECK(compose(*a, r->differentials[k + 1], r->differentials[k]).is_zero());
      }
      for (const auto& d : r->differentials) {
        for (const auto& row : d.entry) {
          for (const auto& x : row) CHECK(a->radical().contains(x));
        }
      }
      // dim Ext^k(M, S_i) = multiplicity of P_i in term k
      for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t v = 0; v < a->num_vertices(); ++v) {
          std::size_t mult = 0;
          for (auto u : r->term(k)) mult += u == v;
          CHECK(ext_dim(m, simple(a, v), k) == mult);
        }
      }
    }
  }
}

TEST_CASE("ext dimensions") {
  const auto a2 = fixture("FX-A2");
  CHECK(ext_dim(simple(a2, 0), simple(a2, 1), 1) == 1);
  CHECK(ext_dim(simple(a2, 1), simple(a2, 0), 1) == 0);
  for (const auto& name : algebra::fixture_names()) {
    const auto a = fixture(name);
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      for (std::size_t w = 0; w < a->num_vertices(); ++w) {
        for (std::size_t k = 1; k < 4; ++k) CHECK(ext_dim(projective(a, v), simple(a, w), k) == 0);
      }
      CHECK(ext_dim(projective(a, v), simple(a, v), 0) == 1);
    }
  }
}

TEST_CASE("FX-41 second extensions against the module with top 2") {
  const auto a = fixture("FX-41");
  const Representation m = fx41_m(a);
  const Representation s1 = simple(a, 0);
  // Ext^2 between S1 and M is nonzero in the direction M -> S1.
  CHECK(ext_dim(m, s1, 2) >= 1);
  CHECK(ext_dim(s1, m, 2) == 0);
}

TEST_CASE("Euler form on hereditary fixtures") {
  for (const char* name : {"FX-A2", "FX-A3", "FX-KRON"}) {
    const auto a = fixture(name);
    const auto& q = a->quiver();
    std::vector<Representation> mods;
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      mods.push_back(simple(a, v));
      mods.push_back(projective(a, v));
    }
    for (const auto& m : mods) {
      for (const auto& n : mods) {
        long euler = 0;
        for (std::size_t v = 0; v < a->num_vertices(); ++v) euler += static_cast<long>(m.dim(v) * n.dim(v));
        for (const auto& arrow : q.arrows) euler -= static_cast<long>(m.dim(arrow.source) * n.dim(arrow.target));
        CHECK(static_cast<long>(ext_dim(m, n, 0)) - static_cast<long>(ext_dim(m, n, 1)) == euler);
        CHECK(ext_dim(m, n, 2) == 0);
      }
    }
  }
}

TEST_CASE("projective and global dimensions") {
  CHECK(global_dim(fixture("FX-A2"), kCap) == DimVerdict::finite(1));
  CHECK(global_dim(fixture("FX-A3"), kCap) == DimVerdict::finite(1));
  CHECK(global_dim(fixture("FX-43"), kCap) == DimVerdict::finite(2));
  CHECK(global_dim(algebra::build_algebra(algebra::truncated_loop(2)), kCap).kind == DimVerdict::Kind::Infinite);
  CHECK(global_dim(fixture("FX-43"), kCap).to_string() == "Finite(2)");
  std::mt19937_64 rng(2);
  const auto a3 = fixture("FX-A3");
  for (int t = 0; t < 10; ++t) {
    const DimVerdict d = proj_dim(random_module(rng, a3), kCap);
    CHECK(d.kind == DimVerdict::Kind::Finite);
    CHECK(d.value <= 1);
  }
}

TEST_CASE("tensor products and Tor") {
  std::mt19937_64 rng(4);
  for (const auto& name : algebra::fixture_names()) {
    const auto a = fixture(name);
    const auto op = algebra::opposite_algebra(*a);
    for (int t = 0; t < 3; ++t) {
      const Representation l = random_module(rng, op);
      CHECK(tensor_dim(rep::regular(a), l) == l.total_dim());
      for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        CHECK(tensor_dim(projective(a, v), l) == l.dim(v));
        for (std::size_t k = 1; k < 3; ++k) CHECK(tor_dim(projective(a, v), l, k) == 0);
      }
      // Tor_k(S_v, D) for D = Hom_k(-, k) dual: Tor_k(M, S_w^op) = multiplicity of P_w in term k
      const Representation m = random_module(rng, a);
      const auto r = minimal_projective_resolution(m, 4);
      for (std::size_t w = 0; w < a->num_vertices(); ++w) {
        for (std::size_t k = 0; k < 3; ++k) {
          std::size_t mult = 0;
          for (auto u : r->term(k)) mult += u == w;
          CHECK(tor_dim(m, simple(op, w), k) == mult);
        }
      }
    }
  }
}

TEST_CASE("exceptional modules") {
  for (const auto& name : algebra::fixture_names()) {
    const auto a = fixture(name);
    for (std::size_t v = 0; v < a->num_vertices(); ++v) CHECK(is_exceptional(projective(a, v), kCap) == Verdict::True);
  }
  const auto loop = algebra::build_algebra(algebra::truncated_loop(2));
  CHECK(is_exceptional(simple(loop, 0), kCap) == Verdict::False);
  CHECK(std::string(to_string(Verdict::True)) == "Certified(true)");
}

TEST_CASE("staircase complexes stay minimal") {
  const auto a43 = fixture("FX-43");
  for (std::size_t m = 1; m <= 6; ++m) {
    const ProjComplex c = staircase(a43, m);
    REQUIRE(is_complex(c));
    CHECK(is_minimal(c));
    const MinimizeResult r = minimize_complex(c);
    CHECK(r.cancellations == 0);
    CHECK(r.length == m);
    CHECK(r.complex.terms == c.terms);
    CHECK(r_invariant(r.complex) == 0);
    CHECK(s_invariant(r.complex) == static_cast<int>(m));
  }
}

TEST_CASE("minimization of small complexes") {
  const auto a2 = fixture("FX-A2");
  ProjComplex id{a2, 0, {{0}, {0}}, {ProjMap::zero(*a2, {0}, {0})}, false};
  id.diffs[0].entry[0][0] = a2->basis_vector(a2->idempotent(0));
  const MinimizeResult r = minimize_complex(id);
  CHECK(r.complex.is_zero());
  CHECK(r.length == 0);
  const ProjComplex stalk{a2, 0, {{0}}, {}, false};
  const MinimizeResult s = minimize_complex(stalk);
  CHECK(s.complex.terms == stalk.terms);
  CHECK(s.length == 0);
}

TEST_CASE("minimization preserves cohomology and recovers the staircase") {
  std::mt19937_64 rng(31);
  const auto a43 = fixture("FX-43");
  for (std::size_t m = 1; m <= 6; ++m) {
    const ProjComplex x = staircase(a43, m);
    const ProjComplex y = disguise(rng, x, 1 + m % 3);
    REQUIRE(is_complex(y));
    const MinimizeResult r = minimize_complex(y);
    CHECK(r.cancellations >= 1 + m % 3);
    CHECK(is_complex(r.complex));
    CHECK(is_minimal(r.complex));
    CHECK(cohomology_dims(r.complex) == cohomology_dims(y));
    CHECK(hom_to_regular_dims(r.complex) == hom_to_regular_dims(y));
    CHECK(r.length == m);
    CHECK(r_invariant(r.complex) == 0);
    CHECK(s_invariant(r.complex) == static_cast<int>(m));
  }
}
