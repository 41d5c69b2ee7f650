#include "strathom/homology/resolution.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "strathom/linalg/subspace.hpp"
#include "strathom/rep/decompose.hpp"

namespace strathom::homology {

namespace {

using CacheKey = std::pair<const FDAlgebra*, std::string>;

std::string module_key(const Representation& m) {
  std::string key;
  for (auto d : m.dims()) key += std::to_string(d) + ",";
  for (const auto& g : m.generator_maps()) {
    key += "|";
    for (const auto& s : g.entries()) key += s.to_string() + " ";
  }
  return key;
}

struct Cache {
  std::shared_mutex mutex;
  std::map<CacheKey, std::shared_ptr<const Resolution>> entries;
};

Cache& cache() {
  static Cache c;
  return c;
}

bool covers_cap(const Resolution& r, std::size_t cap) {
  return r.status == ResolutionStatus::Terminated || r.cap >= cap;
}

std::shared_ptr<const Resolution> compute(const Representation& m, std::size_t cap) {
  auto res = std::make_shared<Resolution>(Resolution{m, cap, {}, {}, {m}, {}, {}, ResolutionStatus::Truncated, 0, 0, 0});
  const AlgebraPtr& alg = m.algebra_ptr();
  const FDAlgebra& a = *alg;
  if (m.total_dim() == 0) {
    res->terms.push_back({});
    res->status = ResolutionStatus::Terminated;
    return res;
  }
  bool periodic = false;
  ProjSum previous;
  for (std::size_t k = 0; k <= cap; ++k) {
    const Representation current = res->syzygies.back();
    rep::ProjectiveCover cover = rep::projective_cover(current);
    ProjSum sum = proj_sum(alg, cover.vertices);
    const Matrix lk = linalg::left_kernel(cover.map);
    const Subspace ker = lk.rows() ? Subspace(lk) : Subspace(a.field(), cover.projective.total_dim());
    rep::SubRep kernel = rep::submodule_rep(cover.projective, ker);
    if (k > 0) {
      const Matrix d = cover.map * res->kernels[k - 1].inclusion;
      res->differentials.push_back(element_form(a, sum, previous, d));
    }
    res->terms.push_back(cover.vertices);
    res->covers.push_back(std::move(cover));
    const Representation omega = kernel.module;
    res->kernels.push_back(std::move(kernel));
    previous = std::move(sum);
    if (omega.total_dim() == 0) {
      res->status = ResolutionStatus::Terminated;
      res->length = k;
      return res;
    }
    res->syzygies.push_back(omega);
    if (!periodic) {
      for (std::size_t j = 0; j + 1 < res->syzygies.size(); ++j) {
        if (res->syzygies[j].dims() == omega.dims() && rep::is_isomorphic(res->syzygies[j], omega)) {
          periodic = true;
          res->status = ResolutionStatus::Periodic;
          res->period_start = j;
          res->period = k + 1 - j;
          break;
        }
      }
    }
  }
  return res;
}

}  // namespace

const std::vector<std::size_t>& Resolution::term(std::size_t k) const {
  static const std::vector<std::size_t> empty;
  return k < terms.size() ? terms[k] : empty;
}

std::string Resolution::status_string() const {
  switch (status) {
    case ResolutionStatus::Terminated: return "Terminated(" + std::to_string(length) + ")";
    case ResolutionStatus::Periodic:
      return "Periodic(start=" + std::to_string(period_start) + ", period=" + std::to_string(period) + ")";
    case ResolutionStatus::Truncated: return "Truncated(" + std::to_string(cap) + ")";
  }
  return "";
}

std::shared_ptr<const Resolution> minimal_projective_resolution(const Representation& m, std::size_t cap) {
  const CacheKey key{&m.algebra(), module_key(m)};
  Cache& c = cache();
  {
    std::shared_lock lock(c.mutex);
    auto it = c.entries.find(key);
    if (it != c.entries.end() && covers_cap(*it->second, cap)) return it->second;
  }
  auto res = compute(m, cap);
  std::unique_lock lock(c.mutex);
  auto& slot = c.entries[key];
  if (!slot || !covers_cap(*slot, cap)) slot = res;
  return slot;
}

void clear_resolution_cache() {
  Cache& c = cache();
  std::unique_lock lock(c.mutex);
  c.entries.clear();
}

std::string DimVerdict::to_string() const {
  switch (kind) {
    case Kind::Finite: return "Finite(" + std::to_string(value) + ")";
    case Kind::Infinite: return "Infinite";
    case Kind::Unknown: return "Unknown";
  }
  return "";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "Certified(true)";
    case Verdict::False: return "Certified(false)";
    case Verdict::Unknown: return "Unknown";
  }
  return "";
}

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t k) {
  if (m.algebra_ptr() != n.algebra_ptr()) throw Error(ErrorKind::DomainMismatch, "Ext between modules over different algebras");
  const auto res = minimal_projective_resolution(m, k + 1);
  std::size_t dim = 0;
  for (auto u : res->term(k)) dim += n.dim(u);
  if (dim == 0) return 0;
  std::optional<Matrix> in, out;
  if (k >= 1) in = hom_into(n, res->differentials[k - 1]);
  if (k < res->differentials.size()) out = hom_into(n, res->differentials[k]);
  return middle_homology(dim, in ? &*in : nullptr, out ? &*out : nullptr);
}

std::size_t tor_dim(const Representation& m, const Representation& l, std::size_t k) {
  const FDAlgebra& a = m.algebra();
  if (l.algebra().dim() != a.dim() || l.algebra().num_vertices() != a.num_vertices() || l.field() != m.field()) {
    throw Error(ErrorKind::DomainMismatch, "Tor needs a module over the opposite algebra");
  }
  const auto res = minimal_projective_resolution(m, k + 1);
  std::size_t dim = 0;
  for (auto u : res->term(k)) dim += l.dim(u);
  if (dim == 0) return 0;
  std::optional<Matrix> in, out;
  if (k < res->differentials.size()) in = tensor_with(l, res->differentials[k]);
  if (k >= 1) out = tensor_with(l, res->differentials[k - 1]);
  return middle_homology(dim, in ? &*in : nullptr, out ? &*out : nullptr);
}

std::size_t tensor_dim(const Representation& m, const Representation& l) { return tor_dim(m, l, 0); }

DimVerdict proj_dim(const Representation& m, std::size_t cap) {
  const auto res = minimal_projective_resolution(m, cap);
  switch (res->status) {
    case ResolutionStatus::Terminated: return DimVerdict::finite(res->length);
    case ResolutionStatus::Periodic: return DimVerdict::infinite();
    case ResolutionStatus::Truncated: return DimVerdict::unknown();
  }
  return DimVerdict::unknown();
}

DimVerdict global_dim(const AlgebraPtr& a, std::size_t cap) {
  DimVerdict out = DimVerdict::finite(0);
  bool unknown = false;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    const DimVerdict d = proj_dim(rep::simple(a, v), cap);
    if (d.kind == DimVerdict::Kind::Infinite) return DimVerdict::infinite();
    if (d.kind == DimVerdict::Kind::Unknown) unknown = true;
    if (d.kind == DimVerdict::Kind::Finite) out.value = std::max(out.value, d.value);
  }
  return unknown ? DimVerdict::unknown() : out;
}

Verdict is_exceptional(const Representation& m, std::size_t cap) {
  const DimVerdict pd = proj_dim(m, cap);
  const bool finite = pd.kind == DimVerdict::Kind::Finite;
  const std::size_t bound = finite ? pd.value : cap;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (ext_dim(m, m, k) != 0) return Verdict::False;
  }
  return finite ? Verdict::True : Verdict::Unknown;
}

}  // namespace strathom::homology
