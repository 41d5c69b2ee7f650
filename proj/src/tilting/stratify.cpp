#include "strathom/tilting/stratify.hpp"

#include <algorithm>

namespace strathom::tilting {

namespace {

std::string position(std::size_t i) { return "E" + std::to_string(i + 1); }

StratificationTree leaf_of(const AlgebraPtr& a) {
  StratificationTree t;
  t.algebra = a;
  t.is_leaf = true;
  t.leaf = signature(*a);
  return t;
}

void collect(const StratificationTree& t, std::vector<AlgebraSignature>& out) {
  if (t.is_leaf) out.push_back(t.leaf);
  for (const auto& c : t.children) collect(c, out);
}

void orders(const AlgebraPtr& a, std::vector<std::string>& prefix, std::vector<std::vector<std::string>>& out) {
  if (a->num_vertices() == 0) {
    out.push_back(prefix);
    return;
  }
  for (auto v : simple_projective_vertices(*a)) {
    prefix.push_back(a->vertices()[v]);
    if (a->num_vertices() == 1) {
      out.push_back(prefix);
    } else {
      orders(algebra::quotient_by_idempotent_ideal(*a, {v}), prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

SequenceReport exceptional_sequence_check(const std::vector<Representation>& seq, std::size_t cap) {
  SequenceReport r;
  auto fail = [&](std::string why) {
    r.valid = false;
    r.failures.push_back(std::move(why));
  };
  std::vector<std::size_t> bound(seq.size(), cap);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].is_zero() || !rep::is_indecomposable(seq[i])) fail(position(i) + " is not indecomposable");
    const DimVerdict pd = homology::proj_dim(seq[i], cap);
    if (pd.kind == DimVerdict::Kind::Finite) bound[i] = pd.value;
    const Verdict ex = homology::is_exceptional(seq[i], cap);
    if (ex != Verdict::True) fail(position(i) + " is not exceptional (" + homology::to_string(ex) + ")");
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (rep::hom_dim(seq[i], seq[j])) fail("Hom(" + position(i) + ", " + position(j) + ") is nonzero");
      for (std::size_t k = 1; k <= bound[i]; ++k) {
        if (homology::ext_dim(seq[i], seq[j], k)) {
          fail("Ext^" + std::to_string(k) + "(" + position(i) + ", " + position(j) + ") is nonzero");
        }
      }
    }
  }
  return r;
}

bool is_complete(const std::vector<Representation>& seq, const FDAlgebra& a) { return seq.size() == a.num_vertices(); }

std::size_t StratificationTree::leaf_count() const { return leaves().size(); }

std::vector<AlgebraSignature> StratificationTree::leaves() const {
  std::vector<AlgebraSignature> out;
  collect(*this, out);
  return out;
}

std::vector<std::size_t> simple_projective_vertices(const FDAlgebra& a) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    std::size_t d = 0;
    for (std::size_t t = 0; t < a.num_vertices(); ++t) d += a.block(v, t).size();
    if (d == 1) out.push_back(v);
  }
  return out;
}

StratificationTree stratify(const AlgebraPtr& a, const std::vector<std::string>& priority) {
  if (!algebra::is_directed(*a)) throw Error(ErrorKind::NotDirected, "quiver has an oriented cycle");
  if (a->num_vertices() <= 1) return leaf_of(a);
  const auto sinks = simple_projective_vertices(*a);
  if (sinks.empty()) throw Error(ErrorKind::NotDirected, "no simple projective module");
  std::size_t v = sinks.front();
  for (const auto& name : priority) {
    const auto idx = a->vertex_index(name);
    if (idx && std::find(sinks.begin(), sinks.end(), *idx) != sinks.end()) {
      v = *idx;
      break;
    }
  }
  StratificationTree t;
  t.algebra = a;
  t.vertex = a->vertices()[v];
  const Representation j = idempotent_ideal_module(a, {v});
  t.verified = rep::radical_submodule(j).dim() == 0 &&
               rep::projective_cover(j).projective.total_dim() == j.total_dim();
  t.children.push_back(stratify(algebra::quotient_by_idempotent_ideal(*a, {v}), priority));
  t.children.push_back(leaf_of(algebra::corner_algebra(*a, {v})));
  return t;
}

std::vector<std::vector<std::string>> legal_sink_orders(const AlgebraPtr& a) {
  if (!algebra::is_directed(*a)) throw Error(ErrorKind::NotDirected, "quiver has an oriented cycle");
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> prefix;
  orders(a, prefix, out);
  return out;
}

bool compare_factor_multisets(const StratificationTree& t1, const StratificationTree& t2) {
  auto l1 = t1.leaves(), l2 = t2.leaves();
  std::sort(l1.begin(), l1.end());
  std::sort(l2.begin(), l2.end());
  return l1 == l2;
}

}  // namespace strathom::tilting
