#pragma once

#include <string>
#include <vector>

#include "strathom/tilting/recollement.hpp"

namespace strathom::tilting {

struct SequenceReport {
  bool valid = true;
  std::vector<std::string> failures;
};

/// Each term indecomposable and exceptional; Hom(E_i, E_j) = 0 and
/// Ext^k(E_i, E_j) = 0 for i > j and 1 <= k <= pd E_i (or the cap).
SequenceReport exceptional_sequence_check(const std::vector<Representation>& seq, std::size_t cap = kDefaultCap);

/// Length equals the number of simple modules.
bool is_complete(const std::vector<Representation>& seq, const FDAlgebra& a);

/// Iterated recollements along simple projectives. An internal node records
/// the chosen vertex and has children {A/AeA, eAe}; a leaf carries the
/// signature of its factor algebra.
struct StratificationTree {
  AlgebraPtr algebra;
  bool is_leaf = false;
  AlgebraSignature leaf;
  std::string vertex;
  /// AeA semisimple and projective as a right module.
  bool verified = false;
  std::vector<StratificationTree> children;

  std::size_t leaf_count() const;
  std::vector<AlgebraSignature> leaves() const;
};

/// Vertices with e_v A simple, that is sinks of the quiver.
std::vector<std::size_t> simple_projective_vertices(const FDAlgebra& a);

/// Picks at each node the first simple projective vertex in `priority`
/// (vertex names), falling back to the least index. Throws NotDirected.
StratificationTree stratify(const AlgebraPtr& a, const std::vector<std::string>& priority = {});

/// Every sequence of vertex names the recursion can follow.
std::vector<std::vector<std::string>> legal_sink_orders(const AlgebraPtr& a);

/// Multiset equality of leaf signatures.
bool compare_factor_multisets(const StratificationTree& t1, const StratificationTree& t2);

}  // namespace strathom::tilting
