#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strathom/linalg/scalar.hpp"

namespace strathom::algebra {

using linalg::Field;
using linalg::Scalar;

/// A path as a sequence of arrow indices, read left to right.
using Word = std::vector<std::size_t>;

struct Arrow {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t num_vertices() const noexcept { return vertices.size(); }
  std::optional<std::size_t> vertex_index(const std::string& id) const;
  std::optional<std::size_t> arrow_index(const std::string& id) const;
  /// Throws InvalidArgument on duplicate ids or dangling endpoints.
  void validate() const;
  bool has_oriented_cycle() const;
  /// Vertices with no arrow leaving them.
  std::vector<std::size_t> sinks() const;
};

struct Term {
  Scalar coeff;
  Word path;
};

using Relation = std::vector<Term>;

struct Presentation {
  std::string name;
  Field field;
  Quiver quiver;
  std::vector<Relation> relations;
};

/// Human-readable path such as "alpha*beta" ("e_1" for a trivial path).
std::string word_label(const Quiver& q, const Word& w, std::size_t vertex);

}  // namespace strathom::algebra
