#include "strathom/algebra/quiver.hpp"

#include <set>

namespace strathom::algebra {

std::optional<std::size_t> Quiver::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].id == id) return i;
  }
  return std::nullopt;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidArgument, "duplicate vertex id '" + v + "'");
  }
  std::set<std::string> arrow_ids;
  for (const auto& a : arrows) {
    if (seen.count(a.id) || !arrow_ids.insert(a.id).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate id '" + a.id + "'");
    }
    if (a.source >= vertices.size() || a.target >= vertices.size()) {
      throw Error(ErrorKind::InvalidArgument, "arrow '" + a.id + "' has an undeclared endpoint");
    }
  }
}

bool Quiver::has_oriented_cycle() const {
  // Kahn's algorithm; loops count as cycles.
  std::vector<std::size_t> indeg(vertices.size(), 0);
  for (const auto& a : arrows) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& a : arrows) {
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
    }
  }
  return removed != vertices.size();
}

std::vector<std::size_t> Quiver::sinks() const {
  std::vector<bool> has_out(vertices.size(), false);
  for (const auto& a : arrows) has_out[a.source] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!has_out[v]) out.push_back(v);
  }
  return out;
}

std::string word_label(const Quiver& q, const Word& w, std::size_t vertex) {
  if (w.empty()) return "e_" + q.vertices.at(vertex);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += q.arrows.at(w[i]).id;
  }
  return out;
}

}  // namespace strathom::algebra
