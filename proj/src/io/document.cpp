#include "strathom/io/document.hpp"

#include <algorithm>

namespace strathom::io {

namespace {

using algebra::FDAlgebra;
using algebra::Quiver;
using algebra::Word;
using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, where + ": " + what);
}

void expect_keys(const Json& j, const std::string& where, const std::vector<std::string>& required,
                 const std::vector<std::string>& optional = {}) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end()) {
      fail(where, "unknown field '" + key + "'");
    }
  }
  for (const auto& key : required) {
    if (!j.contains(key)) fail(where, "missing field '" + key + "'");
  }
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::size_t size_at(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Scalar scalar_at(const Field& f, const Json& j, const std::string& where) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  fail(where, "expected a scalar (string or integer)");
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

Word path_at(const Quiver& q, const Json& j, const std::string& where) {
  array_at(j, where);
  if (j.empty()) throw Error(ErrorKind::MalformedRelation, where + ": empty path");
  Word w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string id = string_at(j[i], at(where, i));
    const auto idx = q.arrow_index(id);
    if (!idx) throw Error(ErrorKind::MalformedRelation, at(where, i) + ": unknown arrow '" + id + "'");
    if (!w.empty() && q.arrows[w.back()].target != q.arrows[*idx].source) {
      throw Error(ErrorKind::MalformedRelation, where + ": path " + algebra::word_label(q, w, 0) + "*" + id +
                                                    " is not composable");
    }
    w.push_back(*idx);
  }
  return w;
}

Json path_json(const Quiver& q, const Word& w) {
  Json out = Json::array();
  for (auto a : w) out.push_back(q.arrows[a].id);
  return out;
}

bool is_path_list(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_string(); });
}

std::size_t vertex_at(const Quiver& q, const Json& j, const std::string& where) {
  const std::string name = string_at(j, where);
  const auto v = q.vertex_index(name);
  if (!v) fail(where, "unknown vertex '" + name + "'");
  return *v;
}

std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Quiver& quiver_of(const FDAlgebra& a) {
  if (!a.presentation()) throw Error(ErrorKind::InvalidArgument, "algebra '" + a.name() + "' has no presentation");
  return a.presentation()->quiver;
}

/// Basis index of the generator for each arrow.
std::vector<std::size_t> arrow_generators(const FDAlgebra& a) {
  const Quiver& q = quiver_of(a);
  std::vector<std::size_t> out(q.arrows.size(), a.dim());
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto idx = q.arrow_index(a.basis(a.generators()[g]).label);
    if (idx) out[*idx] = g;
  }
  return out;
}

Matrix path_element(const FDAlgebra& a, const Word& w) {
  const auto gens = arrow_generators(a);
  Matrix x;
  for (auto arrow : w) {
    if (gens[arrow] == a.dim()) return a.zero();
    const Matrix g = a.basis_vector(a.generators()[gens[arrow]]);
    x = x.rows() == 0 ? g : a.mul(x, g);
  }
  return x;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string reason = e.what();
    const auto pos = reason.find("syntax error");
    if (pos != std::string::npos) reason = reason.substr(pos);
    throw Error(ErrorKind::Parse, position_of(text, e.byte) + ": " + reason);
  }
}

AlgebraDocument parse_algebra(const std::string& text) {
  const Json j = parse_json(text);
  expect_keys(j, "document", {"format_version", "field", "quiver", "relations"}, {"name"});
  AlgebraDocument doc;
  doc.format_version = string_at(j["format_version"], "format_version");
  if (doc.format_version != kFormatVersion) fail("format_version", "unsupported version '" + doc.format_version + "'");
  Presentation& p = doc.presentation;
  if (j.contains("name")) p.name = string_at(j["name"], "name");
  p.field = Field::parse(string_at(j["field"], "field"));

  const Json& jq = j["quiver"];
  expect_keys(jq, "quiver", {"vertices", "arrows"});
  const Json& jv = array_at(jq["vertices"], "quiver.vertices");
  for (std::size_t i = 0; i < jv.size(); ++i) p.quiver.vertices.push_back(string_at(jv[i], at("quiver.vertices", i)));
  const Json& ja = array_at(jq["arrows"], "quiver.arrows");
  for (std::size_t i = 0; i < ja.size(); ++i) {
    const std::string where = at("quiver.arrows", i);
    expect_keys(ja[i], where, {"id", "source", "target"});
    p.quiver.arrows.push_back({string_at(ja[i]["id"], where + ".id"), vertex_at(p.quiver, ja[i]["source"], where + ".source"),
                               vertex_at(p.quiver, ja[i]["target"], where + ".target")});
  }
  p.quiver.validate();

  const Json& jr = array_at(j["relations"], "relations");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string where = at("relations", i);
    algebra::Relation rel;
    if (is_path_list(jr[i])) {
      rel.push_back({Scalar::one(p.field), path_at(p.quiver, jr[i], where)});
    } else {
      const Json& terms = array_at(jr[i], where);
      if (terms.empty()) throw Error(ErrorKind::MalformedRelation, where + ": empty relation");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tw = at(where, t);
        expect_keys(terms[t], tw, {"coeff", "path"});
        rel.push_back({scalar_at(p.field, terms[t]["coeff"], tw + ".coeff"), path_at(p.quiver, terms[t]["path"], tw + ".path")});
      }
    }
    const auto& front = p.quiver.arrows[rel.front().path.front()];
    const std::size_t s = front.source, t = p.quiver.arrows[rel.front().path.back()].target;
    for (const auto& term : rel) {
      if (p.quiver.arrows[term.path.front()].source != s || p.quiver.arrows[term.path.back()].target != t) {
        throw Error(ErrorKind::MalformedRelation, where + ": paths are not parallel");
      }
    }
    p.relations.push_back(std::move(rel));
  }
  return doc;
}

AlgebraDocument document_of(const Presentation& p) { return AlgebraDocument{kFormatVersion, p}; }

std::string serialize(const AlgebraDocument& doc) {
  const Presentation& p = doc.presentation;
  Json j;
  j["format_version"] = doc.format_version;
  if (!p.name.empty()) j["name"] = p.name;
  j["field"] = p.field.name();
  Json arrows = Json::array();
  for (const auto& a : p.quiver.arrows) {
    arrows.push_back(Json{{"id", a.id}, {"source", p.quiver.vertices[a.source]}, {"target", p.quiver.vertices[a.target]}});
  }
  j["quiver"] = Json{{"vertices", p.quiver.vertices}, {"arrows", arrows}};
  Json rels = Json::array();
  for (const auto& rel : p.relations) {
    if (rel.size() == 1 && rel.front().coeff.is_one()) {
      rels.push_back(path_json(p.quiver, rel.front().path));
      continue;
    }
    Json terms = Json::array();
    for (const auto& term : rel) terms.push_back(Json{{"coeff", term.coeff.to_string()}, {"path", path_json(p.quiver, term.path)}});
    rels.push_back(terms);
  }
  j["relations"] = rels;
  return j.dump(2) + "\n";
}

Matrix element_from_json(const FDAlgebra& a, const Json& j) {
  const Quiver& q = quiver_of(a);
  if (is_path_list(j)) return path_element(a, path_at(q, j, "element"));
  array_at(j, "element");
  Matrix x = a.zero();
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string where = at("element", t);
    if (!j[t].is_object()) fail(where, "expected a term object");
    const bool vertex = j[t].contains("vertex");
    expect_keys(j[t], where, {"coeff", vertex ? "vertex" : "path"});
    const Scalar c = scalar_at(a.field(), j[t]["coeff"], where + ".coeff");
    if (vertex) {
      x += a.basis_vector(a.idempotent(vertex_at(q, j[t]["vertex"], where + ".vertex"))).scaled(c);
    } else {
      x += path_element(a, path_at(q, j[t]["path"], where + ".path")).scaled(c);
    }
  }
  return x;
}

Json element_to_json(const FDAlgebra& a, const Matrix& x) {
  const Quiver& q = quiver_of(a);
  Json terms = Json::array();
  std::size_t nonzero = 0, last = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x(0, i).is_zero()) continue;
    ++nonzero;
    last = i;
    const auto& b = a.basis(i);
    Json term{{"coeff", x(0, i).to_string()}};
    if (b.word.empty()) {
      term["vertex"] = q.vertices[b.source];
    } else {
      term["path"] = path_json(q, b.word);
    }
    terms.push_back(term);
  }
  if (nonzero == 1 && x(0, last).is_one() && !a.basis(last).word.empty()) return path_json(q, a.basis(last).word);
  return terms;
}

rep::Representation module_from_json(const AlgebraPtr& a, const Json& j) {
  expect_keys(j, "module", {"format_version", "dim_vector"}, {"arrows"});
  if (string_at(j["format_version"], "format_version") != kFormatVersion) fail("format_version", "unsupported version");
  const Quiver& q = quiver_of(*a);
  const Json& jd = array_at(j["dim_vector"], "dim_vector");
  if (jd.size() != a->num_vertices()) fail("dim_vector", "expected " + std::to_string(a->num_vertices()) + " entries");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < jd.size(); ++i) dims.push_back(size_at(jd[i], at("dim_vector", i)));
  std::vector<Matrix> maps;
  for (auto g : a->generators()) {
    const auto& b = a->basis(g);
    maps.emplace_back(a->field(), dims[b.source], dims[b.target]);
  }
  if (j.contains("arrows")) {
    const Json& ja = j["arrows"];
    if (!ja.is_object()) fail("arrows", "expected an object keyed by arrow id");
    const auto gens = arrow_generators(*a);
    for (const auto& [id, rows] : ja.items()) {
      const std::string where = "arrows." + id;
      const auto idx = q.arrow_index(id);
      if (!idx) fail(where, "unknown arrow '" + id + "'");
      if (gens[*idx] == a->dim()) fail(where, "arrow is zero in the algebra");
      Matrix& m = maps[gens[*idx]];
      array_at(rows, where);
      if (rows.size() != m.rows()) fail(where, "expected " + std::to_string(m.rows()) + " rows");
      for (std::size_t r = 0; r < m.rows(); ++r) {
        array_at(rows[r], at(where, r));
        if (rows[r].size() != m.cols()) fail(at(where, r), "expected " + std::to_string(m.cols()) + " entries");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalar_at(a->field(), rows[r][c], at(at(where, r), c));
      }
    }
  }
  return rep::Representation(a, std::move(dims), std::move(maps));
}

Json module_to_json(const rep::Representation& m) {
  const FDAlgebra& a = m.algebra();
  const Quiver& q = quiver_of(a);
  Json arrows = Json::object();
  const auto gens = arrow_generators(a);
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    if (gens[i] == a.dim()) continue;
    const Matrix& g = m.generator_map(gens[i]);
    Json rows = Json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(g(r, c).to_string());
      rows.push_back(row);
    }
    arrows[q.arrows[i].id] = rows;
  }
  return Json{{"format_version", kFormatVersion}, {"dim_vector", m.dims()}, {"arrows", arrows}};
}

homology::ProjComplex complex_from_json(const AlgebraPtr& a, const Json& j) {
  expect_keys(j, "complex", {"format_version", "lowest", "terms", "differentials"}, {"algebra"});
  if (string_at(j["format_version"], "format_version") != kFormatVersion) fail("format_version", "unsupported version");
  const Quiver& q = quiver_of(*a);
  if (j.contains("algebra") && string_at(j["algebra"], "algebra") != a->name()) {
    fail("algebra", "complex is over '" + j["algebra"].get<std::string>() + "', not '" + a->name() + "'");
  }
  if (!j["lowest"].is_number_integer()) fail("lowest", "expected an integer");
  homology::ProjComplex c{a, j["lowest"].get<int>(), {}, {}, false};
  const Json& jt = array_at(j["terms"], "terms");
  for (std::size_t i = 0; i < jt.size(); ++i) {
    array_at(jt[i], at("terms", i));
    std::vector<std::size_t> term;
    for (std::size_t k = 0; k < jt[i].size(); ++k) term.push_back(vertex_at(q, jt[i][k], at(at("terms", i), k)));
    c.terms.push_back(std::move(term));
  }
  const Json& jd = array_at(j["differentials"], "differentials");
  if (c.terms.empty() || jd.size() + 1 != c.terms.size()) fail("differentials", "expected one fewer than the terms");
  for (std::size_t i = 0; i < jd.size(); ++i) {
    const std::string where = at("differentials", i);
    homology::ProjMap d = homology::ProjMap::zero(*a, c.terms[i], c.terms[i + 1]);
    array_at(jd[i], where);
    if (jd[i].size() != d.source.size()) fail(where, "expected one row per summand of the source");
    for (std::size_t s = 0; s < d.source.size(); ++s) {
      array_at(jd[i][s], at(where, s));
      if (jd[i][s].size() != d.target.size()) fail(at(where, s), "expected one entry per summand of the target");
      for (std::size_t t = 0; t < d.target.size(); ++t) d.entry[s][t] = element_from_json(*a, jd[i][s][t]);
    }
    c.diffs.push_back(std::move(d));
  }
  if (!homology::is_complex(c)) throw Error(ErrorKind::InvalidArgument, "differentials do not form a complex");
  return c;
}

Json complex_to_json(const homology::ProjComplex& c) {
  const FDAlgebra& a = *c.algebra;
  const Quiver& q = quiver_of(a);
  Json terms = Json::array();
  for (const auto& t : c.terms) {
    Json names = Json::array();
    for (auto v : t) names.push_back(q.vertices[v]);
    terms.push_back(names);
  }
  Json diffs = Json::array();
  for (const auto& d : c.diffs) {
    Json rows = Json::array();
    for (const auto& row : d.entry) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(element_to_json(a, x));
      rows.push_back(r);
    }
    diffs.push_back(rows);
  }
  return Json{{"format_version", kFormatVersion}, {"algebra", a.name()}, {"lowest", c.lowest}, {"terms", terms}, {"differentials", diffs}};
}

}  // namespace strathom::io
