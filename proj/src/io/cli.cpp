#include "strathom/io/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "strathom/algebra/fixtures.hpp"
#include "strathom/io/document.hpp"
#include "strathom/io/expression.hpp"
#include "strathom/linalg/rref.hpp"
#include "strathom/tilting/stratify.hpp"

namespace strathom::io {

namespace {

using homology::DimVerdict;
using homology::ProjComplex;
using homology::Verdict;
using rep::Representation;
using tilting::StratificationTree;

struct Options {
  bool json = false;
  bool dot = false;
  std::optional<std::size_t> cap;
  std::size_t path_cap = algebra::kDefaultPathCap;
  std::string field;
  std::string algebra;
  std::vector<std::string> modules;
  std::string tilting = "A";
  std::string perpendicular;
  std::vector<std::string> idempotent;
  std::vector<std::string> vertices;
  std::optional<std::size_t> degree;
  std::vector<std::string> order;
  bool all_orders = false;
  std::optional<std::size_t> staircase;
  std::string complex;
  std::size_t max_len = 6;
  bool verify = false;
  std::string materialize;
  std::size_t staircases = 6;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_fixture(const std::string& name) {
  const auto& names = algebra::fixture_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Json signature_json(const tilting::AlgebraSignature& s) {
  return Json{{"dim", s.dim}, {"center_dim", s.center_dim}, {"radical_dim", s.radical_dim}, {"commutative", s.commutative}};
}

Json module_json(const Representation& m) {
  Json summands = Json::array();
  if (!m.is_zero()) {
    for (const auto& e : rep::decompose(m)) {
      summands.push_back(Json{{"dim_vector", e.module.dims()}, {"multiplicity", e.multiplicity}});
    }
  }
  return Json{{"dim", m.total_dim()}, {"dim_vector", m.dims()}, {"summands", summands}};
}

Json terms_json(const algebra::FDAlgebra& a, const std::vector<std::vector<std::size_t>>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) {
    Json names = Json::array();
    for (auto v : t) names.push_back(a.vertices()[v]);
    out.push_back(names);
  }
  return out;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

class Session {
 public:
  Session(const Options& o, Report& r) : o_(o), r_(r) {
    cap_ = tilting::kDefaultCap;
    if (const char* env = std::getenv("STRATHOM_CAP")) {
      const std::string text = env;
      if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || std::stoul(text) == 0) {
        throw Error(ErrorKind::InvalidArgument, "STRATHOM_CAP must be a positive integer");
      }
      cap_ = std::stoul(text);
    }
    if (o.cap) cap_ = *o.cap;
  }

  std::size_t cap() const { return cap_; }
  const AlgebraPtr& algebra() const { return a_; }

  void load_algebra() {
    algebra::Presentation p;
    if (is_fixture(o_.algebra)) {
      p = algebra::fixture_presentation(o_.algebra, o_.field.empty() ? linalg::Field::rationals() : linalg::Field::parse(o_.field));
      r_.provenance["fixture"] = o_.algebra;
    } else {
      const std::string text = read_file(o_.algebra);
      r_.provenance["input_sha256"] = sha256_hex(text);
      p = parse_algebra(text).presentation;
      if (!o_.field.empty()) {
        Json j = parse_json(text);
        j["field"] = o_.field;
        p = parse_algebra(j.dump()).presentation;
      }
    }
    r_.provenance["field"] = p.field.name();
    r_.provenance["cap"] = cap_;
    a_ = algebra::build_algebra(p, o_.path_cap);
  }

  Json file_json(const std::string& path) {
    const std::string text = read_file(path);
    r_.provenance["files"][path] = sha256_hex(text);
    return parse_json(text);
  }

  Representation module(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') return module_from_json(a_, file_json(arg.substr(1)));
    return evaluate_module(a_, arg);
  }

  std::vector<std::size_t> vertex_indices(const std::vector<std::string>& names) const {
    std::vector<std::size_t> out;
    for (const auto& n : names) {
      const auto v = a_->vertex_index(n);
      if (!v) throw Error(ErrorKind::InvalidArgument, "unknown vertex '" + n + "'");
      out.push_back(*v);
    }
    return out;
  }

  tilting::TResolution resolution(const Representation& t) const {
    if (o_.idempotent.empty()) return tilting::approximation_sequence(t);
    return tilting::idempotent_resolution(a_, vertex_indices(o_.idempotent));
  }

  void unknown_if(bool cond) {
    if (cond) r_.exit_code = kExitUnknown;
  }

 private:
  const Options& o_;
  Report& r_;
  std::size_t cap_ = 0;
  AlgebraPtr a_;
};

Json datum_json(const tilting::RecollementDatum& d) {
  Json j;
  j["ok"] = d.ok();
  j["failures"] = d.failures;
  j["ranks"] = Json{{"A", d.n_a}, {"B", d.n_b}, {"C", d.n_c}};
  j["ranks_additive"] = d.ranks_additive();
  j["ell"] = module_json(d.ell.module);
  j["trace_dim"] = d.ell.trace_dim;
  j["B"] = d.epi ? signature_json(tilting::signature(*d.epi->b.algebra)) : Json(nullptr);
  j["phi_rank"] = d.epi ? linalg::rank(d.epi->phi) : 0;
  j["homological_epi"] = homology::to_string(d.homological_epi);
  j["T1"] = module_json(d.c.t1);
  j["C"] = d.c.c ? signature_json(tilting::signature(*d.c.c->algebra)) : Json(nullptr);
  j["pd_T1_over_C"] = d.c.pd.to_string();
  return j;
}

bool datum_unknown(const tilting::RecollementDatum& d) {
  return d.homological_epi == Verdict::Unknown || d.c.pd.kind == DimVerdict::Kind::Unknown;
}

Json tree_json(const StratificationTree& t) {
  if (t.is_leaf) return Json{{"leaf", signature_json(t.leaf)}};
  return Json{{"vertex", t.vertex},
              {"verified", t.verified},
              {"quotient", tree_json(t.children[0])},
              {"corner", tree_json(t.children[1])}};
}

std::string tree_dot(const StratificationTree& t, std::ostringstream& os, std::size_t& next) {
  const std::string id = "n" + std::to_string(next++);
  if (t.is_leaf) {
    os << "  " << id << " [shape=box, label=" << quote("dim " + std::to_string(t.leaf.dim)) << "];\n";
    return id;
  }
  os << "  " << id << " [label=" << quote("e_" + t.vertex + (t.verified ? "" : " (unverified)")) << "];\n";
  const std::string q = tree_dot(t.children[0], os, next);
  const std::string c = tree_dot(t.children[1], os, next);
  os << "  " << id << " -> " << q << " [label=\"A/AeA\"];\n";
  os << "  " << id << " -> " << c << " [label=\"eAe\"];\n";
  return id;
}

std::string quiver_dot(const algebra::FDAlgebra& a) {
  const algebra::Quiver q = a.quiver();
  std::ostringstream os;
  os << "digraph " << quote(a.name()) << " {\n";
  for (const auto& v : q.vertices) os << "  " << quote(v) << ";\n";
  for (const auto& e : q.arrows) {
    os << "  " << quote(q.vertices[e.source]) << " -> " << quote(q.vertices[e.target]) << " [label=" << quote(e.id) << "];\n";
  }
  os << "}\n";
  return os.str();
}

Json complex_summary(const ProjComplex& c) {
  return Json{{"lowest", c.lowest}, {"terms", terms_json(*c.algebra, c.terms)}};
}

Json minimize_json(const ProjComplex& c) {
  const auto m = homology::minimize_complex(c);
  const auto r = homology::r_invariant(m.complex), s = homology::s_invariant(m.complex);
  return Json{{"input", complex_summary(c)},
              {"output", complex_summary(m.complex)},
              {"cancellations", m.cancellations},
              {"unchanged", m.cancellations == 0},
              {"minimal", homology::is_minimal(m.complex)},
              {"length", m.length},
              {"r", r ? Json(*r) : Json(nullptr)},
              {"s", s ? Json(*s) : Json(nullptr)}};
}

// Commands.

void cmd_info(Session& s, const Options& o, Report& r) {
  const auto& a = *s.algebra();
  const algebra::Quiver q = a.quiver();
  if (o.dot) {
    r.verbatim = quiver_dot(a);
    return;
  }
  Json arrows = Json::array();
  for (const auto& e : q.arrows) {
    arrows.push_back(Json{{"id", e.id}, {"source", q.vertices[e.source]}, {"target", q.vertices[e.target]}});
  }
  Json cartan = Json::array(), projectives = Json::object();
  for (std::size_t u = 0; u < a.num_vertices(); ++u) {
    Json row = Json::array();
    for (std::size_t v = 0; v < a.num_vertices(); ++v) row.push_back(a.block(u, v).size());
    cartan.push_back(row);
    projectives[a.vertices()[u]] = row;
  }
  const DimVerdict gd = homology::global_dim(s.algebra(), s.cap());
  r.result["name"] = a.name();
  r.result["field"] = a.field().name();
  r.result["vertices"] = a.vertices();
  r.result["arrows"] = arrows;
  r.result["relations"] = a.presentation() ? a.presentation()->relations.size() : 0;
  r.result["dim"] = a.dim();
  r.result["radical_dim"] = a.radical().dim();
  r.result["directed"] = algebra::is_directed(a);
  r.result["projective_dim_vectors"] = projectives;
  r.result["gldim"] = gd.to_string();
  s.unknown_if(gd.kind == DimVerdict::Kind::Unknown);
}

void cmd_ext(Session& s, const Options& o, Report& r) {
  if (o.modules.size() != 2) throw Error(ErrorKind::InvalidArgument, "ext needs two modules");
  const Representation m = s.module(o.modules[0]), n = s.module(o.modules[1]);
  const DimVerdict pd = homology::proj_dim(m, s.cap());
  std::size_t lo = 0, hi = pd.kind == DimVerdict::Kind::Finite ? pd.value : s.cap();
  if (o.degree) lo = hi = *o.degree;
  Json dims = Json::object();
  for (std::size_t k = lo; k <= hi; ++k) dims[std::to_string(k)] = homology::ext_dim(m, n, k);
  r.result["M"] = module_json(m);
  r.result["N"] = module_json(n);
  r.result["pd_M"] = pd.to_string();
  r.result["ext_dims"] = dims;
}

void cmd_pd(Session& s, const Options& o, Report& r) {
  if (o.modules.size() != 1) throw Error(ErrorKind::InvalidArgument, "pd needs one module");
  const Representation m = s.module(o.modules[0]);
  const auto res = homology::minimal_projective_resolution(m, s.cap());
  const DimVerdict pd = homology::proj_dim(m, s.cap());
  r.result["module"] = module_json(m);
  r.result["pd"] = pd.to_string();
  r.result["status"] = res->status_string();
  const std::size_t shown = res->status == homology::ResolutionStatus::Terminated ? res->length + 1 : res->terms.size();
  r.result["terms"] = terms_json(*s.algebra(), {res->terms.begin(), res->terms.begin() + std::min(shown, res->terms.size())});
  s.unknown_if(pd.kind == DimVerdict::Kind::Unknown);
}

void cmd_gldim(Session& s, const Options&, Report& r) {
  const DimVerdict gd = homology::global_dim(s.algebra(), s.cap());
  r.result["dim"] = s.algebra()->dim();
  r.result["gldim"] = gd.to_string();
  s.unknown_if(gd.kind == DimVerdict::Kind::Unknown);
}

void cmd_tilting_check(Session& s, const Options& o, Report& r) {
  const Representation t = s.module(o.tilting);
  const auto res = s.resolution(t);
  const auto cert = o.idempotent.empty() ? tilting::check_tilting(t, s.cap()) : tilting::check_tilting(t, res, s.cap());
  r.result["T"] = module_json(t);
  r.result["tilting"] = cert.tilting;
  r.result["pd"] = cert.pd.to_string();
  r.result["ext1"] = cert.ext1;
  r.result["basic_summands"] = tilting::basic_summands(t).size();
  r.result["vertices"] = s.algebra()->num_vertices();
  if (cert.resolution) {
    r.result["T0"] = module_json(cert.resolution->t0);
    r.result["T1"] = module_json(cert.resolution->t1);
  }
  r.result["failures"] = cert.failures;
  s.unknown_if(!cert.tilting && cert.pd.kind == DimVerdict::Kind::Unknown);
}

void cmd_ell(Session& s, const Options& o, Report& r) {
  const Representation t = s.module(o.tilting);
  const auto res = s.resolution(t);
  const auto l = tilting::ell(res);
  r.result["T0"] = module_json(res.t0);
  r.result["T1"] = module_json(res.t1);
  r.result["trace_dim"] = l.trace_dim;
  r.result["ell"] = module_json(l.module);
}

void cmd_epi_check(Session& s, const Options& o, Report& r) {
  const Representation t = s.module(o.tilting);
  const auto l = tilting::ell(s.resolution(t));
  r.result["ell"] = module_json(l.module);
  if (l.module.is_zero()) {
    r.result["B"] = nullptr;
    r.result["homological_epi"] = homology::to_string(Verdict::True);
    return;
  }
  const auto epi = tilting::induced_epi(s.algebra(), l);
  const auto& b = *epi.b.algebra;
  const std::size_t rank = linalg::rank(epi.phi);
  const bool unital = tilting::is_unital_multiplicative(*s.algebra(), b, epi.phi);
  const Verdict v = unital ? tilting::is_homological_epi(s.algebra(), b, epi.phi, s.cap()) : Verdict::Unknown;
  r.result["B"] = signature_json(tilting::signature(b));
  r.result["phi_rank"] = rank;
  r.result["phi_injective"] = rank == s.algebra()->dim();
  r.result["phi_unital_multiplicative"] = unital;
  r.result["homological_epi"] = homology::to_string(v);
  s.unknown_if(v == Verdict::Unknown);
}

void cmd_recollement(Session& s, const Options& o, Report& r) {
  tilting::RecollementDatum d;
  if (!o.perpendicular.empty()) {
    d = tilting::perpendicular_epi(s.module(o.perpendicular), s.cap());
  } else {
    const Representation t = s.module(o.tilting);
    d = tilting::recollement_from_tilting(t, s.resolution(t), s.cap());
  }
  r.result = datum_json(d);
  s.unknown_if(datum_unknown(d));
}

void cmd_heredity(Session& s, const Options& o, Report& r) {
  if (o.vertices.empty()) throw Error(ErrorKind::InvalidArgument, "heredity needs --vertices");
  const auto h = tilting::heredity_check_and_recollement(s.algebra(), s.vertex_indices(o.vertices), s.cap());
  r.result["heredity"] = h.heredity();
  r.result["projective"] = h.projective;
  r.result["semisimple_corner"] = h.semisimple_corner;
  r.result["quotient"] = signature_json(tilting::signature(*h.quotient));
  r.result["corner"] = signature_json(tilting::signature(*h.corner));
  r.result["recollement"] = datum_json(h.datum);
  s.unknown_if(datum_unknown(h.datum));
}

void cmd_stratify(Session& s, const Options& o, Report& r) {
  const StratificationTree t = tilting::stratify(s.algebra(), o.order);
  if (o.dot) {
    std::ostringstream os;
    os << "digraph " << quote(s.algebra()->name()) << " {\n";
    std::size_t next = 0;
    tree_dot(t, os, next);
    os << "}\n";
    r.verbatim = os.str();
    return;
  }
  Json leaves = Json::array();
  for (const auto& l : t.leaves()) leaves.push_back(signature_json(l));
  r.result["leaf_count"] = t.leaf_count();
  r.result["leaves"] = leaves;
  r.result["tree"] = tree_json(t);
  if (o.all_orders) {
    const auto orders = tilting::legal_sink_orders(s.algebra());
    bool agree = true;
    for (const auto& ord : orders) agree = agree && tilting::compare_factor_multisets(t, tilting::stratify(s.algebra(), ord));
    r.result["sink_orders"] = orders.size();
    r.result["factor_multisets_agree"] = agree;
  }
}

void cmd_exseq_check(Session& s, const Options& o, Report& r) {
  std::vector<Representation> seq;
  Json dims = Json::array();
  for (const auto& m : o.modules) {
    seq.push_back(s.module(m));
    dims.push_back(seq.back().dims());
  }
  const auto rep = tilting::exceptional_sequence_check(seq, s.cap());
  r.result["length"] = seq.size();
  r.result["dim_vectors"] = dims;
  r.result["exceptional_sequence"] = rep.valid;
  r.result["complete"] = rep.valid && tilting::is_complete(seq, *s.algebra());
  r.result["failures"] = rep.failures;
  for (const auto& f : rep.failures) s.unknown_if(f.find("Unknown") != std::string::npos);
}

void cmd_minimize(Session& s, const Options& o, Report& r) {
  if (o.staircase.has_value() == !o.complex.empty()) {
    throw Error(ErrorKind::InvalidArgument, "minimize needs exactly one of --staircase and --complex");
  }
  const ProjComplex c =
      o.staircase ? homology::staircase(s.algebra(), *o.staircase) : complex_from_json(s.algebra(), s.file_json(o.complex));
  r.result = minimize_json(c);
}

void cmd_sgldim_probe(Session& s, const Options& o, Report& r) {
  const auto& a = *s.algebra();
  const auto rad_block = [&](std::size_t u, std::size_t v) {
    std::vector<std::size_t> out;
    for (auto i : a.block(u, v)) {
      if (!a.basis(i).word.empty()) out.push_back(i);
    }
    return out;
  };
  std::size_t best = 0, tried = 0;
  Json witness = nullptr;
  for (std::size_t u = 0; u < a.num_vertices(); ++u) {
    for (auto x : rad_block(u, u)) {
      for (std::size_t w = 0; w < a.num_vertices(); ++w) {
        for (auto y : rad_block(w, u)) {
          for (std::size_t k = 0; k < o.max_len; ++k) {
            ProjComplex c{s.algebra(), -static_cast<int>(k + 1), {}, {}, false};
            for (std::size_t i = 0; i <= k; ++i) c.terms.push_back({u});
            c.terms.push_back({w});
            for (std::size_t i = 0; i <= k; ++i) {
              homology::ProjMap d = homology::ProjMap::zero(a, {u}, {i == k ? w : u});
              d.entry[0][0] = a.basis_vector(i == k ? y : x);
              c.diffs.push_back(std::move(d));
            }
            if (!homology::is_complex(c)) break;
            ++tried;
            const auto m = homology::minimize_complex(c);
            if (m.length > best) {
              best = m.length;
              witness = Json{{"repeated", a.basis(x).label},
                             {"last", a.basis(y).label},
                             {"differentials", k + 1},
                             {"cancellations", m.cancellations},
                             {"length", m.length}};
            }
          }
        }
      }
    }
  }
  r.result["max_len"] = o.max_len;
  r.result["complexes_tried"] = tried;
  r.result["lower_bound"] = best;
  r.result["witness"] = witness;
  r.result["note"] = "lower bound on the strong global dimension only";
}

struct GoldenCheck {
  std::string fixture;
  std::string check;
  std::string expected;
  std::function<std::string()> observe;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<GoldenCheck> golden_checks(std::size_t cap, std::size_t staircases) {
  struct Expect {
    const char* name;
    std::size_t dim;
    const char* gldim;
  };
  static const Expect expect[] = {{"FX-A2", 3, "Finite(1)"},    {"FX-A3", 6, "Finite(1)"},    {"FX-KRON", 4, "Finite(1)"},
                                  {"FX-41", 9, "Finite(4)"},     {"FX-42", 7, "Infinite"},     {"FX-43", 5, "Finite(2)"},
                                  {"FX-CAN222", 13, "Finite(2)"}};
  std::vector<GoldenCheck> out;
  for (const auto& e : expect) {
    const std::string name = e.name;
    out.push_back({name, "dim", std::to_string(e.dim), [name] { return std::to_string(algebra::fixture(name)->dim()); }});
    out.push_back({name, "gldim", e.gldim, [name, cap] { return homology::global_dim(algebra::fixture(name), cap).to_string(); }});
  }
  const auto leaves = [](const std::string& name) {
    const auto t = tilting::stratify(algebra::fixture(name));
    bool ones = true;
    for (const auto& l : t.leaves()) ones = ones && l.dim == 1;
    return std::to_string(t.leaf_count()) + " leaves, all dim 1: " + yes_no(ones);
  };
  out.push_back({"FX-A2", "stratification", "2 leaves, all dim 1: yes", [leaves] { return leaves("FX-A2"); }});
  out.push_back({"FX-A3", "stratification", "3 leaves, all dim 1: yes", [leaves] { return leaves("FX-A3"); }});
  out.push_back({"FX-CAN222", "stratification", "5 leaves, all dim 1: yes", [leaves] { return leaves("FX-CAN222"); }});
  out.push_back({"FX-KRON", "dim Ext^1(S1, S2)", "2", [] {
                   const auto a = algebra::fixture("FX-KRON");
                   return std::to_string(homology::ext_dim(rep::simple(a, 0), rep::simple(a, 1), 1));
                 }});
  out.push_back({"FX-A3", "T = P1+P3+S3", "ell dim 7, trace 0, epi Certified(true), ranks 3=2+1", [cap] {
                   const auto a = algebra::fixture("FX-A3");
                   const auto t = evaluate_module(a, "P1+P3+S3");
                   const auto d = tilting::recollement_from_tilting(t, tilting::approximation_sequence(t), cap);
                   return "ell dim " + std::to_string(d.ell.module.total_dim()) + ", trace " + std::to_string(d.ell.trace_dim) +
                          ", epi " + homology::to_string(d.homological_epi) + ", ranks " + std::to_string(d.n_a) + "=" +
                          std::to_string(d.n_b) + "+" + std::to_string(d.n_c);
                 }});
  out.push_back({"FX-41", "T = P1+P2+P2/tr(P3)", "ell exceptional Certified(false), epi Certified(false)", [cap] {
                   const auto a = algebra::fixture("FX-41");
                   const auto t = evaluate_module(a, "P1+P2+P2/tr(P3)");
                   const auto l = tilting::ell(tilting::approximation_sequence(t));
                   const auto epi = tilting::induced_epi(a, l);
                   return std::string("ell exceptional ") + homology::to_string(homology::is_exceptional(l.module, cap)) +
                          ", epi " + homology::to_string(tilting::is_homological_epi(a, *epi.b.algebra, epi.phi, cap));
                 }});
  out.push_back({"FX-42", "T = A, T1 = P2", "ell = S1, epi Certified(true), pd T1 over C Infinite", [cap] {
                   const auto a = algebra::fixture("FX-42");
                   const auto d = tilting::recollement_from_tilting(rep::regular(a), tilting::idempotent_resolution(a, {1}), cap);
                   const bool s1 = rep::is_isomorphic(d.ell.module, rep::simple(a, 0));
                   return std::string("ell = ") + (s1 ? "S1" : d.ell.module.dim_vector_string()) + ", epi " +
                          homology::to_string(d.homological_epi) + ", pd T1 over C " + d.c.pd.to_string();
                 }});
  out.push_back({"FX-43", "T = P2+S2", "recollement ok, ranks 2=1+1", [cap] {
                   const auto a = algebra::fixture("FX-43");
                   const auto t = evaluate_module(a, "P2+S2");
                   const auto d = tilting::recollement_from_tilting(t, tilting::approximation_sequence(t), cap);
                   return std::string("recollement ") + (d.ok() ? "ok" : "failed") + ", ranks " + std::to_string(d.n_a) + "=" +
                          std::to_string(d.n_b) + "+" + std::to_string(d.n_c);
                 }});
  for (std::size_t m = 1; m <= staircases; ++m) {
    const std::string ms = std::to_string(m);
    out.push_back({"FX-43", "staircase " + ms, "unchanged, length " + ms + ", r 0, s " + ms, [m] {
                     const auto c = homology::staircase(algebra::fixture("FX-43"), m);
                     const auto res = homology::minimize_complex(c);
                     const auto r = homology::r_invariant(res.complex), s = homology::s_invariant(res.complex);
                     return std::string(res.cancellations == 0 ? "unchanged" : "changed") + ", length " +
                            std::to_string(res.length) + ", r " + (r ? std::to_string(*r) : "-") + ", s " +
                            (s ? std::to_string(*s) : "-");
                   }});
  }
  return out;
}

void cmd_fixtures(Session& s, const Options& o, Report& r) {
  Json list = Json::array();
  for (const auto& name : algebra::fixture_names()) {
    const auto p = algebra::fixture_presentation(name);
    list.push_back(Json{{"name", name},
                        {"vertices", p.quiver.vertices.size()},
                        {"arrows", p.quiver.arrows.size()},
                        {"relations", p.relations.size()},
                        {"dim", algebra::build_algebra(p)->dim()}});
  }
  r.result["fixtures"] = list;
  r.result["staircases"] = o.staircases;
  if (!o.materialize.empty()) {
    namespace fs = std::filesystem;
    const fs::path dir(o.materialize);
    fs::create_directories(dir);
    Json written = Json::object();
    const auto write = [&](const std::string& file, const std::string& text) {
      std::ofstream out(dir / file, std::ios::binary);
      if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + (dir / file).string() + "'");
      out << text;
      written[file] = sha256_hex(text);
    };
    for (const auto& name : algebra::fixture_names()) write(name + ".json", serialize(document_of(algebra::fixture_presentation(name))));
    const auto fx43 = algebra::fixture("FX-43");
    for (std::size_t m = 1; m <= o.staircases; ++m) {
      write("staircase-" + std::to_string(m) + ".json", complex_to_json(homology::staircase(fx43, m)).dump(2) + "\n");
    }
    r.result["materialized"] = written;
  }
  if (o.verify) {
    Json checks = Json::array();
    bool all = true;
    for (const auto& c : golden_checks(s.cap(), o.staircases)) {
      const std::string seen = c.observe();
      all = all && seen == c.expected;
      checks.push_back(Json{{"fixture", c.fixture}, {"check", c.check}, {"expected", c.expected}, {"observed", seen}, {"pass", seen == c.expected}});
    }
    r.result["checks"] = checks;
    r.result["all_passed"] = all;
    if (!all) r.exit_code = kExitInputError;
  }
}

using Command = void (*)(Session&, const Options&, Report&);

}  // namespace

Report run_command(const std::vector<std::string>& args) {
  Report report;
  report.command = args;
  Options o;
  CLI::App app{"Homological invariants, tilting data and stratifications of quiver algebras", "strathom"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Structured JSON report");
  app.add_flag("--dot", o.dot, "Graphviz output (info: quiver; stratify: tree)");
  app.add_option("--cap", o.cap, "Resolution and Ext cap (default 20, or STRATHOM_CAP)")->check(CLI::PositiveNumber);
  app.add_option("--path-cap", o.path_cap, "Path length cap for building algebras")->check(CLI::PositiveNumber);
  app.add_option("--field", o.field, "Scalar field: Q or Fp:<p>");

  std::vector<std::pair<CLI::App*, Command>> commands;
  const auto add = [&](const std::string& name, const std::string& help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name != "fixtures") sub->add_option("algebra", o.algebra, "Fixture name or presentation file")->required();
    commands.emplace_back(sub, fn);
    return sub;
  };
  const auto tilting_opts = [&](CLI::App* sub) {
    sub->add_option("--tilting", o.tilting, "Module expression for T (default A)");
    sub->add_option("--idempotent", o.idempotent, "Use 0 -> A -> A+eA -> eA -> 0 for these vertices")->delimiter(',');
  };

  add("info", "Quiver, dimensions, Cartan data and global dimension", cmd_info);
  auto* ext = add("ext", "dim Ext^k(M, N)", cmd_ext);
  ext->add_option("modules", o.modules, "M and N")->expected(2)->required();
  ext->add_option("--degree", o.degree, "Only this degree");
  add("pd", "Projective dimension and minimal resolution", cmd_pd)->add_option("modules", o.modules, "Module")->expected(1)->required();
  add("gldim", "Global dimension", cmd_gldim);
  tilting_opts(add("tilting-check", "Tilting certificate", cmd_tilting_check));
  tilting_opts(add("ell", "ell(A): T0 modulo the trace of T1", cmd_ell));
  tilting_opts(add("epi-check", "B = End(ell A) and the homological epimorphism test", cmd_epi_check));
  auto* rec = add("recollement", "Recollement datum from a tilting module or an exceptional module", cmd_recollement);
  tilting_opts(rec);
  rec->add_option("--perpendicular", o.perpendicular, "Exceptional module over a hereditary algebra");
  add("heredity", "Heredity ideal check and recollement", cmd_heredity)
      ->add_option("--vertices", o.vertices, "Vertices of e")
      ->delimiter(',')
      ->required();
  auto* strat = add("stratify", "Stratification along simple projectives", cmd_stratify);
  strat->add_option("--order", o.order, "Vertex priority")->delimiter(',');
  strat->add_flag("--all-orders", o.all_orders, "Compare factors across every legal sink order");
  add("exseq-check", "Exceptional sequence check", cmd_exseq_check)->add_option("modules", o.modules, "E1 E2 ...")->required();
  auto* mini = add("minimize", "Minimal representative of a complex of projectives", cmd_minimize);
  mini->add_option("--staircase", o.staircase, "Staircase complex with m differentials (FX-43 labels)");
  mini->add_option("--complex", o.complex, "Complex file");
  add("sgldim-probe", "Lower bound for the strong global dimension", cmd_sgldim_probe)
      ->add_option("--max-len", o.max_len, "Longest staircase pattern")
      ->check(CLI::PositiveNumber);
  auto* fx = add("fixtures", "List, materialize or verify the bundled fixtures", cmd_fixtures);
  fx->add_flag("--verify", o.verify, "Re-check dimensions, global dimensions and headline values");
  fx->add_option("--materialize", o.materialize, "Write presentation and staircase files to this directory");
  fx->add_option("--staircases", o.staircases, "Number of staircase complexes")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"strathom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    report.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    report.json = o.json;
    if (report.exit_code == kExitOk) {
      report.verbatim = out.str();
    } else {
      report.error = e.what();
    }
    return report;
  }
  report.json = o.json;

  try {
    Session session(o, report);
    for (const auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      if (o.dot && sub->get_name() != "info" && sub->get_name() != "stratify") {
        throw Error(ErrorKind::InvalidArgument, "--dot is available for info and stratify");
      }
      if (sub->get_name() != "fixtures") session.load_algebra();
      fn(session, o, report);
    }
  } catch (const std::exception& e) {
    report.error = e.what();
    report.exit_code = kExitInputError;
    report.result = Json::object();
    report.verbatim.clear();
  }
  return report;
}

}  // namespace strathom::io
