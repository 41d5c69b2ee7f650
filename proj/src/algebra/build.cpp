#include <algorithm>
#include <map>

#include "strathom/algebra/fd_algebra.hpp"

namespace strathom::algebra {

namespace {

struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using PathPoly = std::map<Word, Scalar, DegLex>;

const Word& tip(const PathPoly& f) { return f.rbegin()->first; }

Word concat(const Word& a, const Word& b, const Word& c) {
  Word out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

void add_term(PathPoly& f, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = f.find(w);
  if (it == f.end()) {
    f.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

void make_monic(PathPoly& f) {
  const Scalar inv = f.rbegin()->second.inverse();
  for (auto& [w, c] : f) c *= inv;
}

// Position of `t` inside `w`, or npos.
std::size_t find_sub(const Word& w, const Word& t) {
  if (t.size() > w.size()) return Word::size_type(-1);
  auto it = std::search(w.begin(), w.end(), t.begin(), t.end());
  return it == w.end() ? Word::size_type(-1) : static_cast<std::size_t>(it - w.begin());
}

// Full reduction of f by the monic set g.
PathPoly reduce(PathPoly f, const std::vector<PathPoly>& g, std::size_t skip = std::size_t(-1)) {
  PathPoly done;
  while (!f.empty()) {
    auto top = std::prev(f.end());
    const Word w = top->first;
    const Scalar c = top->second;
    bool reduced = false;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == skip) continue;
      const Word& t = tip(g[k]);
      const std::size_t pos = find_sub(w, t);
      if (pos == Word::size_type(-1)) continue;
      const Word u(w.begin(), w.begin() + static_cast<long>(pos));
      const Word v(w.begin() + static_cast<long>(pos + t.size()), w.end());
      for (const auto& [gw, gc] : g[k]) add_term(f, concat(u, gw, v), -(c * gc));
      reduced = true;
      break;
    }
    if (!reduced) {
      done.emplace(w, c);
      f.erase(top);
    }
  }
  return done;
}

std::vector<PathPoly> interreduce(std::vector<PathPoly> g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      PathPoly r = reduce(g[i], g, i);
      if (r != g[i]) {
        changed = true;
        if (r.empty()) {
          g.erase(g.begin() + static_cast<long>(i));
        } else {
          make_monic(r);
          g[i] = std::move(r);
        }
        break;
      }
    }
  }
  std::sort(g.begin(), g.end(), [](const PathPoly& a, const PathPoly& b) { return DegLex{}(tip(a), tip(b)); });
  return g;
}

std::vector<PathPoly> groebner(std::vector<PathPoly> g, std::size_t cap) {
  g = interreduce(std::move(g));
  for (std::size_t round = 0;; ++round) {
    if (round > 4 * cap + 64) {
      throw Error(ErrorKind::NotFiniteDimensional, "Groebner completion did not stabilise within the cap");
    }
    std::vector<PathPoly> fresh;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        const Word& t1 = tip(g[i]);
        const Word& t2 = tip(g[j]);
        for (std::size_t k = 1; k < t1.size() && k < t2.size(); ++k) {
          if (!std::equal(t1.end() - static_cast<long>(k), t1.end(), t2.begin())) continue;
          const Word u(t1.begin(), t1.end() - static_cast<long>(k));
          const Word v(t2.begin() + static_cast<long>(k), t2.end());
          PathPoly s;
          for (const auto& [w, c] : g[i]) add_term(s, concat({}, w, v), c);
          for (const auto& [w, c] : g[j]) add_term(s, concat(u, w, {}), -c);
          s = reduce(std::move(s), g);
          if (s.empty()) continue;
          make_monic(s);
          if (tip(s).size() > cap) {
            throw Error(ErrorKind::NotFiniteDimensional, "relation overlap exceeds the path length cap");
          }
          s = reduce(std::move(s), fresh);
          if (!s.empty()) {
            make_monic(s);
            fresh.push_back(std::move(s));
          }
        }
      }
    }
    if (fresh.empty()) return g;
    for (auto& f : fresh) g.push_back(std::move(f));
    g = interreduce(std::move(g));
  }
}

bool ends_with_tip(const Word& w, const std::vector<PathPoly>& g) {
  for (const auto& f : g) {
    const Word& t = tip(f);
    if (t.size() <= w.size() && std::equal(t.begin(), t.end(), w.end() - static_cast<long>(t.size()))) return true;
  }
  return false;
}

}  // namespace

AlgebraPtr build_algebra(const Presentation& p, std::size_t cap) {
  if (cap < 1) throw Error(ErrorKind::InvalidArgument, "path length cap must be at least 1");
  const Quiver& q = p.quiver;
  q.validate();
  const Field f = p.field;
  const std::size_t nv = q.num_vertices();

  std::vector<PathPoly> rels;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const std::string where = "relation " + std::to_string(r + 1);
    PathPoly poly;
    std::optional<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& term : p.relations[r]) {
      if (term.coeff.field() != f) throw Error(ErrorKind::DomainMismatch, where + ": coefficient from another field");
      if (term.path.size() < 2) {
        throw Error(ErrorKind::MalformedRelation, where + ": every path must have length at least 2");
      }
      for (std::size_t i = 0; i < term.path.size(); ++i) {
        if (term.path[i] >= q.arrows.size()) throw Error(ErrorKind::MalformedRelation, where + ": unknown arrow");
        if (i > 0 && q.arrows[term.path[i - 1]].target != q.arrows[term.path[i]].source) {
          throw Error(ErrorKind::MalformedRelation, where + ": path " + word_label(q, term.path, 0) + " is not composable");
        }
      }
      const std::pair<std::size_t, std::size_t> st{q.arrows[term.path.front()].source, q.arrows[term.path.back()].target};
      if (ends && *ends != st) throw Error(ErrorKind::MalformedRelation, where + ": paths are not parallel");
      ends = st;
      add_term(poly, term.path, term.coeff);
    }
    if (!poly.empty()) {
      make_monic(poly);
      rels.push_back(std::move(poly));
    }
  }
  const std::vector<PathPoly> g = groebner(std::move(rels), cap);

  // Nontip paths, breadth first.
  FDAlgebra::Parts parts;
  parts.field = f;
  parts.name = p.name;
  parts.origin = "presentation";
  parts.vertices = q.vertices;
  parts.presentation = p;
  std::map<std::pair<std::size_t, Word>, std::size_t> index;  // (source vertex, word)
  for (std::size_t v = 0; v < nv; ++v) {
    index[{v, {}}] = parts.basis.size();
    parts.idempotents.push_back(parts.basis.size());
    parts.basis.push_back({word_label(q, {}, v), v, v, {}});
  }
  std::vector<std::size_t> frontier;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Word w{a};
    if (ends_with_tip(w, g)) continue;
    index[{q.arrows[a].source, w}] = parts.basis.size();
    frontier.push_back(parts.basis.size());
    parts.generators.push_back(parts.basis.size());
    parts.basis.push_back({word_label(q, w, 0), q.arrows[a].source, q.arrows[a].target, w});
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      const BasisElement b = parts.basis[i];
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != b.target) continue;
        Word w = b.word;
        w.push_back(a);
        if (ends_with_tip(w, g)) continue;
        if (w.size() > cap) {
          throw Error(ErrorKind::NotFiniteDimensional, "nonzero paths longer than the cap " + std::to_string(cap));
        }
        index[{b.source, w}] = parts.basis.size();
        next.push_back(parts.basis.size());
        parts.basis.push_back({word_label(q, w, 0), b.source, q.arrows[a].target, w});
      }
    }
    frontier = std::move(next);
  }
  // Arrow words double as generator words once arrows are numbered by position.
  std::vector<std::size_t> arrow_to_gen(q.arrows.size(), std::size_t(-1));
  for (std::size_t k = 0; k < parts.generators.size(); ++k) arrow_to_gen[parts.basis[parts.generators[k]].word[0]] = k;

  const std::size_t n = parts.basis.size();
  parts.table.assign(n * n, {});
  const Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    const BasisElement& bi = parts.basis[i];
    for (std::size_t j = 0; j < n; ++j) {
      const BasisElement& bj = parts.basis[j];
      if (bi.target != bj.source) continue;
      if (bi.word.empty()) {
        parts.table[i * n + j] = {{j, one}};
        continue;
      }
      if (bj.word.empty()) {
        parts.table[i * n + j] = {{i, one}};
        continue;
      }
      PathPoly prod;
      prod.emplace(concat(bi.word, bj.word, {}), one);
      const PathPoly nf = reduce(std::move(prod), g);
      SparseVec sv;
      for (const auto& [w, c] : nf) sv.emplace_back(index.at({bi.source, w}), c);
      std::sort(sv.begin(), sv.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      parts.table[i * n + j] = std::move(sv);
    }
  }
  for (auto& b : parts.basis) {
    for (auto& letter : b.word) letter = arrow_to_gen[letter];
  }

  std::vector<std::size_t> nontrivial;
  for (std::size_t i = nv; i < n; ++i) nontrivial.push_back(i);
  parts.radical = Subspace(Matrix::identity(f, n).select_rows(nontrivial));
  auto alg = std::make_shared<FDAlgebra>(std::move(parts));
  if (!is_nilpotent_ideal(*alg, alg->radical())) {
    throw Error(ErrorKind::NotFiniteDimensional, "arrow ideal is not nilpotent modulo the relations");
  }
  return alg;
}

}  // namespace strathom::algebra
