#include "strathom/algebra/fixtures.hpp"

namespace strathom::algebra {

namespace {

struct Builder {
  Presentation p;

  Builder(std::string name, const Field& f, std::vector<std::string> vertices) {
    p.name = std::move(name);
    p.field = f;
    p.quiver.vertices = std::move(vertices);
  }
  Builder& arrow(const std::string& id, const std::string& s, const std::string& t) {
    p.quiver.arrows.push_back({id, *p.quiver.vertex_index(s), *p.quiver.vertex_index(t)});
    return *this;
  }
  Word word(const std::vector<std::string>& ids) const {
    Word w;
    for (const auto& id : ids) w.push_back(*p.quiver.arrow_index(id));
    return w;
  }
  Builder& relation(const std::vector<std::pair<long, std::vector<std::string>>>& terms) {
    Relation r;
    for (const auto& [c, ids] : terms) r.push_back({Scalar(p.field, c), word(ids)});
    p.relations.push_back(std::move(r));
    return *this;
  }
};

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"FX-A2", "FX-A3", "FX-KRON", "FX-41", "FX-42", "FX-43", "FX-CAN222"};
  return names;
}

Presentation fixture_presentation(const std::string& name, const Field& f) {
  if (name == "FX-A2") return Builder(name, f, {"1", "2"}).arrow("a", "1", "2").p;
  if (name == "FX-A3") return Builder(name, f, {"1", "2", "3"}).arrow("alpha", "2", "1").arrow("beta", "3", "2").p;
  if (name == "FX-KRON") return Builder(name, f, {"1", "2"}).arrow("a", "1", "2").arrow("b", "1", "2").p;
  if (name == "FX-41") {
    return Builder(name, f, {"1", "2", "3"})
        .arrow("alpha", "2", "1")
        .arrow("beta", "1", "2")
        .arrow("gamma", "3", "2")
        .arrow("delta", "2", "3")
        .relation({{1, {"gamma", "alpha"}}})
        .relation({{1, {"beta", "delta"}}})
        .relation({{1, {"alpha", "beta"}}, {-1, {"delta", "gamma"}}})
        .relation({{1, {"gamma", "delta"}}})
        .p;
  }
  if (name == "FX-42") {
    return Builder(name, f, {"1", "2"})
        .arrow("alpha", "2", "1")
        .arrow("beta", "1", "2")
        .relation({{1, {"alpha", "beta", "alpha"}}})
        .p;
  }
  if (name == "FX-43") {
    return Builder(name, f, {"1", "2"})
        .arrow("alpha", "2", "1")
        .arrow("beta", "1", "2")
        .relation({{1, {"beta", "alpha"}}})
        .p;
  }
  if (name == "FX-CAN222") {
    Builder b(name, f, {"0", "1", "2", "3", "inf"});
    for (const char* i : {"1", "2", "3"}) {
      b.arrow(std::string("a") + i, "0", i).arrow(std::string("b") + i, i, "inf");
    }
    return b.relation({{1, {"a3", "b3"}}, {-1, {"a1", "b1"}}, {-1, {"a2", "b2"}}}).p;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");
}

AlgebraPtr fixture(const std::string& name, const Field& field) {
  return build_algebra(fixture_presentation(name, field));
}

Presentation truncated_loop(std::size_t n, const Field& f) {
  Builder b("k[x]/x^" + std::to_string(n), f, {"1"});
  b.arrow("x", "1", "1");
  std::vector<std::string> w(n, "x");
  return b.relation({{1, w}}).p;
}

}  // namespace strathom::algebra
