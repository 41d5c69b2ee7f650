#include "strathom/io/expression.hpp"

#include <cctype>

#include "strathom/rep/morphism.hpp"

namespace strathom::io {

namespace {

using rep::Representation;

class Parser {
 public:
  Parser(const AlgebraPtr& a, const std::string& text) : a_(a), s_(text) {}

  Representation run() {
    Representation m = expr();
    skip();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return m;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw Error(ErrorKind::Parse, "module expression at offset " + std::to_string(i_) + ": " + what);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(const std::string& token) {
    skip();
    if (s_.compare(i_, token.size(), token) != 0) return false;
    i_ += token.size();
    return true;
  }

  void expect(const std::string& token) {
    if (!accept(token)) error("expected '" + token + "'");
  }

  static bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::size_t vertex() {
    std::string name;
    if (i_ < s_.size() && s_[i_] == '[') {
      const auto close = s_.find(']', i_);
      if (close == std::string::npos) error("unterminated vertex name");
      name = s_.substr(i_ + 1, close - i_ - 1);
      i_ = close + 1;
    } else {
      while (i_ < s_.size() && name_char(s_[i_])) name += s_[i_++];
    }
    if (name.empty()) error("expected a vertex name");
    const auto v = a_->vertex_index(name);
    if (!v) error("unknown vertex '" + name + "'");
    return *v;
  }

  std::size_t number() {
    skip();
    std::size_t n = 0, start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) n = 10 * n + (s_[i_++] - '0');
    if (i_ == start) error("expected a number");
    return n;
  }

  Representation expr() {
    std::vector<Representation> parts{term()};
    while (accept("+")) parts.push_back(term());
    return parts.size() == 1 ? parts.front() : rep::direct_sum(parts).sum;
  }

  Representation term() {
    Representation m = factor();
    if (accept("^")) m = rep::power(m, number());
    return m;
  }

  Representation factor() {
    Representation m = primary();
    while (accept("/")) {
      expect("tr");
      expect("(");
      const Representation x = expr();
      expect(")");
      m = rep::quotient_module(m, rep::trace_submodule(x, m)).module;
    }
    return m;
  }

  Representation primary() {
    skip();
    if (i_ >= s_.size()) error("unexpected end of expression");
    if (accept("rad(")) {
      const Representation m = expr();
      expect(")");
      return rep::submodule_rep(m, rep::radical_submodule(m)).module;
    }
    if (accept("top(")) {
      const Representation m = expr();
      expect(")");
      return rep::top(m).module;
    }
    if (accept("(")) {
      const Representation m = expr();
      expect(")");
      return m;
    }
    if (s_[i_] == '{') return inline_module();
    const char c = s_[i_++];
    if (c == 'P') return rep::projective(a_, vertex());
    if (c == 'S') return rep::simple(a_, vertex());
    if (c == 'A') return rep::regular(a_);
    if (c == '0') return Representation::zero(a_);
    --i_;
    error("expected a module");
  }

  Representation inline_module() {
    std::size_t depth = 0, j = i_;
    for (; j < s_.size(); ++j) {
      if (s_[j] == '{') ++depth;
      if (s_[j] == '}' && --depth == 0) break;
    }
    if (j == s_.size()) error("unterminated module object");
    const std::string body = s_.substr(i_, j + 1 - i_);
    i_ = j + 1;
    return module_from_json(a_, parse_json(body));
  }

  AlgebraPtr a_;
  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace

rep::Representation evaluate_module(const AlgebraPtr& a, const std::string& expr) { return Parser(a, expr).run(); }

}  // namespace strathom::io
