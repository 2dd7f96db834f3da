#include "fungraph/parser.hpp"

#include <cctype>

#include "fungraph/algebra.hpp"

namespace fungraph {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return e;
  }

 private:
  Expr expr() {
    Expr e = term();
    while (true) {
      skip_ws();
      if (!accept('+')) return e;
      Expr node;
      node.kind = Expr::Kind::add;
      node.lhs = std::make_unique<Expr>(std::move(e));
      node.rhs = std::make_unique<Expr>(term());
      e = std::move(node);
    }
  }

  Expr term() {
    Expr e = factor();
    while (true) {
      skip_ws();
      bool star = accept('*');
      if (!star && !starts_factor()) return e;
      Expr node;
      node.kind = Expr::Kind::multiply;
      node.lhs = std::make_unique<Expr>(std::move(e));
      node.rhs = std::make_unique<Expr>(factor());
      e = std::move(node);
    }
  }

  Expr factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      skip_ws();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (c == '[') return literal();
    if (c == 'C') {
      ++pos_;
      const size_t at = pos_;
      const long long len = integer();
      if (len < 1) throw ParseError("cycle length must be >= 1", at);
      Expr e;
      e.kind = Expr::Kind::cycle_term;
      e.value = len;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e;
      e.kind = Expr::Kind::constant;
      e.value = integer();
      return e;
    }
    throw ParseError("expected integer, 'C', '[' or '('", pos_);
  }

  Expr literal() {
    ++pos_;  // '['
    Expr e;
    e.kind = Expr::Kind::literal;
    skip_ws();
    if (accept(']')) return e;
    while (true) {
      skip_ws();
      const size_t at = pos_;
      const long long v = integer();
      if (v > 1'000'000'000) throw ParseError("successor too large", at);
      e.successors.push_back(static_cast<Vertex>(v));
      skip_ws();
      if (accept(',')) continue;
      if (accept(']')) break;
      throw ParseError("expected ',' or ']'", pos_);
    }
    const int n = static_cast<int>(e.successors.size());
    for (Vertex s : e.successors) {
      if (s < 0 || s >= n) throw ParseError("successor out of range", pos_ - 1);
    }
    return e;
  }

  long long integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected integer", pos_);
    }
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) throw ParseError("integer too large", pos_);
      ++pos_;
    }
    return v;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '[' || c == 'C' || std::isdigit(static_cast<unsigned char>(c));
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

FunctionalDigraph Expr::eval() const {
  switch (kind) {
    case Kind::constant:
      return scalar(static_cast<int>(value), cycle(1));
    case Kind::cycle_term:
      return cycle(static_cast<int>(value));
    case Kind::literal:
      return FunctionalDigraph::from_successors(successors);
    case Kind::add:
      return sum(lhs->eval(), rhs->eval());
    case Kind::multiply:
      return product(lhs->eval(), rhs->eval());
  }
  throw std::logic_error("unreachable");
}

std::string Expr::str() const {
  switch (kind) {
    case Kind::constant:
      return std::to_string(value);
    case Kind::cycle_term:
      return "C" + std::to_string(value);
    case Kind::literal: {
      std::string out = "[";
      for (size_t i = 0; i < successors.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(successors[i]);
      }
      return out + "]";
    }
    case Kind::add:
      return lhs->str() + " + " + rhs->str();
    case Kind::multiply:
      return "(" + lhs->str() + ")*(" + rhs->str() + ")";
  }
  return "?";
}

Expr parse(const std::string& text) { return Parser(text).run(); }

FunctionalDigraph eval(const std::string& text) { return parse(text).eval(); }

}  // namespace fungraph
