#ifndef FUNGRAPH_PARSER_HPP_
#define FUNGRAPH_PARSER_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fungraph/digraph.hpp"

namespace fungraph {

//! Syntax error with the byte offset of the offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position(position) {}
  size_t position;
};

//! Expression over the digraph semiring:
//!   expr   := term ('+' term)*
//!   term   := factor ('*'? factor)*        (juxtaposition multiplies)
//!   factor := INT | 'C' INT | '[' ints ']' | '(' expr ')'
//! A bare integer k means k disjoint one-vertex loops.
struct Expr {
  enum class Kind { constant, cycle_term, literal, add, multiply };
  Kind kind;
  long long value = 0;                  // constant, cycle_term
  std::vector<Vertex> successors;      // literal
  std::unique_ptr<Expr> lhs, rhs;      // add, multiply

  FunctionalDigraph eval() const;
  std::string str() const;
};

Expr parse(const std::string& text);

//! Convenience: parse then evaluate.
FunctionalDigraph eval(const std::string& text);

}  // namespace fungraph

#endif  // FUNGRAPH_PARSER_HPP_
