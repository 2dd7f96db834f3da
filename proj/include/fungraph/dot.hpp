#ifndef FUNGRAPH_DOT_HPP_
#define FUNGRAPH_DOT_HPP_

#include <string>

#include "fungraph/digraph.hpp"

namespace fungraph {

//! Graphviz rendering; fixed points come out as self-arcs.
std::string to_dot(const FunctionalDigraph& g, const std::string& name = "fd");

}  // namespace fungraph

#endif  // FUNGRAPH_DOT_HPP_
