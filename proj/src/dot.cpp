#include "fungraph/dot.hpp"

namespace fungraph {

std::string to_dot(const FunctionalDigraph& g, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  out += "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out += "  " + std::to_string(v) + " -> " + std::to_string(g(v)) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace fungraph
