#ifndef FUNGRAPH_DIGRAPH_HPP_
#define FUNGRAPH_DIGRAPH_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fungraph {

using Vertex = int;

//! A finite digraph in which every vertex has exactly one out-neighbor,
//! i.e. an endofunction on {0, ..., n-1}. Immutable after construction;
//! the empty digraph (n = 0) is a valid value and is the additive identity.
class FunctionalDigraph {
 public:
  FunctionalDigraph() = default;

  //! Builds a digraph from a successor list. Throws std::invalid_argument
  //! if any entry is outside [0, size).
  static FunctionalDigraph from_successors(std::vector<Vertex> succ);

  int size() const noexcept { return static_cast<int>(succ_.size()); }
  bool empty() const noexcept { return succ_.empty(); }

  //! Successor of v (the unique out-neighbor).
  Vertex operator()(Vertex v) const { return succ_[static_cast<size_t>(v)]; }

  Vertex at(Vertex v) const {
    if (v < 0 || v >= size()) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range [0, " + std::to_string(size()) + ")");
    }
    return succ_[static_cast<size_t>(v)];
  }

  const std::vector<Vertex>& successors() const noexcept { return succ_; }

  bool operator==(const FunctionalDigraph&) const = default;

 private:
  std::vector<Vertex> succ_;
};

//! Renders `[s0,s1,...,s_{n-1}]`; the empty digraph renders as `[]`.
std::string to_literal(const FunctionalDigraph& g);

//! Parses the `[s0,...]` literal form. Throws std::invalid_argument on
//! malformed text or out-of-range entries.
FunctionalDigraph parse_literal(const std::string& text);

//! One connected component of a functional digraph. Every component
//! contains exactly one cycle; removing the cycle edges leaves rooted
//! trees hanging from the cycle vertices.
struct Component {
  FunctionalDigraph digraph;    //!< the component relabeled to {0..k-1}
  int cycle_len = 0;            //!< length of its unique cycle
  std::vector<Vertex> cycle;    //!< local cycle vertices in successor order
  std::vector<Vertex> members;  //!< original vertex ids, ascending; members[i] maps to local i
};

//! Connected components in order of their smallest original vertex.
std::vector<Component> components(const FunctionalDigraph& g);

int component_count(const FunctionalDigraph& g);

//! True iff g is connected and its unique cycle is a self-loop; such a
//! digraph is a tree of trajectories converging to one fixed point.
bool is_rooted_tree(const FunctionalDigraph& g);

//! Marks the vertices lying on a cycle.
std::vector<bool> cycle_mask(const FunctionalDigraph& g);

//! k-fold application of the successor map to x. Handles large k by
//! reducing along the eventual cycle.
Vertex iterate(const FunctionalDigraph& g, Vertex x, long long k);

//! Distances to the fixed point of a rooted tree (cycle length 1).
struct HeightProfile {
  Vertex fixed_point = 0;
  std::vector<int> depth;  //!< depth[v] = distance from v to the fixed point
  int height = 0;          //!< max depth
};

//! Throws std::invalid_argument unless is_rooted_tree(g).
HeightProfile height_profile(const FunctionalDigraph& g);

//! Subdigraph of a rooted tree induced by vertices of depth <= d,
//! relabeled by ascending original vertex id.
FunctionalDigraph truncate(const FunctionalDigraph& g, int d);

}  // namespace fungraph

#endif  // FUNGRAPH_DIGRAPH_HPP_
