#ifndef FUNGRAPH_CANONICAL_HPP_
#define FUNGRAPH_CANONICAL_HPP_

#include <compare>
#include <cstddef>
#include <vector>

#include "fungraph/digraph.hpp"

namespace fungraph {

//! Complete isomorphism invariant: two functional digraphs have equal
//! codes iff they are isomorphic. Codes are totally ordered (lexicographic).
struct CanonicalForm {
  std::vector<int> code;
  auto operator<=>(const CanonicalForm&) const = default;
};

//! Relabeling-invariant code. Per component the hanging trees are encoded
//! bottom-up with sorted child codes, the cycle's tree-code sequence is
//! rotated to its lexicographic minimum, and component codes are sorted.
CanonicalForm canonical_form(const FunctionalDigraph& g);

//! The canonically relabeled digraph; isomorphic inputs map to the same
//! successor list.
FunctionalDigraph canonical_representative(const FunctionalDigraph& g);

bool is_isomorphic(const FunctionalDigraph& a, const FunctionalDigraph& b);

//! An explicit vertex bijection between two digraphs of equal size.
struct IsoMap {
  std::vector<Vertex> forward;  //!< forward[v in A] = image in B
};

//! True iff m is a bijection with m[A(v)] == B(m[v]) for every vertex.
bool check_iso_map(const FunctionalDigraph& a, const FunctionalDigraph& b, const IsoMap& m);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : f.code) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace fungraph

#endif  // FUNGRAPH_CANONICAL_HPP_
