#ifndef FUNGRAPH_ALGEBRA_HPP_
#define FUNGRAPH_ALGEBRA_HPP_

#include <vector>

#include "fungraph/digraph.hpp"

namespace fungraph {

//! Disjoint union; the right operand's vertices are shifted by |a|.
FunctionalDigraph sum(const FunctionalDigraph& a, const FunctionalDigraph& b);

//! Direct product: vertex pairs with componentwise successor. The pair
//! (x, y) is encoded as x*|b| + y, so results are reproducible.
FunctionalDigraph product(const FunctionalDigraph& a, const FunctionalDigraph& b);

//! k disjoint copies of a; copy i occupies [i*|a|, (i+1)*|a|).
FunctionalDigraph scalar(int k, const FunctionalDigraph& a);

//! The cycle of length len >= 1, with succ[i] = (i+1) mod len.
FunctionalDigraph cycle(int len);

//! A multiset of cycle lengths; the value of the cyclic-part operator and
//! the digraphs whose every component is a cycle.
struct SumOfCycles {
  std::vector<int> lengths;  //!< ascending, every entry >= 1

  static SumOfCycles of(std::vector<int> lengths);
  FunctionalDigraph to_digraph() const;  //!< cycles laid out in ascending length order
  int vertex_count() const;
  bool operator==(const SumOfCycles&) const = default;
};

//! The sum of the cycles contained in g (one per connected component).
SumOfCycles cyclic_part(const FunctionalDigraph& g);

//! Product of two single cycles: gcd(a,b) copies of the cycle of length lcm(a,b).
SumOfCycles cycle_product(int a, int b);

//! Distributes cycle_product over all pairs of the two multisets.
SumOfCycles soc_product(const SumOfCycles& a, const SumOfCycles& b);

//! Structure of cycle(n) * x for connected x with cycle length l: the
//! product splits into gcd(n,l) pairwise isomorphic components, each
//! connected with cycle length lcm(n,l).
struct CycleProductSplit {
  int component_count = 0;
  FunctionalDigraph representative;  //!< the component containing vertex (0,0)
  int representative_cycle_len = 0;
};

//! Computes cycle(n) * x and checks the split above; a violated check
//! throws std::logic_error (it would indicate a bug, not bad input).
//! Throws std::invalid_argument if x is not connected.
CycleProductSplit cycle_product_split(int n, const FunctionalDigraph& x);

}  // namespace fungraph

#endif  // FUNGRAPH_ALGEBRA_HPP_
