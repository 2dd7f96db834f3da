#ifndef FUNGRAPH_ENUMERATE_HPP_
#define FUNGRAPH_ENUMERATE_HPP_

#include <optional>
#include <vector>

#include "fungraph/digraph.hpp"

namespace fungraph {

//! Selects which functional digraphs of a given size to generate.
struct EnumFilter {
  int size = 0;
  bool connected_only = false;
  std::optional<int> cycle_len;  //!< only valid together with connected_only

  static EnumFilter of_size(int n) { return EnumFilter{n, false, std::nullopt}; }
  static EnumFilter connected(int n, std::optional<int> cycle_len = std::nullopt) {
    return EnumFilter{n, true, cycle_len};
  }
};

//! Size caps per generation strategy; both configurable.
struct EnumLimits {
  int constructive = 9;
  int brute_force = 7;
};

EnumLimits& enum_limits();

enum class EnumStrategy {
  constructive,  //!< composes components from rooted-tree necklaces
  brute_force,   //!< scans all n^n successor maps and dedupes canonically
};

//! All functional digraphs matching the filter, exactly one canonical
//! representative per isomorphism class, sorted by canonical code.
//! Throws std::invalid_argument beyond the strategy's size cap or for an
//! inconsistent filter.
std::vector<FunctionalDigraph> all_digraphs(const EnumFilter& filter,
                                            EnumStrategy strategy = EnumStrategy::constructive);

long long count_digraphs(int n, EnumStrategy strategy = EnumStrategy::constructive);

}  // namespace fungraph

#endif  // FUNGRAPH_ENUMERATE_HPP_
