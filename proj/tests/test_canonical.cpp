#include <doctest.h>

#include <random>
#include <set>

#include "fungraph/algebra.hpp"
#include "fungraph/canonical.hpp"
#include "fungraph/enumerate.hpp"
#include "support/oracles.hpp"

using namespace fungraph;
using testsupport::brute_force_isomorphic;
using testsupport::random_permutation;
using testsupport::relabel;

TEST_CASE("codes are invariant under relabeling") {
  const auto c2 = FunctionalDigraph::from_successors({1, 0});
  CHECK(canonical_form(c2) == canonical_form(relabel(c2, {1, 0})));
  CHECK(canonical_form(sum(cycle(2), cycle(2))) == canonical_form(product(cycle(2), cycle(2))));

  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testsupport::random_digraph(1 + trial % 8, rng);
    const auto perm = random_permutation(g.size(), rng);
    CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
  }
}

TEST_CASE("size-3 endofunctions fall into exactly 7 classes") {
  // Independent scan of all 3^3 successor maps.
  std::set<CanonicalForm> codes;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        codes.insert(canonical_form(FunctionalDigraph::from_successors({a, b, c})));
      }
    }
  }
  CHECK(codes.size() == 7);
}

TEST_CASE("canonical equality agrees with the permutation oracle") {
  std::vector<FunctionalDigraph> reps;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : all_digraphs(EnumFilter::of_size(n))) reps.push_back(g);
  }
  std::mt19937 rng(99);
  for (const auto& a : reps) {
    for (const auto& b : reps) {
      const auto scrambled = relabel(b, random_permutation(b.size(), rng));
      CHECK(is_isomorphic(a, scrambled) == brute_force_isomorphic(a, scrambled));
    }
  }
}

TEST_CASE("canonical representative is idempotent and label-free") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testsupport::random_digraph(1 + trial % 7, rng);
    const auto rep = canonical_representative(g);
    CHECK(canonical_form(rep) == canonical_form(g));
    CHECK(canonical_representative(rep) == rep);
    CHECK(canonical_representative(relabel(g, random_permutation(g.size(), rng))) == rep);
  }
}

TEST_CASE("check_iso_map") {
  const auto g = FunctionalDigraph::from_successors({0, 0, 1});
  IsoMap identity{{0, 1, 2}};
  CHECK(check_iso_map(g, g, identity));

  IsoMap not_injective{{0, 0, 1}};
  CHECK_FALSE(check_iso_map(g, g, not_injective));

  IsoMap wrong_size{{0, 1}};
  CHECK_FALSE(check_iso_map(g, g, wrong_size));

  // A bijection that does not commute with the successor maps.
  const auto h = FunctionalDigraph::from_successors({0, 0, 0});
  IsoMap swap{{0, 1, 2}};
  CHECK_FALSE(check_iso_map(g, h, swap));

  // A genuine non-identity isomorphism between two labelings of one tree.
  const auto left = FunctionalDigraph::from_successors({0, 0, 1});
  const auto right = FunctionalDigraph::from_successors({1, 1, 0});
  IsoMap m{{1, 0, 2}};
  CHECK(check_iso_map(left, right, m));
}
