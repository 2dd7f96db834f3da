#include <doctest.h>

#include "fungraph/algebra.hpp"
#include "fungraph/canonical.hpp"
#include "fungraph/checks.hpp"
#include "fungraph/division.hpp"
#include "fungraph/enumerate.hpp"
#include "fungraph/witness.hpp"

using namespace fungraph;

namespace {

FunctionalDigraph fd(std::vector<Vertex> succ) {
  return FunctionalDigraph::from_successors(std::move(succ));
}

// Loop at 0 with vertex 1 hanging off it; the running example.
const FunctionalDigraph kTwoChain = fd({0, 0});

}  // namespace

TEST_CASE("loop_path") {
  CHECK(loop_path(1) == kTwoChain);
  CHECK(loop_path(2) == fd({0, 0, 1}));
  for (int d = 1; d <= 5; ++d) CHECK(height_profile(loop_path(d)).height == d);
  CHECK_THROWS_AS(loop_path(0), std::invalid_argument);
}

TEST_CASE("append_tail") {
  const auto extended = append_tail(kTwoChain, 1);
  CHECK(extended == fd({0, 0, 1}));
  CHECK(height_profile(extended).height == 2);
  CHECK_THROWS_AS(append_tail(kTwoChain, 0), std::invalid_argument);

  for (int n = 2; n <= 4; ++n) {
    for (const auto& x : all_digraphs(EnumFilter::connected(n, 1))) {
      const HeightProfile prof = height_profile(x);
      for (Vertex v = 0; v < x.size(); ++v) {
        if (prof.depth[v] != prof.height) continue;
        const auto ext = append_tail(x, v);
        CHECK(height_profile(ext).depth[x.size()] == prof.height + 1);
      }
    }
  }
}

TEST_CASE("tower over the two-vertex chain matches the running example") {
  const Tower t = build_tower(kTwoChain);
  CHECK(t.height == 1);
  CHECK(t.deep_vertex == 1);
  CHECK(t.tail == 2);
  CHECK(t.radices == std::vector<int>{2, 3});
  CHECK(t.graph.size() == 6);
  CHECK(t.graph == fd({2, 2, 5, 2, 2, 5}));
  CHECK(height_profile(t.graph).height == 2);

  // The fixed tuple is (deep vertex, tail).
  CHECK(t.slot_of(t.fixed_point, 1) == t.deep_vertex);
  CHECK(t.slot_of(t.fixed_point, 2) == t.tail);
  CHECK(t.graph(t.fixed_point) == t.fixed_point);

  // Truncation layer sizes strictly increase: the tail is the unique
  // deepest vertex of the extension.
  for (size_t i = 1; i < t.layers.size(); ++i) {
    CHECK(t.layers[i].size() > t.layers[i - 1].size());
  }
}

TEST_CASE("tower over the three-vertex star") {
  const Tower t = build_tower(fd({0, 0, 0}));
  CHECK(t.radices == std::vector<int>{3, 4});
  CHECK(t.graph.size() == 12);
  CHECK(height_profile(t.graph).height == 2);
}

TEST_CASE("replace_slot") {
  const Tower t = build_tower(kTwoChain);
  for (Vertex b = 0; b < t.graph.size(); ++b) {
    CHECK(t.replace_slot(b, 0, 1) == b);
    for (int slot = 1; slot <= 2; ++slot) {
      for (Vertex x : t.layers[static_cast<size_t>(slot - 1)]) {
        CHECK(t.slot_of(t.replace_slot(b, slot, x), slot) == x);
      }
    }
  }
  // Replacing slot 1 of (root, root) with the deep vertex.
  const Vertex rr = t.flat_of({0, 0});
  CHECK(t.replace_slot(rr, 1, 1) == t.flat_of({1, 0}));
  CHECK_THROWS_AS(t.replace_slot(rr, 1, 2), std::invalid_argument);  // tail not in layer 1
  CHECK_THROWS_AS(t.replace_slot(rr, 5, 0), std::invalid_argument);
}

TEST_CASE("factor_a over rooted trees") {
  const F1Witness w = build_f1_witness(kTwoChain);
  CHECK(w.factor_a.size() == 5);
  CHECK(is_isomorphic(w.factor_a, fd({0, 0, 0, 0, 0})));

  for (int n = 2; n <= 4; ++n) {
    for (const auto& x : all_digraphs(EnumFilter::connected(n, 1))) {
      const F1Witness v = build_f1_witness(x);
      CHECK(v.factor_a.size() % x.size() == 1);
      const HeightProfile prof = height_profile(v.factor_a);
      // Fixed point of factor_a is (root, 0).
      const int path_size = height_profile(x).height + 1;
      CHECK(prof.fixed_point == height_profile(x).fixed_point * path_size + 0);
    }
  }
}

TEST_CASE("cofactor sizes") {
  const F1Witness w = build_f1_witness(kTwoChain);
  CHECK(w.cofactor.size() == 15);
  CHECK(w.root_slice.size() == 3);
  CHECK(2 * 15 == 5 * 6);

  for (int n = 2; n <= 4; ++n) {
    for (const auto& x : all_digraphs(EnumFilter::connected(n, 1))) {
      const F1Witness v = build_f1_witness(x);
      const long long left = static_cast<long long>(x.size()) * v.cofactor.size();
      const long long right =
          static_cast<long long>(v.factor_a.size()) * v.tower.graph.size();
      CHECK(left == right);
      CHECK(static_cast<int>(v.root_slice.size()) == v.tower.graph.size() / x.size());
    }
  }
}

TEST_CASE("relabeling map spot checks on the running example") {
  const F1Witness w = build_f1_witness(kTwoChain);
  const Tower& t = w.tower;
  const int tower_size = t.graph.size();   // 6
  const int cof_size = w.cofactor.size();  // 15
  const int path_size = 2;                 // heights 0..1

  // Deep vertex paired with path slot 1 over the all-root tuple lands on
  // ((root,1), (deep,root)).
  const Vertex rr = t.flat_of({0, 0});
  const Vertex y1 = 1 * tower_size + rr;
  CHECK(w.iso.forward[static_cast<size_t>(1) * cof_size + y1] ==
        (0 * path_size + 1) * tower_size + t.flat_of({1, 0}));

  // The root paired with path slot 0 keeps the tower coordinate.
  for (Vertex b = 0; b < tower_size; ++b) {
    const Vertex y = 0 * tower_size + b;
    CHECK(w.iso.forward[static_cast<size_t>(0) * cof_size + y] ==
          (0 * path_size + 0) * tower_size + b);
  }

  // The deep vertex paired with a slice vertex lands on the apex.
  const size_t rank = 0;  // (root, root) is the first slice vertex
  CHECK(w.root_slice[rank] == rr);
  const Vertex y2 = path_size * tower_size + static_cast<Vertex>(rank);
  CHECK(w.iso.forward[static_cast<size_t>(1) * cof_size + y2] ==
        w.apex * tower_size + t.flat_of({1, 0}));
}

TEST_CASE("trajectory class counts") {
  CHECK(trajectory_class_count(cycle(1), 1) == 1);
  CHECK(trajectory_class_count(kTwoChain, 1) == 2);
  CHECK(trajectory_class_count(fd({2, 2, 5, 2, 2, 5}), 1) == 2);
  CHECK_THROWS_AS(trajectory_class_count(kTwoChain, 0), std::invalid_argument);
  CHECK_THROWS_AS(trajectory_class_count(cycle(2), 1), std::invalid_argument);
}

TEST_CASE("tower certificate agrees with exhaustive search") {
  const Tower t = build_tower(kTwoChain);
  const NonDivEvidence ev = tower_certificate(kTwoChain, t);
  CHECK(ev.certificate == CertificateKind::height_classes);
  CHECK(ev.subject_height == 1);
  CHECK(ev.target_height == 2);
  CHECK(ev.subject_classes == 2);
  CHECK(ev.target_classes == 2);
  const QuotientSet qs = scan_quotients(kTwoChain, t.graph);
  CHECK(qs.exhaustive);
  CHECK(qs.quotients.empty());
  CHECK(qs.candidates_checked == 7);

  const auto star = fd({0, 0, 0});
  const Tower ts = build_tower(star);
  CHECK_NOTHROW(tower_certificate(star, ts));
  const QuotientSet qs2 = scan_quotients(star, ts.graph);
  CHECK(qs2.exhaustive);
  CHECK(qs2.quotients.empty());
  CHECK(qs2.candidates_checked == 19);
}

TEST_CASE("disconnected branch") {
  const WitnessReport r = build_witness(scalar(2, cycle(1)));
  CHECK(r.branch == WitnessBranch::disconnected);
  CHECK(r.verified);
  CHECK(r.params.prime == 2);
  CHECK(is_isomorphic(r.factor_a, cycle(2)));
  CHECK(is_isomorphic(r.factor_b, sum(cycle(2), scalar(2, cycle(1)))));
  CHECK(is_isomorphic(r.cofactor, scalar(2, cycle(2))));
  CHECK(is_isomorphic(product(r.subject, r.cofactor), scalar(4, cycle(2))));

  const WitnessReport r2 = build_witness(sum(cycle(1), cycle(2)));
  CHECK(r2.params.cycle_len == 2);
  CHECK(r2.params.prime == 3);
  CHECK(is_isomorphic(r2.factor_a, cycle(3)));
  CHECK(is_isomorphic(r2.factor_b, sum(cycle(6), scalar(3, cycle(1)))));
  CHECK(is_isomorphic(r2.cofactor, scalar(3, cycle(3))));
}

TEST_CASE("long-cycle branch, prime power sub-case") {
  const WitnessReport r = build_witness(cycle(2));
  CHECK(r.branch == WitnessBranch::long_cycle);
  CHECK(r.params.prime_power_case);
  CHECK(is_isomorphic(r.factor_a, cycle(4)));
  CHECK(is_isomorphic(r.factor_b, cycle(4)));
  CHECK(is_isomorphic(r.cofactor, scalar(2, cycle(4))));
  CHECK(is_isomorphic(product(r.subject, r.cofactor), scalar(4, cycle(4))));
}

TEST_CASE("long-cycle branch, general sub-case") {
  const WitnessReport r = build_witness(cycle(6));
  CHECK(r.branch == WitnessBranch::long_cycle);
  CHECK_FALSE(r.params.prime_power_case);
  CHECK(r.params.prime == 2);
  CHECK(r.params.exponent == 1);
  CHECK(is_isomorphic(r.factor_a, cycle(2)));
  CHECK(r.factor_b.size() == 108);  // C3 times a 36-vertex piece
  CHECK(is_isomorphic(r.cofactor, cycle(36)));
  CHECK(cyclic_part(components(r.factor_b).front().digraph).lengths.front() == 36);

  const WitnessReport r2 = build_witness(fd({1, 0, 0}));
  CHECK(is_isomorphic(r2.factor_a, cycle(2)));
  CHECK(r2.factor_b.size() == 6);
  CHECK(is_isomorphic(r2.cofactor, cycle(4)));
  CHECK(r2.not_div_b.kind == EvidenceKind::exhaustive_search);
  CHECK(r2.not_div_b.candidate_size == 2);
  CHECK(r2.not_div_b.candidates_checked == 3);
}

TEST_CASE("fixed-point-tree branch reproduces the running example") {
  const WitnessReport r = build_witness(kTwoChain);
  CHECK(r.branch == WitnessBranch::fixed_point_tree);
  CHECK(r.factor_a.size() == 5);
  CHECK(r.factor_b.size() == 6);
  CHECK(r.cofactor.size() == 15);
  CHECK(r.subject.size() * r.cofactor.size() == 30);
  REQUIRE(r.iso.has_value());
  CHECK(r.not_div_a.kind == EvidenceKind::size_argument);
  CHECK(r.not_div_b.kind == EvidenceKind::exhaustive_search);
  CHECK(r.not_div_b.candidates_checked == 7);
  CHECK(r.verified);
}

TEST_CASE("witness rejects the unit and the empty digraph") {
  CHECK_THROWS_AS(build_witness(cycle(1)), std::invalid_argument);
  CHECK_THROWS_AS(build_witness(FunctionalDigraph{}), std::invalid_argument);
}

TEST_CASE("tampered reports fail verification") {
  WitnessReport r = build_witness(kTwoChain);

  WitnessReport broken = r;
  auto succ = broken.factor_b.successors();
  succ[0] = succ[0] == 0 ? 1 : 0;
  broken.factor_b = fd(std::move(succ));
  CHECK_THROWS_AS(verify_witness(broken), WitnessError);

  WitnessReport wrong_count = r;
  wrong_count.not_div_b.candidates_checked += 1;
  CHECK_THROWS_AS(verify_witness(wrong_count), WitnessError);

  // A non-injective map must be rejected.
  WitnessReport squashed_map = r;
  squashed_map.iso->forward[0] = squashed_map.iso->forward[1];
  CHECK_THROWS_AS(verify_witness(squashed_map), WitnessError);

  // Swapping the images of two structurally different vertices breaks the
  // commuting property. (Swapping automorphic twins would not.)
  WitnessReport wrong_map = r;
  std::swap(wrong_map.iso->forward[0], wrong_map.iso->forward[2]);
  CHECK_THROWS_AS(verify_witness(wrong_map), WitnessError);

  WitnessReport no_map = r;
  no_map.iso.reset();
  CHECK_THROWS_AS(verify_witness(no_map), WitnessError);
}

TEST_CASE("witness property suites at reduced scale") {
  CHECK(checks::witness_small_subjects(2, 3, 8).passed);
  CHECK(checks::tower_equations(3).passed);
  CHECK(checks::tower_slot_dependence(3).passed);
  CHECK(checks::tower_replace_identity(3).passed);
  CHECK(checks::phi_isomorphism(3).passed);
  CHECK(checks::tower_trajectory_classes(3).passed);
  CHECK(checks::disconnected_identity(4).passed);
  CHECK(checks::long_cycle_identity(3, 4).passed);
}
