#include "fungraph/checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fungraph/algebra.hpp"
#include "fungraph/canonical.hpp"
#include "fungraph/division.hpp"
#include "fungraph/enumerate.hpp"
#include "fungraph/witness.hpp"

namespace fungraph::checks {

namespace {

// All representatives of sizes lo..hi, including the empty digraph when lo == 0.
std::vector<FunctionalDigraph> pool(int lo, int hi, bool connected_only = false) {
  std::vector<FunctionalDigraph> out;
  for (int n = lo; n <= hi; ++n) {
    EnumFilter f = connected_only ? EnumFilter::connected(n) : EnumFilter::of_size(n);
    auto part = all_digraphs(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

FunctionalDigraph random_digraph(std::mt19937& rng, int max_size) {
  std::uniform_int_distribution<int> size_dist(1, max_size);
  const int n = size_dist(rng);
  std::uniform_int_distribution<Vertex> succ_dist(0, n - 1);
  std::vector<Vertex> succ(static_cast<size_t>(n));
  for (Vertex& s : succ) s = succ_dist(rng);
  return FunctionalDigraph::from_successors(std::move(succ));
}

struct Failure {
  bool failed = false;
  std::string detail;
  void note(std::string d) {
    if (!failed) {
      failed = true;
      detail = std::move(d);
    }
  }
};

CheckResult finish(std::string name, long long cases, const Failure& f) {
  return CheckResult{std::move(name), !f.failed, cases, f.detail};
}

// Multisets of cycle lengths in [1, max_len] with 1..max_parts parts.
std::vector<SumOfCycles> all_cycle_sums(int max_len, int max_parts) {
  std::vector<SumOfCycles> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int min_len) -> void {
    if (!current.empty()) out.push_back(SumOfCycles::of(current));
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int l = min_len; l <= max_len; ++l) {
      current.push_back(l);
      self(self, l);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

CheckResult product_size_commutativity(int enum_size, int random_size, int random_pairs) {
  Failure f;
  long long cases = 0;
  auto check_pair = [&](const FunctionalDigraph& a, const FunctionalDigraph& b) {
    ++cases;
    const FunctionalDigraph ab = product(a, b);
    if (ab.size() != a.size() * b.size()) {
      f.note("size of " + to_literal(a) + " * " + to_literal(b));
    } else if (canonical_form(ab) != canonical_form(product(b, a))) {
      f.note("commutativity of " + to_literal(a) + " * " + to_literal(b));
    }
  };
  const auto graphs = pool(0, enum_size);
  for (const auto& a : graphs) {
    for (const auto& b : graphs) check_pair(a, b);
  }
  std::mt19937 rng(20260810);
  for (int i = 0; i < random_pairs; ++i) {
    check_pair(random_digraph(rng, random_size), random_digraph(rng, random_size));
  }
  return finish("product-size-and-commutativity", cases, f);
}

CheckResult associativity_distributivity(int enum_size, int random_size, int random_triples) {
  Failure f;
  long long cases = 0;
  auto check_triple = [&](const FunctionalDigraph& a, const FunctionalDigraph& b,
                          const FunctionalDigraph& c) {
    ++cases;
    if (canonical_form(product(product(a, b), c)) != canonical_form(product(a, product(b, c)))) {
      f.note("associativity at " + to_literal(a) + ", " + to_literal(b) + ", " + to_literal(c));
      return;
    }
    if (canonical_form(product(a, sum(b, c))) !=
        canonical_form(sum(product(a, b), product(a, c)))) {
      f.note("distributivity at " + to_literal(a) + ", " + to_literal(b) + ", " + to_literal(c));
    }
  };
  const auto graphs = pool(0, enum_size);
  for (const auto& a : graphs) {
    for (const auto& b : graphs) {
      for (const auto& c : graphs) check_triple(a, b, c);
    }
  }
  std::mt19937 rng(77003917);
  for (int i = 0; i < random_triples; ++i) {
    check_triple(random_digraph(rng, random_size), random_digraph(rng, random_size),
                 random_digraph(rng, random_size));
  }
  return finish("product-associativity-distributivity", cases, f);
}

CheckResult cyclic_part_of_product(int max_size) {
  Failure f;
  long long cases = 0;
  const auto graphs = pool(0, max_size);
  for (const auto& a : graphs) {
    for (const auto& b : graphs) {
      ++cases;
      if (cyclic_part(product(a, b)) != soc_product(cyclic_part(a), cyclic_part(b))) {
        f.note("cyclic part of " + to_literal(a) + " * " + to_literal(b));
      }
    }
  }
  return finish("cyclic-part-of-product", cases, f);
}

CheckResult cycle_product_formula(int max_len) {
  Failure f;
  long long cases = 0;
  for (int a = 1; a <= max_len; ++a) {
    for (int b = 1; b <= max_len; ++b) {
      ++cases;
      const FunctionalDigraph direct = product(cycle(a), cycle(b));
      if (canonical_form(direct) != canonical_form(cycle_product(a, b).to_digraph())) {
        f.note("C" + std::to_string(a) + " * C" + std::to_string(b));
      }
    }
  }
  return finish("cycle-product-formula", cases, f);
}

CheckResult lemma1_membership(int max_len, int max_parts) {
  Failure f;
  long long cases = 0;
  const auto sums = all_cycle_sums(max_len, max_parts);
  for (const auto& a : sums) {
    for (const auto& b : sums) {
      ++cases;
      const SumOfCycles ab = soc_product(a, b);
      std::set<long long> reachable;
      for (int x : a.lengths) {
        for (int y : b.lengths) reachable.insert(std::lcm(static_cast<long long>(x), y));
      }
      // Every product length must be a pairwise lcm and vice versa.
      std::set<long long> present(ab.lengths.begin(), ab.lengths.end());
      if (present != reachable) {
        f.note("membership for " + to_literal(a.to_digraph()) + " * " + to_literal(b.to_digraph()));
      }
    }
  }
  return finish("lemma1-cycle-membership", cases, f);
}

CheckResult lemma1_bounds(int max_len, int max_parts) {
  Failure f;
  long long cases = 0;
  const auto sums = all_cycle_sums(max_len, max_parts);
  for (const auto& a : sums) {
    for (const auto& b : sums) {
      ++cases;
      const SumOfCycles ab = soc_product(a, b);
      const long long bound =
          static_cast<long long>(a.lengths.back()) * b.lengths.back();
      if (ab.lengths.back() > bound) {
        f.note("max-length bound for " + to_literal(a.to_digraph()) + " * " +
               to_literal(b.to_digraph()));
        continue;
      }
      if (a.lengths.size() == 1 && ab.lengths.front() < a.lengths.front()) {
        f.note("min-length bound for C" + std::to_string(a.lengths.front()));
      }
    }
  }
  return finish("lemma1-length-bounds", cases, f);
}

CheckResult lemma1_prime_power_irreducible(const std::vector<int>& lens) {
  Failure f;
  long long cases = 0;
  for (int l : lens) {
    ++cases;
    if (is_irreducible(cycle(l)) != Tristate::yes) {
      f.note("C" + std::to_string(l) + " should be irreducible");
    }
  }
  return finish("lemma1-prime-power-irreducible", cases, f);
}

CheckResult lemma3_split(int max_size, int max_n) {
  Failure f;
  long long cases = 0;
  for (const auto& x : pool(1, max_size, /*connected_only=*/true)) {
    const int ell = cyclic_part(x).lengths.front();
    for (int n = 1; n <= max_n; ++n) {
      ++cases;
      try {
        cycle_product_split(n, x);  // throws on any structural violation
      } catch (const std::logic_error& e) {
        f.note("split of C" + std::to_string(n) + " * " + to_literal(x) + ": " + e.what());
        continue;
      }
      if (ell % n == 0) {
        if (canonical_form(product(cycle(n), x)) != canonical_form(scalar(n, x))) {
          f.note("C" + std::to_string(n) + " * " + to_literal(x) + " vs " + std::to_string(n) +
                 " copies");
        }
      }
    }
  }
  return finish("lemma3-cycle-times-connected", cases, f);
}

CheckResult height_of_product(int max_size) {
  Failure f;
  long long cases = 0;
  std::vector<FunctionalDigraph> trees;
  for (int n = 1; n <= max_size; ++n) {
    auto part = all_digraphs(EnumFilter::connected(n, 1));
    trees.insert(trees.end(), part.begin(), part.end());
  }
  for (const auto& x : trees) {
    for (const auto& y : trees) {
      ++cases;
      const int expected = std::max(height_profile(x).height, height_profile(y).height);
      if (height_profile(product(x, y)).height != expected) {
        f.note("height of " + to_literal(x) + " * " + to_literal(y));
      }
    }
  }
  return finish("height-of-product", cases, f);
}

namespace {

std::vector<FunctionalDigraph> naive_quotients(const FunctionalDigraph& divisor,
                                               const FunctionalDigraph& dividend) {
  std::vector<FunctionalDigraph> out;
  if (divisor.empty() || dividend.size() % divisor.size() != 0) return out;
  const CanonicalForm target = canonical_form(dividend);
  for (const auto& y : all_digraphs(EnumFilter::of_size(dividend.size() / divisor.size()))) {
    if (canonical_form(product(divisor, y)) == target) out.push_back(y);
  }
  return out;
}

}  // namespace

CheckResult quotients_sound(int max_dividend) {
  Failure f;
  long long cases = 0;
  for (int na = 0; na <= max_dividend; ++na) {
    for (const auto& a : all_digraphs(EnumFilter::of_size(na))) {
      for (int nx = 1; nx <= std::max(na, 1); ++nx) {
        if (na % nx != 0 && na != 0) continue;
        for (const auto& x : all_digraphs(EnumFilter::of_size(nx))) {
          ++cases;
          const QuotientSet qs = quotients(x, a);
          const CanonicalForm target = canonical_form(a);
          std::set<CanonicalForm> distinct;
          for (const auto& y : qs.quotients) {
            if (canonical_form(product(x, y)) != target) {
              f.note(to_literal(x) + " -> " + to_literal(a) + ": quotient " + to_literal(y) +
                     " does not re-multiply");
            }
            if (!distinct.insert(canonical_form(y)).second) {
              f.note("duplicate quotient for " + to_literal(x) + " -> " + to_literal(a));
            }
          }
        }
      }
    }
  }
  return finish("quotients-sound", cases, f);
}

CheckResult quotients_complete(int max_dividend) {
  Failure f;
  long long cases = 0;
  for (int na = 1; na <= max_dividend; ++na) {
    for (const auto& a : all_digraphs(EnumFilter::of_size(na))) {
      for (int nx = 1; nx <= na; ++nx) {
        if (na % nx != 0) continue;
        for (const auto& x : all_digraphs(EnumFilter::of_size(nx))) {
          ++cases;
          const QuotientSet qs = quotients(x, a, /*bound=*/na);
          const auto expected = naive_quotients(x, a);
          bool same = qs.exhaustive && qs.quotients.size() == expected.size();
          for (size_t i = 0; same && i < expected.size(); ++i) {
            same = qs.quotients[i] == expected[i];
          }
          if (!same) {
            f.note("quotients(" + to_literal(x) + ", " + to_literal(a) +
                   ") disagrees with the naive scan");
          }
        }
      }
    }
  }
  return finish("quotients-complete", cases, f);
}

CheckResult cyclic_part_divides(int max_dividend) {
  Failure f;
  long long cases = 0;
  for (int na = 1; na <= max_dividend; ++na) {
    for (const auto& a : all_digraphs(EnumFilter::of_size(na))) {
      for (int nx = 1; nx <= na; ++nx) {
        if (na % nx != 0) continue;
        for (const auto& x : all_digraphs(EnumFilter::of_size(nx))) {
          if (divides(x, a, /*bound=*/na) != Tristate::yes) continue;
          ++cases;
          if (!soc_divides(cyclic_part(x), cyclic_part(a))) {
            f.note(to_literal(x) + " divides " + to_literal(a) +
                   " but the cyclic parts do not divide");
          }
        }
      }
    }
  }
  return finish("cyclic-part-divides", cases, f);
}

CheckResult prune_soundness(int max_dividend) {
  Failure f;
  long long cases = 0;
  for (int na = 1; na <= max_dividend; ++na) {
    for (const auto& a : all_digraphs(EnumFilter::of_size(na))) {
      const SumOfCycles part_a = cyclic_part(a);
      for (int nx = 1; nx <= na; ++nx) {
        if (na % nx != 0) continue;
        for (const auto& x : all_digraphs(EnumFilter::of_size(nx))) {
          const SumOfCycles part_x = cyclic_part(x);
          for (const auto& y : naive_quotients(x, a)) {
            ++cases;
            // Every true quotient must survive both necessary conditions.
            if (!soc_divides(part_x, part_a)) {
              f.note("upfront prune rejects true quotient of " + to_literal(a) + " by " +
                     to_literal(x));
            } else if (soc_product(part_x, cyclic_part(y)) != part_a) {
              f.note("candidate prune rejects true quotient " + to_literal(y));
            }
          }
        }
      }
    }
  }
  return finish("prune-soundness", cases, f);
}

CheckResult witness_small_subjects(int min_size, int max_size, int bound) {
  Failure f;
  long long cases = 0;
  for (int n = std::max(min_size, 2); n <= max_size; ++n) {
    for (const auto& x : all_digraphs(EnumFilter::of_size(n))) {
      ++cases;
      try {
        const WitnessReport r = build_witness(x, bound);
        if (!r.verified) f.note("witness for " + to_literal(x) + " not verified");
      } catch (const std::exception& e) {
        f.note("witness for " + to_literal(x) + ": " + e.what());
      }
    }
  }
  return finish("witness-small-subjects", cases, f);
}

namespace {

std::vector<FunctionalDigraph> tree_subjects(int max_size) {
  std::vector<FunctionalDigraph> out;
  for (int n = 2; n <= max_size; ++n) {
    auto part = all_digraphs(EnumFilter::connected(n, 1));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

CheckResult tower_equations(int max_size) {
  Failure f;
  long long cases = 0;
  for (const auto& x : tree_subjects(max_size)) {
    const Tower t = build_tower(x);
    const FunctionalDigraph& b = t.graph;
    const int d = t.height;
    ++cases;
    if (b(t.fixed_point) != t.fixed_point) {
      f.note("fixed tuple of " + to_literal(x) + " is not fixed");
      continue;
    }
    for (Vertex v = 0; v < b.size(); ++v) {
      Vertex cur = v;
      for (int k = 1; k <= d + 2; ++k) {
        cur = b(cur);
        for (int slot = 1; slot <= d + 1; ++slot) {
          if (k >= d - slot + 2 && t.slot_of(cur, slot) != t.slot_of(t.fixed_point, slot)) {
            f.note("slot " + std::to_string(slot) + " of " + to_literal(x) +
                   " not settled after " + std::to_string(k) + " steps");
          }
        }
      }
      const bool tail_last = t.slot_of(v, d + 1) == t.tail;
      if ((iterate(b, v, d) == t.fixed_point) != tail_last) {
        f.note("height characterization fails at vertex " + std::to_string(v) + " over " +
               to_literal(x));
      }
    }
  }
  return finish("tower-fixed-point-and-height", cases, f);
}

CheckResult tower_slot_dependence(int max_size) {
  Failure f;
  long long cases = 0;
  for (const auto& x : tree_subjects(max_size)) {
    const Tower t = build_tower(x);
    const FunctionalDigraph& b = t.graph;
    const int d = t.height;
    for (Vertex v = 0; v < b.size(); ++v) {
      for (int j = 1; j <= d + 1; ++j) {
        for (Vertex alt : t.layers[static_cast<size_t>(j - 1)]) {
          const Vertex w = t.replace_slot(v, j, alt);
          ++cases;
          if (j == 1 && b(w) != b(v)) {
            f.note("successor depends on slot 1 over " + to_literal(x));
            continue;
          }
          for (int i = 1; i <= d + 1; ++i) {
            if (i != j - 1 && t.slot_of(b(w), i) != t.slot_of(b(v), i)) {
              f.note("slot " + std::to_string(i) + " depends on slot " + std::to_string(j) +
                     " over " + to_literal(x));
            }
          }
        }
      }
    }
  }
  return finish("tower-slot-dependence", cases, f);
}

CheckResult tower_replace_identity(int max_size) {
  Failure f;
  long long cases = 0;
  for (const auto& x : tree_subjects(max_size)) {
    const Tower t = build_tower(x);
    const HeightProfile prof = height_profile(x);
    const int d = t.height;
    for (Vertex v = 0; v < t.graph.size(); ++v) {
      for (int i = 0; i <= d; ++i) {
        for (Vertex xv = 0; xv < x.size(); ++xv) {
          if (prof.depth[xv] > i) continue;
          ++cases;
          const int image_slot = std::max(i - 1, 0);
          const Vertex lhs = t.replace_slot(t.graph(v), image_slot, x(xv));
          const Vertex rhs = t.graph(t.replace_slot(v, i, xv));
          if (lhs != rhs) {
            f.note("replace identity fails over " + to_literal(x) + " at slot " +
                   std::to_string(i));
          }
        }
      }
    }
  }
  return finish("tower-replace-identity", cases, f);
}

CheckResult phi_isomorphism(int max_size) {
  Failure f;
  long long cases = 0;
  for (const auto& x : tree_subjects(max_size)) {
    ++cases;
    const F1Witness w = build_f1_witness(x);
    const FunctionalDigraph left = product(x, w.cofactor);
    const FunctionalDigraph right = product(w.factor_a, w.tower.graph);
    if (!check_iso_map(left, right, w.iso)) {
      f.note("explicit map is not an isomorphism for " + to_literal(x));
    } else if (canonical_form(left) != canonical_form(right)) {
      f.note("canonical forms differ for " + to_literal(x));
    }
  }
  return finish("phi-isomorphism", cases, f);
}

CheckResult tower_trajectory_classes(int max_size) {
  Failure f;
  long long cases = 0;
  for (const auto& x : tree_subjects(max_size)) {
    const Tower t = build_tower(x);
    const int d = t.height;
    std::vector<Vertex> slice;
    for (Vertex v = 0; v < t.graph.size(); ++v) {
      if (t.slot_of(v, d + 1) == t.tail) slice.push_back(v);
    }
    for (size_t i = 0; i < slice.size(); ++i) {
      for (size_t j = i + 1; j < slice.size(); ++j) {
        ++cases;
        const bool same_in_tower =
            iterate(t.graph, slice[i], d - 1) == iterate(t.graph, slice[j], d - 1);
        const bool same_in_subject = iterate(x, t.slot_of(slice[i], d), d - 1) ==
                                     iterate(x, t.slot_of(slice[j], d), d - 1);
        if (same_in_tower != same_in_subject) {
          f.note("trajectory classes disagree over " + to_literal(x));
        }
      }
    }
  }
  return finish("tower-trajectory-classes", cases, f);
}

CheckResult disconnected_identity(int max_size) {
  Failure f;
  long long cases = 0;
  for (int n = 2; n <= max_size; ++n) {
    for (const auto& x : all_digraphs(EnumFilter::of_size(n))) {
      const auto comps = components(x);
      if (comps.size() < 2) continue;
      ++cases;
      int ell = 0;
      for (const auto& c : comps) ell = std::max(ell, c.cycle_len);
      int p = ell + 1;
      auto is_prime = [](int m) {
        if (m < 2) return false;
        for (int q = 2; q * q <= m; ++q) {
          if (m % q == 0) return false;
        }
        return true;
      };
      while (!is_prime(p)) ++p;
      FunctionalDigraph main_part, rest;
      bool taken = false;
      for (const auto& c : comps) {
        if (!taken && c.cycle_len == ell) {
          main_part = c.digraph;
          taken = true;
        } else {
          rest = sum(rest, c.digraph);
        }
      }
      const FunctionalDigraph lhs = product(x, scalar(p, cycle(p)));
      const FunctionalDigraph rhs =
          product(cycle(p), sum(product(cycle(p), main_part), scalar(p, rest)));
      if (canonical_form(lhs) != canonical_form(rhs)) {
        f.note("identity fails for " + to_literal(x));
      }
    }
  }
  return finish("disconnected-identity", cases, f);
}

CheckResult long_cycle_identity(int max_cycle, int max_size) {
  Failure f;
  long long cases = 0;
  for (int n = 2; n <= max_size; ++n) {
    for (int ell = 2; ell <= std::min(max_cycle, n); ++ell) {
      for (const auto& x : all_digraphs(EnumFilter::connected(n, ell))) {
        ++cases;
        int p = 2;
        while (ell % p != 0) ++p;
        int prime_power = 1;
        for (int m = ell; m % p == 0; m /= p) prime_power *= p;
        const CycleProductSplit split = cycle_product_split(ell * ell, x);
        const FunctionalDigraph lhs = product(x, cycle(ell * ell));
        const FunctionalDigraph rhs =
            product(cycle(prime_power), product(cycle(ell / prime_power), split.representative));
        if (canonical_form(lhs) != canonical_form(rhs)) {
          f.note("identity fails for " + to_literal(x));
        }
      }
    }
  }
  return finish("long-cycle-identity", cases, f);
}

std::vector<CheckResult> run_all(int max_size) {
  const auto knob = [max_size](int fallback) { return max_size > 0 ? max_size : fallback; };
  const auto clamped = [max_size](int fallback, int cap) {
    return max_size > 0 ? std::min(max_size, cap) : fallback;
  };
  std::vector<CheckResult> out;
  out.push_back(product_size_commutativity(clamped(4, 5), 5, 100));
  out.push_back(associativity_distributivity(clamped(3, 4), 5, 100));
  out.push_back(cyclic_part_of_product(clamped(4, 5)));
  out.push_back(cycle_product_formula(12));
  out.push_back(lemma1_membership(6, 4));
  out.push_back(lemma1_bounds(6, 4));
  out.push_back(lemma1_prime_power_irreducible({2, 3, 4, 5, 7, 8, 9}));
  out.push_back(lemma3_split(knob(6), 6));
  out.push_back(height_of_product(clamped(5, 6)));
  out.push_back(quotients_sound(clamped(5, 6)));
  out.push_back(quotients_complete(knob(6)));
  out.push_back(cyclic_part_divides(clamped(5, 6)));
  out.push_back(prune_soundness(clamped(5, 6)));
  out.push_back(witness_small_subjects(2, clamped(4, 5), kDefaultDivisionBound));
  out.push_back(tower_equations(clamped(4, 5)));
  out.push_back(tower_slot_dependence(clamped(4, 5)));
  out.push_back(tower_replace_identity(clamped(4, 5)));
  out.push_back(phi_isomorphism(clamped(4, 5)));
  out.push_back(tower_trajectory_classes(clamped(4, 5)));
  out.push_back(disconnected_identity(clamped(5, 6)));
  out.push_back(long_cycle_identity(4, clamped(6, 6)));
  return out;
}

}  // namespace fungraph::checks
