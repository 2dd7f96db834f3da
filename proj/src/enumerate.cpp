#include "fungraph/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "fungraph/algebra.hpp"
#include "fungraph/canonical.hpp"

namespace fungraph {

namespace {

// Rooted trees are carried as their bracket codes (1 <children> 0); the
// code doubles as the recipe for materializing vertices.
using TreeCode = std::vector<int>;

class TreeTable {
 public:
  // All rooted trees with `size` vertices, canonical codes, sorted.
  const std::vector<TreeCode>& of_size(int size) {
    while (static_cast<int>(by_size_.size()) <= size) grow();
    return by_size_[static_cast<size_t>(size)];
  }

 private:
  void grow() {
    const int size = static_cast<int>(by_size_.size());
    std::vector<TreeCode> trees;
    if (size == 1) {
      trees.push_back(TreeCode{1, 0});
    } else if (size > 1) {
      // A tree is a root plus a multiset of subtrees totaling size-1.
      // Subtrees are chosen with non-decreasing pool index so every
      // multiset appears exactly once.
      std::vector<std::pair<int, const TreeCode*>> pool;
      for (int s = 1; s < size; ++s) {
        for (const TreeCode& t : by_size_[static_cast<size_t>(s)]) pool.emplace_back(s, &t);
      }
      std::vector<const TreeCode*> chosen;
      auto rec = [&](auto&& self, size_t min_index, int remaining) -> void {
        if (remaining == 0) {
          std::vector<TreeCode> sorted;
          sorted.reserve(chosen.size());
          for (const TreeCode* c : chosen) sorted.push_back(*c);
          std::sort(sorted.begin(), sorted.end());
          TreeCode code{1};
          for (const TreeCode& c : sorted) code.insert(code.end(), c.begin(), c.end());
          code.push_back(0);
          trees.push_back(std::move(code));
          return;
        }
        for (size_t i = min_index; i < pool.size(); ++i) {
          if (pool[i].first > remaining) continue;
          chosen.push_back(pool[i].second);
          self(self, i, remaining - pool[i].first);
          chosen.pop_back();
        }
      };
      rec(rec, 0, size - 1);
      std::sort(trees.begin(), trees.end());
    }
    by_size_.push_back(std::move(trees));
  }

  std::vector<std::vector<TreeCode>> by_size_{{}};  // index 0: no trees
};

// Appends the vertices of the coded tree to succ; children point at their
// parent, the root temporarily at itself. Returns the root.
Vertex materialize_tree(const TreeCode& code, std::vector<Vertex>& succ) {
  size_t pos = 0;
  auto rec = [&](auto&& self, Vertex parent) -> Vertex {
    ++pos;  // opening 1
    Vertex v = static_cast<Vertex>(succ.size());
    succ.push_back(parent < 0 ? v : parent);
    while (code[pos] == 1) self(self, v);
    ++pos;  // closing 0
    return v;
  };
  return rec(rec, -1);
}

FunctionalDigraph materialize_component(const std::vector<const TreeCode*>& necklace) {
  std::vector<Vertex> succ;
  std::vector<Vertex> roots;
  roots.reserve(necklace.size());
  for (const TreeCode* t : necklace) roots.push_back(materialize_tree(*t, succ));
  const size_t len = roots.size();
  for (size_t i = 0; i < len; ++i) succ[static_cast<size_t>(roots[i])] = roots[(i + 1) % len];
  return FunctionalDigraph::from_successors(std::move(succ));
}

// Connected digraphs of the given size and cycle length: necklaces of
// rooted trees hanging on the cycle (rotation-free, direction fixed).
std::vector<FunctionalDigraph> connected_with_cycle(TreeTable& trees, int size, int cycle_len) {
  std::vector<FunctionalDigraph> out;
  if (cycle_len < 1 || cycle_len > size) return out;
  std::vector<std::pair<int, const TreeCode*>> pool;
  for (int s = 1; s <= size - cycle_len + 1; ++s) {
    for (const TreeCode& t : trees.of_size(s)) pool.emplace_back(s, &t);
  }
  auto minimal_rotation = [](const std::vector<int>& ids) {
    std::vector<int> best = ids;
    std::vector<int> rot(ids.size());
    for (size_t r = 1; r < ids.size(); ++r) {
      for (size_t k = 0; k < ids.size(); ++k) rot[k] = ids[(r + k) % ids.size()];
      if (rot < best) best = rot;
    }
    return best;
  };
  std::set<std::vector<int>> necklaces;
  std::vector<int> tree_ids;
  auto rec = [&](auto&& self, int remaining, int slots) -> void {
    if (slots == 0) {
      if (remaining != 0) return;
      if (!necklaces.insert(minimal_rotation(tree_ids)).second) return;
      std::vector<const TreeCode*> necklace;
      necklace.reserve(tree_ids.size());
      for (int id : tree_ids) necklace.push_back(pool[static_cast<size_t>(id)].second);
      out.push_back(materialize_component(necklace));
      return;
    }
    for (int id = 0; id < static_cast<int>(pool.size()); ++id) {
      const int s = pool[static_cast<size_t>(id)].first;
      if (s > remaining - (slots - 1)) continue;
      tree_ids.push_back(id);
      self(self, remaining - s, slots - 1);
      tree_ids.pop_back();
    }
  };
  rec(rec, size, cycle_len);
  return out;
}

std::vector<FunctionalDigraph> sort_canonical(std::vector<FunctionalDigraph> graphs) {
  std::vector<std::pair<CanonicalForm, FunctionalDigraph>> keyed;
  keyed.reserve(graphs.size());
  for (FunctionalDigraph& g : graphs) {
    keyed.emplace_back(canonical_form(g), canonical_representative(g));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FunctionalDigraph> out;
  out.reserve(keyed.size());
  for (auto& [form, g] : keyed) out.push_back(std::move(g));
  return out;
}

struct Level {
  std::vector<FunctionalDigraph> connected;  // canonical reps, code order
  std::vector<FunctionalDigraph> all;        // canonical reps, code order
};

// Levels are built bottom-up and cached for the lifetime of the process.
class ConstructiveCache {
 public:
  const Level& level(int size) {
    std::scoped_lock lock(mu_);
    while (static_cast<int>(levels_.size()) <= size) grow();
    return levels_[static_cast<size_t>(size)];
  }

 private:
  void grow() {
    const int size = static_cast<int>(levels_.size());
    Level level;
    if (size == 0) {
      level.all.push_back(FunctionalDigraph{});
    } else {
      std::vector<FunctionalDigraph> connected;
      for (int l = 1; l <= size; ++l) {
        auto part = connected_with_cycle(trees_, size, l);
        connected.insert(connected.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
      }
      level.connected = sort_canonical(std::move(connected));

      // Multisets of connected pieces summing to `size`.
      std::vector<std::pair<int, const FunctionalDigraph*>> pool;
      for (int s = 1; s < size; ++s) {
        for (const FunctionalDigraph& g : levels_[static_cast<size_t>(s)].connected) {
          pool.emplace_back(s, &g);
        }
      }
      for (const FunctionalDigraph& g : level.connected) pool.emplace_back(size, &g);
      std::vector<FunctionalDigraph> all;
      std::vector<const FunctionalDigraph*> chosen;
      auto rec = [&](auto&& self, size_t min_index, int remaining) -> void {
        if (remaining == 0) {
          FunctionalDigraph g;
          for (const FunctionalDigraph* c : chosen) g = sum(g, *c);
          all.push_back(std::move(g));
          return;
        }
        for (size_t i = min_index; i < pool.size(); ++i) {
          if (pool[i].first > remaining) continue;
          chosen.push_back(pool[i].second);
          self(self, i, remaining - pool[i].first);
          chosen.pop_back();
        }
      };
      rec(rec, 0, size);
      level.all = sort_canonical(std::move(all));
    }
    levels_.push_back(std::move(level));
  }

  std::mutex mu_;
  TreeTable trees_;
  std::vector<Level> levels_;
};

ConstructiveCache& constructive_cache() {
  static ConstructiveCache cache;
  return cache;
}

std::vector<FunctionalDigraph> brute_force_all(int size) {
  std::vector<FunctionalDigraph> out;
  if (size == 0) {
    out.push_back(FunctionalDigraph{});
    return out;
  }
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<Vertex> succ(static_cast<size_t>(size), 0);
  while (true) {
    FunctionalDigraph g = FunctionalDigraph::from_successors(succ);
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
    int i = size - 1;
    while (i >= 0 && succ[static_cast<size_t>(i)] == size - 1) succ[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++succ[static_cast<size_t>(i)];
  }
  return out;
}

void validate_filter(const EnumFilter& f) {
  if (f.size < 0) throw std::invalid_argument("enumeration size must be >= 0");
  if (f.cycle_len) {
    if (!f.connected_only) {
      throw std::invalid_argument("cycle_len filter requires connected_only");
    }
    if (*f.cycle_len < 1) throw std::invalid_argument("cycle_len must be >= 1");
  }
}

}  // namespace

EnumLimits& enum_limits() {
  static EnumLimits limits;
  return limits;
}

std::vector<FunctionalDigraph> all_digraphs(const EnumFilter& filter, EnumStrategy strategy) {
  validate_filter(filter);
  const int cap = strategy == EnumStrategy::constructive ? enum_limits().constructive
                                                         : enum_limits().brute_force;
  if (filter.size > cap) {
    throw std::invalid_argument("enumeration size " + std::to_string(filter.size) +
                                " exceeds the cap " + std::to_string(cap));
  }
  std::vector<FunctionalDigraph> pool;
  if (strategy == EnumStrategy::constructive) {
    const Level& level = constructive_cache().level(filter.size);
    pool = filter.connected_only ? level.connected : level.all;
  } else {
    pool = sort_canonical(brute_force_all(filter.size));
    if (filter.connected_only) {
      std::erase_if(pool, [](const FunctionalDigraph& g) { return component_count(g) != 1; });
    }
  }
  if (filter.cycle_len) {
    std::erase_if(pool, [&](const FunctionalDigraph& g) {
      return g.empty() || cyclic_part(g).lengths.front() != *filter.cycle_len ||
             cyclic_part(g).lengths.size() != 1;
    });
  }
  return pool;
}

long long count_digraphs(int n, EnumStrategy strategy) {
  return static_cast<long long>(all_digraphs(EnumFilter::of_size(n), strategy).size());
}

}  // namespace fungraph
