#include "fungraph/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace fungraph {

FunctionalDigraph FunctionalDigraph::from_successors(std::vector<Vertex> succ) {
  const int n = static_cast<int>(succ.size());
  for (Vertex s : succ) {
    if (s < 0 || s >= n) {
      throw std::invalid_argument("successor " + std::to_string(s) +
                                  " out of range [0, " + std::to_string(n) + ")");
    }
  }
  FunctionalDigraph g;
  g.succ_ = std::move(succ);
  return g;
}

std::string to_literal(const FunctionalDigraph& g) {
  std::string out = "[";
  for (int v = 0; v < g.size(); ++v) {
    if (v > 0) out += ',';
    out += std::to_string(g(v));
  }
  out += ']';
  return out;
}

FunctionalDigraph parse_literal(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size() || text[i] != '[') throw std::invalid_argument("digraph literal must start with '['");
  ++i;
  std::vector<Vertex> succ;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("expected integer at position " + std::to_string(i));
      }
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000'000L) throw std::invalid_argument("successor value too large");
        ++i;
      }
      succ.push_back(static_cast<Vertex>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ']') { ++i; break; }
      throw std::invalid_argument("expected ',' or ']' at position " + std::to_string(i));
    }
  }
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("trailing characters after ']'");
  return FunctionalDigraph::from_successors(std::move(succ));
}

std::vector<bool> cycle_mask(const FunctionalDigraph& g) {
  const int n = g.size();
  // Peel vertices of in-degree zero; whatever survives lies on a cycle.
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v) indeg[g(v)]++;
  std::vector<Vertex> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::vector<bool> removed(n, false);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    removed[v] = true;
    Vertex w = g(v);
    if (--indeg[w] == 0) stack.push_back(w);
  }
  std::vector<bool> on_cycle(n);
  for (int v = 0; v < n; ++v) on_cycle[v] = !removed[v];
  return on_cycle;
}

std::vector<Component> components(const FunctionalDigraph& g) {
  const int n = g.size();
  std::vector<int> comp_of(n, -1);
  // Union by following successors; a component is the weakly connected piece.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (int v = 0; v < n; ++v) {
    int a = find(v), b = find(g(v));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> roots;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) roots.push_back(v);
  std::sort(roots.begin(), roots.end());
  std::vector<Component> out(roots.size());
  std::vector<int> index_of_root(n, -1);
  for (size_t i = 0; i < roots.size(); ++i) index_of_root[roots[i]] = static_cast<int>(i);
  for (int v = 0; v < n; ++v) comp_of[v] = index_of_root[find(v)];

  std::vector<bool> on_cycle = cycle_mask(g);
  for (int v = 0; v < n; ++v) out[comp_of[v]].members.push_back(v);
  for (auto& c : out) {
    std::vector<Vertex> local(n, -1);
    for (size_t i = 0; i < c.members.size(); ++i) local[c.members[i]] = static_cast<Vertex>(i);
    std::vector<Vertex> succ(c.members.size());
    for (size_t i = 0; i < c.members.size(); ++i) succ[i] = local[g(c.members[i])];
    c.digraph = FunctionalDigraph::from_successors(std::move(succ));
    // Trace the cycle from the smallest cyclic member.
    Vertex start = -1;
    for (Vertex m : c.members) {
      if (on_cycle[m]) { start = local[m]; break; }
    }
    Vertex cur = start;
    do {
      c.cycle.push_back(cur);
      cur = c.digraph(cur);
    } while (cur != start);
    c.cycle_len = static_cast<int>(c.cycle.size());
  }
  return out;
}

int component_count(const FunctionalDigraph& g) {
  const int n = g.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int count = n;
  for (int v = 0; v < n; ++v) {
    int a = find(v), b = find(g(v));
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --count;
    }
  }
  return count;
}

bool is_rooted_tree(const FunctionalDigraph& g) {
  if (g.empty()) return false;
  int fixed = 0;
  for (int v = 0; v < g.size(); ++v)
    if (g(v) == v) ++fixed;
  return fixed == 1 && component_count(g) == 1;
}

Vertex iterate(const FunctionalDigraph& g, Vertex x, long long k) {
  if (x < 0 || x >= g.size()) {
    throw std::invalid_argument("vertex " + std::to_string(x) + " out of range");
  }
  if (k < 0) throw std::invalid_argument("iteration count must be >= 0");
  const int n = g.size();
  long long walked = 0;
  while (k > 0 && walked < n) {
    x = g(x);
    --k;
    ++walked;
  }
  if (k == 0) return x;
  // x is now on its cycle; reduce the remainder modulo the cycle length.
  int len = 1;
  for (Vertex v = g(x); v != x; v = g(v)) ++len;
  k %= len;
  while (k-- > 0) x = g(x);
  return x;
}

HeightProfile height_profile(const FunctionalDigraph& g) {
  if (!is_rooted_tree(g)) {
    throw std::invalid_argument("digraph is not connected with a unique fixed point");
  }
  HeightProfile p;
  const int n = g.size();
  for (int v = 0; v < n; ++v)
    if (g(v) == v) p.fixed_point = v;
  p.depth.assign(n, -1);
  p.depth[p.fixed_point] = 0;
  for (int v = 0; v < n; ++v) {
    if (p.depth[v] >= 0) continue;
    // Walk to the first vertex of known depth, then backfill.
    std::vector<Vertex> path;
    Vertex cur = v;
    while (p.depth[cur] < 0) {
      path.push_back(cur);
      cur = g(cur);
    }
    int d = p.depth[cur];
    for (auto it = path.rbegin(); it != path.rend(); ++it) p.depth[*it] = ++d;
  }
  p.height = *std::max_element(p.depth.begin(), p.depth.end());
  return p;
}

FunctionalDigraph truncate(const FunctionalDigraph& g, int d) {
  if (d < 0) throw std::invalid_argument("truncation depth must be >= 0");
  HeightProfile p = height_profile(g);
  std::vector<Vertex> keep;
  for (int v = 0; v < g.size(); ++v)
    if (p.depth[v] <= d) keep.push_back(v);
  std::vector<Vertex> local(g.size(), -1);
  for (size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  std::vector<Vertex> succ(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) succ[i] = local[g(keep[i])];
  return FunctionalDigraph::from_successors(std::move(succ));
}

}  // namespace fungraph
