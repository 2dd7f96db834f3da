#include "fungraph/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fungraph/canonical.hpp"

namespace fungraph {

FunctionalDigraph sum(const FunctionalDigraph& a, const FunctionalDigraph& b) {
  std::vector<Vertex> succ;
  succ.reserve(static_cast<size_t>(a.size()) + static_cast<size_t>(b.size()));
  for (Vertex v = 0; v < a.size(); ++v) succ.push_back(a(v));
  for (Vertex v = 0; v < b.size(); ++v) succ.push_back(b(v) + a.size());
  return FunctionalDigraph::from_successors(std::move(succ));
}

FunctionalDigraph product(const FunctionalDigraph& a, const FunctionalDigraph& b) {
  const long long n = static_cast<long long>(a.size()) * b.size();
  if (n > std::numeric_limits<int>::max()) throw std::invalid_argument("product too large");
  std::vector<Vertex> succ(static_cast<size_t>(n));
  for (Vertex x = 0; x < a.size(); ++x) {
    for (Vertex y = 0; y < b.size(); ++y) {
      succ[static_cast<size_t>(x) * b.size() + y] = a(x) * b.size() + b(y);
    }
  }
  return FunctionalDigraph::from_successors(std::move(succ));
}

FunctionalDigraph scalar(int k, const FunctionalDigraph& a) {
  if (k < 0) throw std::invalid_argument("copy count must be >= 0");
  const long long n = static_cast<long long>(k) * a.size();
  if (n > std::numeric_limits<int>::max()) throw std::invalid_argument("scalar multiple too large");
  std::vector<Vertex> succ(static_cast<size_t>(n));
  for (int i = 0; i < k; ++i) {
    for (Vertex v = 0; v < a.size(); ++v) {
      succ[static_cast<size_t>(i) * a.size() + v] = i * a.size() + a(v);
    }
  }
  return FunctionalDigraph::from_successors(std::move(succ));
}

FunctionalDigraph cycle(int len) {
  if (len < 1) throw std::invalid_argument("cycle length must be >= 1");
  std::vector<Vertex> succ(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) succ[static_cast<size_t>(i)] = (i + 1) % len;
  return FunctionalDigraph::from_successors(std::move(succ));
}

SumOfCycles SumOfCycles::of(std::vector<int> lengths) {
  for (int l : lengths) {
    if (l < 1) throw std::invalid_argument("cycle length must be >= 1");
  }
  std::sort(lengths.begin(), lengths.end());
  return SumOfCycles{std::move(lengths)};
}

FunctionalDigraph SumOfCycles::to_digraph() const {
  FunctionalDigraph g;
  for (int l : lengths) g = sum(g, cycle(l));
  return g;
}

int SumOfCycles::vertex_count() const {
  return std::accumulate(lengths.begin(), lengths.end(), 0);
}

SumOfCycles cyclic_part(const FunctionalDigraph& g) {
  std::vector<bool> on_cycle = cycle_mask(g);
  std::vector<bool> seen(g.size(), false);
  std::vector<int> lengths;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!on_cycle[v] || seen[v]) continue;
    int len = 0;
    for (Vertex w = v; !seen[w]; w = g(w)) {
      seen[w] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return SumOfCycles::of(std::move(lengths));
}

SumOfCycles cycle_product(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("cycle lengths must be >= 1");
  const int g = std::gcd(a, b);
  const long long l = std::lcm(static_cast<long long>(a), b);
  if (l > std::numeric_limits<int>::max()) throw std::invalid_argument("lcm too large");
  return SumOfCycles::of(std::vector<int>(static_cast<size_t>(g), static_cast<int>(l)));
}

SumOfCycles soc_product(const SumOfCycles& a, const SumOfCycles& b) {
  std::vector<int> lengths;
  for (int x : a.lengths) {
    for (int y : b.lengths) {
      SumOfCycles pair = cycle_product(x, y);
      lengths.insert(lengths.end(), pair.lengths.begin(), pair.lengths.end());
    }
  }
  return SumOfCycles::of(std::move(lengths));
}

CycleProductSplit cycle_product_split(int n, const FunctionalDigraph& x) {
  if (n < 1) throw std::invalid_argument("cycle length must be >= 1");
  if (x.empty() || component_count(x) != 1) {
    throw std::invalid_argument("cycle_product_split needs a connected digraph");
  }
  const int l = cyclic_part(x).lengths.front();
  const int expected_count = std::gcd(n, l);
  const long long expected_cycle = std::lcm(static_cast<long long>(n), l);

  std::vector<Component> parts = components(product(cycle(n), x));
  if (static_cast<int>(parts.size()) != expected_count) {
    throw std::logic_error("cycle product split: unexpected component count");
  }
  CanonicalForm first = canonical_form(parts.front().digraph);
  for (const Component& c : parts) {
    if (c.cycle_len != expected_cycle) {
      throw std::logic_error("cycle product split: unexpected cycle length");
    }
    if (canonical_form(c.digraph) != first) {
      throw std::logic_error("cycle product split: components not isomorphic");
    }
  }
  CycleProductSplit out;
  out.component_count = expected_count;
  out.representative = parts.front().digraph;
  out.representative_cycle_len = parts.front().cycle_len;
  return out;
}

}  // namespace fungraph
