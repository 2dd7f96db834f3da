#include "fungraph/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace fungraph {

namespace {

// Tree codes are balanced bracket sequences: 1 <children, sorted> 0.
// The encoding is self-delimiting, so concatenations decompose uniquely.
struct ComponentCanon {
  std::vector<int> code;        // [cycle_len] ++ rotated tree codes
  std::vector<Vertex> emitted;  // original vertices in canonical emission order
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const FunctionalDigraph& g) : g_(g), on_cycle_(cycle_mask(g)) {
    children_.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
      // Tree edges run opposite to the successor map; cycle edges are excluded.
      if (!on_cycle_[v]) children_[g(v)].push_back(v);
    }
  }

  ComponentCanon component_code(const std::vector<Vertex>& cycle_original) {
    const int len = static_cast<int>(cycle_original.size());
    std::vector<std::vector<int>> tree_codes(len);
    for (int i = 0; i < len; ++i) tree_codes[i] = tree_code(cycle_original[i]);

    // Tree codes are prefix-free, so the lexicographically least rotation
    // of the concatenation is the least rotation of the codes' rank ids.
    std::vector<std::vector<int>> sorted_codes = tree_codes;
    std::sort(sorted_codes.begin(), sorted_codes.end());
    sorted_codes.erase(std::unique(sorted_codes.begin(), sorted_codes.end()),
                       sorted_codes.end());
    std::vector<int> ids(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
      ids[static_cast<size_t>(i)] = static_cast<int>(
          std::lower_bound(sorted_codes.begin(), sorted_codes.end(), tree_codes[i]) -
          sorted_codes.begin());
    }
    const int best = least_rotation(ids);

    ComponentCanon out;
    out.code.push_back(len);
    for (int k = 0; k < len; ++k) {
      const auto& tc = tree_codes[(best + k) % len];
      out.code.insert(out.code.end(), tc.begin(), tc.end());
    }
    for (int k = 0; k < len; ++k) emit_tree(cycle_original[(best + k) % len], out.emitted);
    return out;
  }

 private:
  // Bottom-up, without recursion: vertices are handled deepest-first, each
  // parent consumes (and frees) its children's codes.
  std::vector<int> tree_code(Vertex root) {
    std::vector<Vertex> order{root};
    order.reserve(16);
    for (size_t head = 0; head < order.size(); ++head) {
      for (Vertex c : children_[order[head]]) order.push_back(c);
    }
    std::vector<std::vector<int>> codes(order.size());
    std::vector<size_t> slot(static_cast<size_t>(g_.size()));
    for (size_t i = 0; i < order.size(); ++i) slot[static_cast<size_t>(order[i])] = i;

    for (size_t i = order.size(); i-- > 0;) {
      const Vertex v = order[i];
      auto& kids = children_[v];
      // Reorder the children to match their sorted codes; equal codes are
      // automorphic, so vertex id is only a determinism tie-break for the
      // emission order.
      std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
        const auto& ca = codes[slot[static_cast<size_t>(a)]];
        const auto& cb = codes[slot[static_cast<size_t>(b)]];
        if (ca != cb) return ca < cb;
        return a < b;
      });
      std::vector<int> code{1};
      for (Vertex c : kids) {
        auto& cc = codes[slot[static_cast<size_t>(c)]];
        code.insert(code.end(), cc.begin(), cc.end());
        cc.clear();
        cc.shrink_to_fit();
      }
      code.push_back(0);
      codes[i] = std::move(code);
    }
    return std::move(codes.front());
  }

  // Booth's least-rotation index, linear in the sequence length.
  static int least_rotation(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    if (n <= 1) return 0;
    std::vector<int> failure(static_cast<size_t>(2 * n), -1);
    int best = 0;
    for (int j = 1; j < 2 * n; ++j) {
      const int sj = s[static_cast<size_t>(j % n)];
      int i = failure[static_cast<size_t>(j - best - 1)];
      while (i != -1 && sj != s[static_cast<size_t>((best + i + 1) % n)]) {
        if (sj < s[static_cast<size_t>((best + i + 1) % n)]) best = j - i - 1;
        i = failure[static_cast<size_t>(i)];
      }
      if (sj != s[static_cast<size_t>((best + i + 1) % n)]) {
        if (sj < s[static_cast<size_t>((best + i + 1) % n)]) best = j;
        failure[static_cast<size_t>(j - best)] = -1;
      } else {
        failure[static_cast<size_t>(j - best)] = i + 1;
      }
    }
    return best % n;
  }

  void emit_tree(Vertex root, std::vector<Vertex>& out) const {
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out.push_back(v);
      const auto& kids = children_[v];
      for (size_t i = kids.size(); i-- > 0;) stack.push_back(kids[i]);
    }
  }

  const FunctionalDigraph& g_;
  std::vector<bool> on_cycle_;
  std::vector<std::vector<Vertex>> children_;
};

std::pair<CanonicalForm, std::vector<Vertex>> canonicalize(const FunctionalDigraph& g) {
  Canonicalizer canon(g);
  std::vector<ComponentCanon> comps;
  for (const Component& c : components(g)) {
    std::vector<Vertex> cycle_original(c.cycle.size());
    for (size_t i = 0; i < c.cycle.size(); ++i) cycle_original[i] = c.members[c.cycle[i]];
    comps.push_back(canon.component_code(cycle_original));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const ComponentCanon& a, const ComponentCanon& b) { return a.code < b.code; });

  CanonicalForm form;
  form.code.push_back(static_cast<int>(comps.size()));
  std::vector<Vertex> emitted;
  for (const auto& c : comps) {
    form.code.push_back(static_cast<int>(c.code.size()));
    form.code.insert(form.code.end(), c.code.begin(), c.code.end());
    emitted.insert(emitted.end(), c.emitted.begin(), c.emitted.end());
  }
  return {std::move(form), std::move(emitted)};
}

}  // namespace

CanonicalForm canonical_form(const FunctionalDigraph& g) { return canonicalize(g).first; }

FunctionalDigraph canonical_representative(const FunctionalDigraph& g) {
  auto [form, emitted] = canonicalize(g);
  std::vector<Vertex> new_id(g.size());
  for (size_t j = 0; j < emitted.size(); ++j) new_id[emitted[j]] = static_cast<Vertex>(j);
  std::vector<Vertex> succ(g.size());
  for (Vertex v = 0; v < g.size(); ++v) succ[new_id[v]] = new_id[g(v)];
  return FunctionalDigraph::from_successors(std::move(succ));
}

bool is_isomorphic(const FunctionalDigraph& a, const FunctionalDigraph& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool check_iso_map(const FunctionalDigraph& a, const FunctionalDigraph& b, const IsoMap& m) {
  if (a.size() != b.size()) return false;
  if (static_cast<int>(m.forward.size()) != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Vertex v = 0; v < a.size(); ++v) {
    Vertex w = m.forward[v];
    if (w < 0 || w >= b.size() || hit[w]) return false;
    hit[w] = true;
  }
  for (Vertex v = 0; v < a.size(); ++v) {
    if (m.forward[a(v)] != b(m.forward[v])) return false;
  }
  return true;
}

}  // namespace fungraph
