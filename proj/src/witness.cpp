#include "fungraph/witness.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "fungraph/algebra.hpp"
#include "fungraph/enumerate.hpp"

namespace fungraph {

const char* to_string(WitnessBranch b) {
  switch (b) {
    case WitnessBranch::disconnected: return "disconnected";
    case WitnessBranch::long_cycle: return "long-cycle";
    case WitnessBranch::fixed_point_tree: return "fixed-point-tree";
  }
  return "?";
}

const char* to_string(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::size_argument: return "size-argument";
    case EvidenceKind::exhaustive_search: return "exhaustive-search";
    case EvidenceKind::certificate: return "certificate";
  }
  return "?";
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::none: return "none";
    case CertificateKind::height_classes: return "height-classes";
    case CertificateKind::irreducible_cycle: return "irreducible-cycle";
    case CertificateKind::construction: return "construction";
  }
  return "?";
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int next_prime_above(int n) {
  int p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

int smallest_prime_factor(int n) {
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

bool is_prime_power(int n) {
  if (n < 2) return false;
  const int p = smallest_prime_factor(n);
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

FunctionalDigraph loop_path(int height) {
  if (height < 1) throw std::invalid_argument("path height must be >= 1");
  std::vector<Vertex> succ(static_cast<size_t>(height) + 1);
  for (int i = 0; i <= height; ++i) succ[static_cast<size_t>(i)] = std::max(i - 1, 0);
  return FunctionalDigraph::from_successors(std::move(succ));
}

FunctionalDigraph append_tail(const FunctionalDigraph& x, Vertex deepest) {
  HeightProfile prof = height_profile(x);
  if (deepest < 0 || deepest >= x.size() || prof.depth[deepest] != prof.height) {
    throw std::invalid_argument("tail must attach to a vertex of maximal depth");
  }
  std::vector<Vertex> succ = x.successors();
  succ.push_back(deepest);
  return FunctionalDigraph::from_successors(std::move(succ));
}

std::vector<Vertex> Tower::tuple_of(Vertex flat) const {
  std::vector<Vertex> tuple(radices.size());
  for (size_t i = radices.size(); i-- > 0;) {
    tuple[i] = layers[i][static_cast<size_t>(flat % radices[i])];
    flat /= radices[i];
  }
  return tuple;
}

Vertex Tower::flat_of(const std::vector<Vertex>& tuple) const {
  Vertex flat = 0;
  for (size_t i = 0; i < radices.size(); ++i) {
    const auto& layer = layers[i];
    auto it = std::lower_bound(layer.begin(), layer.end(), tuple[i]);
    if (it == layer.end() || *it != tuple[i]) {
      throw std::invalid_argument("tuple entry outside its layer");
    }
    flat = flat * radices[i] + static_cast<Vertex>(it - layer.begin());
  }
  return flat;
}

Vertex Tower::slot_of(Vertex flat, int slot) const {
  if (slot == 0) return root;
  if (slot < 0 || slot > static_cast<int>(radices.size())) {
    throw std::invalid_argument("slot out of range");
  }
  return tuple_of(flat)[static_cast<size_t>(slot - 1)];
}

Vertex Tower::replace_slot(Vertex flat, int slot, Vertex x) const {
  if (slot == 0) return flat;
  if (slot < 0 || slot > static_cast<int>(radices.size())) {
    throw std::invalid_argument("slot out of range");
  }
  std::vector<Vertex> tuple = tuple_of(flat);
  tuple[static_cast<size_t>(slot - 1)] = x;
  return flat_of(tuple);  // throws if x is not in the slot's layer
}

Tower build_tower(const FunctionalDigraph& x, Vertex deep_vertex) {
  HeightProfile prof = height_profile(x);
  if (x.size() < 2) {
    throw std::invalid_argument("the one-vertex loop admits no tower");
  }
  Tower t;
  t.height = prof.height;
  t.deep_vertex = deep_vertex;
  t.root = prof.fixed_point;
  t.extended = append_tail(x, deep_vertex);
  t.tail = x.size();

  HeightProfile ext = height_profile(t.extended);
  const int d = t.height;
  t.layers.assign(static_cast<size_t>(d) + 1, {});
  for (int i = 1; i <= d + 1; ++i) {
    for (Vertex v = 0; v < t.extended.size(); ++v) {
      if (ext.depth[v] <= i) t.layers[static_cast<size_t>(i - 1)].push_back(v);
    }
  }
  t.radices.resize(t.layers.size());
  long long total = 1;
  for (size_t i = 0; i < t.layers.size(); ++i) {
    t.radices[i] = static_cast<int>(t.layers[i].size());
    total *= t.radices[i];
  }
  if (total > (1 << 26)) throw std::invalid_argument("tower too large to materialize");

  std::vector<Vertex> succ(static_cast<size_t>(total));
  std::vector<Vertex> tuple, image(t.layers.size());
  for (Vertex flat = 0; flat < static_cast<Vertex>(total); ++flat) {
    tuple = t.tuple_of(flat);
    for (int i = 0; i < d; ++i) image[static_cast<size_t>(i)] = t.extended(tuple[static_cast<size_t>(i + 1)]);
    image[static_cast<size_t>(d)] = t.tail;
    succ[static_cast<size_t>(flat)] = t.flat_of(image);
  }
  t.graph = FunctionalDigraph::from_successors(std::move(succ));

  std::vector<Vertex> anchor(t.layers.size());
  for (int i = 1; i <= d + 1; ++i) {
    anchor[static_cast<size_t>(i - 1)] = iterate(t.extended, t.tail, d - i + 1);
  }
  t.fixed_point = t.flat_of(anchor);
  return t;
}

Tower build_tower(const FunctionalDigraph& x) {
  HeightProfile prof = height_profile(x);
  // Deepest vertices head equal (single-vertex) hanging trees, so the
  // smallest id is a pure determinism tie-break.
  Vertex deep = -1;
  for (Vertex v = 0; v < x.size(); ++v) {
    if (prof.depth[v] == prof.height) {
      deep = v;
      break;
    }
  }
  return build_tower(x, deep);
}

F1Witness build_f1_witness(const FunctionalDigraph& x) {
  F1Witness w;
  w.subject = x;
  w.profile = height_profile(x);
  if (x.size() < 2) throw std::invalid_argument("subject must differ from the one-vertex loop");
  w.tower = build_tower(x);
  const int d = w.profile.height;
  const Vertex chi = w.profile.fixed_point;
  w.path = loop_path(d);
  const int path_size = d + 1;

  // factor_a = subject x path, plus an apex feeding (chi, d-1).
  {
    FunctionalDigraph xp = product(x, w.path);
    std::vector<Vertex> succ = xp.successors();
    w.apex = static_cast<Vertex>(succ.size());
    succ.push_back(chi * path_size + (d - 1));
    w.factor_a = FunctionalDigraph::from_successors(std::move(succ));
  }

  // cofactor = path x tower, plus the slice of tower vertices whose slot
  // `height` holds the root; each slice vertex feeds (d-1, tower(b)).
  const FunctionalDigraph& tower_graph = w.tower.graph;
  const int tower_size = tower_graph.size();
  for (Vertex b = 0; b < tower_size; ++b) {
    if (w.tower.slot_of(b, d) == chi) w.root_slice.push_back(b);
  }
  {
    FunctionalDigraph pb = product(w.path, tower_graph);
    std::vector<Vertex> succ = pb.successors();
    succ.reserve(succ.size() + w.root_slice.size());
    for (Vertex b : w.root_slice) {
      succ.push_back((d - 1) * tower_size + tower_graph(b));
    }
    w.cofactor = FunctionalDigraph::from_successors(std::move(succ));
  }

  // The relabeling subject x cofactor -> factor_a x tower.
  const int cof_size = w.cofactor.size();
  w.iso.forward.assign(static_cast<size_t>(x.size()) * cof_size, -1);
  for (Vertex xv = 0; xv < x.size(); ++xv) {
    const int dx = w.profile.depth[xv];
    for (int i = 0; i <= d; ++i) {
      for (Vertex b = 0; b < tower_size; ++b) {
        const Vertex y = i * tower_size + b;
        Vertex a_img, b_img;
        if (dx <= i) {
          a_img = w.tower.slot_of(b, i) * path_size + i;
          b_img = w.tower.replace_slot(b, i, xv);
        } else {
          a_img = xv * path_size + i;
          b_img = b;
        }
        w.iso.forward[static_cast<size_t>(xv) * cof_size + y] =
            a_img * tower_size + b_img;
      }
    }
    for (size_t k = 0; k < w.root_slice.size(); ++k) {
      const Vertex y = path_size * tower_size + static_cast<Vertex>(k);
      const Vertex b_img = w.tower.replace_slot(w.root_slice[k], d, xv);
      w.iso.forward[static_cast<size_t>(xv) * cof_size + y] =
          w.apex * tower_size + b_img;
    }
  }
  return w;
}

long long trajectory_class_count(const FunctionalDigraph& e, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  HeightProfile prof = height_profile(e);
  std::vector<bool> seen(static_cast<size_t>(e.size()), false);
  long long count = 0;
  for (Vertex v = 0; v < e.size(); ++v) {
    if (prof.depth[v] > depth) continue;
    const Vertex w = iterate(e, v, depth - 1);
    if (!seen[static_cast<size_t>(w)]) {
      seen[static_cast<size_t>(w)] = true;
      ++count;
    }
  }
  return count;
}

NonDivEvidence tower_certificate(const FunctionalDigraph& x, const Tower& tower) {
  const int d = tower.height;
  const HeightProfile tower_prof = height_profile(tower.graph);
  if (tower_prof.height != d + 1) {
    throw std::logic_error("tower height is not subject height + 1");
  }
  const long long nx = trajectory_class_count(x, d);
  const long long nb = trajectory_class_count(tower.graph, d);
  if (nx != nb) throw std::logic_error("tower trajectory classes differ from the subject's");
  NonDivEvidence ev;
  ev.kind = EvidenceKind::certificate;
  ev.certificate = CertificateKind::height_classes;
  ev.subject_size = x.size();
  ev.target_size = tower.graph.size();
  ev.subject_height = d;
  ev.target_height = d + 1;
  ev.subject_classes = nx;
  ev.target_classes = nb;
  return ev;
}

namespace {

struct BranchPieces {
  WitnessBranch branch;
  FunctionalDigraph factor_a, factor_b, cofactor;
  WitnessParams params;
  std::optional<IsoMap> iso;
  std::optional<Tower> tower;
};

BranchPieces build_disconnected(const FunctionalDigraph& x) {
  BranchPieces out;
  out.branch = WitnessBranch::disconnected;
  std::vector<Component> comps = components(x);
  int ell = 0;
  for (const Component& c : comps) ell = std::max(ell, c.cycle_len);
  FunctionalDigraph deepest_cycle_part;
  FunctionalDigraph rest;
  bool taken = false;
  for (const Component& c : comps) {
    if (!taken && c.cycle_len == ell) {
      deepest_cycle_part = c.digraph;
      taken = true;
    } else {
      rest = sum(rest, c.digraph);
    }
  }
  const int p = next_prime_above(ell);
  out.factor_a = cycle(p);
  out.factor_b = sum(product(cycle(p), deepest_cycle_part), scalar(p, rest));
  out.cofactor = scalar(p, cycle(p));
  out.params.cycle_len = ell;
  out.params.prime = p;
  return out;
}

BranchPieces build_long_cycle(const FunctionalDigraph& x, int ell) {
  BranchPieces out;
  out.branch = WitnessBranch::long_cycle;
  if (static_cast<long long>(ell) * ell > std::numeric_limits<int>::max()) {
    throw std::invalid_argument("subject cycle too long to build the witness");
  }
  const int p = smallest_prime_factor(ell);
  int exponent = 0;
  int prime_power = 1;
  for (int m = ell; m % p == 0; m /= p) {
    ++exponent;
    prime_power *= p;
  }
  out.params.cycle_len = ell;
  out.params.prime = p;
  out.params.exponent = exponent;
  if (is_isomorphic(x, cycle(prime_power))) {
    out.params.prime_power_case = true;
    const int next_power = prime_power * p;
    out.factor_a = cycle(next_power);
    out.factor_b = cycle(next_power);
    out.cofactor = scalar(p, cycle(next_power));
  } else {
    CycleProductSplit split = cycle_product_split(ell * ell, x);
    out.factor_a = cycle(prime_power);
    out.factor_b = product(cycle(ell / prime_power), split.representative);
    out.cofactor = cycle(ell * ell);
  }
  return out;
}

BranchPieces build_fixed_point_tree(const FunctionalDigraph& x) {
  BranchPieces out;
  out.branch = WitnessBranch::fixed_point_tree;
  F1Witness w = build_f1_witness(x);
  out.factor_a = w.factor_a;
  out.factor_b = w.tower.graph;
  out.cofactor = w.cofactor;
  out.iso = std::move(w.iso);
  out.params.height = w.profile.height;
  out.params.deep_vertex = w.tower.deep_vertex;
  out.params.tail = w.tower.tail;
  out.params.apex = w.apex;
  out.params.tower_fixed_point = w.tower.fixed_point;
  out.params.radices = w.tower.radices;
  out.tower = std::move(w.tower);
  return out;
}

// Rebuilds factor_b from the subject alone; used to validate construction
// certificates without trusting the report's copy.
FunctionalDigraph rebuild_factor_b(const WitnessReport& r) {
  switch (r.branch) {
    case WitnessBranch::disconnected: return build_disconnected(r.subject).factor_b;
    case WitnessBranch::long_cycle: {
      const SumOfCycles cp = cyclic_part(r.subject);
      return build_long_cycle(r.subject, cp.lengths.front()).factor_b;
    }
    case WitnessBranch::fixed_point_tree: return build_fixed_point_tree(r.subject).factor_b;
  }
  throw std::logic_error("unreachable");
}

NonDivEvidence make_evidence(const FunctionalDigraph& subject, const FunctionalDigraph& target,
                             int bound, const BranchPieces& pieces) {
  NonDivEvidence ev;
  ev.subject_size = subject.size();
  ev.target_size = target.size();
  if (target.size() % subject.size() != 0) {
    ev.kind = EvidenceKind::size_argument;
    return ev;
  }
  const int quotient_size = target.size() / subject.size();
  if (quotient_size <= std::min(bound, enum_limits().constructive)) {
    QuotientSet qs = scan_quotients(subject, target, bound);
    if (!qs.quotients.empty()) {
      throw std::logic_error("witness construction produced a divisible factor");
    }
    ev.kind = EvidenceKind::exhaustive_search;
    ev.candidate_size = quotient_size;
    ev.candidates_checked = qs.candidates_checked;
    return ev;
  }
  // Beyond the search bound: fall back to an argument.
  ev.kind = EvidenceKind::certificate;
  if (pieces.branch == WitnessBranch::fixed_point_tree) {
    if (!pieces.tower || target != pieces.tower->graph) {
      throw std::logic_error("no certificate available for this factor");
    }
    return tower_certificate(subject, *pieces.tower);
  }
  const SumOfCycles cp = cyclic_part(target);
  const bool target_is_cycle = cp.lengths.size() == 1 && cp.vertex_count() == target.size();
  if (target_is_cycle && is_prime_power(cp.lengths.front()) &&
      !is_isomorphic(subject, target)) {
    ev.certificate = CertificateKind::irreducible_cycle;
    ev.cycle_len = cp.lengths.front();
  } else {
    ev.certificate = CertificateKind::construction;
  }
  return ev;
}

void validate_evidence(const WitnessReport& r, const FunctionalDigraph& target,
                       const NonDivEvidence& ev, int bound, const char* side) {
  const FunctionalDigraph& subject = r.subject;
  auto fail = [&](const std::string& what) {
    throw WitnessError(std::string("non-divisibility evidence for factor ") + side + ": " + what);
  };
  if (ev.subject_size != subject.size() || ev.target_size != target.size()) {
    fail("recorded sizes do not match the report");
  }
  const bool divisible_size = target.size() % subject.size() == 0;
  switch (ev.kind) {
    case EvidenceKind::size_argument:
      if (divisible_size) fail("size argument does not apply");
      return;
    case EvidenceKind::exhaustive_search: {
      if (!divisible_size) fail("exhaustive-search evidence with a non-dividing size");
      const int quotient_size = target.size() / subject.size();
      if (quotient_size != ev.candidate_size) fail("recorded candidate size is wrong");
      QuotientSet qs = scan_quotients(subject, target, std::max(bound, quotient_size));
      if (!qs.exhaustive) fail("search bound too small to re-establish the evidence");
      if (qs.candidates_checked != ev.candidates_checked) {
        fail("recorded candidate count is wrong");
      }
      if (!qs.quotients.empty()) fail("a quotient exists, the subject divides this factor");
      return;
    }
    case EvidenceKind::certificate:
      break;
  }
  switch (ev.certificate) {
    case CertificateKind::height_classes: {
      const HeightProfile sp = height_profile(subject);
      const HeightProfile tp = height_profile(target);
      if (sp.height != ev.subject_height || tp.height != ev.target_height) {
        fail("recorded heights are wrong");
      }
      if (tp.height != sp.height + 1) fail("target height must exceed the subject's by one");
      const long long ns = trajectory_class_count(subject, sp.height);
      const long long nt = trajectory_class_count(target, sp.height);
      if (ns != ev.subject_classes || nt != ev.target_classes) {
        fail("recorded class counts are wrong");
      }
      if (ns != nt) fail("class counts differ, certificate is void");
      break;
    }
    case CertificateKind::irreducible_cycle: {
      if (!is_prime_power(ev.cycle_len)) fail("recorded length is not a prime power");
      if (!is_isomorphic(target, cycle(ev.cycle_len))) fail("target is not the recorded cycle");
      if (subject.size() <= 1) fail("subject is the unit");
      if (is_isomorphic(subject, target)) fail("subject equals the target cycle");
      break;
    }
    case CertificateKind::construction: {
      if (!is_isomorphic(target, rebuild_factor_b(r))) {
        fail("factor does not match its reconstruction from the subject");
      }
      break;
    }
    case CertificateKind::none:
      fail("certificate evidence without a certificate");
  }
  // Prefer the stronger check whenever the search fits the bound.
  if (divisible_size) {
    const int quotient_size = target.size() / subject.size();
    if (quotient_size <= std::min(bound, enum_limits().constructive)) {
      QuotientSet qs = quotients(subject, target, bound);
      if (!qs.quotients.empty()) fail("a quotient exists, the subject divides this factor");
    }
  }
}

}  // namespace

WitnessReport build_witness(const FunctionalDigraph& x, int bound) {
  if (x.empty()) throw std::invalid_argument("the empty digraph has no witness");
  if (x.size() == 1) {
    throw std::invalid_argument("the one-vertex loop is the unit and has no witness");
  }
  BranchPieces pieces;
  if (component_count(x) > 1) {
    pieces = build_disconnected(x);
  } else {
    const int ell = cyclic_part(x).lengths.front();
    pieces = ell > 1 ? build_long_cycle(x, ell) : build_fixed_point_tree(x);
  }
  WitnessReport r;
  r.branch = pieces.branch;
  r.subject = x;
  r.factor_a = std::move(pieces.factor_a);
  r.factor_b = std::move(pieces.factor_b);
  r.cofactor = std::move(pieces.cofactor);
  r.iso = std::move(pieces.iso);
  r.params = std::move(pieces.params);
  r.not_div_a = make_evidence(x, r.factor_a, bound, pieces);
  r.not_div_b = make_evidence(x, r.factor_b, bound, pieces);
  return verify_witness(std::move(r), bound);
}

WitnessReport verify_witness(WitnessReport report, int bound) {
  const long long lhs = static_cast<long long>(report.subject.size()) * report.cofactor.size();
  const long long rhs = static_cast<long long>(report.factor_a.size()) * report.factor_b.size();
  if (lhs != rhs) throw WitnessError("product sizes differ");
  const FunctionalDigraph left = product(report.subject, report.cofactor);
  const FunctionalDigraph right = product(report.factor_a, report.factor_b);
  if (canonical_form(left) != canonical_form(right)) {
    throw WitnessError("subject*cofactor is not isomorphic to factor_a*factor_b");
  }
  if (report.branch == WitnessBranch::fixed_point_tree && !report.iso) {
    throw WitnessError("missing explicit isomorphism map");
  }
  if (report.iso && !check_iso_map(left, right, *report.iso)) {
    throw WitnessError("explicit isomorphism map is invalid");
  }
  validate_evidence(report, report.factor_a, report.not_div_a, bound, "a");
  validate_evidence(report, report.factor_b, report.not_div_b, bound, "b");
  report.verified = true;
  return report;
}

}  // namespace fungraph
