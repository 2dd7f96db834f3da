#include "fungraph/division.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "fungraph/canonical.hpp"
#include "fungraph/enumerate.hpp"

namespace fungraph {

std::ostream& operator<<(std::ostream& os, Tristate t) {
  switch (t) {
    case Tristate::yes: return os << "yes";
    case Tristate::no: return os << "no";
    case Tristate::unknown: return os << "unknown";
  }
  return os;
}

namespace {

// Backtracking over candidate cycle lengths, largest first. Choosing one
// copy of length q consumes gcd(x,q) cycles of length lcm(x,q) for every
// x in the divisor.
bool soc_divides_rec(const std::vector<int>& divisor, std::map<int, int>& remaining,
                     const std::vector<int>& domain, size_t from, int vertex_budget) {
  if (vertex_budget == 0) {
    for (const auto& [len, count] : remaining) {
      if (count != 0) return false;
    }
    return true;
  }
  for (size_t i = from; i < domain.size(); ++i) {
    const int q = domain[i];
    if (q > vertex_budget) continue;
    // Tentatively consume the row generated by one copy of cycle(q),
    // recording exactly what was taken so rollback is precise.
    std::vector<std::pair<int, int>> consumed;
    consumed.reserve(divisor.size());
    bool ok = true;
    for (int x : divisor) {
      const int g = std::gcd(x, q);
      const int l = static_cast<int>(std::lcm(static_cast<long long>(x), q));
      auto it = remaining.find(l);
      if (it == remaining.end() || it->second < g) {
        ok = false;
        break;
      }
      it->second -= g;
      consumed.emplace_back(l, g);
    }
    if (ok && soc_divides_rec(divisor, remaining, domain, i, vertex_budget - q)) return true;
    for (const auto& [l, g] : consumed) remaining[l] += g;
  }
  return false;
}

}  // namespace

bool soc_divides(const SumOfCycles& divisor, const SumOfCycles& dividend) {
  if (divisor.lengths.empty()) return dividend.lengths.empty();
  const int dv = divisor.vertex_count();
  const int av = dividend.vertex_count();
  if (dv == 0) return av == 0;
  if (av % dv != 0) return false;
  if (av == 0) return true;  // quotient is the empty multiset

  // Candidate quotient lengths must divide some dividend length and keep
  // every pairwise lcm inside the dividend's support.
  std::map<int, int> remaining;
  for (int l : dividend.lengths) remaining[l]++;
  std::vector<int> domain;
  for (const auto& [len, count] : remaining) {
    for (int q = 1; q <= len; ++q) {
      if (len % q != 0) continue;
      bool feasible = true;
      for (int x : divisor.lengths) {
        const long long l = std::lcm(static_cast<long long>(x), q);
        if (!remaining.count(static_cast<int>(l))) {
          feasible = false;
          break;
        }
      }
      if (feasible) domain.push_back(q);
    }
  }
  std::sort(domain.begin(), domain.end(), std::greater<>());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  return soc_divides_rec(divisor.lengths, remaining, domain, 0, av / dv);
}

namespace {

struct SearchOutcome {
  std::vector<FunctionalDigraph> found;
  bool exhaustive = false;
  long long candidates = 0;
};

SearchOutcome search_quotients(const FunctionalDigraph& divisor,
                               const FunctionalDigraph& dividend, int bound, bool early_stop,
                               bool upfront_prune = true) {
  if (divisor.empty()) throw std::invalid_argument("divisor must be non-empty");
  SearchOutcome out;
  if (divisor.size() == 1 && divisor(0) == 0) {
    // Unit divisor: the quotient is the dividend itself, whatever its size.
    out.found.push_back(canonical_representative(dividend));
    out.exhaustive = true;
    out.candidates = 1;
    return out;
  }
  if (dividend.size() % divisor.size() != 0) {
    out.exhaustive = true;  // no candidate size exists
    return out;
  }
  const int quotient_size = dividend.size() / divisor.size();
  const int cap = std::min(bound, enum_limits().constructive);
  if (quotient_size > cap) {
    out.exhaustive = false;
    return out;
  }
  const SumOfCycles divisor_cycles = cyclic_part(divisor);
  const SumOfCycles dividend_cycles = cyclic_part(dividend);
  if (upfront_prune && !soc_divides(divisor_cycles, dividend_cycles)) {
    out.exhaustive = true;
    return out;
  }
  const CanonicalForm target = canonical_form(dividend);
  for (const FunctionalDigraph& candidate : all_digraphs(EnumFilter::of_size(quotient_size))) {
    ++out.candidates;
    // The cyclic part of the product is forced, so mismatches are cheap
    // to reject before building the product.
    if (soc_product(divisor_cycles, cyclic_part(candidate)) != dividend_cycles) continue;
    if (canonical_form(product(divisor, candidate)) == target) {
      out.found.push_back(candidate);
      if (early_stop) break;
    }
  }
  out.exhaustive = true;
  return out;
}

}  // namespace

QuotientSet quotients(const FunctionalDigraph& divisor, const FunctionalDigraph& dividend,
                      int bound) {
  SearchOutcome res = search_quotients(divisor, dividend, bound, false);
  QuotientSet qs;
  qs.divisor = divisor;
  qs.dividend = dividend;
  qs.quotients = std::move(res.found);
  qs.exhaustive = res.exhaustive;
  qs.candidates_checked = res.candidates;
  return qs;
}

Tristate divides(const FunctionalDigraph& divisor, const FunctionalDigraph& dividend, int bound) {
  SearchOutcome res = search_quotients(divisor, dividend, bound, true);
  if (!res.found.empty()) return Tristate::yes;
  return res.exhaustive ? Tristate::no : Tristate::unknown;
}

QuotientSet scan_quotients(const FunctionalDigraph& divisor, const FunctionalDigraph& dividend,
                           int bound) {
  SearchOutcome res = search_quotients(divisor, dividend, bound, false, /*upfront_prune=*/false);
  QuotientSet qs;
  qs.divisor = divisor;
  qs.dividend = dividend;
  qs.quotients = std::move(res.found);
  qs.exhaustive = res.exhaustive;
  qs.candidates_checked = res.candidates;
  return qs;
}

Tristate is_irreducible(const FunctionalDigraph& x, int bound) {
  if (x.empty()) throw std::invalid_argument("irreducibility needs a non-empty digraph");
  bool bounded = false;
  for (int s = 2; static_cast<long long>(s) * s <= x.size(); ++s) {
    if (x.size() % s != 0) continue;
    const int other = x.size() / s;
    if (s > enum_limits().constructive || other > std::min(bound, enum_limits().constructive)) {
      bounded = true;
      continue;
    }
    for (const FunctionalDigraph& a : all_digraphs(EnumFilter::of_size(s))) {
      SearchOutcome res = search_quotients(a, x, bound, true);
      if (!res.found.empty()) return Tristate::no;
      if (!res.exhaustive) bounded = true;
    }
  }
  return bounded ? Tristate::unknown : Tristate::yes;
}

}  // namespace fungraph
