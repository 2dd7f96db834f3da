#ifndef FUNGRAPH_DIVISION_HPP_
#define FUNGRAPH_DIVISION_HPP_

#include <iosfwd>
#include <vector>

#include "fungraph/algebra.hpp"
#include "fungraph/digraph.hpp"

namespace fungraph {

//! Divisibility answers are tri-state: the search space is exponential in
//! the quotient size, so beyond the bound we report unknown, never guess.
enum class Tristate { yes, no, unknown };

std::ostream& operator<<(std::ostream& os, Tristate t);

inline constexpr int kDefaultDivisionBound = 8;

//! Every quotient of `dividend` by `divisor`, up to isomorphism.
struct QuotientSet {
  FunctionalDigraph divisor;
  FunctionalDigraph dividend;
  std::vector<FunctionalDigraph> quotients;  //!< canonical reps, pairwise non-isomorphic
  bool exhaustive = false;                   //!< false iff the size bound cut the search
  long long candidates_checked = 0;          //!< isomorphism classes examined
};

//! Searches all Y with divisor * Y isomorphic to dividend. The required
//! quotient size is |dividend| / |divisor|; when that exceeds `bound` the
//! result is empty with exhaustive = false. Sound necessary conditions
//! (size divisibility, cyclic-part compatibility) may settle the answer
//! without enumeration, in which case the result is exhaustive.
QuotientSet quotients(const FunctionalDigraph& divisor, const FunctionalDigraph& dividend,
                      int bound = kDefaultDivisionBound);

Tristate divides(const FunctionalDigraph& divisor, const FunctionalDigraph& dividend,
                 int bound = kDefaultDivisionBound);

//! As quotients(), but never settles the answer by the upfront
//! cyclic-part prune: when the size divides, every isomorphism class of
//! the required quotient size is enumerated and tested, so
//! candidates_checked covers the whole class space. Evidence generation
//! uses this variant.
QuotientSet scan_quotients(const FunctionalDigraph& divisor, const FunctionalDigraph& dividend,
                           int bound = kDefaultDivisionBound);

//! Whether x admits no factorization into two factors both larger than
//! the one-vertex loop.
Tristate is_irreducible(const FunctionalDigraph& x, int bound = kDefaultDivisionBound);

//! Exact divisibility in the sum-of-cycles semiring: is there a multiset q
//! with soc_product(divisor, q) == dividend?
bool soc_divides(const SumOfCycles& divisor, const SumOfCycles& dividend);

}  // namespace fungraph

#endif  // FUNGRAPH_DIVISION_HPP_
