#ifndef FUNGRAPH_CHECKS_HPP_
#define FUNGRAPH_CHECKS_HPP_

#include <string>
#include <vector>

namespace fungraph::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  long long cases = 0;  //!< instances examined
  std::string detail;   //!< first failing instance, or empty
};

// One function per declared invariant suite. Parameters are the desk-scale
// ranges; run_all wires in the defaults.

CheckResult product_size_commutativity(int enum_size, int random_size, int random_pairs);
CheckResult associativity_distributivity(int enum_size, int random_size, int random_triples);
CheckResult cyclic_part_of_product(int max_size);
CheckResult cycle_product_formula(int max_len);
CheckResult lemma1_membership(int max_len, int max_parts);
CheckResult lemma1_bounds(int max_len, int max_parts);
CheckResult lemma1_prime_power_irreducible(const std::vector<int>& lens);
CheckResult lemma3_split(int max_size, int max_n);
CheckResult height_of_product(int max_size);

CheckResult quotients_sound(int max_dividend);
CheckResult quotients_complete(int max_dividend);
CheckResult cyclic_part_divides(int max_dividend);
CheckResult prune_soundness(int max_dividend);

CheckResult witness_small_subjects(int min_size, int max_size, int bound);
CheckResult tower_equations(int max_size);
CheckResult tower_slot_dependence(int max_size);
CheckResult tower_replace_identity(int max_size);
CheckResult phi_isomorphism(int max_size);
CheckResult tower_trajectory_classes(int max_size);
CheckResult disconnected_identity(int max_size);
CheckResult long_cycle_identity(int max_cycle, int max_size);

//! Runs every suite above. max_size > 0 overrides the main size knob of
//! each suite; the witness suites clamp it to 5 to keep runtimes sane.
std::vector<CheckResult> run_all(int max_size = 0);

}  // namespace fungraph::checks

#endif  // FUNGRAPH_CHECKS_HPP_
