#ifndef FUNGRAPH_WITNESS_HPP_
#define FUNGRAPH_WITNESS_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "fungraph/canonical.hpp"
#include "fungraph/digraph.hpp"
#include "fungraph/division.hpp"

namespace fungraph {

//! Thrown when a witness report fails verification; the message names the
//! failing clause.
struct WitnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Which construction produced the witness.
enum class WitnessBranch {
  disconnected,      //!< subject has at least two components
  long_cycle,        //!< connected, cycle length > 1
  fixed_point_tree,  //!< connected with a unique fixed point
};

const char* to_string(WitnessBranch b);

enum class EvidenceKind { size_argument, exhaustive_search, certificate };
enum class CertificateKind {
  none,
  height_classes,    //!< target height = subject height + 1 and equal class counts
  irreducible_cycle, //!< target is a prime-power cycle distinct from the subject
  construction,      //!< target rebuilt from the subject matches the recorded one
};

const char* to_string(EvidenceKind k);
const char* to_string(CertificateKind k);

//! Why the subject does not divide one side of the product. Kinds are
//! ordered by independence from the construction under test: a size
//! argument beats an exhaustive search beats a certificate.
struct NonDivEvidence {
  EvidenceKind kind = EvidenceKind::size_argument;
  int target_size = 0;
  int subject_size = 0;
  // exhaustive search
  int candidate_size = 0;
  long long candidates_checked = 0;
  // certificates
  CertificateKind certificate = CertificateKind::none;
  int subject_height = 0;        // height_classes
  int target_height = 0;         // height_classes
  long long subject_classes = 0; // height_classes
  long long target_classes = 0;  // height_classes
  int cycle_len = 0;             // irreducible_cycle
};

//! Parameters of the construction, populated per branch.
struct WitnessParams {
  int cycle_len = 0;             //!< max cycle length (disconnected) or the subject's
  int prime = 0;
  int exponent = 0;              //!< long_cycle: largest e with prime^e dividing cycle_len
  bool prime_power_case = false; //!< long_cycle sub-case: subject is the prime-power cycle
  int height = 0;                //!< fixed_point_tree: height of the subject
  Vertex deep_vertex = -1;       //!< fixed_point_tree: chosen deepest vertex
  Vertex tail = -1;              //!< fixed_point_tree: the added vertex above deep_vertex
  Vertex apex = -1;              //!< fixed_point_tree: the extra vertex of factor_a
  Vertex tower_fixed_point = -1; //!< fixed_point_tree: fixed point of factor_b (flat id)
  std::vector<int> radices;      //!< fixed_point_tree: layer sizes for tuple decoding
};

//! A non-primality witness: subject * cofactor is isomorphic to
//! factor_a * factor_b while the subject divides neither factor.
struct WitnessReport {
  WitnessBranch branch = WitnessBranch::disconnected;
  FunctionalDigraph subject;
  FunctionalDigraph factor_a;
  FunctionalDigraph factor_b;
  FunctionalDigraph cofactor;
  std::optional<IsoMap> iso;  //!< explicit for fixed_point_tree; the other
                              //!< branches rely on canonical equality
  NonDivEvidence not_div_a;
  NonDivEvidence not_div_b;
  WitnessParams params;
  bool verified = false;
};

//! The path digraph on {0..height} with succ(i) = max(i-1, 0): a chain of
//! the given height falling into a loop.
FunctionalDigraph loop_path(int height);

//! Copy of x with one extra vertex appended whose successor is `deepest`.
//! Requires x to be a rooted tree and deepest to realize its height.
FunctionalDigraph append_tail(const FunctionalDigraph& x, Vertex deepest);

//! The layered register built over a rooted tree subject x of height d:
//! vertex tuples (b_1..b_{d+1}) with b_i drawn from the depth-(<=i)
//! truncation of x extended by a tail vertex; slot i of the successor is
//! the extension's step applied to slot i+1, and the last slot pins to the
//! tail. Flattened by mixed radix over the layer sizes, slot 1 most
//! significant.
struct Tower {
  FunctionalDigraph extended;  //!< subject plus the tail vertex
  Vertex tail = -1;
  Vertex deep_vertex = -1;
  Vertex root = -1;   //!< fixed point of the subject (and of extended)
  int height = 0;     //!< height of the subject
  std::vector<std::vector<Vertex>> layers;  //!< layers[i-1] = vertices of depth <= i, ascending
  std::vector<int> radices;
  FunctionalDigraph graph;
  Vertex fixed_point = -1;  //!< flat id of the unique fixed point

  //! Decodes a flat vertex into its tuple of extended-graph vertices.
  std::vector<Vertex> tuple_of(Vertex flat) const;
  Vertex flat_of(const std::vector<Vertex>& tuple) const;
  //! b_slot for slot in 1..height+1; slot 0 yields the root.
  Vertex slot_of(Vertex flat, int slot) const;
  //! The vertex equal to `flat` except slot `slot` holds x; slot 0 is the
  //! identity. Throws if x is not in the slot's layer.
  Vertex replace_slot(Vertex flat, int slot, Vertex x) const;
};

//! Builds the tower over x with the given deepest vertex, or with the
//! smallest-id deepest vertex when omitted.
Tower build_tower(const FunctionalDigraph& x, Vertex deep_vertex);
Tower build_tower(const FunctionalDigraph& x);

//! Full construction for a rooted-tree subject (height >= 1).
struct F1Witness {
  FunctionalDigraph subject;
  HeightProfile profile;
  Tower tower;                    //!< factor_b with its tuple context
  FunctionalDigraph path;         //!< loop_path(height)
  FunctionalDigraph factor_a;     //!< subject x path, plus the apex vertex
  Vertex apex = -1;
  FunctionalDigraph cofactor;     //!< path x tower, plus the root slice
  std::vector<Vertex> root_slice; //!< tower vertices whose slot `height` is the root
  IsoMap iso;                     //!< subject*cofactor -> factor_a*tower
};

F1Witness build_f1_witness(const FunctionalDigraph& x);

//! Number of classes of depth-(<= depth) vertices of a rooted tree under
//! (depth-1)-fold iteration of the successor map.
long long trajectory_class_count(const FunctionalDigraph& e, int depth);

//! Certificate evidence that the tower's graph is not divisible by the
//! subject: its height exceeds the subject's by one while the class
//! counts agree. A failed check throws std::logic_error.
NonDivEvidence tower_certificate(const FunctionalDigraph& x, const Tower& tower);

//! Constructs and verifies a witness for any x other than the one-vertex
//! loop. Throws std::invalid_argument for the empty digraph or the
//! one-vertex loop (those have no witness).
WitnessReport build_witness(const FunctionalDigraph& x, int bound = kDefaultDivisionBound);

//! Re-checks every claim in the report: the product isomorphism (explicit
//! map where present, canonical equality always) and both non-divisibility
//! entries, re-running exhaustive searches whenever the quotient size
//! permits. Throws WitnessError naming the failing clause.
WitnessReport verify_witness(WitnessReport report, int bound = kDefaultDivisionBound);

}  // namespace fungraph

#endif  // FUNGRAPH_WITNESS_HPP_
