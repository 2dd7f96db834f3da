#ifndef FUNGRAPH_REPORT_JSON_HPP_
#define FUNGRAPH_REPORT_JSON_HPP_

#include <string>

#include "fungraph/witness.hpp"

namespace fungraph {

//! Serializes a witness report to the versioned JSON document (schema 1).
//! Keys are emitted in sorted order, so output is bit-exact across runs.
std::string report_to_json(const WitnessReport& report, int indent = 2);

}  // namespace fungraph

#endif  // FUNGRAPH_REPORT_JSON_HPP_
