#include "fungraph/report_json.hpp"

#include <json.hpp>

namespace fungraph {

namespace {

nlohmann::json evidence_json(const NonDivEvidence& ev) {
  nlohmann::json j;
  j["kind"] = to_string(ev.kind);
  j["subject_size"] = ev.subject_size;
  j["target_size"] = ev.target_size;
  switch (ev.kind) {
    case EvidenceKind::size_argument:
      break;
    case EvidenceKind::exhaustive_search:
      j["candidate_size"] = ev.candidate_size;
      j["candidates_checked"] = ev.candidates_checked;
      break;
    case EvidenceKind::certificate:
      j["certificate"] = to_string(ev.certificate);
      if (ev.certificate == CertificateKind::height_classes) {
        j["subject_height"] = ev.subject_height;
        j["target_height"] = ev.target_height;
        j["subject_classes"] = ev.subject_classes;
        j["target_classes"] = ev.target_classes;
      } else if (ev.certificate == CertificateKind::irreducible_cycle) {
        j["cycle_len"] = ev.cycle_len;
      }
      break;
  }
  return j;
}

}  // namespace

std::string report_to_json(const WitnessReport& r, int indent) {
  nlohmann::json j;
  j["schema"] = 1;
  j["branch"] = to_string(r.branch);
  j["subject"] = to_literal(r.subject);
  j["factor_a"] = to_literal(r.factor_a);
  j["factor_b"] = to_literal(r.factor_b);
  j["cofactor"] = to_literal(r.cofactor);
  j["verified"] = r.verified;

  nlohmann::json params;
  switch (r.branch) {
    case WitnessBranch::disconnected:
      params["cycle_len"] = r.params.cycle_len;
      params["prime"] = r.params.prime;
      break;
    case WitnessBranch::long_cycle:
      params["cycle_len"] = r.params.cycle_len;
      params["prime"] = r.params.prime;
      params["exponent"] = r.params.exponent;
      params["prime_power_case"] = r.params.prime_power_case;
      break;
    case WitnessBranch::fixed_point_tree:
      params["height"] = r.params.height;
      params["deep_vertex"] = r.params.deep_vertex;
      params["tail"] = r.params.tail;
      params["apex"] = r.params.apex;
      params["tower_fixed_point"] = r.params.tower_fixed_point;
      params["radices"] = r.params.radices;
      break;
  }
  j["parameters"] = params;

  if (r.iso) {
    j["iso"] = nlohmann::json{{"kind", "explicit"}, {"map", r.iso->forward}};
  } else {
    j["iso"] = nlohmann::json{{"kind", "canonical-equality"}};
  }
  j["not_div_a"] = evidence_json(r.not_div_a);
  j["not_div_b"] = evidence_json(r.not_div_b);
  return j.dump(indent);
}

}  // namespace fungraph
