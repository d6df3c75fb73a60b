#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"
#include "homreconf/paths.hpp"
#include "homreconf/reconfig.hpp"

namespace homreconf {

using ordered_json = nlohmann::ordered_json;

// Documents are a "format: 1" line followed by a pretty-printed JSON body.
std::string render_document(const ordered_json& body);
ordered_json parse_document(const std::string& text);  // throws ParseError

// JSON encodings shared by the command surface and the replayer. Vertex
// names, not indices, so a document stands on its own.
ordered_json mapping_json(const Graph& g, const Graph& h, const Assignment& a);
ordered_json pins_json(const Graph& g, const Graph& h, const PartialColouring& p);
ordered_json path_json(const Graph& g, const Graph& h, const ReconfigPath& path);
ordered_json walk_json(const Graph& g, const Graph& h, const Walk& w);

Assignment mapping_from_json(const ordered_json& j, const Graph& g, const Graph& h);
PartialColouring pins_from_json(const ordered_json& j, const Graph& g, const Graph& h);
ReconfigPath path_from_json(const ordered_json& j, const Graph& g, const Graph& h);
Walk walk_from_json(const ordered_json& j, const Graph& g, const Graph& h);

struct ReplayReport {
  bool ok = true;
  int checks = 0;  // individual certificate checks performed
  std::vector<std::string> errors;
};

// Re-validates every certificate in a serialized document against the inputs
// embedded in it: dismantling sequences replay, majority tables satisfy both
// invariants, paths replay as valid pinned reconfigurations within their
// certified bounds, campaign tables reproduce under the recorded seed.
ReplayReport replay_result_document(const std::string& text);

struct CampaignOutcome {
  ordered_json instances = ordered_json::array();
  int violations = 0;
  int skipped = 0;  // cap-exceeded entries
};

// Deterministic bound-verification campaign over named host graphs; the same
// (corpus, seed, cap) always produces the same table. Each instance row
// records oracle quantities next to every applicable bound.
CampaignOutcome verify_bounds_campaign(
    const std::vector<std::pair<std::string, std::string>>& corpus, uint64_t seed,
    long long cap);

}  // namespace homreconf
