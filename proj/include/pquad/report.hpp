#pragma once
// JSON and text rendering of analysis results. Output is deterministic.

#include <string>

#include "json.hpp"
#include "pquad/suite.hpp"

namespace pquad {

using Json = nlohmann::ordered_json;

Json element_json(const PcGroup& g, Element x);
Json subgroup_json(const PcGroup& g, const Subgroup& h);
Json verdict_json(const PcGroup& g, const Verdict& v);

/// Series, profile and scope of one group.
Json analyze_json(const PcGroup& g);
Json offenders_json(const Representation& rho, const EaPoset& poset, const OffenderReport& report);

Json suite_json(const SuiteReport& report);
std::string suite_text(const SuiteReport& report);

}  // namespace pquad
