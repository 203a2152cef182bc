#pragma once

#include <string>

#include <json.hpp>

#include "ringlat/app/checks.hpp"

namespace ringlat::app {

using json = nlohmann::ordered_json;

json subspace_json(const Subspace& s);

/// Full analysis of one extension.
json analysis_json(const LatticeAnalysis& an, const CheckOptions& options);
std::string analysis_text(const json& result);

json nagata_json(const NagataReport& rep);
std::string nagata_text(const json& nagata);

/// Nodes, cover edges with kind letter and crucial-ideal index.
json lattice_json(const LatticeAnalysis& an);
std::string lattice_dot(const LatticeAnalysis& an);

json checks_json(const std::vector<CheckResult>& results);
std::string checks_text(const std::vector<CheckResult>& results);

}  // namespace ringlat::app
