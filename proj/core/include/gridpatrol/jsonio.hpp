#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridpatrol/env.hpp"
#include "gridpatrol/feasibility.hpp"
#include "gridpatrol/simulate.hpp"

namespace gridpatrol {

// JSON serializers for the machine-readable CLI outputs. All output is
// deterministic: keys are emitted in sorted order and nothing time-dependent
// is included.

std::string trace_json(const Trace& trace);
std::string report_json(const VerifyReport& report);
std::string feasibility_json(const GridDims& dims, int V, const FeasibilityVerdict& v);
std::string regions_json(const RegionGraph& rg);
std::string hamiltonian_json(const std::optional<std::vector<Position>>& cycle);
std::string env_check_json(const Environment& env, int diameter);
std::string search_json(bool found, const std::string& output_path);
std::string error_json(const std::string& kind, const std::string& message);

}  // namespace gridpatrol
