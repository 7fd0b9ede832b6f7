#pragma once

#include <string>

#include "sear/pipeline.hpp"
#include "sear/routing.hpp"
#include "sear/types.hpp"

namespace sear {

// Instance JSON:
//   {"k":2, "r":1.0, "start":[[x,y],...], "goal":[[x,y],...],
//    "meta":{"seed":..,"delta":..,"d":..}}
std::string instance_to_json(const ProblemInstance& instance);
ProblemInstance instance_from_json(const std::string& text);

// Plan JSON: {"makespan":T, "robots":[[[t,[x,y]],...], ...]}
std::string plan_to_json(const Plan& plan, int dimension);
Plan plan_from_json(const std::string& text);

std::string metrics_to_json(const Metrics& metrics, const PipelineTrace& trace);
std::string trace_to_json(const PipelineTrace& trace);

// DiscretePlan JSON: steps as arrays of [robot, from-id, to-id].
std::string discrete_plan_to_json(const GridGraph& grid, const DiscretePlan& plan);
std::string discrete_instance_to_json(const DiscreteInstance& instance);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sear
