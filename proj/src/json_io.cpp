#include "sear/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sear/errors.hpp"

namespace sear {

using nlohmann::json;

namespace {

json point_to_json(const Vec& p, int dimension) {
  json out = json::array({p.x, p.y});
  if (dimension == 3) out.push_back(p.z);
  return out;
}

Vec point_from_json(const json& j, int dimension) {
  if (!j.is_array() || static_cast<int>(j.size()) != dimension) {
    throw Error(ErrorKind::Schema, "point must be an array of k coordinates");
  }
  Vec p{j.at(0).get<double>(), j.at(1).get<double>()};
  if (dimension == 3) p.z = j.at(2).get<double>();
  return p;
}

json config_points(const Configuration& config) {
  json out = json::array();
  for (const Vec& p : config.positions) out.push_back(point_to_json(p, config.dimension));
  return out;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::Schema, "malformed JSON");
  return j;
}

}  // namespace

std::string instance_to_json(const ProblemInstance& instance) {
  json j;
  j["k"] = instance.start.dimension;
  j["r"] = instance.start.radius;
  j["start"] = config_points(instance.start);
  j["goal"] = config_points(instance.goal);
  j["meta"] = {{"seed", instance.meta.seed},
               {"delta", instance.meta.delta},
               {"d", instance.meta.d}};
  return j.dump();
}

ProblemInstance instance_from_json(const std::string& text) {
  json j = parse(text);
  try {
    ProblemInstance instance;
    int k = j.at("k").get<int>();
    if (k != 2 && k != 3) throw Error(ErrorKind::Schema, "k must be 2 or 3");
    double r = j.at("r").get<double>();
    instance.start.dimension = instance.goal.dimension = k;
    instance.start.radius = instance.goal.radius = r;
    for (const auto& p : j.at("start")) {
      instance.start.positions.push_back(point_from_json(p, k));
    }
    for (const auto& p : j.at("goal")) {
      instance.goal.positions.push_back(point_from_json(p, k));
    }
    if (j.contains("meta")) {
      const auto& m = j.at("meta");
      instance.meta.seed = m.value("seed", 0ull);
      instance.meta.delta = m.value("delta", 0.0);
      instance.meta.d = m.value("d", 0.0);
    }
    return instance;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Schema, std::string("instance JSON: ") + e.what());
  }
}

std::string plan_to_json(const Plan& plan, int dimension) {
  json robots = json::array();
  for (const Trajectory& traj : plan.robots) {
    json waypoints = json::array();
    for (const Waypoint& w : traj.waypoints) {
      waypoints.push_back(json::array({w.t, point_to_json(w.p, dimension)}));
    }
    robots.push_back(std::move(waypoints));
  }
  json j;
  j["makespan"] = plan.makespan;
  j["robots"] = std::move(robots);
  return j.dump();
}

Plan plan_from_json(const std::string& text) {
  json j = parse(text);
  try {
    Plan plan;
    plan.makespan = j.at("makespan").get<double>();
    for (const auto& robot : j.at("robots")) {
      Trajectory traj;
      for (const auto& wp : robot) {
        const auto& coords = wp.at(1);
        Vec p{coords.at(0).get<double>(), coords.at(1).get<double>()};
        if (coords.size() > 2) p.z = coords.at(2).get<double>();
        traj.waypoints.push_back({wp.at(0).get<double>(), p});
      }
      plan.robots.push_back(std::move(traj));
    }
    return plan;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Schema, std::string("plan JSON: ") + e.what());
  }
}

namespace {

json grid_descriptor(const GridGraph& grid) {
  return {{"kind", grid_kind_name(grid.kind)},
          {"edge_length", grid.edge_length},
          {"origin", json::array({grid.origin.x, grid.origin.y, grid.origin.z})},
          {"extent", json::array({grid.m_w, grid.m_h, grid.m_d})},
          {"vertices", grid.num_vertices()}};
}

}  // namespace

std::string trace_to_json(const PipelineTrace& trace) {
  json phases = json::array();
  for (const PhaseSpan& ph : trace.phases) {
    phases.push_back({{"name", ph.name}, {"t0", ph.t0}, {"t1", ph.t1}});
  }
  json j;
  j["phases"] = std::move(phases);
  j["lambda_start"] = trace.lambda_start;
  j["lambda_goal"] = trace.lambda_goal;
  if (trace.grid) j["grid"] = grid_descriptor(*trace.grid);
  j["start_vertices"] = trace.start_vertices;
  j["goal_vertices"] = trace.goal_vertices;
  j["discrete_steps"] = trace.discrete_steps;
  j["serialized_substeps"] = trace.serialized_substeps;
  j["longer_side_vertices"] = trace.longer_side_vertices;
  return j.dump();
}

std::string metrics_to_json(const Metrics& metrics, const PipelineTrace& trace) {
  json j;
  j["makespan"] = metrics.makespan;
  j["total_distance"] = metrics.total_distance;
  j["max_single_distance"] = metrics.max_single_distance;
  j["lower_bound"] = metrics.lower_bound;
  if (metrics.optimality_ratio) {
    j["optimality_ratio"] = *metrics.optimality_ratio;
  } else {
    j["optimality_ratio"] = nullptr;
  }
  j["wall_time_seconds"] = metrics.wall_time_seconds;
  json phases = json::array();
  for (const PhaseSpan& ph : trace.phases) {
    phases.push_back({{"name", ph.name}, {"t0", ph.t0}, {"t1", ph.t1}});
  }
  j["phases"] = std::move(phases);
  return j.dump();
}

std::string discrete_plan_to_json(const GridGraph& grid, const DiscretePlan& plan) {
  json steps = json::array();
  for (const auto& moves : discrete_plan_moves(grid, plan)) {
    json step = json::array();
    for (const Move& m : moves) {
      step.push_back(json::array({m.token, m.from, m.to}));
    }
    steps.push_back(std::move(step));
  }
  json j;
  j["num_real"] = plan.num_real;
  j["initial"] = plan.initial_tokens;
  j["steps"] = std::move(steps);
  j["serialized_substeps"] = plan.serialized_substeps;
  return j.dump();
}

std::string discrete_instance_to_json(const DiscreteInstance& instance) {
  json j;
  if (instance.grid) j["grid"] = grid_descriptor(*instance.grid);
  j["start"] = instance.start;
  j["goal"] = instance.goal;
  return j.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::Io, "short write to " + path);
}

}  // namespace sear
