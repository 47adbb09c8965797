#pragma once

#include <cstdint>
#include <map>

#include "modlab/correspondence.hpp"
#include "modlab/report.hpp"

namespace modlab {

struct ExperimentRequest {
  std::string name;
  json params = json::object();
};

struct ExperimentConfig {
  FiniteAlgebra algebra{{2}};
  std::map<std::string, Functional> states;
  TimeGrid grid{};
  LambdaGrid lgrid{};
  std::vector<ExperimentRequest> experiments;
  Tolerances tol = default_tol();
  std::uint64_t seed = 1;
};

/// Names accepted in ExperimentConfig::experiments.
const std::vector<std::string>& registered_suites();

/// Parses a config document; unknown experiment names or malformed fields
/// raise ConfigInvalid naming the offending field.
ExperimentConfig config_from_json(const json& j);

/// A config running every registered suite at the default grids.
ExperimentConfig default_acceptance_config();

/// Runs the configured suites; rows come back in experiment order regardless
/// of the number of worker threads. A suite that throws contributes a single
/// failing row instead of aborting its siblings.
std::vector<ReportRow> run_suite(const ExperimentConfig& cfg, int jobs = 1);

}  // namespace modlab
