#pragma once

// Flat key=value scenario configuration: parsing, validation, defaults,
// and construction of the measurement model a config describes.

#include "edlab/bounds.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace edlab {

struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

enum class ScenarioKind { Fig1, Fig2, Fig3, Custom };

struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::Fig2;
  int theta_count = 10000;
  double phi = 0.0;
  double lambda = 0.01;        // observable scale, fig3 only
  WitnessStrategy witness;     // sampled/1000 by default
  std::uint64_t seed = 0;
  std::string output_path;
  std::optional<double> theta;  // single-point evaluation (report verb)

  // Custom scenarios carry the full model; theta-family scenarios do not.
  std::optional<MeasurementModel> custom_model;
};

/// Parses and validates a config file. Defaults: theta_count 10000,
/// witness sampled with 1000 samples, phi 0, lambda 0.01. Unknown keys,
/// malformed lines (ParseError carries the line number) and out-of-range
/// values (ValidationError names the field) are rejected.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(std::istream& in, const std::string& origin);

/// The model a config describes at angle theta (ignored for custom).
MeasurementModel config_model(const ScenarioConfig& c, double theta);

/// Renders a model as custom-scenario config text that load_config
/// accepts, for violation replay.
std::string serialize_model(const MeasurementModel& m);

}  // namespace edlab
