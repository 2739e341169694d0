#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "mslit/pipeline.hpp"

namespace mslit {

/// Schema or value error in a run configuration. Maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// NaN / normalization breach detected in results. Maps to exit code 3.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Eigenstate-builder block of the config (always in its own natural units).
struct EnvelopeConfig {
  double a = 0.0;       // rect window width
  double T = 1.0;       // comb period
  double Tprime = 0.0;  // cosine momentum window parameter, > T
  double shift = 0.0;   // comb shift
  int n_terms = 256;
  int n_points = 1 << 16;
  double extent_over_T = 64.0;
};

struct LoadedConfig {
  bool natural_units = false;
  std::optional<ExperimentConfig> experiment;
  std::optional<EnvelopeConfig> envelope;
  std::string resolved_text;  // canonical serialization, used for hashing
};

/// Parse and validate a config file. The schema is closed: unknown keys are
/// errors. Length keys carry an explicit _m suffix in SI mode ("units":
/// "si", default); "units": "natural" drops the suffix and works in
/// slit-period-scaled dimensionless quantities.
LoadedConfig load_config(const std::string& path);

/// Same, from an already-read document (exposed for tests).
LoadedConfig parse_config(const std::string& text);

const ExperimentConfig& require_experiment(const LoadedConfig& c);
const EnvelopeConfig& require_envelope(const LoadedConfig& c);

}  // namespace mslit
