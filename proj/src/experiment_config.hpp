// Experiment configuration: built-in presets, the flat key-value config
// file format, and manifest-style serialization.

#ifndef LCSM_EXPERIMENT_CONFIG_HPP
#define LCSM_EXPERIMENT_CONFIG_HPP

#include <string>
#include <vector>

#include "sim_harness.hpp"

namespace lcsm {

/// Names of the built-in paper-parameter presets.
std::vector<std::string> preset_names();

/// Default (paper-parameter) algorithm configuration at a given order.
AlgoConfig default_algo_config(Algorithm a, int order);

/// system{1,2,3}-paper. Throws std::invalid_argument for unknown names.
ExperimentConfig preset_config(const std::string& name);

/// Parses the flat key-value format:
///
///   system = system1            # or coefficients = c0,c1,...
///   runs = 500
///   iterations = 2000
///   noise_variance = 0.01
///   initial_weight = 0.1
///   seed = 1
///   algorithms = lcsm-nlms2,sm-pnlms
///
///   [lcsm-nlms2]                # per-algorithm section
///   gamma_bar = 0.223606797749979
///   epsilon = 0.0001
///   delta = 1e-12
///
/// Unknown keys or malformed lines throw std::invalid_argument with a
/// line-numbered message.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);  // std::runtime_error on I/O

/// Full config echo as flat key=value lines (manifest form). Parsing the
/// output reproduces the config.
std::string serialize_config(const ExperimentConfig& cfg);

}  // namespace lcsm

#endif
