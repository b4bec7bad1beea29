// Monte-Carlo system-identification harness: seeded signal generation,
// sparse system presets, ensemble execution and learning-curve metrics.

#ifndef LCSM_SIM_HARNESS_HPP
#define LCSM_SIM_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "complexity.hpp"

namespace lcsm {

struct SparseSystem {
    std::string name;
    std::vector<double> coefficients;

    static SparseSystem system1();
    static SparseSystem system2();
    static SparseSystem system3();
    /// Throws std::invalid_argument for anything but system1/2/3.
    static SparseSystem by_name(const std::string& name);
};

struct ExperimentConfig {
    SparseSystem system;
    int runs = 500;
    int iterations = 2000;
    double noise_variance = 0.01;
    double initial_weight = 0.1;          // w(0) = initial_weight * [1,...,1]
    double steady_window_fraction = 0.2;  // trailing window for steady-state stats
    std::uint64_t rng_seed = 1;
    std::vector<AlgoConfig> algorithms;

    void validate() const;
};

/// One run's signals: u is the i.i.d. unit-variance Gaussian input sequence,
/// desired[k] = w*^T x(k) + n(k) with x(k) the zero-padded delay-line window.
struct RunSignal {
    std::vector<double> input;
    std::vector<double> desired;
};

/// Deterministic given (cfg.rng_seed, run_index).
RunSignal generate_run(const ExperimentConfig& cfg, int run_index);

/// Delay-line window x(k) = [u(k), u(k-1), ..., u(k-order)], zero-padded.
void delay_line_window(const std::vector<double>& input, int k,
                       std::vector<double>& window);

struct EnsembleResult {
    std::string algorithm;
    std::vector<double> mse_curve;  // per-iteration mean of e^2(k) over runs
    double update_rate = 0.0;       // fired updates / (runs * iterations)
    // Popcount of the discard mask at each fired update inside the trailing
    // steady-state window, pooled over runs.
    std::map<int, std::uint64_t> active_histogram;
    int active_mode = 0;
    double mean_active = 0.0;
    OpCount total_ops;
};

/// Runs every configured algorithm over the same signal ensemble.
std::vector<EnsembleResult> run_experiment(const ExperimentConfig& cfg);

/// Mean of the trailing `window_fraction` of the curve.
double steady_state_mse(const EnsembleResult& result, double window_fraction);

}  // namespace lcsm

#endif
