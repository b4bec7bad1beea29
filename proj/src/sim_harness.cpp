#include "sim_harness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace lcsm {

SparseSystem SparseSystem::system1() {
    return {"system1", {0.02, 0, 0, 0, 0, 0.6, 0, 0, 0.25, 0, 0, 0, 0}};
}

SparseSystem SparseSystem::system2() {
    return {"system2", {0, 0, 0, 0, 0.3, 0.6, -0.5, 0.7, 0, 0, 0, 0, 0}};
}

SparseSystem SparseSystem::system3() {
    return {"system3", {0, 0, 0, 0, 0.3, 0.5, 0.7, 0.5, 0.3, 0, 0, 0, 0}};
}

SparseSystem SparseSystem::by_name(const std::string& name) {
    if (name == "system1") return system1();
    if (name == "system2") return system2();
    if (name == "system3") return system3();
    throw std::invalid_argument("unknown system preset: " + name);
}

void ExperimentConfig::validate() const {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    if (!(noise_variance >= 0.0))
        throw std::invalid_argument("noise_variance must be >= 0");
    if (!(steady_window_fraction > 0.0 && steady_window_fraction <= 1.0))
        throw std::invalid_argument("steady_window_fraction must be in (0, 1]");
    if (system.coefficients.empty())
        throw std::invalid_argument("system has no coefficients");
    if (algorithms.empty())
        throw std::invalid_argument("no algorithms configured");
    for (const AlgoConfig& a : algorithms) {
        a.filter.validate();
        if (static_cast<std::size_t>(a.filter.order) + 1 != system.coefficients.size())
            throw std::invalid_argument(
                "algorithm order does not match the system length");
    }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

void delay_line_window(const std::vector<double>& input, int k,
                       std::vector<double>& window) {
    const int n1 = static_cast<int>(window.size());
    for (int j = 0; j < n1; ++j) {
        const int idx = k - j;
        window[static_cast<std::size_t>(j)] =
            idx >= 0 ? input[static_cast<std::size_t>(idx)] : 0.0;
    }
}

RunSignal generate_run(const ExperimentConfig& cfg, int run_index) {
    std::mt19937_64 rng(splitmix64(cfg.rng_seed) ^
                        splitmix64(static_cast<std::uint64_t>(run_index) + 1));
    std::normal_distribution<double> unit(0.0, 1.0);
    const double noise_std = std::sqrt(cfg.noise_variance);
    const std::size_t n = static_cast<std::size_t>(cfg.iterations);

    RunSignal sig;
    sig.input.resize(n);
    sig.desired.resize(n);
    for (double& u : sig.input) u = unit(rng);

    std::vector<double> window(cfg.system.coefficients.size());
    for (int k = 0; k < cfg.iterations; ++k) {
        delay_line_window(sig.input, k, window);
        double y = 0.0;
        for (std::size_t i = 0; i < window.size(); ++i)
            y += cfg.system.coefficients[i] * window[i];
        sig.desired[static_cast<std::size_t>(k)] = y + noise_std * unit(rng);
    }
    return sig;
}

std::vector<EnsembleResult> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t iters = static_cast<std::size_t>(cfg.iterations);
    const int steady_start = cfg.iterations -
        static_cast<int>(std::floor(cfg.steady_window_fraction * cfg.iterations));

    std::vector<EnsembleResult> results;
    results.reserve(cfg.algorithms.size());

    for (const AlgoConfig& alg : cfg.algorithms) {
        EnsembleResult res;
        res.algorithm = std::string(algorithm_name(alg.algorithm));
        res.mse_curve.assign(iters, 0.0);
        std::uint64_t fired = 0;
        std::uint64_t active_samples = 0;
        std::uint64_t active_sum = 0;

        std::vector<double> window(cfg.system.coefficients.size());
        for (int r = 0; r < cfg.runs; ++r) {
            const RunSignal sig = generate_run(cfg, r);
            FilterState state =
                make_initial_state(alg.algorithm, alg.filter, cfg.initial_weight);
            for (int k = 0; k < cfg.iterations; ++k) {
                delay_line_window(sig.input, k, window);
                const Sample sample{window, sig.desired[static_cast<std::size_t>(k)]};
                const int active =
                    discard_mask(state.weights, alg.filter.epsilon).active_count();
                const UpdateOutcome out =
                    counted_update(alg, state, sample, res.total_ops);
                res.mse_curve[static_cast<std::size_t>(k)] += out.error * out.error;
                if (out.updated) {
                    ++fired;
                    if (k >= steady_start) {
                        ++res.active_histogram[active];
                        ++active_samples;
                        active_sum += static_cast<std::uint64_t>(active);
                    }
                }
            }
        }

        for (double& m : res.mse_curve) m /= static_cast<double>(cfg.runs);
        res.update_rate = static_cast<double>(fired) /
            (static_cast<double>(cfg.runs) * static_cast<double>(cfg.iterations));
        if (active_samples > 0) {
            std::uint64_t best = 0;
            for (const auto& [count, freq] : res.active_histogram) {
                if (freq > best) {
                    best = freq;
                    res.active_mode = count;
                }
            }
            res.mean_active =
                static_cast<double>(active_sum) / static_cast<double>(active_samples);
        }
        results.push_back(std::move(res));
    }
    return results;
}

double steady_state_mse(const EnsembleResult& result, double window_fraction) {
    if (!(window_fraction > 0.0 && window_fraction <= 1.0))
        throw std::invalid_argument("window_fraction must be in (0, 1]");
    const std::size_t n = result.mse_curve.size();
    const std::size_t len = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(window_fraction * static_cast<double>(n))));
    if (n == 0) throw std::invalid_argument("empty MSE curve");
    double sum = 0.0;
    for (std::size_t k = n - len; k < n; ++k) sum += result.mse_curve[k];
    return sum / static_cast<double>(len);
}

}  // namespace lcsm
