#include <doctest.h>

#include <cmath>
#include <vector>

#include "experiment_config.hpp"
#include "sim_harness.hpp"

using namespace lcsm;

namespace {

ExperimentConfig small_config(Algorithm a) {
    ExperimentConfig cfg;
    cfg.system = SparseSystem::system1();
    cfg.runs = 5;
    cfg.iterations = 300;
    cfg.noise_variance = 0.01;
    cfg.rng_seed = 77;
    cfg.algorithms = {default_algo_config(a, 12)};
    return cfg;
}

}  // namespace

TEST_CASE("system presets match the published coefficients") {
    CHECK(SparseSystem::system1().coefficients ==
          std::vector<double>{0.02, 0, 0, 0, 0, 0.6, 0, 0, 0.25, 0, 0, 0, 0});
    CHECK(SparseSystem::system2().coefficients ==
          std::vector<double>{0, 0, 0, 0, 0.3, 0.6, -0.5, 0.7, 0, 0, 0, 0, 0});
    CHECK(SparseSystem::system3().coefficients ==
          std::vector<double>{0, 0, 0, 0, 0.3, 0.5, 0.7, 0.5, 0.3, 0, 0, 0, 0});
    CHECK(SparseSystem::system1().coefficients.size() == 13);
    CHECK_THROWS(SparseSystem::by_name("system9"));
}

TEST_CASE("generate_run is deterministic in (seed, run_index)") {
    const ExperimentConfig cfg = small_config(Algorithm::LcsmNlms2);
    const RunSignal a = generate_run(cfg, 3);
    const RunSignal b = generate_run(cfg, 3);
    CHECK(a.input == b.input);
    CHECK(a.desired == b.desired);

    const RunSignal c = generate_run(cfg, 4);
    CHECK(a.input != c.input);
}

TEST_CASE("noise-free zero system produces zero desired signal") {
    ExperimentConfig cfg = small_config(Algorithm::SmNlms);
    cfg.noise_variance = 0.0;
    cfg.system = SparseSystem{"custom", std::vector<double>(13, 0.0)};
    const RunSignal sig = generate_run(cfg, 0);
    for (double d : sig.desired) CHECK(d == 0.0);
}

TEST_CASE("input is empirically unit-variance white Gaussian") {
    ExperimentConfig cfg = small_config(Algorithm::SmNlms);
    cfg.iterations = 100000;
    const RunSignal sig = generate_run(cfg, 0);
    double sum = 0.0, sumsq = 0.0;
    for (double u : sig.input) {
        sum += u;
        sumsq += u * u;
    }
    const double mean = sum / 100000.0;
    const double var = sumsq / 100000.0 - mean * mean;
    CHECK(var > 0.99);
    CHECK(var < 1.01);
    CHECK(std::fabs(mean) < 0.02);
}

TEST_CASE("delay-line window is zero-padded before the first sample") {
    std::vector<double> u{1.0, 2.0, 3.0};
    std::vector<double> w(3);
    delay_line_window(u, 0, w);
    CHECK(w == std::vector<double>{1.0, 0.0, 0.0});
    delay_line_window(u, 2, w);
    CHECK(w == std::vector<double>{3.0, 2.0, 1.0});
}

TEST_CASE("run_experiment is reproducible") {
    const ExperimentConfig cfg = small_config(Algorithm::LcsmNlms2);
    const auto a = run_experiment(cfg);
    const auto b = run_experiment(cfg);
    REQUIRE(a.size() == 1);
    CHECK(a[0].mse_curve == b[0].mse_curve);
    CHECK(a[0].update_rate == b[0].update_rate);
    CHECK(a[0].active_histogram == b[0].active_histogram);
    CHECK(a[0].total_ops == b[0].total_ops);
}

TEST_CASE("huge bound means no updates; zero-ish bound means all updates") {
    ExperimentConfig cfg = small_config(Algorithm::SmNlms);
    cfg.runs = 1;
    cfg.iterations = 200;
    cfg.algorithms[0].filter.gamma_bar = 1e9;
    auto res = run_experiment(cfg);
    CHECK(res[0].update_rate == 0.0);

    cfg.algorithms[0].filter.gamma_bar = 1e-300;
    res = run_experiment(cfg);
    CHECK(res[0].update_rate == 1.0);
}

TEST_CASE("trivial single-iteration experiment") {
    ExperimentConfig cfg = small_config(Algorithm::LcsmNlms2);
    cfg.runs = 1;
    cfg.iterations = 1;
    cfg.algorithms[0].filter.gamma_bar = 1e9;
    const auto res = run_experiment(cfg);
    CHECK(res[0].mse_curve.size() == 1);
    CHECK(res[0].update_rate == 0.0);
}

TEST_CASE("steady_state_mse windows") {
    EnsembleResult r;
    r.mse_curve = std::vector<double>(100, 0.25);
    CHECK(steady_state_mse(r, 0.2) == doctest::Approx(0.25));
    CHECK(steady_state_mse(r, 1.0) == doctest::Approx(0.25));
    for (std::size_t k = 0; k < 100; ++k) r.mse_curve[k] = static_cast<double>(k);
    CHECK(steady_state_mse(r, 1.0) == doctest::Approx(49.5));
    CHECK(steady_state_mse(r, 0.1) == doctest::Approx(94.5));
    CHECK_THROWS(steady_state_mse(r, 0.0));
    CHECK_THROWS(steady_state_mse(r, 1.5));
}

TEST_CASE("active count is non-increasing within LCSM runs") {
    // Re-trace a run with the core update and record the mask popcount.
    ExperimentConfig cfg = small_config(Algorithm::LcsmNlms2);
    cfg.algorithms[0].filter.epsilon = 0.01;  // coarse zone so absorption occurs
    const RunSignal sig = generate_run(cfg, 0);
    for (Algorithm a : {Algorithm::LcsmNlms1, Algorithm::LcsmNlms2}) {
        AlgoConfig ac = cfg.algorithms[0];
        ac.algorithm = a;
        FilterState st = make_initial_state(a, ac.filter, cfg.initial_weight);
        std::vector<double> window(13);
        int prev = 14;
        for (int k = 0; k < cfg.iterations; ++k) {
            delay_line_window(sig.input, k, window);
            const int active =
                discard_mask(st.weights, ac.filter.epsilon).active_count();
            CHECK(active <= prev);
            prev = active;
            apply_update(ac, st, Sample{window, sig.desired[(std::size_t)k]});
        }
    }
}

TEST_CASE("steady-state MSE respects the noise floor") {
    ExperimentConfig cfg = small_config(Algorithm::LcsmNlms2);
    cfg.runs = 20;
    cfg.iterations = 1000;
    const auto res = run_experiment(cfg);
    const double ss = steady_state_mse(res[0], 0.2);
    CHECK(ss > 0.009);  // sigma_n^2 minus sampling slack
    CHECK(ss < 0.05);   // gamma_bar^2 bound
}

TEST_CASE("config validation rejects inconsistent setups") {
    ExperimentConfig cfg = small_config(Algorithm::SmNlms);
    cfg.runs = 0;
    CHECK_THROWS(run_experiment(cfg));
    cfg = small_config(Algorithm::SmNlms);
    cfg.algorithms[0].filter.order = 5;  // mismatch vs 13-tap system
    CHECK_THROWS(run_experiment(cfg));
    cfg = small_config(Algorithm::SmNlms);
    cfg.algorithms.clear();
    CHECK_THROWS(run_experiment(cfg));
}
