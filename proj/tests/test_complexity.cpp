#include <doctest.h>

#include <random>
#include <vector>

#include "complexity.hpp"

using namespace lcsm;

TEST_CASE("predicted counts evaluate the published closed forms") {
    CHECK(predicted_count(Algorithm::LcsmNlms1, 12) == OpCount{40, 40, 1});
    CHECK(predicted_count(Algorithm::LcsmNlms1, 0) == OpCount{4, 4, 1});
    CHECK(predicted_count(Algorithm::SmL0Nlms, 12) == OpCount{91, 119, 15});
    CHECK(predicted_count(Algorithm::SmPnlms, 0) == OpCount{5, 8, 4});
    CHECK(predicted_count(Algorithm::SmPnlms, 12) == OpCount{209, 92, 28});
    CHECK_THROWS(predicted_count(Algorithm::LcsmNlms1, -1));
}

TEST_CASE("worst-case measured count matches the closed form for N in 0..64") {
    for (int n = 0; n <= 64; ++n) {
        const OpCount measured = probe_count(Algorithm::LcsmNlms1, n);
        CHECK(measured == predicted_count(Algorithm::LcsmNlms1, n));
        CHECK(probe_count(Algorithm::LcsmNlms2, n) == measured);
        CHECK(probe_count(Algorithm::SmNlms, n) == measured);
    }
}

TEST_CASE("non-fired iterations cost only the error computation") {
    AlgoConfig cfg;
    cfg.algorithm = Algorithm::LcsmNlms1;
    cfg.filter.order = 7;
    cfg.filter.epsilon = 0.01;
    cfg.filter.gamma_bar = 10.0;  // nothing fires

    FilterState st = make_initial_state(cfg.algorithm, cfg.filter, 0.1);
    std::vector<double> x(8, 1.0);
    OpCount ops;
    const UpdateOutcome out = counted_update(cfg, st, Sample{x, 0.0}, ops);
    CHECK_FALSE(out.updated);
    CHECK(ops == OpCount{8, 8, 0});
}

TEST_CASE("update-path cost scales with the active count") {
    // N = 9; A active coefficients cost N + 2A + 2 add_sub and mul, 1 div.
    const int n = 9;
    for (int active = 0; active <= n + 1; ++active) {
        AlgoConfig cfg;
        cfg.algorithm = Algorithm::LcsmNlms1;
        cfg.filter.order = n;
        cfg.filter.epsilon = 0.5;
        cfg.filter.gamma_bar = 0.1;
        cfg.filter.delta = 1e-12;

        std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.1);
        for (int i = 0; i < active; ++i) w[static_cast<std::size_t>(i)] = 1.0;
        FilterState st;
        st.weights = w;

        std::vector<double> x(static_cast<std::size_t>(n) + 1, 1.0);
        OpCount ops;
        const UpdateOutcome out = counted_update(cfg, st, Sample{x, 100.0}, ops);
        CHECK(out.updated);
        CHECK(out.active_count == active);
        const std::uint64_t expected =
            static_cast<std::uint64_t>(n + 2 * active + 2);
        CHECK(ops.add_sub == expected);
        CHECK(ops.mul == expected);
        CHECK(ops.div == 1);
        CHECK(ops.add_sub <= predicted_count(Algorithm::LcsmNlms1, n).add_sub);
    }
}

TEST_CASE("instrumentation does not perturb the state transition") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (Algorithm a : {Algorithm::SmNlms, Algorithm::LcsmNlms1,
                        Algorithm::LcsmNlms2, Algorithm::SmPnlms,
                        Algorithm::SmL0Nlms}) {
        AlgoConfig cfg;
        cfg.algorithm = a;
        cfg.filter.order = 5;
        cfg.filter.epsilon = 0.05;
        cfg.filter.gamma_bar = 0.2;

        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> w(6), x(6);
            for (double& wi : w) wi = u(rng) + (u(rng) > 0 ? 0.2 : -0.2);
            for (double& xi : x) xi = u(rng);
            const double d = u(rng);

            FilterState plain, counted;
            plain.weights = w;
            counted.weights = w;
            apply_update(cfg, plain, Sample{x, d});
            OpCount ops;
            counted_update(cfg, counted, Sample{x, d}, ops);
            CHECK(plain.weights == counted.weights);
        }
    }
}

TEST_CASE("op counts accumulate") {
    OpCount a{1, 2, 3}, b{10, 20, 30};
    a += b;
    CHECK(a == OpCount{11, 22, 33});
}
