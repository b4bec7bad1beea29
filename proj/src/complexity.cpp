#include "complexity.hpp"

#include <stdexcept>

namespace lcsm {

PnlmsConfig AlgoConfig::pnlms() const {
    PnlmsConfig c;
    c.gamma_bar = filter.gamma_bar;
    c.delta = filter.delta;
    c.kappa = kappa;
    return c;
}

L0NlmsConfig AlgoConfig::l0nlms() const {
    L0NlmsConfig c;
    c.gamma_bar = filter.gamma_bar;
    c.delta = filter.delta;
    c.alpha = alpha;
    c.beta = beta;
    c.epsilon_scale = epsilon_scale;
    return c;
}

UpdateOutcome apply_update(const AlgoConfig& cfg, FilterState& state,
                           const Sample& sample, OpCount* tally) {
    switch (cfg.algorithm) {
        case Algorithm::SmNlms:
            return sm_nlms_update(state, sample, cfg.filter, tally);
        case Algorithm::LcsmNlms1:
            return lcsm_nlms1_update(state, sample, cfg.filter, tally);
        case Algorithm::LcsmNlms2:
            return lcsm_nlms2_update(state, sample, cfg.filter, tally);
        case Algorithm::SmPnlms:
            return sm_pnlms_update(state, sample, cfg.pnlms(), tally);
        case Algorithm::SmL0Nlms:
            return sm_l0_nlms_update(state, sample, cfg.l0nlms(), tally);
    }
    throw std::invalid_argument("unknown algorithm");
}

UpdateOutcome counted_update(const AlgoConfig& cfg, FilterState& state,
                             const Sample& sample, OpCount& ops) {
    return apply_update(cfg, state, sample, &ops);
}

OpCount predicted_count(Algorithm a, int n) {
    if (n < 0) throw std::invalid_argument("order must be >= 0");
    const std::uint64_t N = static_cast<std::uint64_t>(n);
    switch (a) {
        case Algorithm::SmNlms:
        case Algorithm::LcsmNlms1:
        case Algorithm::LcsmNlms2:
            return OpCount{3 * N + 4, 3 * N + 4, 1};
        case Algorithm::SmPnlms:
            return OpCount{N * N + 5 * N + 5, 7 * N + 8, 2 * N + 4};
        case Algorithm::SmL0Nlms:
            return OpCount{7 * N + 7, 9 * N + 11, N + 3};
    }
    throw std::invalid_argument("unknown algorithm");
}

OpCount probe_count(Algorithm a, int n) {
    AlgoConfig cfg;
    cfg.algorithm = a;
    cfg.filter.order = n;
    cfg.filter.epsilon = 0.0;
    cfg.filter.gamma_bar = 0.1;
    cfg.filter.delta = 1e-12;

    FilterState state = make_initial_state(a, cfg.filter, 0.1);
    std::vector<double> x(static_cast<std::size_t>(n) + 1, 1.0);
    // d far from the filter output so the gate always fires.
    const Sample sample{x, 100.0 + static_cast<double>(n)};

    OpCount ops;
    const UpdateOutcome out = counted_update(cfg, state, sample, ops);
    if (!out.updated)
        throw std::logic_error("probe update did not fire");
    return ops;
}

}  // namespace lcsm
