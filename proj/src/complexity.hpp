// Arithmetic-cost accounting: closed-form per-update operation counts and
// instrumented updates that tally what actually executes.
//
// Counting convention: the full per-iteration path is counted (filter
// output, a priori error, and, when the gate fires, the update itself).
// Comparisons, mask tests, absolute values, sign copies and transcendental
// evaluations are not counted; reporting metadata (mu, posterior error)
// is outside the counted path. Under this convention a fired LCSM-NLMS1
// update with epsilon = 0 costs exactly (3N+4) add/sub, (3N+4) mul, 1 div.

#ifndef LCSM_COMPLEXITY_HPP
#define LCSM_COMPLEXITY_HPP

#include "filter_core.hpp"
#include "sparse_baselines.hpp"

namespace lcsm {

/// Full parameter set for any implemented algorithm; each recursion reads
/// only the fields it uses.
struct AlgoConfig {
    Algorithm algorithm = Algorithm::LcsmNlms2;
    FilterConfig filter;  // order, epsilon, gamma_bar, delta
    double kappa = 0.01;
    double alpha = 0.005;
    double beta = 5.0;
    double epsilon_scale = 100.0;

    PnlmsConfig pnlms() const;
    L0NlmsConfig l0nlms() const;
};

/// Dispatches to the algorithm's update recursion.
UpdateOutcome apply_update(const AlgoConfig& cfg, FilterState& state,
                           const Sample& sample, OpCount* tally = nullptr);

/// Same transition as apply_update, with the executed arithmetic in `ops`.
UpdateOutcome counted_update(const AlgoConfig& cfg, FilterState& state,
                             const Sample& sample, OpCount& ops);

/// Published closed-form per-update cost at filter order n. The SM-NLMS and
/// LCSM-NLMS2 rows equal the LCSM-NLMS1 worst case (epsilon = 0), where the
/// recursions coincide. Throws std::invalid_argument for n < 0.
OpCount predicted_count(Algorithm a, int n);

/// Measured cost of one fired, all-coefficients-active update at order n
/// (epsilon = 0 probe with a deterministic sample).
OpCount probe_count(Algorithm a, int n);

}  // namespace lcsm

#endif
