// Comparison algorithms: SM-PNLMS (proportionate gains) and SM-l0-NLMS
// (Laplacian zero attractor). Both share the SMF gate of filter_core.

#ifndef LCSM_SPARSE_BASELINES_HPP
#define LCSM_SPARSE_BASELINES_HPP

#include "filter_core.hpp"

namespace lcsm {

struct PnlmsConfig {
    double gamma_bar = 0.1;
    double delta = 1e-12;
    double kappa = 0.01;  // proportionate floor

    void validate() const;
};

struct L0NlmsConfig {
    double gamma_bar = 0.1;
    double delta = 1e-12;
    double alpha = 0.005;  // zero-attractor strength
    double beta = 5.0;     // l0-approximation sharpness
    // Internal scaling constant of the cited baseline parameterizations,
    // kept as a knob so run manifests can echo it. The Laplacian attractor
    // recursion below does not consume it.
    double epsilon_scale = 100.0;

    void validate() const;
};

/// Proportionate gain diagonal. Entries are positive and sum to w.size().
std::vector<double> pnlms_gains(std::span<const double> weights, double kappa);

UpdateOutcome sm_pnlms_update(FilterState& state, const Sample& sample,
                              const PnlmsConfig& cfg, OpCount* tally = nullptr);

UpdateOutcome sm_l0_nlms_update(FilterState& state, const Sample& sample,
                                const L0NlmsConfig& cfg, OpCount* tally = nullptr);

}  // namespace lcsm

#endif
