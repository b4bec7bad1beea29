#include "sparse_baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcsm {

namespace {

constexpr double kPnlmsMagnitudeFloor = 0.01;

void check_dims(const FilterState& state, const Sample& sample) {
    if (state.weights.size() != sample.input.size())
        throw std::invalid_argument("input length does not match weight length");
}

// Output + a priori error; counted as n1 mul, n1 add_sub.
double error_term(const FilterState& state, const Sample& sample, OpCount* tally) {
    double y = 0.0;
    for (std::size_t i = 0; i < state.weights.size(); ++i)
        y += state.weights[i] * sample.input[i];
    if (tally) {
        tally->mul += state.weights.size();
        tally->add_sub += state.weights.size();
    }
    return sample.desired - y;
}

double posterior(const FilterState& state, const Sample& sample) {
    double y = 0.0;
    for (std::size_t i = 0; i < state.weights.size(); ++i)
        y += state.weights[i] * sample.input[i];
    return sample.desired - y;
}

}  // namespace

void PnlmsConfig::validate() const {
    if (!(gamma_bar > 0.0)) throw std::invalid_argument("gamma_bar must be > 0");
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
}

void L0NlmsConfig::validate() const {
    if (!(gamma_bar > 0.0)) throw std::invalid_argument("gamma_bar must be > 0");
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
    if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
    if (!(epsilon_scale > 0.0)) throw std::invalid_argument("epsilon_scale must be > 0");
}

std::vector<double> pnlms_gains(std::span<const double> weights, double kappa) {
    const std::size_t n1 = weights.size();
    double mx = kPnlmsMagnitudeFloor;
    for (double w : weights) mx = std::max(mx, std::fabs(w));
    const double floor = kappa * mx;

    std::vector<double> gamma(n1);
    double sum = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
        gamma[i] = std::max(floor, std::fabs(weights[i]));
        sum += gamma[i];
    }
    const double scale = static_cast<double>(n1) / sum;
    for (double& g : gamma) g *= scale;
    return gamma;
}

UpdateOutcome sm_pnlms_update(FilterState& state, const Sample& sample,
                              const PnlmsConfig& cfg, OpCount* tally) {
    cfg.validate();
    check_dims(state, sample);
    const std::size_t n1 = state.weights.size();

    UpdateOutcome out;
    out.error = error_term(state, sample, tally);
    out.active_count = static_cast<int>(n1);  // proportionate update touches all taps

    if (!(std::fabs(out.error) > cfg.gamma_bar)) {
        out.posterior_error = out.error;
        ++state.iteration;
        return out;
    }

    out.updated = true;
    out.mu = step_size(out.error, cfg.gamma_bar);

    const std::vector<double> gains = pnlms_gains(state.weights, cfg.kappa);
    if (tally) {
        // floor product, gain normalization (1 div + n1 scale products),
        // gamma accumulation.
        tally->mul += 1 + n1;
        tally->add_sub += n1 - 1;
        tally->div += 1;
    }

    double acc = 0.0;
    for (std::size_t i = 0; i < n1; ++i)
        acc += gains[i] * sample.input[i] * sample.input[i];
    const double denom = acc + cfg.delta;
    if (tally) {
        tally->mul += 2 * n1;
        tally->add_sub += n1;
    }

    const double sign = out.error > 0.0 ? 1.0 : -1.0;
    const double q = out.error - sign * cfg.gamma_bar;
    const double g0 = q / denom;
    if (tally) {
        tally->mul += 1;
        tally->add_sub += 1;
        tally->div += 1;
    }

    for (std::size_t i = 0; i < n1; ++i)
        state.weights[i] += g0 * gains[i] * sample.input[i];
    if (tally) {
        tally->mul += 2 * n1;
        tally->add_sub += n1;
    }

    out.posterior_error = posterior(state, sample);
    ++state.iteration;
    return out;
}

UpdateOutcome sm_l0_nlms_update(FilterState& state, const Sample& sample,
                                const L0NlmsConfig& cfg, OpCount* tally) {
    cfg.validate();
    check_dims(state, sample);
    const std::size_t n1 = state.weights.size();

    UpdateOutcome out;
    out.error = error_term(state, sample, tally);
    out.active_count = static_cast<int>(n1);

    if (!(std::fabs(out.error) > cfg.gamma_bar)) {
        out.posterior_error = out.error;
        ++state.iteration;
        return out;
    }

    out.updated = true;
    out.mu = step_size(out.error, cfg.gamma_bar);

    double acc = 0.0;
    for (std::size_t i = 0; i < n1; ++i)
        acc += sample.input[i] * sample.input[i];
    const double denom = acc + cfg.delta;
    if (tally) {
        tally->mul += n1;
        tally->add_sub += n1;
    }

    const double sign = out.error > 0.0 ? 1.0 : -1.0;
    const double q = out.error - sign * cfg.gamma_bar;
    const double g = q / denom;
    if (tally) {
        tally->mul += 1;
        tally->add_sub += 1;
        tally->div += 1;
    }

    // Zero attraction uses the pre-update coefficient; sgn(0) = 0 leaves
    // exact zeros untouched.
    for (std::size_t i = 0; i < n1; ++i) {
        const double w = state.weights[i];
        state.weights[i] = w + g * sample.input[i];
        if (cfg.alpha != 0.0 && w != 0.0) {
            const double wsign = w > 0.0 ? 1.0 : -1.0;
            const double attract = cfg.alpha * std::exp(-cfg.beta * std::fabs(w));
            state.weights[i] -= wsign * attract;
            if (tally) {
                tally->mul += 2;  // beta*|w| and alpha*exp(.)
                tally->add_sub += 1;
            }
        }
    }
    if (tally) {
        tally->mul += n1;
        tally->add_sub += n1;
    }

    out.posterior_error = posterior(state, sample);
    ++state.iteration;
    return out;
}

}  // namespace lcsm
