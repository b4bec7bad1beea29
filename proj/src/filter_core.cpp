#include "filter_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lcsm {

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    if (name == "sm-nlms") return Algorithm::SmNlms;
    if (name == "lcsm-nlms1") return Algorithm::LcsmNlms1;
    if (name == "lcsm-nlms2") return Algorithm::LcsmNlms2;
    if (name == "sm-pnlms") return Algorithm::SmPnlms;
    if (name == "sm-l0-nlms") return Algorithm::SmL0Nlms;
    return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::SmNlms: return "sm-nlms";
        case Algorithm::LcsmNlms1: return "lcsm-nlms1";
        case Algorithm::LcsmNlms2: return "lcsm-nlms2";
        case Algorithm::SmPnlms: return "sm-pnlms";
        case Algorithm::SmL0Nlms: return "sm-l0-nlms";
    }
    return "?";
}

void FilterConfig::validate() const {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
    if (!(gamma_bar > 0.0)) throw std::invalid_argument("gamma_bar must be > 0");
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
}

int DiscardMask::active_count() const {
    int n = 0;
    for (bool b : mask) n += b ? 1 : 0;
    return n;
}

void DiscardMask::apply(std::span<double> v) const {
    for (std::size_t i = 0; i < v.size() && i < mask.size(); ++i)
        if (!mask[i]) v[i] = 0.0;
}

double discard(double w, double epsilon) {
    return std::fabs(w) >= epsilon ? w : 0.0;
}

DiscardMask discard_mask(std::span<const double> weights, double epsilon) {
    DiscardMask m;
    m.mask.resize(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
        m.mask[i] = std::fabs(weights[i]) >= epsilon;
    return m;
}

namespace {

void check_dims(const FilterState& state, const Sample& sample) {
    if (state.weights.size() != sample.input.size())
        throw std::invalid_argument(
            "input length " + std::to_string(sample.input.size()) +
            " does not match weight length " + std::to_string(state.weights.size()));
}

}  // namespace

double a_priori_error(const FilterState& state, const Sample& sample) {
    check_dims(state, sample);
    double y = 0.0;
    for (std::size_t i = 0; i < state.weights.size(); ++i)
        y += state.weights[i] * sample.input[i];
    return sample.desired - y;
}

double step_size(double error, double gamma_bar) {
    const double mag = std::fabs(error);
    return mag > gamma_bar ? 1.0 - gamma_bar / mag : 0.0;
}

FilterState make_initial_state(Algorithm a, const FilterConfig& cfg,
                               std::span<const double> initial_weights) {
    cfg.validate();
    if (static_cast<int>(initial_weights.size()) != cfg.order + 1)
        throw std::invalid_argument("initial weight length must be order + 1");
    if (a == Algorithm::LcsmNlms1 || a == Algorithm::LcsmNlms2) {
        for (double w : initial_weights)
            if (!(std::fabs(w) > cfg.epsilon))
                throw std::invalid_argument(
                    "LCSM variants require |w_i(0)| > epsilon for every i");
    }
    FilterState st;
    st.weights.assign(initial_weights.begin(), initial_weights.end());
    st.iteration = 0;
    return st;
}

FilterState make_initial_state(Algorithm a, const FilterConfig& cfg,
                               double initial_value) {
    std::vector<double> w(static_cast<std::size_t>(cfg.order) + 1, initial_value);
    return make_initial_state(a, cfg, w);
}

namespace {

// Shared recursion body. With epsilon = 0 the mask is all-true and every
// variant follows the identical arithmetic path, which makes the ep=0
// reduction to SM-NLMS bit-exact.
//
// Counted arithmetic per iteration (A = active coefficients, n1 = N+1):
//   output + error        n1 mul, n1 add_sub
// and, when the update fires:
//   x^T F x + delta        A mul, A add_sub
//   e - sgn(e)*gamma_bar   1 mul, 1 add_sub
//   q / denom              1 div
//   w_i += g x_i (active)  A mul, A add_sub
// Outcome metadata (mu, posterior error) is reporting only, not counted.
UpdateOutcome masked_step(FilterState& state, const Sample& sample,
                          const FilterConfig& cfg, double epsilon,
                          bool zero_inactive, OpCount* tally) {
    cfg.validate();
    check_dims(state, sample);
    const std::size_t n1 = state.weights.size();

    double y = 0.0;
    for (std::size_t i = 0; i < n1; ++i) y += state.weights[i] * sample.input[i];
    const double e = sample.desired - y;
    if (tally) {
        tally->mul += n1;
        tally->add_sub += n1;
    }

    UpdateOutcome out;
    out.error = e;

    const DiscardMask mask = discard_mask(state.weights, epsilon);
    out.active_count = mask.active_count();

    if (!(std::fabs(e) > cfg.gamma_bar)) {
        out.updated = false;
        out.mu = 0.0;
        out.posterior_error = e;
        ++state.iteration;
        return out;
    }

    out.updated = true;
    out.mu = step_size(e, cfg.gamma_bar);

    const std::size_t active = static_cast<std::size_t>(out.active_count);
    double denom = cfg.delta;
    if (active > 0) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n1; ++i)
            if (mask.mask[i]) acc += sample.input[i] * sample.input[i];
        denom = acc + cfg.delta;
        if (tally) {
            tally->mul += active;
            tally->add_sub += active;  // active-1 accumulations + delta
        }
    }

    const double sign = e > 0.0 ? 1.0 : -1.0;
    const double q = e - sign * cfg.gamma_bar;  // equals mu(k) e(k)
    const double g = q / denom;
    if (tally) {
        tally->mul += 1;
        tally->add_sub += 1;
        tally->div += 1;
    }

    for (std::size_t i = 0; i < n1; ++i) {
        if (mask.mask[i]) {
            state.weights[i] += g * sample.input[i];
        } else if (zero_inactive) {
            state.weights[i] = 0.0;  // assignment, not arithmetic
        }
    }
    if (tally) {
        tally->mul += active;
        tally->add_sub += active;
    }

    double y2 = 0.0;
    for (std::size_t i = 0; i < n1; ++i) y2 += state.weights[i] * sample.input[i];
    out.posterior_error = sample.desired - y2;

    ++state.iteration;
    return out;
}

}  // namespace

UpdateOutcome sm_nlms_update(FilterState& state, const Sample& sample,
                             const FilterConfig& cfg, OpCount* tally) {
    return masked_step(state, sample, cfg, 0.0, false, tally);
}

UpdateOutcome lcsm_nlms1_update(FilterState& state, const Sample& sample,
                                const FilterConfig& cfg, OpCount* tally) {
    return masked_step(state, sample, cfg, cfg.epsilon, false, tally);
}

UpdateOutcome lcsm_nlms2_update(FilterState& state, const Sample& sample,
                                const FilterConfig& cfg, OpCount* tally) {
    return masked_step(state, sample, cfg, cfg.epsilon, true, tally);
}

}  // namespace lcsm
