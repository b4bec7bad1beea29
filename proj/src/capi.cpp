// extern "C" shim over the C++ core. Exceptions stop here.

#include "lcsm/lcsm.h"

#include <cmath>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "complexity.hpp"
#include "experiment_config.hpp"
#include "filter_core.hpp"
#include "sim_harness.hpp"

using namespace lcsm;

struct lcsm_filter {
    AlgoConfig cfg;
    FilterState state;
};

struct lcsm_experiment_config {
    ExperimentConfig cfg;
};

struct lcsm_result_set {
    std::vector<EnsembleResult> results;
};

namespace {

lcsm_status translate_exception() {
    try {
        throw;
    } catch (const std::invalid_argument&) {
        return LCSM_ERR_INVALID_ARGUMENT;
    } catch (const std::runtime_error&) {
        return LCSM_ERR_IO;
    } catch (const std::bad_alloc&) {
        return LCSM_ERR_INTERNAL;
    } catch (...) {
        return LCSM_ERR_INTERNAL;
    }
}

AlgoConfig make_algo_config(Algorithm a, int order, const lcsm_algo_params* p) {
    AlgoConfig cfg;
    cfg.algorithm = a;
    cfg.filter.order = order;
    if (p) {
        cfg.filter.gamma_bar = p->gamma_bar;
        cfg.filter.epsilon = p->epsilon;
        cfg.filter.delta = p->delta;
        cfg.kappa = p->kappa;
        cfg.alpha = p->alpha;
        cfg.beta = p->beta;
        cfg.epsilon_scale = p->epsilon_scale;
    } else {
        lcsm_algo_params d;
        lcsm_algo_params_init(&d);
        return make_algo_config(a, order, &d);
    }
    return cfg;
}

void fill_outcome(const UpdateOutcome& in, lcsm_update_outcome* out) {
    if (!out) return;
    out->updated = in.updated ? 1 : 0;
    out->error = in.error;
    out->mu = in.mu;
    out->posterior_error = in.posterior_error;
    out->active_count = in.active_count;
}

void fill_ops(const OpCount& in, lcsm_op_count* out) {
    if (!out) return;
    out->add_sub = in.add_sub;
    out->mul = in.mul;
    out->divs = in.div;
}

const EnsembleResult* result_at(const lcsm_result_set* rs, int index) {
    if (!rs || index < 0 ||
        index >= static_cast<int>(rs->results.size()))
        return nullptr;
    return &rs->results[static_cast<std::size_t>(index)];
}

}  // namespace

extern "C" {

const char* lcsm_status_message(lcsm_status status) {
    switch (status) {
        case LCSM_OK: return "ok";
        case LCSM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case LCSM_ERR_DIMENSION: return "dimension mismatch";
        case LCSM_ERR_UNKNOWN_ALGORITHM: return "unknown algorithm";
        case LCSM_ERR_PARSE: return "config parse error";
        case LCSM_ERR_IO: return "I/O error";
        case LCSM_ERR_RANGE: return "index or buffer out of range";
        case LCSM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* lcsm_version(void) { return "1.0.0"; }

void lcsm_algo_params_init(lcsm_algo_params* params) {
    if (!params) return;
    params->gamma_bar = std::sqrt(0.05);
    params->epsilon = 1e-4;
    params->delta = 1e-12;
    params->kappa = 0.01;
    params->alpha = 0.005;
    params->beta = 5.0;
    params->epsilon_scale = 100.0;
}

lcsm_status lcsm_filter_create(const char* algorithm, int order,
                               const lcsm_algo_params* params,
                               const double* initial, lcsm_filter** out) {
    if (!algorithm || !out) return LCSM_ERR_INVALID_ARGUMENT;
    const auto a = algorithm_from_name(algorithm);
    if (!a) return LCSM_ERR_UNKNOWN_ALGORITHM;
    try {
        AlgoConfig cfg = make_algo_config(*a, order, params);
        FilterState state;
        if (initial) {
            state = make_initial_state(
                *a, cfg.filter,
                std::span<const double>(initial,
                                        static_cast<std::size_t>(order) + 1));
        } else {
            state = make_initial_state(*a, cfg.filter, 0.1);
        }
        *out = new lcsm_filter{std::move(cfg), std::move(state)};
        return LCSM_OK;
    } catch (...) {
        return translate_exception();
    }
}

void lcsm_filter_destroy(lcsm_filter* filter) { delete filter; }

lcsm_status lcsm_filter_update(lcsm_filter* filter, const double* input,
                               int input_len, double desired,
                               lcsm_update_outcome* outcome,
                               lcsm_op_count* ops) {
    if (!filter || !input) return LCSM_ERR_INVALID_ARGUMENT;
    if (input_len != static_cast<int>(filter->state.weights.size()))
        return LCSM_ERR_DIMENSION;
    try {
        const Sample sample{
            std::span<const double>(input, static_cast<std::size_t>(input_len)),
            desired};
        OpCount tally;
        const UpdateOutcome out = apply_update(filter->cfg, filter->state, sample,
                                               ops ? &tally : nullptr);
        fill_outcome(out, outcome);
        fill_ops(tally, ops);
        return LCSM_OK;
    } catch (...) {
        return translate_exception();
    }
}

int lcsm_filter_order(const lcsm_filter* filter) {
    return filter ? filter->cfg.filter.order : -1;
}

lcsm_status lcsm_filter_weights(const lcsm_filter* filter, double* buffer,
                                int buffer_len) {
    if (!filter || !buffer) return LCSM_ERR_INVALID_ARGUMENT;
    if (buffer_len < static_cast<int>(filter->state.weights.size()))
        return LCSM_ERR_RANGE;
    std::memcpy(buffer, filter->state.weights.data(),
                filter->state.weights.size() * sizeof(double));
    return LCSM_OK;
}

lcsm_status lcsm_predicted_count(const char* algorithm, int order,
                                 lcsm_op_count* out) {
    if (!algorithm || !out) return LCSM_ERR_INVALID_ARGUMENT;
    const auto a = algorithm_from_name(algorithm);
    if (!a) return LCSM_ERR_UNKNOWN_ALGORITHM;
    try {
        fill_ops(predicted_count(*a, order), out);
        return LCSM_OK;
    } catch (...) {
        return translate_exception();
    }
}

lcsm_status lcsm_probe_count(const char* algorithm, int order,
                             lcsm_op_count* out) {
    if (!algorithm || !out) return LCSM_ERR_INVALID_ARGUMENT;
    const auto a = algorithm_from_name(algorithm);
    if (!a) return LCSM_ERR_UNKNOWN_ALGORITHM;
    try {
        fill_ops(probe_count(*a, order), out);
        return LCSM_OK;
    } catch (...) {
        return translate_exception();
    }
}

int lcsm_preset_count(void) {
    return static_cast<int>(preset_names().size());
}

const char* lcsm_preset_name(int index) {
    static const std::vector<std::string> names = preset_names();
    if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
    return names[static_cast<std::size_t>(index)].c_str();
}

lcsm_status lcsm_config_from_preset(const char* name,
                                    lcsm_experiment_config** out) {
    if (!name || !out) return LCSM_ERR_INVALID_ARGUMENT;
    try {
        *out = new lcsm_experiment_config{preset_config(name)};
        return LCSM_OK;
    } catch (...) {
        return translate_exception();
    }
}

lcsm_status lcsm_config_from_file(const char* path,
                                  lcsm_experiment_config** out) {
    if (!path || !out) return LCSM_ERR_INVALID_ARGUMENT;
    try {
        *out = new lcsm_experiment_config{load_config_file(path)};
        return LCSM_OK;
    } catch (const std::invalid_argument&) {
        return LCSM_ERR_PARSE;
    } catch (...) {
        return translate_exception();
    }
}

lcsm_status lcsm_config_from_text(const char* text,
                                  lcsm_experiment_config** out) {
    if (!text || !out) return LCSM_ERR_INVALID_ARGUMENT;
    try {
        *out = new lcsm_experiment_config{parse_config(text)};
        return LCSM_OK;
    } catch (const std::invalid_argument&) {
        return LCSM_ERR_PARSE;
    } catch (...) {
        return translate_exception();
    }
}

void lcsm_config_destroy(lcsm_experiment_config* config) { delete config; }

lcsm_status lcsm_config_set_seed(lcsm_experiment_config* config, uint64_t seed) {
    if (!config) return LCSM_ERR_INVALID_ARGUMENT;
    config->cfg.rng_seed = seed;
    return LCSM_OK;
}

lcsm_status lcsm_config_set_runs(lcsm_experiment_config* config, int runs) {
    if (!config || runs < 1) return LCSM_ERR_INVALID_ARGUMENT;
    config->cfg.runs = runs;
    return LCSM_OK;
}

lcsm_status lcsm_config_set_iterations(lcsm_experiment_config* config,
                                       int iterations) {
    if (!config || iterations < 1) return LCSM_ERR_INVALID_ARGUMENT;
    config->cfg.iterations = iterations;
    return LCSM_OK;
}

lcsm_status lcsm_config_set_algorithms(lcsm_experiment_config* config,
                                       const char* names) {
    if (!config || !names) return LCSM_ERR_INVALID_ARGUMENT;
    try {
        ExperimentConfig replaced = config->cfg;
        replaced.algorithms.clear();
        const int order =
            static_cast<int>(replaced.system.coefficients.size()) - 1;
        std::string csv(names);
        std::size_t start = 0;
        while (start <= csv.size()) {
            std::size_t comma = csv.find(',', start);
            if (comma == std::string::npos) comma = csv.size();
            std::string item = csv.substr(start, comma - start);
            while (!item.empty() && (item.front() == ' ' || item.front() == '\t'))
                item.erase(item.begin());
            while (!item.empty() && (item.back() == ' ' || item.back() == '\t'))
                item.pop_back();
            if (!item.empty()) {
                const auto a = algorithm_from_name(item);
                if (!a) return LCSM_ERR_UNKNOWN_ALGORITHM;
                replaced.algorithms.push_back(default_algo_config(*a, order));
            }
            start = comma + 1;
        }
        if (replaced.algorithms.empty()) return LCSM_ERR_INVALID_ARGUMENT;
        replaced.validate();
        config->cfg = std::move(replaced);
        return LCSM_OK;
    } catch (...) {
        return translate_exception();
    }
}

lcsm_status lcsm_config_serialize(const lcsm_experiment_config* config,
                                  char* buffer, size_t cap, size_t* needed) {
    if (!config || !needed) return LCSM_ERR_INVALID_ARGUMENT;
    try {
        const std::string text = serialize_config(config->cfg);
        *needed = text.size();
        if (buffer && cap > 0) {
            const size_t n = text.size() < cap - 1 ? text.size() : cap - 1;
            std::memcpy(buffer, text.data(), n);
            buffer[n] = '\0';
            if (n < text.size()) return LCSM_ERR_RANGE;
        } else if (!buffer) {
            return LCSM_OK;  // size query
        }
        return LCSM_OK;
    } catch (...) {
        return translate_exception();
    }
}

lcsm_status lcsm_experiment_run(const lcsm_experiment_config* config,
                                lcsm_result_set** out) {
    if (!config || !out) return LCSM_ERR_INVALID_ARGUMENT;
    try {
        *out = new lcsm_result_set{run_experiment(config->cfg)};
        return LCSM_OK;
    } catch (...) {
        return translate_exception();
    }
}

void lcsm_result_destroy(lcsm_result_set* results) { delete results; }

int lcsm_result_algorithm_count(const lcsm_result_set* results) {
    return results ? static_cast<int>(results->results.size()) : 0;
}

const char* lcsm_result_algorithm_name(const lcsm_result_set* results,
                                       int index) {
    const EnsembleResult* r = result_at(results, index);
    return r ? r->algorithm.c_str() : nullptr;
}

int lcsm_result_iterations(const lcsm_result_set* results) {
    if (!results || results->results.empty()) return 0;
    return static_cast<int>(results->results.front().mse_curve.size());
}

const double* lcsm_result_mse_curve(const lcsm_result_set* results, int index) {
    const EnsembleResult* r = result_at(results, index);
    return r ? r->mse_curve.data() : nullptr;
}

double lcsm_result_update_rate(const lcsm_result_set* results, int index) {
    const EnsembleResult* r = result_at(results, index);
    return r ? r->update_rate : -1.0;
}

double lcsm_result_steady_state_mse(const lcsm_result_set* results, int index,
                                    double window_fraction) {
    const EnsembleResult* r = result_at(results, index);
    if (!r) return -1.0;
    try {
        return steady_state_mse(*r, window_fraction);
    } catch (...) {
        return -1.0;
    }
}

int lcsm_result_active_mode(const lcsm_result_set* results, int index) {
    const EnsembleResult* r = result_at(results, index);
    return r ? r->active_mode : -1;
}

double lcsm_result_mean_active(const lcsm_result_set* results, int index) {
    const EnsembleResult* r = result_at(results, index);
    return r ? r->mean_active : -1.0;
}

lcsm_status lcsm_result_op_totals(const lcsm_result_set* results, int index,
                                  lcsm_op_count* out) {
    const EnsembleResult* r = result_at(results, index);
    if (!r || !out) return LCSM_ERR_RANGE;
    fill_ops(r->total_ops, out);
    return LCSM_OK;
}

}  // extern "C"
