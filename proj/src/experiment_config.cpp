#include "experiment_config.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lcsm {

AlgoConfig default_algo_config(Algorithm a, int order) {
    AlgoConfig cfg;
    cfg.algorithm = a;
    cfg.filter.order = order;
    cfg.filter.gamma_bar = std::sqrt(0.05);  // sqrt(5 * sigma_n^2)
    cfg.filter.delta = 1e-12;
    // The discard threshold doubles as the active-count reporting threshold
    // for the baselines, so every algorithm carries it.
    cfg.filter.epsilon = 1e-4;
    cfg.kappa = 0.01;
    cfg.alpha = 0.005;
    cfg.beta = 5.0;
    cfg.epsilon_scale = 100.0;
    return cfg;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw std::invalid_argument("line " + std::to_string(line) +
                                    ": not a number: '" + v + "'");
    }
}

long long parse_int(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        const long long d = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw std::invalid_argument("line " + std::to_string(line) +
                                    ": not an integer: '" + v + "'");
    }
}

std::vector<std::string> split_csv(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string fmt(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"system1-paper", "system2-paper", "system3-paper"};
}

ExperimentConfig preset_config(const std::string& name) {
    ExperimentConfig cfg;
    if (name == "system1-paper") cfg.system = SparseSystem::system1();
    else if (name == "system2-paper") cfg.system = SparseSystem::system2();
    else if (name == "system3-paper") cfg.system = SparseSystem::system3();
    else throw std::invalid_argument("unknown preset: " + name);

    cfg.runs = 500;
    cfg.iterations = 2000;
    cfg.noise_variance = 0.01;
    cfg.initial_weight = 0.1;
    cfg.steady_window_fraction = 0.2;
    cfg.rng_seed = 1;
    const int order = static_cast<int>(cfg.system.coefficients.size()) - 1;
    cfg.algorithms = {
        default_algo_config(Algorithm::LcsmNlms2, order),
        default_algo_config(Algorithm::SmPnlms, order),
        default_algo_config(Algorithm::SmL0Nlms, order),
    };
    return cfg;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    cfg.system = SparseSystem::system1();
    std::vector<std::string> algo_names;
    std::vector<double> custom_coeffs;
    bool have_custom = false;

    // section -> (key -> value); "" is the global section
    struct Pending { std::string section, key, value; int line; };
    std::vector<Pending> entries;

    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (const auto hash = s.find('#'); hash != std::string::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw std::invalid_argument("line " + std::to_string(line) +
                                            ": malformed section header");
            section = trim(s.substr(1, s.size() - 2));
            if (!algorithm_from_name(section))
                throw std::invalid_argument("line " + std::to_string(line) +
                                            ": unknown algorithm section [" +
                                            section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(line) +
                                        ": expected key = value");
        entries.push_back({section, trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line});
    }

    // Global keys first so algorithm sections can rely on the system order.
    for (const Pending& p : entries) {
        if (!p.section.empty()) continue;
        if (p.key == "system") cfg.system = SparseSystem::by_name(p.value);
        else if (p.key == "coefficients") {
            custom_coeffs.clear();
            for (const std::string& c : split_csv(p.value))
                custom_coeffs.push_back(parse_double(c, p.line));
            have_custom = true;
        } else if (p.key == "runs") cfg.runs = static_cast<int>(parse_int(p.value, p.line));
        else if (p.key == "iterations")
            cfg.iterations = static_cast<int>(parse_int(p.value, p.line));
        else if (p.key == "noise_variance")
            cfg.noise_variance = parse_double(p.value, p.line);
        else if (p.key == "initial_weight")
            cfg.initial_weight = parse_double(p.value, p.line);
        else if (p.key == "steady_window_fraction")
            cfg.steady_window_fraction = parse_double(p.value, p.line);
        else if (p.key == "seed")
            cfg.rng_seed = static_cast<std::uint64_t>(parse_int(p.value, p.line));
        else if (p.key == "algorithms") algo_names = split_csv(p.value);
        else
            throw std::invalid_argument("line " + std::to_string(p.line) +
                                        ": unknown key '" + p.key + "'");
    }
    if (have_custom) cfg.system = SparseSystem{"custom", custom_coeffs};
    if (cfg.system.coefficients.empty())
        throw std::invalid_argument("system has no coefficients");
    const int order = static_cast<int>(cfg.system.coefficients.size()) - 1;

    if (algo_names.empty()) algo_names = {"lcsm-nlms2"};
    for (const std::string& n : algo_names) {
        const auto a = algorithm_from_name(n);
        if (!a) throw std::invalid_argument("unknown algorithm: " + n);
        cfg.algorithms.push_back(default_algo_config(*a, order));
    }

    for (const Pending& p : entries) {
        if (p.section.empty()) continue;
        AlgoConfig* target = nullptr;
        for (AlgoConfig& a : cfg.algorithms)
            if (algorithm_name(a.algorithm) == p.section) target = &a;
        if (!target)
            throw std::invalid_argument("line " + std::to_string(p.line) +
                                        ": section [" + p.section +
                                        "] is not in the algorithms list");
        if (p.key == "gamma_bar") target->filter.gamma_bar = parse_double(p.value, p.line);
        else if (p.key == "epsilon") target->filter.epsilon = parse_double(p.value, p.line);
        else if (p.key == "delta") target->filter.delta = parse_double(p.value, p.line);
        else if (p.key == "kappa") target->kappa = parse_double(p.value, p.line);
        else if (p.key == "alpha") target->alpha = parse_double(p.value, p.line);
        else if (p.key == "beta") target->beta = parse_double(p.value, p.line);
        else if (p.key == "epsilon_scale")
            target->epsilon_scale = parse_double(p.value, p.line);
        else
            throw std::invalid_argument("line " + std::to_string(p.line) +
                                        ": unknown key '" + p.key + "' in [" +
                                        p.section + "]");
    }

    cfg.validate();
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    if (cfg.system.name == "custom") {
        out << "coefficients = ";
        for (std::size_t i = 0; i < cfg.system.coefficients.size(); ++i)
            out << (i ? "," : "") << fmt(cfg.system.coefficients[i]);
        out << "\n";
    } else {
        out << "system = " << cfg.system.name << "\n";
    }
    out << "runs = " << cfg.runs << "\n";
    out << "iterations = " << cfg.iterations << "\n";
    out << "noise_variance = " << fmt(cfg.noise_variance) << "\n";
    out << "initial_weight = " << fmt(cfg.initial_weight) << "\n";
    out << "steady_window_fraction = " << fmt(cfg.steady_window_fraction) << "\n";
    out << "seed = " << cfg.rng_seed << "\n";
    out << "algorithms = ";
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i)
        out << (i ? "," : "") << algorithm_name(cfg.algorithms[i].algorithm);
    out << "\n";
    for (const AlgoConfig& a : cfg.algorithms) {
        out << "[" << algorithm_name(a.algorithm) << "]\n";
        out << "gamma_bar = " << fmt(a.filter.gamma_bar) << "\n";
        out << "epsilon = " << fmt(a.filter.epsilon) << "\n";
        out << "delta = " << fmt(a.filter.delta) << "\n";
        if (a.algorithm == Algorithm::SmPnlms)
            out << "kappa = " << fmt(a.kappa) << "\n";
        if (a.algorithm == Algorithm::SmL0Nlms) {
            out << "alpha = " << fmt(a.alpha) << "\n";
            out << "beta = " << fmt(a.beta) << "\n";
            out << "epsilon_scale = " << fmt(a.epsilon_scale) << "\n";
        }
    }
    return out.str();
}

}  // namespace lcsm
