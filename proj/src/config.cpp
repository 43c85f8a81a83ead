#include "evodp/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "evodp/control.hpp"

namespace evodp {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T parsed{};
    const auto res =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
        throw ConfigError("config key '" + key + "': invalid value '" + value + "'");
    }
    return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("config key '" + key + "': expected true or false");
}

}  // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value) {
    if (key == "problem") cfg.problem = value;
    else if (key == "n") cfg.n = parse_number<int>(key, value);
    else if (key == "ea.lambda") cfg.lambda = parse_number<int>(key, value);
    else if (key == "grid.mult.base") cfg.grid.mult_base = parse_number<double>(key, value);
    else if (key == "grid.mult.alpha") cfg.grid.mult_alpha = parse_number<double>(key, value);
    else if (key == "grid.mult.count") cfg.grid.mult_count = parse_number<int>(key, value);
    else if (key == "grid.add.base") cfg.grid.add_base = parse_number<double>(key, value);
    else if (key == "grid.add.step") cfg.grid.add_step = parse_number<double>(key, value);
    else if (key == "grid.add.count") cfg.grid.add_count = parse_number<int>(key, value);
    else if (key == "mc.iterations") cfg.mc_iterations = parse_number<long long>(key, value);
    else if (key == "mc.successes") cfg.mc_successes = parse_number<long long>(key, value);
    else if (key == "mc.seed") cfg.mc_seed = parse_number<std::uint64_t>(key, value);
    else if (key == "provider") cfg.provider = value;
    else if (key == "policy") cfg.policy = value;
    else if (key == "policy.p") cfg.policy_p = value;
    else if (key == "policy.p_min") cfg.policy_p_min = value;
    else if (key == "policy.p_max") cfg.policy_p_max = value;
    else if (key == "tworate.clamp_offspring") cfg.tworate_clamp_offspring = parse_bool(key, value);
    else if (key == "runs") cfg.runs = parse_number<long long>(key, value);
    else if (key == "budget") cfg.budget = parse_number<long long>(key, value);
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "workers") cfg.workers = parse_number<int>(key, value);
    else if (key == "out_dir") cfg.out_dir = value;
    else throw ConfigError("unknown config key '" + key + "'");
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string entry = trim(line);
        if (entry.empty()) continue;
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        }
        apply_config_entry(cfg, trim(entry.substr(0, eq)),
                           trim(entry.substr(eq + 1)));
    }
}

double resolve_rate(const std::string& token, int n) {
    if (token == "1/n") return 1.0 / static_cast<double>(n);
    if (token == "1/n^2" || token == "1/n2") {
        return 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    }
    double value = 0.0;
    const auto res =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
        throw ConfigError("invalid rate '" + token +
                          "': expected a number, 1/n, or 1/n^2");
    }
    return value;
}

void validate_config(const RunConfig& cfg) {
    if (cfg.problem != "onemax" && cfg.problem != "ruggedness") {
        throw ConfigError("problem: expected onemax or ruggedness, got '" +
                          cfg.problem + "'");
    }
    if (cfg.n < 1) throw ConfigError("n: must be >= 1");
    if (cfg.problem == "ruggedness" && cfg.n % 2 != 0) {
        throw ConfigError("n: ruggedness requires even n");
    }
    if (cfg.lambda < 1) throw ConfigError("ea.lambda: must be >= 1");
    if (cfg.mc_iterations < 1) throw ConfigError("mc.iterations: must be >= 1");
    if (cfg.mc_successes < 1 || cfg.mc_successes > cfg.mc_iterations) {
        throw ConfigError("mc.successes: need 1 <= successes <= iterations");
    }
    if (cfg.provider != "mc" && cfg.provider != "exact") {
        throw ConfigError("provider: expected mc or exact");
    }
    if (cfg.policy != "static" && cfg.policy != "ab" && cfg.policy != "two-rate") {
        throw ConfigError("policy: expected static, ab, or two-rate");
    }
    if (cfg.policy == "two-rate" && cfg.lambda % 2 != 0) {
        throw ConfigError("ea.lambda: the two-rate policy needs even lambda");
    }
    if (cfg.runs < 1) throw ConfigError("runs: must be >= 1");
    if (cfg.budget < 1) throw ConfigError("budget: must be >= 1");
    if (cfg.workers < 1) throw ConfigError("workers: must be >= 1");

    const double p = resolve_rate(cfg.policy_p, cfg.n);
    const double p_min = resolve_rate(cfg.policy_p_min, cfg.n);
    const double p_max = resolve_rate(cfg.policy_p_max, cfg.n);
    if (!(p > 0.0 && p <= 1.0)) throw ConfigError("policy.p: must lie in (0, 1]");
    if (!(p_min > 0.0 && p_min <= p_max && p_max <= 1.0)) {
        throw ConfigError("policy.p_min/p_max: need 0 < p_min <= p_max <= 1");
    }
    try {
        build_grid(cfg.grid, 0, 1);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("grid: ") + e.what());
    }
}

ProblemModel make_problem(const RunConfig& cfg) {
    return cfg.problem == "onemax" ? ProblemModel::onemax(cfg.n)
                                   : ProblemModel::ruggedness(cfg.n);
}

McConfig make_mc_config(const RunConfig& cfg) {
    McConfig mc;
    mc.iterations = cfg.mc_iterations;
    mc.successes = cfg.mc_successes;
    mc.seed = cfg.mc_seed.value_or(cfg.seed);
    return mc;
}

ControlPolicy make_policy(const RunConfig& cfg) {
    const double p = resolve_rate(cfg.policy_p, cfg.n);
    const double p_min = resolve_rate(cfg.policy_p_min, cfg.n);
    const double p_max = resolve_rate(cfg.policy_p_max, cfg.n);
    if (cfg.policy == "static") return ControlPolicy::static_rate(p);
    if (cfg.policy == "ab") return ControlPolicy::ab_rule(p, p_min, p_max);
    return ControlPolicy::two_rate(p, p_min, p_max, cfg.tworate_clamp_offspring);
}

}  // namespace evodp
