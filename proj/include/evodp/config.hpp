#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "evodp/control.hpp"
#include "evodp/dp.hpp"
#include "evodp/montecarlo.hpp"

namespace evodp {

/// Raised for malformed or inconsistent configuration; mapped to exit
/// code 2 by the CLI.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Experiment manifest. Defaults reproduce the reference setup: Ruggedness
/// at n = 100 with lambda = 512, a multiplicative rate grid of 101 points
/// from 1e-4, and a Monte-Carlo budget of 1e6 iterations with early stop
/// after 5e4 successes.
struct RunConfig {
    std::string problem = "ruggedness";
    int n = 100;
    int lambda = 512;
    GridSpec grid;
    long long mc_iterations = 1'000'000;
    long long mc_successes = 50'000;
    std::optional<std::uint64_t> mc_seed;  // defaults to `seed`
    std::string provider = "mc";           // mc | exact

    std::string policy = "static";  // static | ab | two-rate
    std::string policy_p = "1/n";   // static rate and adaptive initial rate
    std::string policy_p_min = "1/n^2";
    std::string policy_p_max = "0.5";
    bool tworate_clamp_offspring = false;

    long long runs = 100;
    long long budget = 10'000'000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out_dir = ".";
};

// Applies `key = value` lines ('#' starts a comment) on top of cfg.
// Unknown keys are rejected.
void apply_config_file(RunConfig& cfg, const std::string& path);

// Applies one key/value pair; shared by the file loader and CLI overrides.
void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value);

// Rate tokens: a plain number, or the presets "1/n" and "1/n^2".
double resolve_rate(const std::string& token, int n);

// Full validation; throws ConfigError with the offending key.
void validate_config(const RunConfig& cfg);

ProblemModel make_problem(const RunConfig& cfg);
McConfig make_mc_config(const RunConfig& cfg);
ControlPolicy make_policy(const RunConfig& cfg);

}  // namespace evodp
