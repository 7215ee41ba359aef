#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "qb/numeric/mp.hpp"

namespace qb::cli {

enum class Task { certify, solve, oracle, saddle, all };

Task parse_task(const std::string& s);
std::string task_name(Task t);

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric inputs are kept as the strings the user gave, so the config
/// serializes exactly and re-parses to the same values.
struct JobConfig {
    std::string spec;
    Task task = Task::all;
    unsigned digits = 50;
    std::vector<std::string> z{"1e-3"};  // one per vertex; a single value is broadcast
    std::optional<std::string> hbar;
    std::map<std::string, std::string> params;  // name -> complex value; unset ones are drawn from the seed
    std::vector<std::string> epsilon{"1/10", "1/100"};
    std::vector<std::string> q{"0.9", "0.95", "0.99", "0.999"};  // saddle sequence
    unsigned saddle_digits = 30;
    std::uint64_t seed = 1;
    std::string out = "qb_out";

    void validate() const;  // throws ConfigError
    friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

nlohmann::ordered_json to_json(const JobConfig& c);
JobConfig config_from_json(const nlohmann::ordered_json& j);

/// Complex literal: "1.5", "-2e-3i", "0.3+0.7i", "0.3-0.7i", or "polar:r,theta".
Complex parse_complex(const std::string& s);
/// Rational literal "p/q", integer, or finite decimal.
mpq_class parse_rational(const std::string& s);

/// Parses the command line; returns nullopt after printing help, throws ConfigError on bad input.
std::optional<JobConfig> parse_args(int argc, const char* const* argv);

}  // namespace qb::cli
