#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvar/series.hpp"

namespace augvar {

enum class OutputFormat { Text, Json };

/// Everything a run depends on; embedded verbatim in every report.
struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    int order = kDefaultOrder;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Text;

    // Potential sources, first match wins: clifford, product, fan, inputs[0].
    std::optional<int> clifford;
    std::optional<std::string> product;  // "unit" | "anticanonical"
    std::optional<std::string> fan_path;
    std::optional<std::string> signs;  // csv of +/-
    std::optional<std::string> vertex;  // csv exponent for clearing

    std::optional<std::string> var;  // solved variable, default the last one
    std::optional<std::string> factor_path;
    bool generic = false;  // seeded unimodular retries in solve-aug

    int multiplicity = 2;
    int ell = 2;
    std::optional<std::string> spins;  // csv labels
    long bound = 1000;
    int d_max = 10;
    int m_max = 3;

    nlohmann::json to_json() const;
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 input error, 2 verification failure
    std::string report;
};

/// Reads AUGVAR_ORDER if set; throws ParseError on a malformed value.
std::optional<int> order_from_environment();

RunResult run(const RunConfig& config);

/// Subcommand names in help order.
const std::vector<std::string>& subcommands();

}  // namespace augvar
