#pragma once

#include "fbns/analysis/exponents.hpp"
#include "fbns/params.hpp"
#include "fbns/spectral/grid.hpp"
#include "fbns/symbols/symbols.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fbns::cli {

/// Bad or incomplete configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct KeySpec {
    const char* key;           ///< "section.name"
    const char* default_value; ///< nullptr: required
    const char* description;
};

/// Every recognised key with its default, in documentation order.
const std::vector<KeySpec>& key_table();

struct DataConfig {
    std::string kind = "tail";  ///< zero | mode | gaussian | tail
    double amplitude = 1.0;
    double width = 3.0;
    double tail = 0.65;
    bool vortex = true;
    bool zero_mean = true;
};

struct ScenarioConfig {
    std::string scenario;
    std::string output_dir;
    std::uint64_t seed = 1;
    int workers = 1;

    double box = 0.0;
    int n = 0;
    int nz = 0;
    double depth = 0.0;
    spectral::VerticalScheme scheme = spectral::VerticalScheme::collocation;

    PhysicalParams physics;
    analysis::ExponentConfig exponents;
    analysis::WeightConfig weights;
    symbols::SectorSpec sector;

    double t_min = 0.0, t_max = 0.0, horizon = 0.0, dt = 0.0;
    int samples = 0;

    DataConfig data;

    double tol_decay = 0.0, tol_residual = 0.0, tol_crossval = 0.0, tol_spread = 0.0;
    double tol_picard = 0.0, tol_contraction = 0.0, tol_order = 0.0, tol_audit = 0.0;

    int sweep_samples = 0, sweep_points = 0;
    double lambda_min = 0.0, lambda_max = 0.0;
    std::array<double, 2> sweep_xi{0.0, 0.0};

    std::vector<std::string> audit_symbols;
    int audit_samples = 0;
    double audit_xi_min = 0.0, audit_xi_max = 0.0, audit_lambda_max = 0.0;

    std::vector<int> divergence_levels;

    /// Every key with its resolved value, defaults included.
    std::map<std::string, std::string> resolved;
};

extern const std::vector<std::string> scenario_names;

/// Parses a sectioned key-value file. Throws ConfigError naming the offending
/// key for missing required keys, unknown keys and malformed values.
ScenarioConfig load_config(const std::string& path);

/// Same, from text already in memory.
ScenarioConfig parse_config(const std::string& text);

/// FBNS_OUTPUT_DIR and FBNS_WORKERS take precedence over the file.
void apply_environment(ScenarioConfig& cfg);

} // namespace fbns::cli
