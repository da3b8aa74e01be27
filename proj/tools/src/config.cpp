#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace fbns::cli {

namespace pt = boost::property_tree;

const std::vector<std::string> scenario_names = {"linear-decay",      "boundary-forced",      "resolvent-sweep",
                                                 "multiplier-audit",  "nonlinear-small-data", "divergence-corrector"};

const std::vector<KeySpec>& key_table() {
    static const std::vector<KeySpec> table = {
        {"run.scenario", nullptr, "scenario name"},
        {"run.output_dir", "fbns-run", "directory for metadata, CSVs and the summary"},
        {"run.seed", "1", "RNG seed for sampled scenarios"},
        {"run.workers", "1", "worker thread cap"},
        {"grid.box", "6.283185307179586", "horizontal box length"},
        {"grid.n", "16", "horizontal modes per dimension (even, >= 8)"},
        {"grid.nz", "48", "vertical nodes"},
        {"grid.depth", "40", "truncation depth L"},
        {"grid.scheme", "collocation", "collocation | finite_difference"},
        {"physics.mu", "1", "viscosity"},
        {"physics.c_sigma", "1", "surface tension coefficient"},
        {"physics.c_g", "1", "gravity coefficient"},
        {"exponents.p", "64", "time integrability exponent"},
        {"exponents.q", nullptr, "space integrability exponent"},
        {"exponents.theta", "0.5", "interpolation parameter"},
        {"weights.a1", "auto", "time weight; auto takes the standard choice for q"},
        {"weights.a2", "auto", "time weight"},
        {"weights.b1", "auto", "time weight"},
        {"weights.b2", "auto", "time weight"},
        {"weights.b3", "auto", "time weight"},
        {"weights.b4", "auto", "time weight"},
        {"weights.c1", "auto", "time weight"},
        {"weights.d1", "auto", "time weight"},
        {"sector.gamma0", "1", "resolvent sector radius"},
        {"sector.epsilon", "0.7853981633974483", "resolvent sector half-angle deficit"},
        {"time.t_min", "5", "start of the decay fit window"},
        {"time.t_max", "200", "end of the decay fit window"},
        {"time.samples", "24", "log-spaced sample times in the window"},
        {"time.horizon", "5", "Picard time horizon"},
        {"time.dt", "0.1", "Picard time step"},
        {"data.kind", "tail", "zero | mode | gaussian | tail"},
        {"data.amplitude", "1", "initial height amplitude"},
        {"data.width", "3", "bump width"},
        {"data.tail", "0.65", "exponent a in (1 + r^2/w^2)^-a"},
        {"data.vortex", "true", "add a Gaussian vortex to the initial velocity"},
        {"data.zero_mean", "true", "remove the box mean of the initial height"},
        {"tolerance.decay", "0.15", "allowed exponent deviation"},
        {"tolerance.residual", "1e-7", "relative resolvent residual"},
        {"tolerance.crossval", "1e-6", "explicit vs collocation mismatch"},
        {"tolerance.spread", "10", "estimate ratio spread around the median"},
        {"tolerance.picard", "1e-10", "Picard stopping tolerance"},
        {"tolerance.contraction", "0.5", "largest allowed contraction ratio"},
        {"tolerance.order", "1.8", "minimal observed order of the divergence corrector"},
        {"tolerance.audit", "1e3", "largest allowed audited symbol constant"},
        {"sweep.samples", "50", "random samples for boundary-forced"},
        {"sweep.points", "13", "moduli per ray for resolvent-sweep"},
        {"sweep.lambda_min", "1.01", "smallest |lambda|"},
        {"sweep.lambda_max", "1e4", "largest |lambda|"},
        {"sweep.xi1", "1", "first horizontal frequency for resolvent-sweep"},
        {"sweep.xi2", "0.5", "second horizontal frequency for resolvent-sweep"},
        {"audit.symbols", "default", "comma-separated symbol ids or default"},
        {"audit.samples", "2000", "sample budget per audited symbol"},
        {"audit.xi_min", "1e-2", "smallest |xi'|"},
        {"audit.xi_max", "1e4", "largest |xi'|"},
        {"audit.lambda_max", "1e8", "largest |lambda|"},
        {"divergence.levels", "33,65,129", "finite-difference node counts"},
    };
    return table;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty()) out.push_back(trim(item));
    return out;
}

class Reader {
public:
    explicit Reader(const std::map<std::string, std::string>& v) : v_(v) {}

    const std::string& str(const std::string& key) const { return v_.at(key); }

    double real(const std::string& key) const {
        const auto& s = str(key);
        try {
            std::size_t pos = 0;
            const double d = std::stod(s, &pos);
            if (pos == s.size() && std::isfinite(d)) return d;
        } catch (const std::exception&) {
        }
        throw ConfigError("key '" + key + "': expected a number, got '" + s + "'");
    }

    long integer(const std::string& key) const {
        const auto& s = str(key);
        try {
            std::size_t pos = 0;
            const long i = std::stol(s, &pos);
            if (pos == s.size()) return i;
        } catch (const std::exception&) {
        }
        throw ConfigError("key '" + key + "': expected an integer, got '" + s + "'");
    }

    bool flag(const std::string& key) const {
        const auto& s = str(key);
        if (s == "true" || s == "1" || s == "yes") return true;
        if (s == "false" || s == "0" || s == "no") return false;
        throw ConfigError("key '" + key + "': expected true or false, got '" + s + "'");
    }

    double weight(const std::string& key, double fallback) const {
        return str(key) == "auto" ? fallback : real(key);
    }

private:
    const std::map<std::string, std::string>& v_;
};

void check(bool cond, const std::string& key, const std::string& what) {
    if (!cond) throw ConfigError("key '" + key + "': " + what);
}

} // namespace

ScenarioConfig parse_config(const std::string& text) {
    pt::ptree tree;
    try {
        std::istringstream is(text);
        pt::read_ini(is, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("unparseable config: ") + e.what());
    }

    std::set<std::string> known;
    for (const auto& k : key_table()) known.insert(k.key);

    std::map<std::string, std::string> given;
    for (const auto& [section, body] : tree) {
        if (body.empty()) throw ConfigError("key '" + section + "' lies outside any section");
        for (const auto& [name, value] : body) {
            const std::string key = section + "." + name;
            if (!known.count(key)) throw ConfigError("unknown key '" + key + "'");
            given[key] = trim(value.data());
        }
    }

    ScenarioConfig cfg;
    for (const auto& k : key_table()) {
        auto it = given.find(k.key);
        if (it != given.end())
            cfg.resolved[k.key] = it->second;
        else if (k.default_value)
            cfg.resolved[k.key] = k.default_value;
        else
            throw ConfigError(std::string("missing required key '") + k.key + "'");
    }

    const Reader r(cfg.resolved);
    cfg.scenario = r.str("run.scenario");
    check(std::find(scenario_names.begin(), scenario_names.end(), cfg.scenario) != scenario_names.end(),
          "run.scenario", "unknown scenario '" + cfg.scenario + "'");
    cfg.output_dir = r.str("run.output_dir");
    const long seed = r.integer("run.seed");
    check(seed >= 0, "run.seed", "must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.workers = static_cast<int>(r.integer("run.workers"));
    check(cfg.workers >= 1, "run.workers", "must be at least 1");

    cfg.box = r.real("grid.box");
    check(cfg.box > 0.0, "grid.box", "must be positive");
    cfg.n = static_cast<int>(r.integer("grid.n"));
    check(cfg.n >= 8 && cfg.n % 2 == 0, "grid.n", "must be even and at least 8");
    cfg.nz = static_cast<int>(r.integer("grid.nz"));
    check(cfg.nz >= 8, "grid.nz", "must be at least 8");
    cfg.depth = r.real("grid.depth");
    check(cfg.depth > 0.0, "grid.depth", "must be positive");
    const auto& scheme = r.str("grid.scheme");
    if (scheme == "collocation")
        cfg.scheme = spectral::VerticalScheme::collocation;
    else if (scheme == "finite_difference")
        cfg.scheme = spectral::VerticalScheme::finite_difference;
    else
        throw ConfigError("key 'grid.scheme': expected collocation or finite_difference");

    cfg.physics.mu = r.real("physics.mu");
    check(cfg.physics.mu > 0.0, "physics.mu", "must be positive");
    cfg.physics.c_sigma = r.real("physics.c_sigma");
    cfg.physics.c_g = r.real("physics.c_g");
    check(cfg.physics.c_sigma > 0.0 && cfg.physics.c_g > 0.0, "physics.c_g", "coefficients must be positive");

    cfg.exponents.p = r.real("exponents.p");
    cfg.exponents.q = r.real("exponents.q");
    cfg.exponents.theta = r.real("exponents.theta");
    const auto std_w = analysis::WeightConfig::standard(cfg.exponents.q);
    cfg.weights.a1 = r.weight("weights.a1", std_w.a1);
    cfg.weights.a2 = r.weight("weights.a2", std_w.a2);
    cfg.weights.b1 = r.weight("weights.b1", std_w.b1);
    cfg.weights.b2 = r.weight("weights.b2", std_w.b2);
    cfg.weights.b3 = r.weight("weights.b3", std_w.b3);
    cfg.weights.b4 = r.weight("weights.b4", std_w.b4);
    cfg.weights.c1 = r.weight("weights.c1", std_w.c1);
    cfg.weights.d1 = r.weight("weights.d1", std_w.d1);

    cfg.sector.gamma0 = r.real("sector.gamma0");
    cfg.sector.epsilon = r.real("sector.epsilon");
    try {
        cfg.sector.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("key 'sector.epsilon': ") + e.what());
    }

    cfg.t_min = r.real("time.t_min");
    cfg.t_max = r.real("time.t_max");
    check(cfg.t_min > 0.0 && cfg.t_max > cfg.t_min, "time.t_max", "need 0 < t_min < t_max");
    cfg.samples = static_cast<int>(r.integer("time.samples"));
    check(cfg.samples >= 3, "time.samples", "need at least 3 samples");
    cfg.horizon = r.real("time.horizon");
    cfg.dt = r.real("time.dt");
    check(cfg.horizon > 0.0 && cfg.dt > 0.0 && cfg.dt <= cfg.horizon, "time.dt", "need 0 < dt <= horizon");

    cfg.data.kind = r.str("data.kind");
    check(cfg.data.kind == "zero" || cfg.data.kind == "mode" || cfg.data.kind == "gaussian" ||
              cfg.data.kind == "tail",
          "data.kind", "expected zero, mode, gaussian or tail");
    cfg.data.amplitude = r.real("data.amplitude");
    cfg.data.width = r.real("data.width");
    check(cfg.data.width > 0.0, "data.width", "must be positive");
    cfg.data.tail = r.real("data.tail");
    check(cfg.data.tail > 0.0, "data.tail", "must be positive");
    cfg.data.vortex = r.flag("data.vortex");
    cfg.data.zero_mean = r.flag("data.zero_mean");

    cfg.tol_decay = r.real("tolerance.decay");
    cfg.tol_residual = r.real("tolerance.residual");
    cfg.tol_crossval = r.real("tolerance.crossval");
    cfg.tol_spread = r.real("tolerance.spread");
    cfg.tol_picard = r.real("tolerance.picard");
    cfg.tol_contraction = r.real("tolerance.contraction");
    cfg.tol_order = r.real("tolerance.order");
    cfg.tol_audit = r.real("tolerance.audit");

    cfg.sweep_samples = static_cast<int>(r.integer("sweep.samples"));
    check(cfg.sweep_samples >= 1, "sweep.samples", "must be at least 1");
    cfg.sweep_points = static_cast<int>(r.integer("sweep.points"));
    check(cfg.sweep_points >= 2, "sweep.points", "must be at least 2");
    cfg.lambda_min = r.real("sweep.lambda_min");
    cfg.lambda_max = r.real("sweep.lambda_max");
    check(cfg.lambda_min > 0.0 && cfg.lambda_max > cfg.lambda_min, "sweep.lambda_max",
          "need 0 < lambda_min < lambda_max");
    cfg.sweep_xi = {r.real("sweep.xi1"), r.real("sweep.xi2")};

    cfg.audit_symbols = split(r.str("audit.symbols"));
    check(!cfg.audit_symbols.empty(), "audit.symbols", "empty list");
    cfg.audit_samples = static_cast<int>(r.integer("audit.samples"));
    check(cfg.audit_samples >= 10, "audit.samples", "must be at least 10");
    cfg.audit_xi_min = r.real("audit.xi_min");
    cfg.audit_xi_max = r.real("audit.xi_max");
    cfg.audit_lambda_max = r.real("audit.lambda_max");
    check(cfg.audit_xi_min > 0.0 && cfg.audit_xi_max > cfg.audit_xi_min, "audit.xi_max",
          "need 0 < xi_min < xi_max");

    for (const auto& s : split(r.str("divergence.levels"))) {
        try {
            cfg.divergence_levels.push_back(std::stoi(s));
        } catch (const std::exception&) {
            throw ConfigError("key 'divergence.levels': expected integers, got '" + s + "'");
        }
    }
    check(cfg.divergence_levels.size() >= 2, "divergence.levels", "need at least two levels");
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void apply_environment(ScenarioConfig& cfg) {
    if (const char* dir = std::getenv("FBNS_OUTPUT_DIR"); dir && *dir) {
        cfg.output_dir = dir;
        cfg.resolved["run.output_dir"] = dir;
    }
    if (const char* w = std::getenv("FBNS_WORKERS"); w && *w) {
        char* end = nullptr;
        const long n = std::strtol(w, &end, 10);
        if (*end != '\0' || n < 1) throw ConfigError("FBNS_WORKERS must be a positive integer");
        cfg.workers = static_cast<int>(n);
        cfg.resolved["run.workers"] = std::to_string(n);
    }
}

} // namespace fbns::cli
