#include "scenarios.hpp"

#include "fbns/analysis/decay.hpp"
#include "fbns/analysis/norms.hpp"
#include "fbns/error.hpp"
#include "fbns/linear/boundary_forced.hpp"
#include "fbns/linear/divergence.hpp"
#include "fbns/linear/propagator.hpp"
#include "fbns/nonlinear/picard.hpp"
#include "fbns/parallel.hpp"
#include "fbns/spectral/ops.hpp"
#include "fbns/spectral/transform.hpp"
#include "fbns/symbols/multiplier.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

namespace fbns::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using spectral::forward_transform;
using spectral::HalfSpaceField;
using spectral::inverse_transform;
using spectral::Representation;
using spectral::SurfaceField;

bool RunOutcome::pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

namespace {

constexpr double pi = std::numbers::pi;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10e", v);
    return buf;
}

Verdict at_most(std::string check, double value, double limit) {
    return {std::move(check), value, limit, "<=", std::isfinite(value) && value <= limit};
}

Verdict at_least(std::string check, double value, double limit) {
    return {std::move(check), value, limit, ">=", std::isfinite(value) && value >= limit};
}

struct Run {
    const ScenarioConfig& cfg;
    fs::path dir;
    RunOutcome out;
    json extra = json::object();

    void write(const std::string& name, const std::string& content) {
        std::ofstream f(dir / name, std::ios::binary);
        f << content;
        if (!f) fail(ErrorKind::invalid_input, "cannot write " + (dir / name).string());
        out.files.push_back(name);
    }
};

// Initial data ---------------------------------------------------------------

struct InitialData {
    HalfSpaceField u;
    SurfaceField h;
};

InitialData initial_data(const DataConfig& d, const spectral::HGridPtr& hg, const spectral::VGridPtr& vg) {
    SurfaceField h(hg, Representation::physical);
    HalfSpaceField u(hg, vg, 3, Representation::physical);
    if (d.kind != "zero") {
        const double c = 0.5 * hg->box_length(), w2 = d.width * d.width;
        for (int i = 0; i < hg->n(); ++i)
            for (int j = 0; j < hg->n(); ++j) {
                const double x = hg->x(i) - c, y = hg->x(j) - c, r2 = (x * x + y * y) / w2;
                const auto m = hg->index(i, j);
                if (d.kind == "mode")
                    h[m] = d.amplitude * std::cos(2.0 * pi * hg->x(i) / hg->box_length());
                else if (d.kind == "gaussian")
                    h[m] = d.amplitude * std::exp(-r2);
                else
                    h[m] = d.amplitude * std::pow(1.0 + r2, -d.tail);
                if (!d.vortex) continue;
                for (int z = 0; z < vg->size(); ++z) {
                    const double x3 = vg->node(z);
                    const double g = d.amplitude * std::exp(-r2 - x3 * x3 / w2);
                    u(0, z, m) = 2.0 * y / w2 * g;
                    u(1, z, m) = -2.0 * x / w2 * g;
                }
            }
    }
    InitialData out{forward_transform(u), forward_transform(h)};
    spectral::zero_nyquist(out.u);
    spectral::zero_nyquist(out.h);
    if (d.zero_mean) out.h[0] = 0.0;
    return out;
}

// linear-decay ---------------------------------------------------------------

void linear_decay(Run& run) {
    const auto& cfg = run.cfg;
    const double q = cfg.exponents.q, qb = q / 2.0;
    if (!(q >= 2.0 && q <= 4.0)) throw ConfigError("key 'exponents.q': linear-decay needs q in [2, 4]");
    const auto hg = spectral::make_hgrid(cfg.box, cfg.n);
    const auto vg = spectral::make_vgrid(cfg.scheme, cfg.depth, cfg.nz);
    const linear::ModalPropagator prop(hg, vg, cfg.physics);
    const auto init = initial_data(cfg.data, hg, vg);

    std::vector<double> ts, nu, ngu, nh;
    for (int k = 0; k < cfg.samples; ++k) {
        const double t = cfg.t_min * std::pow(cfg.t_max / cfg.t_min, k / (cfg.samples - 1.0));
        const auto s = prop.evolve(init.u, init.h, {t});
        ts.push_back(t);
        nu.push_back(analysis::derivative_norm(s.u[0], 0, q));
        ngu.push_back(analysis::derivative_norm(s.u[0], 1, q));
        nh.push_back(spectral::lr_norm(inverse_transform(s.h[0]), q));
    }
    std::string series = "t,u_lq,grad_u_lq,h_lq\n";
    for (std::size_t k = 0; k < ts.size(); ++k)
        series += num(ts[k]) + "," + num(nu[k]) + "," + num(ngu[k]) + "," + num(nh[k]) + "\n";
    run.write("timeseries.csv", series);

    const auto rates = analysis::rate_exponents(qb, q);
    struct Item {
        const char* name;
        const char* label;
        const std::vector<double>* v;
        double target;
    };
    const Item items[] = {{"u_lq", "m(q/2,q)", &nu, rates.m},
                          {"grad_u_lq", "n(q/2,q)+1/8", &ngu, rates.n + 0.125},
                          {"h_lq", "2/q-1/q", &nh, 1.0 / qb - 1.0 / q}};
    std::vector<analysis::DecayReport> reports;
    std::string window = "quantity,t_min,t_max,fitted,stderr\n";
    json targets = json::object();
    for (const auto& it : items) {
        targets[it.name] = {{"label", it.label}, {"value", it.target}};
        const bool zero = *std::max_element(it.v->begin(), it.v->end()) == 0.0;
        if (zero) {
            // identically zero trajectory: nothing decays, nothing to fit
            reports.push_back({it.name, 0.0, 0.0, it.target, cfg.tol_decay, cfg.t_min, cfg.t_max, true});
            run.out.verdicts.push_back(at_most(std::string("max ") + it.name, 0.0, 0.0));
            continue;
        }
        const auto fit = analysis::fit_decay(ts, *it.v, cfg.t_min, cfg.t_max);
        reports.push_back(analysis::make_decay_report(it.name, fit, it.target, cfg.tol_decay, cfg.t_min, cfg.t_max));
        run.out.verdicts.push_back(
            at_most(std::string("|exponent - target| ") + it.name, std::abs(fit.exponent - it.target), cfg.tol_decay));
        for (const auto& [a, b] : {std::pair{cfg.t_min, cfg.t_max}, std::pair{2.0 * cfg.t_min, cfg.t_max},
                                   std::pair{cfg.t_min, 0.5 * cfg.t_max}}) {
            const auto f = analysis::fit_decay(ts, *it.v, a, b);
            window += std::string(it.name) + "," + num(a) + "," + num(b) + "," + num(f.exponent) + "," +
                      num(f.stderr_) + "\n";
        }
    }
    std::ostringstream decay;
    analysis::write_decay_csv(decay, reports);
    run.write("decay.csv", decay.str());
    run.write("window.csv", window);
    run.extra["targets"] = targets;
    run.extra["max_growth"] = prop.max_growth();
}

// boundary-forced ------------------------------------------------------------

void boundary_forced(Run& run) {
    const auto& cfg = run.cfg;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    struct Sample {
        std::array<double, 2> xi;
        cplx lam;
        std::array<cplx, 3> h;
    };
    std::vector<Sample> samples;
    for (int k = 0; k < cfg.sweep_samples; ++k) {
        Sample s;
        s.xi = {3 * u(rng), 3 * u(rng)};
        s.lam = std::polar(std::pow(10.0, 1.5 * u(rng) + 1.5), 2.0 * u(rng));
        s.h = {cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        samples.push_back(s);
    }
    std::vector<double> err(samples.size()), depth(samples.size());
    parallel_for(samples.size(), [&](std::size_t k) {
        const auto& s = samples[k];
        const double A = std::hypot(s.xi[0], s.xi[1]);
        depth[k] = linear::adapted_depth(A, s.lam, cfg.physics.mu, cfg.depth, 30.0);
        const auto g = spectral::make_vgrid(spectral::VerticalScheme::collocation, depth[k], cfg.nz);
        linear::ModeData d = linear::ModeData::zero(cfg.nz);
        d.h = s.h;
        linear::ResolventOptions o;
        o.check_sector = false;
        o.free_surface = false;
        const auto p = linear::solve_resolvent_mode(s.xi, s.lam, d, cfg.physics, g, o);
        const auto v = linear::solve_boundary_forced_mode(s.xi, s.lam, d.h, g->nodes(), cfg.physics.mu);
        double a = 0.0, b = 0.0;
        for (int c = 0; c < 3; ++c) {
            a += (p.U[c] - v[c]).squaredNorm();
            b += v[c].squaredNorm();
        }
        err[k] = std::sqrt(a / b);
    });
    std::string csv = "sample,xi1,xi2,lambda_re,lambda_im,depth,mismatch\n";
    for (std::size_t k = 0; k < samples.size(); ++k)
        csv += std::to_string(k) + "," + num(samples[k].xi[0]) + "," + num(samples[k].xi[1]) + "," +
               num(samples[k].lam.real()) + "," + num(samples[k].lam.imag()) + "," + num(depth[k]) + "," +
               num(err[k]) + "\n";
    run.write("crossval.csv", csv);
    run.out.verdicts.push_back(
        at_most("max relative L2 mismatch", *std::max_element(err.begin(), err.end()), cfg.tol_crossval));
}

// resolvent-sweep ------------------------------------------------------------

void resolvent_sweep(Run& run) {
    const auto& cfg = run.cfg;
    const auto g = spectral::make_vgrid(cfg.scheme, cfg.depth, cfg.nz);
    const int n = g->size();
    const double A = std::hypot(cfg.sweep_xi[0], cfg.sweep_xi[1]);
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> nd;
    // smooth random forcing: a e^{x3} + b x3 e^{2 x3} per component
    linear::ModeData d = linear::ModeData::zero(n);
    for (int c = 0; c < 3; ++c) {
        const cplx a(nd(rng), nd(rng)), b(nd(rng), nd(rng));
        for (int z = 0; z < n; ++z) {
            const double x3 = g->node(z);
            d.F[c](z) = a * std::exp(x3) + b * x3 * std::exp(2.0 * x3);
        }
    }
    d.K = cplx(nd(rng), nd(rng));
    const double open = pi - cfg.sector.epsilon;
    const double angles[] = {0.0, 0.5 * open, -0.5 * open, 0.95 * open, -0.95 * open};
    const auto op = linear::build_mode_operator(A, g, cfg.physics);
    const Eigen::MatrixXcd D2 = (g->D() * g->D()).cast<cplx>();
    struct Row {
        double angle, modulus, residual, ratio;
    };
    std::vector<Row> rows;
    for (double th : angles)
        for (int i = 0; i < cfg.sweep_points; ++i) {
            const double r = cfg.lambda_min * std::pow(cfg.lambda_max / cfg.lambda_min, i / (cfg.sweep_points - 1.0));
            const cplx lam = std::polar(r, th);
            require(cfg.sector.contains(lam), ErrorKind::domain, "sweep point lies outside the resolvent sector");
            const auto p = linear::solve_resolvent_mode(op, cfg.sweep_xi, lam, d);
            const double res = linear::mode_residual(p, lam, d, cfg.physics).relative();
            double lhs = 0.0, rhs = (1.0 + A * A) * std::abs(d.K);
            for (int c = 0; c < 3; ++c) {
                lhs += r * p.U[c].norm() + (D2 * p.U[c]).norm();
                rhs += d.F[c].norm();
            }
            rows.push_back({th, r, res, lhs / rhs});
        }
    std::string csv = "lambda_arg,lambda_abs,relative_residual,estimate_ratio\n";
    std::vector<double> ratios;
    double worst = 0.0;
    for (const auto& row : rows) {
        csv += num(row.angle) + "," + num(row.modulus) + "," + num(row.residual) + "," + num(row.ratio) + "\n";
        ratios.push_back(row.ratio);
        worst = std::max(worst, row.residual);
    }
    run.write("sweep.csv", csv);
    std::sort(ratios.begin(), ratios.end());
    const double med = ratios[ratios.size() / 2];
    run.out.verdicts.push_back(at_most("max relative residual", worst, cfg.tol_residual));
    run.out.verdicts.push_back(
        at_most("estimate ratio spread", std::max(ratios.back() / med, med / ratios.front()), cfg.tol_spread));
    run.extra["estimate_median"] = med;
}

// multiplier-audit -----------------------------------------------------------

struct AuditItem {
    const char* id;
    double order;
    int type;
    double power;
};

const std::vector<AuditItem>& audit_catalogue() {
    static const std::vector<AuditItem> items = {
        {"A^s", 1, 2, 1},           {"B^s", 1, 1, 1},
        {"D^s", 3, 2, 1},           {"1/B", -1, 1, 0},
        {"A*B", 2, 2, 0},           {"B/D", -2, 2, 0},
        {"xi1/|xi|", 0, 2, 0},      {"bf:xxB/AD", 0, 2, 0},
        {"bf:ix(B2+A2)/AD", 0, 2, 0}, {"bf:xx(3B-A)/BD", 0, 2, 0},
        {"bf:ix(B-A)/D", 0, 2, 0},  {"bf:ixB/D", 0, 2, 0},
        {"bf:(B2+A2)/D", 0, 2, 0},  {"bf:A(B+A)/D", 0, 2, 0},
    };
    return items;
}

void multiplier_audit(Run& run) {
    const auto& cfg = run.cfg;
    std::vector<AuditItem> chosen;
    for (const auto& id : cfg.audit_symbols) {
        if (id == "default") {
            chosen.insert(chosen.end(), audit_catalogue().begin(), audit_catalogue().end());
            continue;
        }
        const auto& cat = audit_catalogue();
        const auto it = std::find_if(cat.begin(), cat.end(), [&](const AuditItem& a) { return id == a.id; });
        if (it == cat.end()) throw ConfigError("key 'audit.symbols': no audit class known for '" + id + "'");
        chosen.push_back(*it);
    }
    symbols::AuditSpec spec;
    spec.xi_min = cfg.audit_xi_min;
    spec.xi_max = cfg.audit_xi_max;
    spec.lambda_max = cfg.audit_lambda_max;
    spec.sample_budget = static_cast<std::size_t>(cfg.audit_samples);
    spec.seed = cfg.seed;
    spec.mu = cfg.physics.mu;
    std::vector<symbols::AuditResult> results(chosen.size());
    parallel_for(chosen.size(), [&](std::size_t k) {
        const auto& a = chosen[k];
        results[k] = symbols::multiplier_bound_estimate(a.id, a.order, a.type, cfg.sector, spec, a.power);
    });
    std::ostringstream os;
    symbols::write_audit_csv(os, results);
    run.write("audit.csv", os.str());
    for (const auto& r : results) run.out.verdicts.push_back(at_most("constant " + r.symbol_id, r.constant, cfg.tol_audit));
}

// nonlinear-small-data -------------------------------------------------------

void nonlinear_small_data(Run& run) {
    const auto& cfg = run.cfg;
    const auto val = analysis::validate_config(cfg.exponents, cfg.weights);
    if (!val.valid()) {
        for (const auto& item : val.items)
            if (!item.pass)
                throw ConfigError("exponent configuration rejected: " + item.group + ": " + item.condition);
        throw ConfigError("exponent configuration rejected");
    }
    const auto hg = spectral::make_hgrid(cfg.box, cfg.n);
    const auto vg = spectral::make_vgrid(cfg.scheme, cfg.depth, cfg.nz);
    const auto init = initial_data(cfg.data, hg, vg);
    nonlinear::PicardOptions o;
    o.tol = cfg.tol_picard;
    o.horizon = cfg.horizon;
    o.dt = cfg.dt;
    o.exponents = cfg.exponents;
    o.weights = cfg.weights;
    const auto r = nonlinear::picard_solve(init.u, init.h, cfg.physics, o);
    const auto& rep = r.report;
    run.write("picard.json", nonlinear::to_json(rep));
    std::string csv = "iterate,difference,ratio,correction_norm\n";
    for (std::size_t k = 0; k < rep.diffs.size(); ++k)
        csv += std::to_string(k + 1) + "," + num(rep.diffs[k]) + "," + (k == 0 ? "" : num(rep.ratios[k - 1])) + "," +
               (k < rep.norms.size() ? num(rep.norms[k]) : "") + "\n";
    run.write("iterates.csv", csv);
    std::ostringstream norms;
    analysis::write_norm_csv(norms, analysis::weighted_norms(r.z, cfg.exponents, cfg.weights));
    run.write("norms.csv", norms.str());
    const double worst = rep.ratios.empty() ? 0.0 : *std::max_element(rep.ratios.begin(), rep.ratios.end());
    run.out.verdicts.push_back(
        at_most("final iterate difference", rep.diffs.empty() ? 0.0 : rep.diffs.back(), cfg.tol_picard));
    run.out.verdicts.push_back(at_most("max contraction ratio", worst, cfg.tol_contraction));
    run.out.verdicts.push_back(at_most("system residual", rep.residual.max_abs(), 10.0 * cfg.tol_picard));
    run.extra["data_norm"] = rep.data_norm;
}

// divergence-corrector -------------------------------------------------------

void divergence_corrector(Run& run) {
    const auto& cfg = run.cfg;
    const auto hg = spectral::make_hgrid(cfg.box, cfg.n);
    const double L = cfg.depth, k1 = 2.0 * pi / cfg.box;
    std::vector<double> hs, err;
    std::string csv = "nodes,spacing,max_error,observed_order\n";
    for (int n : cfg.divergence_levels) {
        if (n < 9) throw ConfigError("key 'divergence.levels': need at least 9 nodes per level");
        const auto vg = spectral::make_vgrid(spectral::VerticalScheme::finite_difference, L, n);
        HalfSpaceField g(hg, vg, 1, Representation::physical);
        for (int z = 0; z < n; ++z) {
            const double s = (vg->node(z) + 0.5 * L) / (0.375 * L);
            if (std::abs(s) >= 1.0) continue;
            for (int i = 0; i < hg->n(); ++i)
                for (int j = 0; j < hg->n(); ++j)
                    g(0, z, hg->index(i, j)) = std::sin(k1 * hg->x(i)) * std::pow(1.0 - s * s, 4);
        }
        const auto gs = forward_transform(g);
        const auto d = linear::solve_divergence(gs);
        auto div = spectral::derivative(d.component(0), 0);
        div += spectral::derivative(d.component(1), 1);
        div += spectral::apply_vertical(d.component(2), vg->D());
        double e = 0.0;
        for (int z = 2; z < n - 2; ++z)
            for (std::size_t m = 0; m < hg->size(); ++m) e = std::max(e, std::abs(div(0, z, m) - gs(0, z, m)));
        hs.push_back(L / (n - 1));
        err.push_back(e);
        const std::size_t k = err.size() - 1;
        const double order = k == 0 ? 0.0 : std::log(err[k - 1] / err[k]) / std::log(hs[k - 1] / hs[k]);
        csv += std::to_string(n) + "," + num(hs[k]) + "," + num(e) + "," + (k == 0 ? "" : num(order)) + "\n";
    }
    run.write("divergence.csv", csv);
    const std::size_t k = err.size() - 1;
    run.out.verdicts.push_back(
        at_least("observed order", std::log(err[k - 1] / err[k]) / std::log(hs[k - 1] / hs[k]), cfg.tol_order));
}

std::string verdict_csv(const std::vector<Verdict>& vs) {
    std::string s = "check,value,relation,limit,verdict\n";
    for (const auto& v : vs)
        s += v.check + "," + num(v.value) + "," + v.relation + "," + num(v.limit) + "," + (v.pass ? "pass" : "fail") +
             "\n";
    return s;
}

} // namespace

RunOutcome run_scenario(const ScenarioConfig& cfg) {
    set_worker_count(cfg.workers);
    Run run{cfg, fs::path(cfg.output_dir), {}};
    std::error_code ec;
    fs::create_directories(run.dir, ec);
    if (ec) fail(ErrorKind::invalid_input, "cannot create output directory " + cfg.output_dir);

    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.scenario == "linear-decay")
        linear_decay(run);
    else if (cfg.scenario == "boundary-forced")
        boundary_forced(run);
    else if (cfg.scenario == "resolvent-sweep")
        resolvent_sweep(run);
    else if (cfg.scenario == "multiplier-audit")
        multiplier_audit(run);
    else if (cfg.scenario == "nonlinear-small-data")
        nonlinear_small_data(run);
    else
        divergence_corrector(run);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    run.write("summary.csv", verdict_csv(run.out.verdicts));

    json meta;
    meta["scenario"] = cfg.scenario;
    meta["config"] = cfg.resolved;
    meta["sector"] = {{"gamma0", cfg.sector.gamma0}, {"epsilon", cfg.sector.epsilon}};
    meta["grid"] = {{"box", cfg.box}, {"n", cfg.n}, {"nz", cfg.nz}, {"depth", cfg.depth}};
    meta["scenario_data"] = run.extra;
    json verdicts = json::array();
    for (const auto& v : run.out.verdicts)
        verdicts.push_back(
            {{"check", v.check}, {"value", v.value}, {"relation", v.relation}, {"limit", v.limit}, {"pass", v.pass}});
    meta["verdicts"] = verdicts;
    meta["pass"] = run.out.pass();
    meta["files"] = run.out.files;
    meta["elapsed_seconds"] = elapsed;
    std::ofstream(run.dir / "metadata.json") << meta.dump(2) << "\n";
    run.out.files.push_back("metadata.json");
    return run.out;
}

// report ---------------------------------------------------------------------

namespace {

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::ifstream in(p);
    if (!in) fail(ErrorKind::invalid_input, "missing run artifact " + p.filename().string());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cells.push_back(c);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

std::string short_num(const std::string& s) {
    if (s.empty()) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", std::stod(s));
    return buf;
}

} // namespace

std::string emit_report(const std::string& run_dir) {
    const fs::path dir(run_dir);
    require(fs::is_directory(dir), ErrorKind::invalid_input, "not a run directory: " + run_dir);
    std::ifstream in(dir / "metadata.json");
    require(static_cast<bool>(in), ErrorKind::invalid_input, "missing run artifact metadata.json in " + run_dir);
    json meta;
    try {
        in >> meta;
    } catch (const json::exception& e) {
        fail(ErrorKind::invalid_input, std::string("unreadable metadata.json: ") + e.what());
    }
    const auto summary = read_csv(dir / "summary.csv");

    std::ostringstream os;
    char line[256];
    const std::string scenario = meta.value("scenario", "?");
    os << "scenario   " << scenario << "\n";
    const auto& c = meta["config"];
    os << "grid       " << c.value("grid.n", "?") << "^2 x " << c.value("grid.nz", "?") << ", box "
       << c.value("grid.box", "?") << ", depth " << c.value("grid.depth", "?") << "\n";
    os << "exponents  p " << c.value("exponents.p", "?") << ", q " << c.value("exponents.q", "?") << ", seed "
       << c.value("run.seed", "?") << "\n\n";

    if (scenario == "linear-decay") {
        const auto decay = read_csv(dir / "decay.csv");
        const auto& targets = meta["scenario_data"]["targets"];
        os << "decay exponents on [" << short_num(decay.size() > 1 ? decay[1][5] : "") << ", "
           << short_num(decay.size() > 1 ? decay[1][6] : "") << "]\n";
        std::snprintf(line, sizeof line, "  %-10s %-14s %9s %9s %9s %9s  %s\n", "quantity", "target", "value",
                      "fitted", "stderr", "tol", "verdict");
        os << line;
        for (std::size_t r = 1; r < decay.size(); ++r) {
            const auto& row = decay[r];
            const std::string label = targets.contains(row[0]) ? targets[row[0]].value("label", "") : "";
            std::snprintf(line, sizeof line, "  %-10s %-14s %9s %9s %9s %9s  %s\n", row[0].c_str(), label.c_str(),
                          short_num(row[3]).c_str(), short_num(row[1]).c_str(), short_num(row[2]).c_str(),
                          short_num(row[4]).c_str(), row[7].c_str());
            os << line;
        }
        os << "\n";
    } else if (scenario == "nonlinear-small-data") {
        const auto it = read_csv(dir / "iterates.csv");
        os << "Picard iterates\n";
        std::snprintf(line, sizeof line, "  %-8s %12s %12s\n", "iterate", "difference", "ratio");
        os << line;
        for (std::size_t r = 1; r < it.size(); ++r) {
            std::snprintf(line, sizeof line, "  %-8s %12s %12s\n", it[r][0].c_str(), short_num(it[r][1]).c_str(),
                          short_num(it[r].size() > 2 ? it[r][2] : "").c_str());
            os << line;
        }
        os << "\n";
    }

    os << "checks\n";
    int passed = 0, total = 0;
    for (std::size_t r = 1; r < summary.size(); ++r) {
        const auto& row = summary[r];
        if (row.size() < 5) fail(ErrorKind::invalid_input, "malformed summary.csv");
        std::snprintf(line, sizeof line, "  %-36s %11s %s %-11s %s\n", row[0].c_str(), short_num(row[1]).c_str(),
                      row[2].c_str(), short_num(row[3]).c_str(), row[4].c_str());
        os << line;
        ++total;
        passed += row[4] == "pass" ? 1 : 0;
    }
    os << "\n" << (passed == total ? "PASS" : "FAIL") << " (" << passed << " of " << total << " checks)\n";
    const std::string text = os.str();
    std::ofstream(dir / "report.txt") << text;
    return text;
}

} // namespace fbns::cli
