#include "fbns/symbols/multiplier.hpp"

#include "fbns/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>
#include <ostream>
#include <random>

namespace fbns::symbols {

namespace {

struct Eval {
    double xi1, xi2, A;
    cplx B, D;
};

using Builder = std::function<cplx(const Eval&, double power)>;

const std::map<std::string, Builder>& table() {
    static const std::map<std::string, Builder> t = {
        {"A^s", [](const Eval& e, double p) { return cplx(std::pow(e.A, p)); }},
        {"B^s", [](const Eval& e, double p) { return std::pow(e.B, p); }},
        {"D^s", [](const Eval& e, double p) { return std::pow(e.D, p); }},
        {"xi1/|xi|", [](const Eval& e, double) { return cplx(e.xi1 / e.A); }},
        {"xi1", [](const Eval& e, double) { return cplx(e.xi1); }},
        {"1/B", [](const Eval& e, double) { return 1.0 / e.B; }},
        {"A*B", [](const Eval& e, double) { return e.A * e.B; }},
        {"B/D", [](const Eval& e, double) { return e.B / e.D; }},
        {"bf:xxB/AD", [](const Eval& e, double) { return e.xi1 * e.xi1 * e.B / (e.A * e.D); }},
        {"bf:ix(B2+A2)/AD",
         [](const Eval& e, double) { return cplx(0.0, e.xi1) * (e.B * e.B + e.A * e.A) / (e.A * e.D); }},
        {"bf:xx(3B-A)/BD",
         [](const Eval& e, double) { return e.xi1 * e.xi1 * (3.0 * e.B - e.A) / (e.B * e.D); }},
        {"bf:ix(B-A)/D", [](const Eval& e, double) { return cplx(0.0, e.xi1) * (e.B - e.A) / e.D; }},
        {"bf:ixB/D", [](const Eval& e, double) { return cplx(0.0, e.xi1) * e.B / e.D; }},
        {"bf:(B2+A2)/D", [](const Eval& e, double) { return (e.B * e.B + e.A * e.A) / e.D; }},
        {"bf:A(B+A)/D", [](const Eval& e, double) { return e.A * (e.B + e.A) / e.D; }},
    };
    return t;
}

constexpr std::array<std::array<int, 2>, 6> kAlphas{{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};

cplx xi_derivative(const SymbolFn& m, double x1, double x2, cplx lam, std::array<int, 2> a, double h) {
    auto f = [&](double d1, double d2) { return m(x1 + d1, x2 + d2, lam); };
    if (a[0] == 0 && a[1] == 0) return f(0, 0);
    if (a[0] == 1 && a[1] == 0) return (f(h, 0) - f(-h, 0)) / (2 * h);
    if (a[0] == 0 && a[1] == 1) return (f(0, h) - f(0, -h)) / (2 * h);
    if (a[0] == 2) return (f(h, 0) - 2.0 * f(0, 0) + f(-h, 0)) / (h * h);
    if (a[1] == 2) return (f(0, h) - 2.0 * f(0, 0) + f(0, -h)) / (h * h);
    return (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h);
}

} // namespace

const MultiplierRegistry& MultiplierRegistry::instance() {
    static const MultiplierRegistry r;
    return r;
}

bool MultiplierRegistry::contains(const std::string& id) const { return table().count(id) > 0; }

std::vector<std::string> MultiplierRegistry::ids() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : table()) out.push_back(k);
    return out;
}

SymbolFn MultiplierRegistry::get(const std::string& id, double power, double mu) const {
    auto it = table().find(id);
    require(it != table().end(), ErrorKind::invalid_input, "unknown symbol id: " + id);
    Builder b = it->second;
    return [b, power, mu](double x1, double x2, cplx lam) {
        Eval e;
        e.xi1 = x1;
        e.xi2 = x2;
        std::tie(e.A, e.B) = eval_AB({x1, x2}, lam, mu);
        e.D = lopatinskii_D(e.A, e.B);
        return b(e, power);
    };
}

AuditResult multiplier_bound_estimate(const std::string& symbol_id, double s, int type, const SectorSpec& sector,
                                      const AuditSpec& spec, double power) {
    const auto m = MultiplierRegistry::instance().get(symbol_id, power, spec.mu);
    auto r = multiplier_bound_estimate(m, symbol_id, s, type, sector, spec);
    r.power = power;
    return r;
}

AuditResult multiplier_bound_estimate(const SymbolFn& m, const std::string& label, double s, int type,
                                      const SectorSpec& sector, const AuditSpec& spec) {
    sector.validate();
    require(type == 1 || type == 2, ErrorKind::invalid_input, "multiplier type must be 1 or 2");
    require(spec.sample_budget > 0 && spec.xi_min > 0 && spec.xi_max > spec.xi_min, ErrorKind::invalid_input,
            "invalid audit sampling spec");
    AuditResult res;
    res.symbol_id = label;
    res.order = s;
    res.type = type;
    for (bool tau : {false, true})
        for (const auto& a : kAlphas) {
            AuditRow row;
            row.alpha = a;
            row.tau_derivative = tau;
            res.rows.push_back(row);
        }

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double lam_min = std::max(sector.gamma0, 1e-3) * (1.0 + 1e-9);
    const double lx0 = std::log(spec.xi_min), lx1 = std::log(spec.xi_max);
    const double ll0 = std::log(lam_min), ll1 = std::log(spec.lambda_max);
    const double arg_max = std::numbers::pi - sector.epsilon;

    for (std::size_t k = 0; k < spec.sample_budget; ++k) {
        const double r = std::exp(lx0 + (lx1 - lx0) * unit(rng));
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        const double lr = std::exp(ll0 + (ll1 - ll0) * unit(rng));
        const double th = arg_max * (2.0 * unit(rng) - 1.0) * (1.0 - 1e-9);
        const double x1 = r * std::cos(phi), x2 = r * std::sin(phi);
        const cplx lam = std::polar(lr, th);
        const double scale = std::sqrt(lr) + r;
        // type 1 symbols vary on the scale |lambda|^{1/2} + |xi|, type 2 ones on |xi|
        const double h = 1e-4 * (1.0 + (type == 1 ? scale : r));
        const double ht = 1e-4 * (1.0 + lr);
        for (auto& row : res.rows) {
            cplx d;
            if (!row.tau_derivative) {
                d = xi_derivative(m, x1, x2, lam, row.alpha, h);
            } else {
                // tau d/dtau with lambda = gamma + i tau.
                const cplx dp = xi_derivative(m, x1, x2, lam + cplx(0.0, ht), row.alpha, h);
                const cplx dm = xi_derivative(m, x1, x2, lam - cplx(0.0, ht), row.alpha, h);
                d = lam.imag() * (dp - dm) / (2.0 * ht);
            }
            const int order = row.alpha[0] + row.alpha[1];
            const double w = type == 1 ? std::pow(scale, order - s) : std::pow(r, order) * std::pow(scale, -s);
            const double v = std::abs(d) * w;
            if (std::isfinite(v) && v > row.constant) {
                row.constant = v;
                row.argmax_xi = {x1, x2};
                row.argmax_lambda = lam;
            }
        }
    }
    for (std::size_t i = 0; i < res.rows.size(); ++i)
        if (res.rows[i].constant > res.constant) {
            res.constant = res.rows[i].constant;
            res.worst_row = i;
        }
    return res;
}

void write_audit_csv(std::ostream& os, const std::vector<AuditResult>& results, bool header) {
    if (header) os << "symbol_id,s,type,alpha1,alpha2,tau,constant,xi1,xi2,lambda_re,lambda_im\n";
    const auto old = os.precision(10);
    for (const auto& r : results)
        for (const auto& row : r.rows)
            os << r.symbol_id << ',' << r.order << ',' << r.type << ',' << row.alpha[0] << ',' << row.alpha[1] << ','
               << (row.tau_derivative ? 1 : 0) << ',' << row.constant << ',' << row.argmax_xi[0] << ','
               << row.argmax_xi[1] << ',' << row.argmax_lambda.real() << ',' << row.argmax_lambda.imag() << '\n';
    os.precision(old);
}

} // namespace fbns::symbols
