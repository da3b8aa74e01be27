// Acceptance run: one line per criterion, nonzero exit if any criterion fails.
#include "fixtures.hpp"
#include "manufactured.hpp"

#include "fbns/analysis/decay.hpp"
#include "fbns/analysis/exponents.hpp"
#include "fbns/analysis/norms.hpp"
#include "fbns/geometry/hanzawa.hpp"
#include "fbns/geometry/surface.hpp"
#include "fbns/linear/boundary_forced.hpp"
#include "fbns/linear/boundary_kernel.hpp"
#include "fbns/linear/divergence.hpp"
#include "fbns/linear/propagator.hpp"
#include "fbns/nonlinear/picard.hpp"
#include "fbns/nonlinear/terms.hpp"
#include "fbns/spectral/ops.hpp"
#include "fbns/symbols/symbols.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace fbns;
using namespace fbns::testing;
using spectral::forward_transform;
using spectral::inverse_transform;
using spectral::Representation;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double twopi = 2.0 * pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 1 ------------------------------------------------------------------------
Outcome harmonic_extension_check() {
    constexpr double tol = 1e-10;
    const auto hg = spectral::make_hgrid(twopi, 128);
    const auto vg = cheb(8.0, 48);
    std::mt19937_64 rng(101);
    std::normal_distribution<double> nd;
    SurfaceField hs(hg, Representation::spectral);
    // band-limited: |k| <= 4, conjugate-symmetric
    for (int k1 = -4; k1 <= 4; ++k1)
        for (int k2 = -4; k2 <= 4; ++k2) {
            const auto m = hg->mode_of(k1, k2), mc = hg->conjugate(m);
            if (m > mc) continue;
            const cplx c = m == mc ? cplx(nd(rng)) : cplx(nd(rng), nd(rng));
            hs[m] = c / (1.0 + k1 * k1 + k2 * k2);
            hs[mc] = std::conj(hs[m]);
        }
    constexpr double time_limit = 1.0;
    const auto t0 = std::chrono::steady_clock::now();
    const auto eta = geometry::harmonic_extension(hs, vg);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto d = geometry::derivatives(eta);
    const double scale = inverse_transform(eta).max_abs();
    double res = 0.0;
    for (int z = 1; z < vg->size() - 1; ++z)
        for (std::size_t m = 0; m < hg->size(); ++m)
            res = std::max(res, std::abs(d.dd[0][0](0, z, m) + d.dd[1][1](0, z, m) + d.dd[2][2](0, z, m)));
    const double trace = max_diff(eta.trace(0), hs);
    return {res <= tol * scale && trace == 0.0 && elapsed < time_limit,
            fmt("laplacian residual %.2e relative (tol %.0e), trace error %.1e, extension %.3f s (limit %.0f s)",
                res / scale, tol, trace, elapsed, time_limit)};
}

// 2 ------------------------------------------------------------------------
Outcome resolvent_check() {
    constexpr double tol = 1e-7, spread = 10.0;
    const PhysicalParams pp;
    const auto g = cheb(12.0, 64);
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const symbols::SectorSpec sector{pi / 4, 1.0};
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const std::array<double, 2> xi{2.0 * u(rng), 2.0 * u(rng)};
        const cplx lam = std::polar(std::pow(10.0, 0.05 + 1.95 * (0.5 + 0.5 * u(rng))),
                                    (pi - sector.epsilon) * 0.999 * u(rng));
        const ManufacturedMode mm(xi, *g, pp);
        const auto d = mm.resolvent_data(lam, pp);
        const auto p = linear::solve_resolvent_mode(xi, lam, d, pp, g);
        double e = linear::mode_residual(p, lam, d, pp).relative();
        for (int c = 0; c < 3; ++c) e = std::max(e, (p.U[c] - mm.U[c]).norm() / mm.U[c].norm());
        worst = std::max(worst, e);
    }
    const ManufacturedMode mm({1.0, 0.5}, *g, pp);
    const Eigen::MatrixXcd D2 = (g->D() * g->D()).cast<cplx>();
    std::vector<double> C;
    for (int i = 0; i <= 12; ++i)
        for (double th : {0.0, 1.1, 2.3, -1.1, -2.3}) {
            const cplx lam = std::polar(1.01 * std::pow(1e4 / 1.01, i / 12.0), th);
            const auto d = mm.resolvent_data(lam, pp);
            const auto p = linear::solve_resolvent_mode(mm.xi, lam, d, pp, g);
            double lhs = 0.0, rhs = (1.0 + mm.A * mm.A) * std::abs(d.K);
            for (int c = 0; c < 3; ++c) {
                lhs += std::abs(lam) * p.U[c].norm() + (D2 * p.U[c]).norm();
                rhs += d.F[c].norm();
            }
            C.push_back(lhs / rhs);
        }
    std::sort(C.begin(), C.end());
    const double med = C[C.size() / 2];
    const double fac = std::max(C.back() / med, med / C.front());
    return {worst <= tol && fac <= spread,
            fmt("max relative error %.2e (tol %.0e), estimate ratio spread %.2f of median (limit %.0f)", worst, tol,
                fac, spread)};
}

// 3 ------------------------------------------------------------------------
Outcome cross_validation_check() {
    constexpr double tol = 1e-6;
    constexpr int n = 160;
    const PhysicalParams pp;
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const std::array<double, 2> xi{3 * u(rng), 3 * u(rng)};
        const cplx lam = std::polar(std::pow(10.0, 1.5 * u(rng) + 1.5), 2.0 * u(rng));
        const double L = linear::adapted_depth(std::hypot(xi[0], xi[1]), lam, 1.0, 100.0, 30.0);
        const auto g = cheb(L, n);
        linear::ModeData d = linear::ModeData::zero(n);
        d.h = {cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
        linear::ResolventOptions o;
        o.check_sector = false;
        o.free_surface = false;
        const auto p = linear::solve_resolvent_mode(xi, lam, d, pp, g, o);
        const auto v = linear::solve_boundary_forced_mode(xi, lam, d.h, g->nodes(), 1.0);
        double num = 0.0, den = 0.0;
        for (int c = 0; c < 3; ++c) {
            num += (p.U[c] - v[c]).squaredNorm();
            den += v[c].squaredNorm();
        }
        worst = std::max(worst, std::sqrt(num / den));
    }
    return {worst <= tol, fmt("max relative L2 mismatch %.2e over 50 samples (tol %.0e)", worst, tol)};
}

// 4 ------------------------------------------------------------------------
Outcome lopatinskii_check() {
    constexpr double limit = 1e3;
    const symbols::SectorSpec sec{pi / 4, 1.0};
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double lo = 1e300, hi = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const double r = std::exp(std::log(1e-3) + std::log(1e7) * u(rng));
        const double ph = twopi * u(rng);
        const cplx lam = std::polar(std::exp(std::log(1.0 + 1e-9) + std::log(1e8) * u(rng)),
                                    (pi - sec.epsilon) * (2 * u(rng) - 1) * (1 - 1e-9));
        const auto b = symbols::make_bundle({r * std::cos(ph), r * std::sin(ph)}, lam, 1.0);
        const double ratio = std::abs(b.D) / std::pow(std::sqrt(std::abs(lam)) + b.A, 3);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo > 0.0 && hi / lo < limit, fmt("min %.3e, max/min %.2f (limit %.0e)", lo, hi / lo, limit)};
}

// 5 ------------------------------------------------------------------------
Outcome kernel_check() {
    constexpr double tol = 0.1, q = 3.19, A = 0.03;
    const auto hg = spectral::make_hgrid(twopi / A, 8);
    const auto vg = cheb(30.0, 96);
    linear::VectorSurface f{SurfaceField(hg, Representation::spectral), SurfaceField(hg, Representation::spectral),
                            SurfaceField(hg, Representation::spectral)};
    f[0][hg->mode_of(1, 0)] = 0.5;
    f[0][hg->mode_of(-1, 0)] = 0.5;
    std::vector<double> taus;
    for (int i = 0; i < 12; ++i) taus.push_back(0.2 * std::pow(25.0, i / 11.0));
    linear::KernelOptions o;
    o.nodes_per_ray = 160;
    const auto s = linear::boundary_kernel_norms(f, taus, vg, q, o);
    std::vector<double> y0, y1;
    for (const auto& k : s) {
        y0.push_back(std::exp(k.tau) * k.norm0);
        y1.push_back(std::exp(k.tau) * k.norm1);
    }
    const double s0 = loglog_slope(taus, y0), s1 = loglog_slope(taus, y1);
    const double t0 = -0.5 + 0.5 / q, t1 = -1.0 + 0.5 / q;
    return {std::abs(s0 - t0) <= tol && std::abs(s1 - t1) <= tol,
            fmt("l=0 slope %.3f target %.3f, l=1 slope %.3f target %.3f (tol %.2f)", s0, t0, s1, t1, tol)};
}

// 6 ------------------------------------------------------------------------
Outcome decay_check() {
    constexpr double tol = 0.15, q = 3.19, t_min = 5.0, t_max = 200.0;
    constexpr double box = 512.0, sigma = 3.0, tail = 0.65;
    const double qb = q / 2.0;
    const auto hg = spectral::make_hgrid(box, 128);
    const auto vg = cheb(100.0, 64);
    const PhysicalParams pp;
    const linear::ModalPropagator prop(hg, vg, pp);
    // h0 has an algebraic tail that is just inside L_{q/2}; its box mean is
    // removed since the periodic box conserves it. u0 is a Gaussian vortex ring.
    SurfaceField h0(hg, Representation::physical);
    HalfSpaceField u0(hg, vg, 3, Representation::physical);
    const double c = 0.5 * box;
    for (int i = 0; i < hg->n(); ++i)
        for (int j = 0; j < hg->n(); ++j) {
            const double x = hg->x(i) - c, y = hg->x(j) - c, r2 = (x * x + y * y) / (sigma * sigma);
            const auto m = hg->index(i, j);
            h0[m] = std::pow(1.0 + r2, -tail);
            for (int z = 0; z < vg->size(); ++z) {
                const double x3 = vg->node(z);
                const double gz = std::exp(-r2 - x3 * x3 / (sigma * sigma));
                u0(0, z, m) = 2.0 * y / (sigma * sigma) * gz;
                u0(1, z, m) = -2.0 * x / (sigma * sigma) * gz;
            }
        }
    auto h0s = forward_transform(h0);
    auto u0s = forward_transform(u0);
    spectral::zero_nyquist(h0s);
    spectral::zero_nyquist(u0s);
    h0s[0] = 0.0;

    std::vector<double> ts, nu, ngu, nh;
    constexpr int samples = 24;
    for (int k = 0; k < samples; ++k) {
        const double t = t_min * std::pow(t_max / t_min, k / (samples - 1.0));
        const auto s = prop.evolve(u0s, h0s, {t});
        ts.push_back(t);
        nu.push_back(analysis::derivative_norm(s.u[0], 0, q));
        ngu.push_back(analysis::derivative_norm(s.u[0], 1, q));
        nh.push_back(spectral::lr_norm(inverse_transform(s.h[0]), q));
    }
    const auto rates = analysis::rate_exponents(qb, q);
    struct Item {
        const char* name;
        const std::vector<double>* v;
        double target;
    };
    const Item items[] = {{"|u|_q", &nu, rates.m}, {"|grad u|_q", &ngu, rates.n + 0.125}, {"|h|_q", &nh, 1 / qb - 1 / q}};
    bool pass = true;
    std::ostringstream os;
    for (const auto& it : items) {
        const auto f = analysis::fit_decay(ts, *it.v, t_min, t_max);
        // window-end sensitivity: refit with each end pulled in by a factor 2
        const double a = analysis::fit_decay(ts, *it.v, 2 * t_min, t_max).exponent;
        const double b = analysis::fit_decay(ts, *it.v, t_min, t_max / 2).exponent;
        const auto rep = analysis::make_decay_report(it.name, f, it.target, tol, t_min, t_max);
        pass = pass && rep.pass;
        os << fmt("%s %.3f+-%.3f target %.3f [%s, window shift %+.3f/%+.3f]; ", it.name, f.exponent, f.stderr_,
                  it.target, rep.pass ? "ok" : "off", a - f.exponent, b - f.exponent);
    }
    os << fmt("tol %.2f", tol);
    return {pass, os.str()};
}

// 7 ------------------------------------------------------------------------
Outcome quadratic_check() {
    constexpr double limit = 1.9;
    const auto hg = spectral::make_hgrid(twopi, 16);
    const auto vg = cheb(8.0, 40);
    const PhysicalParams pp;
    std::vector<double> eps, size;
    for (double e : {1e-1, 1e-2, 1e-3}) {
        auto v = forward_transform(sample(hg, vg, 3, [](int c, double x1, double x2, double y3) {
            return std::sin(x1 + c * x2) * std::exp(y3) * (1.0 + 0.5 * c * y3);
        }));
        v *= e;
        const auto s = geometry::make_height_state(
            forward_transform(sample(hg, [e](double x1, double) { return e * std::cos(x1); })), vg);
        const auto t = nonlinear::assemble_nonlinear(v, s, nullptr, pp);
        auto hr = forward_transform(geometry::curvature_remainder(s.h));
        spectral::zero_nyquist(hr);
        hr *= -pp.c_sigma;
        SurfaceField h3 = t.H[2];
        h3 -= hr;
        const double n = inverse_transform(t.F()).max_abs() + inverse_transform(t.G).max_abs() +
                         inverse_transform(t.Gvec).max_abs() + inverse_transform(t.H[0]).max_abs() +
                         inverse_transform(t.H[1]).max_abs() + inverse_transform(h3).max_abs() +
                         inverse_transform(t.K).max_abs();
        eps.push_back(e);
        size.push_back(n);
    }
    const double slope = loglog_slope(eps, size);
    return {slope >= limit, fmt("log-log slope %.4f (limit %.1f)", slope, limit)};
}

// 8 ------------------------------------------------------------------------
Outcome picard_check() {
    constexpr double ratio_limit = 0.5, amp = 1e-3;
    const auto hg = spectral::make_hgrid(twopi, 8);
    const auto vg = cheb(8.0, 40);
    HalfSpaceField v0(hg, vg, 3, Representation::spectral);
    SurfaceField h0(hg, Representation::spectral);
    h0[hg->mode_of(1, 0)] = amp / 2;
    h0[hg->mode_of(-1, 0)] = amp / 2;
    nonlinear::PicardOptions o;
    o.horizon = 5.0;
    const auto r = nonlinear::picard_solve(v0, h0, PhysicalParams{}, o);
    double worst = 0.0;
    for (double q : r.report.ratios) worst = std::max(worst, q);
    const double res = r.report.residual.max_abs();
    const bool pass = r.report.converged && !r.report.ratios.empty() && worst <= ratio_limit && res <= 10 * o.tol;
    return {pass, fmt("%d iterates, max ratio %.2e (limit %.1f), residual %.2e (limit %.0e)", r.report.iterates,
                      worst, ratio_limit, res, 10 * o.tol)};
}

// 9 ------------------------------------------------------------------------
Outcome divergence_check() {
    constexpr double limit = 1.8;
    const auto hg = spectral::make_hgrid(twopi, 8);
    std::vector<double> hs, err;
    for (int n : {65, 129}) {
        const auto vg = spectral::make_vgrid(spectral::VerticalScheme::finite_difference, 8.0, n);
        const auto gs = forward_transform(sample(hg, vg, 1, [](int, double x1, double, double x3) {
            const double s = (x3 + 4.0) / 3.0;
            return std::abs(s) < 1.0 ? std::sin(x1) * std::pow(1.0 - s * s, 4) : 0.0;
        }));
        const auto d = linear::solve_divergence(gs);
        auto div = spectral::derivative(d.component(0), 0);
        div += spectral::derivative(d.component(1), 1);
        div += spectral::apply_vertical(d.component(2), vg->D());
        double e = 0.0;
        for (int z = 2; z < n - 2; ++z)
            for (std::size_t m = 0; m < hg->size(); ++m) e = std::max(e, std::abs(div(0, z, m) - gs(0, z, m)));
        hs.push_back(8.0 / (n - 1));
        err.push_back(e);
    }
    const double order = std::log(err[0] / err[1]) / std::log(hs[0] / hs[1]);
    return {order >= limit, fmt("errors %.2e -> %.2e, observed order %.3f (limit %.1f)", err[0], err[1], order, limit)};
}

// 10 -----------------------------------------------------------------------
Outcome config_check() {
    int sampled = 0, valid = 0, mismatch = 0;
    double min_p = 1e300;
    // exhaustive sweep of the (p, q) plane
    for (int i = 0; i <= 2000; ++i)
        for (int j = 0; j <= 200; ++j) {
            const double p = 2.0 + 1e-9 + 998.0 * i / 2000.0, q = 3.0 + 0.2 * j / 200.0;
            if (analysis::in_nonlinear_range(p, q)) min_p = std::min(min_p, p);
        }
    std::mt19937_64 rng(1010);
    std::uniform_real_distribution<double> up(1.5, 500.0), uq(2.5, 3.5), ut(0.0, 1.0);
    for (int k = 0; k < 100000; ++k) {
        analysis::ExponentConfig c;
        c.p = up(rng);
        c.q = uq(rng);
        c.theta = ut(rng);
        const auto r = analysis::validate_config(c, analysis::WeightConfig::standard(c.q));
        const bool arith = c.p > 2.0 && c.q > 3.0 && c.q < 16.0 / 5.0 && 2.0 / c.p + 3.0 / c.q < 1.0;
        ++sampled;
        if (r.pq != arith) ++mismatch;
        if (r.pq) {
            ++valid;
            min_p = std::min(min_p, c.p);
        }
    }
    return {mismatch == 0 && min_p > 32.0 && valid > 0,
            fmt("%d random configs, %d in range, %d mismatches, smallest admissible p %.3f", sampled, valid, mismatch,
                min_p)};
}

// 11 -----------------------------------------------------------------------
Outcome curvature_check() {
    const auto hg = spectral::make_hgrid(twopi, 64);
    std::vector<double> c;
    for (double e : {1e-1, 1e-2, 1e-3}) {
        const auto h = sample(hg, [e](double x1, double) { return e * std::cos(x1); });
        const auto geo = geometry::surface_normal_curvature(h);
        double r = 0.0;
        for (int i = 0; i < hg->n(); ++i)
            for (int j = 0; j < hg->n(); ++j)
                r = std::max(r, std::abs(geo.kappa[hg->index(i, j)] + e * std::cos(hg->x(i))));
        c.push_back(r / (e * e * e));
    }
    const double d1 = std::abs(c[1] - c[0]), d2 = std::abs(c[2] - c[1]);
    const bool pass = std::all_of(c.begin(), c.end(), [](double x) { return std::isfinite(x) && x < 10.0; }) &&
                      d2 <= d1 && d2 <= 1e-3 * c[2];
    return {pass, fmt("ratios %.6f, %.6f, %.6f", c[0], c[1], c[2])};
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all = {
        {1, "harmonic extension", 30.0, harmonic_extension_check},
        {2, "manufactured resolvent", 30.0, resolvent_check},
        {3, "boundary-forced cross-validation", 30.0, cross_validation_check},
        {4, "Lopatinskii audit", 10.0, lopatinskii_check},
        {5, "boundary kernel decay", 120.0, kernel_check},
        {6, "semigroup decay exponents", 600.0, decay_check},
        {7, "quadratic smallness", 60.0, quadratic_check},
        {8, "Picard contraction", 600.0, picard_check},
        {9, "divergence corrector order", 60.0, divergence_check},
        {10, "configuration logic", 5.0, config_check},
        {11, "curvature remainder", 10.0, curvature_check},
    };
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    int failed = 0;
    for (const auto& c : all) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = dt <= c.budget_s;
        const bool ok = o.pass && in_time;
        failed += ok ? 0 : 1;
        std::printf("[%s] %2d %s: %s; %.1f s of %.0f s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.detail.c_str(), dt, c.budget_s);
        std::fflush(stdout);
    }
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
