#include "fbns/analysis/norms.hpp"

#include "fbns/error.hpp"
#include "fbns/geometry/hanzawa.hpp"
#include "fbns/parallel.hpp"
#include "fbns/spectral/ops.hpp"
#include "fbns/spectral/transform.hpp"

#include <cmath>
#include <iomanip>

namespace fbns::analysis {

using spectral::Representation;

StateZ difference(const StateZ& a, const StateZ& b) {
    require(a.size() == b.size(), ErrorKind::invalid_input, "trajectories have different lengths");
    StateZ d;
    d.times = a.times;
    auto diff = [](const auto& x, const auto& y, auto& out) {
        require(x.size() == y.size(), ErrorKind::invalid_input, "trajectory fields differ in length");
        out.clear();
        for (std::size_t k = 0; k < x.size(); ++k) out.push_back(x[k] - y[k]);
    };
    diff(a.v, b.v, d.v);
    diff(a.q, b.q, d.q);
    diff(a.h, b.h, d.h);
    diff(a.eta, b.eta, d.eta);
    diff(a.dv, b.dv, d.dv);
    diff(a.dh, b.dh, d.dh);
    return d;
}

double derivative_norm(const HalfSpaceField& f, int order, double r) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            "derivative_norm expects a spectral field");
    require(order >= 0 && order <= 4, ErrorKind::invalid_input, "derivative order must be in [0, 4]");
    require(r >= 1.0, ErrorKind::invalid_input, "norm exponent must be >= 1");
    const std::size_t npts = f.nz() * f.nh2();
    std::vector<double> mag2(npts, 0.0);
    int count = 1;
    for (int k = 0; k < order; ++k) count *= 3;
    for (int seq = 0; seq < count; ++seq) {
        HalfSpaceField g = f;
        int s = seq;
        for (int k = 0; k < order; ++k) {
            g = spectral::derivative(g, s % 3);
            s /= 3;
        }
        const HalfSpaceField p = spectral::inverse_transform(g);
        for (int c = 0; c < f.components(); ++c)
            for (int z = 0; z < f.nz(); ++z)
                for (std::size_t m = 0; m < f.nh2(); ++m) {
                    const double v = p(c, z, m).real();
                    mag2[z * f.nh2() + m] += v * v;
                }
    }
    const double area = f.hgrid()->dx() * f.hgrid()->dx();
    const auto& w = f.vgrid()->weights();
    double total = 0.0;
    for (int z = 0; z < f.nz(); ++z) {
        double layer = 0.0;
        for (std::size_t m = 0; m < f.nh2(); ++m) layer += std::pow(mag2[z * f.nh2() + m], 0.5 * r);
        total += w(z) * layer;
    }
    return std::pow(total * area, 1.0 / r);
}

double bessel_norm(const SurfaceField& f, double s, double r) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            "bessel_norm expects a spectral field");
    SurfaceField g = f;
    const auto& hg = *f.grid();
    for (std::size_t m = 0; m < g.size(); ++m) {
        const double a = hg.abs_xi(m);
        g[m] *= std::pow(1.0 + a * a, 0.5 * s);
    }
    SurfaceField p = spectral::inverse_transform(g);
    spectral::make_real(p);
    return spectral::lr_norm(p, r);
}

double time_lp(const std::vector<double>& t, const std::vector<double>& f, double p, double s) {
    require(t.size() == f.size(), ErrorKind::invalid_input, "time series length mismatch");
    require(p >= 1.0, ErrorKind::invalid_input, "time exponent must be >= 1");
    if (t.size() < 2) return 0.0;
    // scaled by the largest sample so that large p does not underflow
    std::vector<double> g(t.size());
    double top = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        g[k] = std::pow(t[k] + 2.0, s) * std::abs(f[k]);
        top = std::max(top, g[k]);
    }
    if (top == 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < t.size(); ++k)
        acc += 0.5 * (t[k + 1] - t[k]) * (std::pow(g[k] / top, p) + std::pow(g[k + 1] / top, p));
    return top * std::pow(acc, 1.0 / p);
}

double time_sup(const std::vector<double>& t, const std::vector<double>& f, double s) {
    require(t.size() == f.size(), ErrorKind::invalid_input, "time series length mismatch");
    double best = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) best = std::max(best, std::pow(t[k] + 2.0, s) * f[k]);
    return best;
}

namespace {

struct Snapshot {
    // index by exponent slot: 0 -> q, 1 -> 2
    double du[2], u[2], g1[2], g2[2], gp[2];
    double dh_frac[2], h_frac[2], h[2], dh[2];
    double deta_hat2[2], eta_hat3[2], geta_w1[2], gdeta[2];
    double d2deta_q, d3eta_q, deta_2;
};

} // namespace

NormReport weighted_norms(const StateZ& z, const ExponentConfig& cfg, const WeightConfig& w) {
    const std::size_t nt = z.size();
    require(nt >= 1, ErrorKind::invalid_input, "empty trajectory");
    require(z.v.size() == nt && z.q.size() == nt && z.h.size() == nt && z.eta.size() == nt, ErrorKind::invalid_input,
            "trajectory fields are missing samples");
    require(z.dv.size() == nt, ErrorKind::invalid_input, "weighted norms need the time derivative of v");
    require(z.dh.size() == nt, ErrorKind::invalid_input, "weighted norms need the time derivative of h");
    for (std::size_t k = 1; k < nt; ++k)
        require(std::abs((z.times[k] - z.times[k - 1]) - (z.times[1] - z.times[0])) <=
                    1e-9 * std::max(1.0, z.times.back()),
                ErrorKind::invalid_input, "weighted norms need a uniform time grid");
    const double p = cfg.p;
    const double rs[2] = {cfg.q, 2.0};

    std::vector<Snapshot> snap(nt);
    parallel_for(nt, [&](std::size_t k) {
        Snapshot& s = snap[k];
        const HalfSpaceField deta = geometry::harmonic_extension(z.dh[k], z.eta[k].vgrid());
        for (int i = 0; i < 2; ++i) {
            const double r = rs[i];
            s.du[i] = derivative_norm(z.dv[k], 0, r);
            s.u[i] = derivative_norm(z.v[k], 0, r);
            s.g1[i] = derivative_norm(z.v[k], 1, r);
            s.g2[i] = derivative_norm(z.v[k], 2, r);
            s.gp[i] = derivative_norm(z.q[k], 1, r);
            s.dh_frac[i] = bessel_norm(z.dh[k], 2.0 - 1.0 / r, r);
            s.h_frac[i] = bessel_norm(z.h[k], 3.0 - 1.0 / r, r);
            s.h[i] = bessel_norm(z.h[k], 0.0, r);
            s.dh[i] = bessel_norm(z.dh[k], 0.0, r);
            const double d1 = derivative_norm(deta, 1, r), d2 = derivative_norm(deta, 2, r);
            s.deta_hat2[i] = d1 + d2;
            s.gdeta[i] = d1;
            const double e1 = derivative_norm(z.eta[k], 1, r), e2 = derivative_norm(z.eta[k], 2, r);
            const double e3 = derivative_norm(z.eta[k], 3, r);
            s.eta_hat3[i] = e1 + e2 + e3;
            s.geta_w1[i] = e1 + e2;
            if (i == 0) {
                s.d2deta_q = d2;
                s.d3eta_q = e3;
            }
        }
        s.deta_2 = derivative_norm(deta, 0, 2.0);
    });

    auto series = [&](auto get) {
        std::vector<double> out(nt);
        for (std::size_t k = 0; k < nt; ++k) out[k] = get(snap[k]);
        return out;
    };
    const auto& t = z.times;
    const double qbar = cfg.q_bar();
    NormReport rep;
    for (int i = 0; i < 2; ++i) {
        const double r = rs[i];
        const DecayRates rt = rate_exponents(qbar, r);
        NormBlock b;
        b.r = r;
        b.M = time_lp(t, series([&](const Snapshot& s) { return s.du[i]; }), p) +
              time_lp(t, series([&](const Snapshot& s) { return s.u[i]; }), p) +
              time_lp(t, series([&](const Snapshot& s) { return s.g1[i]; }), p) +
              time_lp(t, series([&](const Snapshot& s) { return s.g2[i]; }), p) +
              time_lp(t, series([&](const Snapshot& s) { return s.gp[i]; }), p) +
              time_lp(t, series([&](const Snapshot& s) { return s.dh_frac[i]; }), p) +
              time_lp(t, series([&](const Snapshot& s) { return s.h_frac[i]; }), p) +
              time_lp(t, series([&](const Snapshot& s) { return s.deta_hat2[i]; }), p) +
              time_lp(t, series([&](const Snapshot& s) { return s.eta_hat3[i]; }), p);
        b.N = time_sup(t, series([&](const Snapshot& s) { return s.u[i]; }), rt.m) +
              time_sup(t, series([&](const Snapshot& s) { return s.g1[i]; }), rt.n + 0.125) +
              time_sup(t, series([&](const Snapshot& s) { return s.h[i]; }), 1.0 / qbar - 1.0 / r) +
              time_sup(t, series([&](const Snapshot& s) { return s.dh[i]; }), rt.m) +
              time_sup(t, series([&](const Snapshot& s) { return s.geta_w1[i]; }), rt.m + 0.25) +
              time_sup(t, series([&](const Snapshot& s) { return s.gdeta[i]; }), rt.m + 0.5);
        rep.blocks.push_back(b);
    }
    rep.Nqp = time_lp(t, series([](const Snapshot& s) { return s.du[0]; }), p, w.a1) +
              time_lp(t, series([](const Snapshot& s) { return s.g2[0]; }), p, w.a1) +
              time_lp(t, series([](const Snapshot& s) { return s.d2deta_q; }), p, w.a2) +
              time_lp(t, series([](const Snapshot& s) { return s.d3eta_q; }), p, w.a2);
    rep.dt_eta_sup = time_sup(t, series([](const Snapshot& s) { return s.deta_2; }));
    rep.X = rep.Nqp + rep.dt_eta_sup;
    for (const auto& b : rep.blocks) rep.X += b.M + b.N;
    return rep;
}

void write_norm_csv(std::ostream& os, const NormReport& rep) {
    os << "quantity,r,value\n";
    os << std::setprecision(17);
    for (const auto& b : rep.blocks) {
        os << "M," << b.r << ',' << b.M << '\n';
        os << "N," << b.r << ',' << b.N << '\n';
    }
    os << "Nqp,," << rep.Nqp << '\n';
    os << "dt_eta_sup,," << rep.dt_eta_sup << '\n';
    os << "X,," << rep.X << '\n';
}

} // namespace fbns::analysis
