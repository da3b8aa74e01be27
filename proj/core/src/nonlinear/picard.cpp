#include "fbns/nonlinear/picard.hpp"

#include "fbns/error.hpp"
#include "fbns/geometry/hanzawa.hpp"
#include "fbns/linear/divergence.hpp"
#include "fbns/nonlinear/compatibility.hpp"
#include "fbns/nonlinear/initial_flow.hpp"
#include "fbns/nonlinear/terms.hpp"
#include "fbns/spectral/ops.hpp"
#include "fbns/spectral/transform.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace fbns::nonlinear {

using spectral::Representation;

double SystemResidual::max_abs() const { return std::max({momentum, divergence, stress, kinematic}); }

namespace {

double sup_phys(const HalfSpaceField& s) { return spectral::inverse_transform(s).max_abs(); }
double sup_phys(const SurfaceField& s) { return spectral::inverse_transform(s).max_abs(); }

double interior_max(const HalfSpaceField& f) {
    double r = 0.0;
    for (int c = 0; c < f.components(); ++c)
        for (int z = 2; z + 2 < f.nz(); ++z)
            for (std::size_t m = 0; m < f.nh2(); ++m) r = std::max(r, std::abs(f(c, z, m)));
    return r;
}

double surface_max(const SurfaceField& s) {
    double r = 0.0;
    for (std::size_t m = 0; m < s.size(); ++m) r = std::max(r, std::abs(s[m]));
    return r;
}

// Three-point derivative in time on a uniform grid.
std::vector<HalfSpaceField> time_derivative(const std::vector<HalfSpaceField>& f, double dt) {
    const std::size_t n = f.size();
    std::vector<HalfSpaceField> d;
    d.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (n < 3) {
            d.push_back(n == 2 ? (1.0 / dt) * (f[1] - f[0]) : 0.0 * f[0]);
        } else if (k == 0) {
            d.push_back((1.0 / (2.0 * dt)) * (-3.0 * f[0] + 4.0 * f[1] - f[2]));
        } else if (k == n - 1) {
            d.push_back((1.0 / (2.0 * dt)) * (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]));
        } else {
            d.push_back((1.0 / (2.0 * dt)) * (f[k + 1] - f[k - 1]));
        }
    }
    return d;
}

analysis::StateZ sum(const analysis::StateZ& a, const analysis::StateZ& b) {
    analysis::StateZ s = a;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s.v[k] += b.v[k];
        s.q[k] += b.q[k];
        s.h[k] += b.h[k];
        s.eta[k] += b.eta[k];
        s.dv[k] += b.dv[k];
        s.dh[k] += b.dh[k];
    }
    return s;
}

} // namespace

double data_norm(const HalfSpaceField& v0, const SurfaceField& h0) {
    double r = std::max(sup_phys(v0), sup_phys(h0));
    for (int a = 0; a < 3; ++a) r = std::max(r, sup_phys(spectral::derivative(v0, a)));
    for (int a = 0; a < 2; ++a) r = std::max(r, sup_phys(spectral::derivative(h0, a)));
    return r;
}

SystemResidual system_residual(const analysis::StateZ& z, const PhysicalParams& params, double c0) {
    SystemResidual r;
    const double mu = params.mu;
    for (std::size_t k = 0; k < z.size(); ++k) {
        const auto& v = z.v[k];
        // d_t eta follows the kinematic relation, as in the iteration
        const auto s = geometry::make_height_state(z.h[k], v.vgrid(), c0);
        const HalfSpaceField dv3 = z.dv[k].component(2);
        const NonlinearTerms t = assemble_nonlinear(v, s, &dv3, params);

        HalfSpaceField mom = z.dv[k] - div_stress(v, mu) - t.F();
        for (int c = 0; c < 3; ++c) {
            HalfSpaceField mc = mom.component(c);
            mc += spectral::derivative(z.q[k], c);
            mom.set_component(c, mc);
        }
        r.momentum = std::max(r.momentum, interior_max(mom));
        r.divergence = std::max(r.divergence, interior_max(divergence(v) - t.G));

        const VectorSurface ns = normal_stress(v, mu);
        const SurfaceField qs = z.q[k].trace(0);
        const auto& hg = *z.h[k].grid();
        for (int j = 0; j < 3; ++j) {
            SurfaceField res = ns[j] - t.H[j];
            if (j == 2) {
                res -= qs;
                for (std::size_t m = 0; m < res.size(); ++m) res[m] += params.restoring(hg.abs_xi(m)) * z.h[k][m];
            }
            r.stress = std::max(r.stress, surface_max(res));
        }
        r.kinematic = std::max(r.kinematic, surface_max(z.dh[k] - v.trace(2) - t.K));
    }
    return r;
}

PicardResult picard_solve(const HalfSpaceField& v0, const SurfaceField& h0, const PhysicalParams& params,
                          const PicardOptions& opt) {
    require(opt.tol > 0.0 && opt.max_iter >= 1, ErrorKind::invalid_input, "bad Picard tolerance or iteration cap");
    require(opt.horizon > 0.0 && opt.dt > 0.0, ErrorKind::invalid_input, "bad time grid");
    const auto hg = v0.hgrid();
    const auto vg = v0.vgrid();
    const double mu = params.mu;

    PicardResult res;
    PicardReport& rep = res.report;
    rep.tol = opt.tol;
    rep.data_norm = data_norm(v0, h0);
    require(rep.data_norm <= opt.smallness, ErrorKind::invalid_input,
            "data norm " + std::to_string(rep.data_norm) + " exceeds the smallness threshold");
    const CompatibilityReport comp = check_compatibility(v0, h0, params, opt.compatibility_tol, opt.c0);
    require(comp.pass, ErrorKind::invalid_input, "initial data violates the compatibility conditions");

    const int nsteps = static_cast<int>(std::lround(opt.horizon / opt.dt));
    std::vector<double> times(nsteps + 1);
    for (int k = 0; k <= nsteps; ++k) times[k] = k * opt.dt;
    const std::size_t nt = times.size();

    const linear::ModalPropagator prop(hg, vg, params, opt.propagator);
    const InitialFlow flow = initial_flow(v0, h0, times, prop);
    rep.initial_flow_norm = analysis::weighted_norms(flow.z, opt.exponents, opt.weights).X;

    // data contributions of w* that do not change between iterates
    std::vector<HalfSpaceField> wF(nt), wG(nt);
    std::vector<VectorSurface> wH(nt);
    std::vector<SurfaceField> wK(nt);
    for (std::size_t k = 0; k < nt; ++k) {
        const auto& w = flow.w[k];
        const HalfSpaceField dw = divergence(w);
        wF[k] = w;
        for (int c = 0; c < 3; ++c) {
            HalfSpaceField g = wF[k].component(c);
            g += mu * spectral::derivative(dw, c);
            wF[k].set_component(c, g);
        }
        wG[k] = -1.0 * dw;
        wH[k] = normal_stress(w, mu);
        for (auto& s : wH[k]) s *= -1.0;
        wK[k] = w.trace(2);
    }

    analysis::StateZ zbar = zero_state(hg, vg, times);
    int above_one = 0;
    for (int it = 0; it < opt.max_iter; ++it) {
        const analysis::StateZ z = sum(flow.z, zbar);
        std::vector<HalfSpaceField> SF(nt), SG(nt);
        std::vector<VectorSurface> SH(nt);
        std::vector<SurfaceField> SK(nt);
        for (std::size_t k = 0; k < nt; ++k) {
            auto s = geometry::make_height_state(z.h[k], vg, opt.c0);
            s.dt_eta = geometry::harmonic_extension(kinematic_dt_h(z.v[k], s), vg);
            const HalfSpaceField dv3 = z.dv[k].component(2);
            const NonlinearTerms t = assemble_nonlinear(z.v[k], s, &dv3, params);
            SF[k] = t.F() + wF[k];
            SG[k] = t.G + wG[k];
            for (int j = 0; j < 3; ++j) SH[k][j] = t.H[j] + wH[k][j];
            SK[k] = t.K + wK[k];
        }
        // u = d + u~ with div d = SG and u~ solenoidal
        std::vector<HalfSpaceField> d(nt);
        for (std::size_t k = 0; k < nt; ++k) d[k] = linear::solve_divergence(SG[k]);
        const std::vector<HalfSpaceField> dd = time_derivative(d, opt.dt);
        linear::LinearData data;
        data.times = times;
        for (std::size_t k = 0; k < nt; ++k) {
            data.f.push_back(SF[k] - dd[k] + div_stress(d[k], mu));
            VectorSurface hs;
            const VectorSurface nd = normal_stress(d[k], mu);
            for (int j = 0; j < 3; ++j) hs[j] = SH[k][j] - nd[j];
            data.h.push_back(std::move(hs));
            data.k.push_back(SK[k] + d[k].trace(2));
        }
        const linear::LinearSolution sol = prop.duhamel(data);
        analysis::StateZ next = zero_state(hg, vg, times);
        for (std::size_t k = 0; k < nt; ++k) {
            next.v[k] = d[k] + sol.u[k];
            next.dv[k] = dd[k] + sol.du[k];
            next.q[k] = sol.p[k];
            next.h[k] = sol.h[k];
            next.dh[k] = sol.dh[k];
            next.eta[k] = geometry::harmonic_extension(sol.h[k], vg);
        }
        const double diff = analysis::weighted_norms(analysis::difference(next, zbar), opt.exponents, opt.weights).X;
        zbar = std::move(next);
        rep.iterates = it + 1;
        rep.diffs.push_back(diff);
        rep.norms.push_back(analysis::weighted_norms(zbar, opt.exponents, opt.weights).X);
        if (rep.diffs.size() >= 2) {
            const double prev = rep.diffs[rep.diffs.size() - 2];
            const double ratio = prev > 0.0 ? diff / prev : 0.0;
            rep.ratios.push_back(ratio);
            above_one = ratio >= 1.0 ? above_one + 1 : 0;
            if (above_one >= 2)
                fail(ErrorKind::divergence, "Picard differences grew twice in a row; the data is too large");
        }
        if (diff < opt.tol) {
            rep.converged = true;
            break;
        }
    }
    res.z = sum(flow.z, zbar);
    res.correction = std::move(zbar);
    rep.residual = system_residual(res.z, params, opt.c0);
    return res;
}

std::string to_json(const PicardReport& rep) {
    nlohmann::json j;
    j["iterates"] = rep.iterates;
    j["diffs"] = rep.diffs;
    j["contraction_ratios"] = rep.ratios;
    j["norms"] = rep.norms;
    j["data_norm"] = rep.data_norm;
    j["initial_flow_norm"] = rep.initial_flow_norm;
    j["tol"] = rep.tol;
    j["converged"] = rep.converged;
    j["residual"] = {{"momentum", rep.residual.momentum},
                     {"divergence", rep.residual.divergence},
                     {"stress", rep.residual.stress},
                     {"kinematic", rep.residual.kinematic}};
    return j.dump(2);
}

} // namespace fbns::nonlinear
