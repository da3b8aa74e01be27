#include "fbns/nonlinear/terms.hpp"

#include "fbns/error.hpp"
#include "fbns/geometry/surface.hpp"
#include "fbns/parallel.hpp"
#include "fbns/spectral/ops.hpp"
#include "fbns/spectral/transform.hpp"

namespace fbns::nonlinear {

using spectral::Representation;

namespace {

HalfSpaceField to_spectral(HalfSpaceField f) {
    spectral::make_real(f);
    HalfSpaceField s = spectral::forward_transform(f);
    spectral::zero_nyquist(s);
    return s;
}

SurfaceField to_spectral(SurfaceField f) {
    spectral::make_real(f);
    SurfaceField s = spectral::forward_transform(f);
    spectral::zero_nyquist(s);
    return s;
}

double re(const HalfSpaceField& f, std::size_t i) { return f.values()[i].real(); }

} // namespace

void require_admissible(const geometry::HeightState& s) {
    if (!s.invertible) fail(ErrorKind::domain, "|grad eta| exceeds c0; the Hanzawa map is not admissible");
    if (s.min_jacobian < 1.0 - s.c0) fail(ErrorKind::domain, "1 + D3 eta falls below 1 - c0");
}

SurfaceField kinematic_term(const HalfSpaceField& v, const geometry::HeightState& s) {
    require(v.representation() == Representation::spectral && v.components() == 3, ErrorKind::invalid_input,
            "velocity must be a spectral vector field");
    const HalfSpaceField vp = spectral::inverse_transform(v);
    const int top = v.nz() - 1;
    SurfaceField k(v.hgrid(), Representation::physical);
    for (std::size_t m = 0; m < v.nh2(); ++m)
        k[m] = -vp(0, top, m).real() * s.deta.d[0](0, top, m).real() -
               vp(1, top, m).real() * s.deta.d[1](0, top, m).real();
    return to_spectral(k);
}

SurfaceField kinematic_dt_h(const HalfSpaceField& v, const geometry::HeightState& s) {
    SurfaceField dh = kinematic_term(v, s);
    dh += v.trace(2);
    return dh;
}

HalfSpaceField divergence(const HalfSpaceField& v) {
    HalfSpaceField d = spectral::derivative(v.component(0), 0);
    d += spectral::derivative(v.component(1), 1);
    d += spectral::derivative(v.component(2), 2);
    return d;
}

HalfSpaceField div_stress(const HalfSpaceField& v, double mu) {
    const HalfSpaceField dv = divergence(v);
    HalfSpaceField out(v.hgrid(), v.vgrid(), 3, Representation::spectral);
    for (int c = 0; c < 3; ++c) {
        const HalfSpaceField vc = v.component(c);
        HalfSpaceField lap = spectral::derivative(spectral::derivative(vc, 0), 0);
        lap += spectral::derivative(spectral::derivative(vc, 1), 1);
        lap += spectral::derivative(spectral::derivative(vc, 2), 2);
        lap += spectral::derivative(dv, c);
        out.set_component(c, mu * lap);
    }
    return out;
}

VectorSurface normal_stress(const HalfSpaceField& v, double mu) {
    const HalfSpaceField d3 = spectral::derivative(v, 2);
    const SurfaceField v3 = v.trace(2);
    VectorSurface out;
    out[0] = mu * (d3.trace(0) + spectral::derivative(v3, 0));
    out[1] = mu * (d3.trace(1) + spectral::derivative(v3, 1));
    out[2] = (2.0 * mu) * d3.trace(2);
    return out;
}

NonlinearTerms assemble_nonlinear(const HalfSpaceField& v, const geometry::HeightState& s,
                                  const HalfSpaceField* dt_v3, const PhysicalParams& params) {
    require(v.representation() == Representation::spectral && v.components() == 3, ErrorKind::invalid_input,
            "velocity must be a spectral vector field");
    require(s.eta.nz() == v.nz() && *s.eta.hgrid() == *v.hgrid(), ErrorKind::invalid_input,
            "height state and velocity live on different grids");
    require_admissible(s);
    const double mu = params.mu;
    const auto& hg = v.hgrid();
    const auto& vg = v.vgrid();
    const std::size_t nh2 = v.nh2();
    const int nz = v.nz();

    std::array<geometry::Derivatives, 3> dv;
    for (int c = 0; c < 3; ++c) dv[c] = geometry::derivatives(v.component(c));
    const HalfSpaceField vp = spectral::inverse_transform(v);

    HalfSpaceField dteta = s.dt_eta ? spectral::inverse_transform(*s.dt_eta)
                                    : spectral::inverse_transform(geometry::harmonic_extension(
                                          kinematic_dt_h(v, s), vg));
    HalfSpaceField dtv3(hg, vg, 1, Representation::physical);
    if (dt_v3) {
        require(dt_v3->representation() == Representation::spectral && dt_v3->components() == 1,
                ErrorKind::invalid_input, "d_t v3 must be a spectral scalar");
        dtv3 = spectral::inverse_transform(*dt_v3);
    }
    std::array<HalfSpaceField, 3> sumD;
    for (int c = 0; c < 3; ++c) {
        sumD[c] = geometry::calD(0, 0, dv[c], s.deta);
        sumD[c] += geometry::calD(1, 1, dv[c], s.deta);
        sumD[c] += geometry::calD(2, 2, dv[c], s.deta);
    }

    const auto& e = s.deta.d;
    HalfSpaceField F1(hg, vg, 3, Representation::physical), F2 = F1, F3 = F1, Gvec = F1;
    HalfSpaceField G(hg, vg, 1, Representation::physical), phi = G;

    parallel_for(static_cast<std::size_t>(nz), [&](std::size_t zz) {
        const int z = static_cast<int>(zz);
        for (std::size_t m = 0; m < nh2; ++m) {
            const std::size_t i = static_cast<std::size_t>(z) * nh2 + m;
            const double eg[3] = {re(e[0], i), re(e[1], i), re(e[2], i)};
            const double J = 1.0 + eg[2];
            double w[3], d3v[3], conv[3];
            for (int c = 0; c < 3; ++c) {
                w[c] = vp(c, z, m).real();
                d3v[c] = re(dv[c].d[2], i);
            }
            double divv = 0.0;
            for (int c = 0; c < 3; ++c) {
                conv[c] = 0.0;
                for (int j = 0; j < 3; ++j) conv[c] += w[j] * re(dv[c].d[j], i);
                divv += re(dv[c].d[c], i);
            }
            const double vgrad = (w[0] * eg[0] + w[1] * eg[1] + w[2] * eg[2]) / J;
            const double ged3v = eg[0] * d3v[0] + eg[1] * d3v[1] + eg[2] * d3v[2];
            const double dte = dteta(0, z, m).real();
            const double lapv3 = re(dv[2].dd[0][0], i) + re(dv[2].dd[1][1], i) + re(dv[2].dd[2][2], i);
            const double a = -dtv3(0, z, m).real() + mu * lapv3;
            double in1[3], in2[3], in3[3];
            for (int c = 0; c < 3; ++c) {
                in1[c] = -conv[c] + vgrad * d3v[c];
                in2[c] = dte * d3v[c] / J;
                in3[c] = re(sumD[c], i);
            }
            // (I + M3) w = w + w3 grad eta
            for (int c = 0; c < 3; ++c) {
                F1(c, z, m) = in1[c] + in1[2] * eg[c];
                F2(c, z, m) = in2[c] + in2[2] * eg[c];
                F3(c, z, m) = a * eg[c] - mu * (in3[c] + in3[2] * eg[c]);
            }
            Gvec(0, z, m) = -eg[2] * w[0];
            Gvec(1, z, m) = -eg[2] * w[1];
            Gvec(2, z, m) = eg[0] * w[0] + eg[1] * w[1];
            G(0, z, m) = ged3v - eg[2] * divv;
            phi(0, z, m) = ged3v / J;
        }
    });

    NonlinearTerms t;
    t.F1 = to_spectral(F1);
    t.F2 = to_spectral(F2);
    HalfSpaceField F3s = to_spectral(F3);
    const HalfSpaceField phis = to_spectral(phi);
    for (int c = 0; c < 3; ++c) {
        HalfSpaceField g = F3s.component(c);
        g -= mu * spectral::derivative(phis, c);
        F3s.set_component(c, g);
    }
    t.F3 = std::move(F3s);
    t.Gvec = to_spectral(Gvec);
    t.G = to_spectral(G);

    // stress remainder on the surface
    const int top = nz - 1;
    const SurfaceField kap = geometry::curvature_remainder(s.h);
    VectorSurface H;
    for (auto& h : H) h = SurfaceField(hg, Representation::physical);
    SurfaceField K(hg, Representation::physical);
    for (std::size_t m = 0; m < nh2; ++m) {
        const std::size_t i = static_cast<std::size_t>(top) * nh2 + m;
        const double eg[3] = {re(e[0], i), re(e[1], i), re(e[2], i)};
        const double J = 1.0 + eg[2];
        double Dm[3][3], S[3][3], d3v[3];
        for (int c = 0; c < 3; ++c) d3v[c] = re(dv[c].d[2], i);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                Dm[a][b] = re(dv[b].d[a], i) + re(dv[a].d[b], i);
                S[a][b] = eg[a] * d3v[b] + eg[b] * d3v[a];
            }
        const double m2[3] = {-eg[0], -eg[1], 0.0};    // M2 e3
        const double nn[3] = {-eg[0], -eg[1], 1.0};    // (I + M2) e3
        double Dm2[3], Dn[3], Sn[3];
        for (int a = 0; a < 3; ++a) {
            Dm2[a] = Dn[a] = Sn[a] = 0.0;
            for (int b = 0; b < 3; ++b) {
                Dm2[a] += Dm[a][b] * m2[b];
                Dn[a] += Dm[a][b] * nn[b];
                Sn[a] += S[a][b] * nn[b];
            }
        }
        for (int a = 0; a < 3; ++a) {
            const double t1 = -mu * Dm2[a];
            const double t2 = mu * Dn[2] * m2[a];                         // M2 w = w3 M2 e3
            const double t3 = mu / J * (Sn[a] - Sn[2] * m2[a]);           // (I - M2) w
            double val = t1 + t2 + t3;
            if (a == 2) val -= params.c_sigma * kap[m].real();
            H[a][m] = val;
        }
        K[m] = -vp(0, top, m).real() * eg[0] - vp(1, top, m).real() * eg[1];
    }
    for (int a = 0; a < 3; ++a) t.H[a] = to_spectral(H[a]);
    t.K = to_spectral(K);
    return t;
}

} // namespace fbns::nonlinear
