#include "fbns/geometry/hanzawa.hpp"

#include "fbns/error.hpp"
#include "fbns/spectral/ops.hpp"
#include "fbns/spectral/transform.hpp"

#include <cmath>

namespace fbns::geometry {

using spectral::Representation;

HalfSpaceField harmonic_extension(const SurfaceField& h, const spectral::VGridPtr& vgrid) {
    const bool phys = h.representation() == Representation::physical;
    const SurfaceField hs = phys ? spectral::forward_transform(h) : h;
    const auto& g = *h.grid();
    HalfSpaceField eta(h.grid(), vgrid, 1, Representation::spectral);
    for (int z = 0; z < eta.nz(); ++z) {
        const double y3 = vgrid->node(z);
        cplx* p = eta.plane(0, z);
        for (std::size_t m = 0; m < g.size(); ++m)
            p[m] = z == vgrid->top() ? hs[m] : std::exp(g.abs_xi(m) * y3) * hs[m];
    }
    return phys ? spectral::inverse_transform(eta) : eta;
}

Derivatives derivatives(const HalfSpaceField& f) {
    require(f.representation() == Representation::spectral && f.components() == 1, ErrorKind::invalid_input,
            "derivatives expects a spectral scalar field");
    Derivatives out;
    std::array<HalfSpaceField, 3> first;
    for (int j = 0; j < 3; ++j) {
        first[j] = spectral::derivative(f, j);
        out.d[j] = spectral::inverse_transform(first[j]);
    }
    for (int j = 0; j < 3; ++j)
        for (int k = j; k < 3; ++k) {
            // Vertical second derivatives use D2 directly.
            HalfSpaceField s = (j == 2 && k == 2) ? spectral::apply_vertical(f, f.vgrid()->D2())
                                                  : spectral::derivative(first[j], k);
            out.dd[j][k] = spectral::inverse_transform(s);
            if (k != j) out.dd[k][j] = out.dd[j][k];
        }
    return out;
}

HeightState make_height_state(const SurfaceField& h, const spectral::VGridPtr& vgrid, double c0,
                              const std::optional<SurfaceField>& dt_h) {
    require(c0 > 0.0 && c0 < 0.5, ErrorKind::invalid_input, "c0 must lie in (0, 1/2)");
    HeightState s;
    s.c0 = c0;
    s.h = h.representation() == Representation::physical ? spectral::forward_transform(h) : h;
    s.eta = harmonic_extension(s.h, vgrid);
    s.eta_phys = spectral::inverse_transform(s.eta);
    s.deta = derivatives(s.eta);
    if (dt_h) s.dt_eta = harmonic_extension(*dt_h, vgrid);
    double sup = 0.0, minj = 1e300;
    for (std::size_t i = 0; i < s.deta.d[0].size(); ++i) {
        const double g1 = s.deta.d[0].values()[i].real();
        const double g2 = s.deta.d[1].values()[i].real();
        const double g3 = s.deta.d[2].values()[i].real();
        sup = std::max(sup, std::sqrt(g1 * g1 + g2 * g2 + g3 * g3));
        minj = std::min(minj, 1.0 + g3);
    }
    s.grad_sup = sup;
    s.min_jacobian = minj;
    s.invertible = sup < c0;
    return s;
}

EtaPoint evaluate_eta(const HeightState& s, const Point& y) {
    const auto& g = *s.h.grid();
    EtaPoint out;
    for (std::size_t m = 0; m < g.size(); ++m) {
        const cplx c = s.h[m];
        if (c == 0.0) continue;
        const double k1 = g.is_nyquist(m) ? 0.0 : g.xi1(m);
        const double k2 = g.is_nyquist(m) ? 0.0 : g.xi2(m);
        const double A = g.abs_xi(m);
        const cplx e = c * std::exp(A * y[2]) * std::polar(1.0, g.xi1(m) * y[0] + g.xi2(m) * y[1]);
        out.eta += e.real();
        out.grad[0] += (cplx(0.0, k1) * e).real();
        out.grad[1] += (cplx(0.0, k2) * e).real();
        out.grad[2] += (A * e).real();
    }
    return out;
}

Point hanzawa_forward(const Point& y, const HeightState& s) {
    require(s.invertible, ErrorKind::domain, "height state is not flagged invertible");
    return {y[0], y[1], y[2] + evaluate_eta(s, y).eta};
}

InverseResult hanzawa_invert(const Point& x, const HeightState& s) {
    require(s.invertible, ErrorKind::domain, "height state is not flagged invertible");
    // phi(y3) = y3 + eta(x', y3) - x3 is increasing with slope >= 1 - c0, so
    // the root lies within |eta|_max / (1 - c0) of x3.
    double bound = 0.0;
    for (const auto& c : s.h.values()) bound += std::abs(c);
    const double surface = evaluate_eta(s, {x[0], x[1], 0.0}).eta;
    require(x[2] <= surface + 1e-12 * (1.0 + bound), ErrorKind::domain, "point lies above the free surface");
    double lo = x[2] - bound - 1e-12, hi = std::min(x[2] + bound, 0.0) + 1e-12;
    double y3 = x[2];
    InverseResult r;
    for (int it = 1; it <= 50; ++it) {
        const auto ev = evaluate_eta(s, {x[0], x[1], y3});
        const double f = y3 + ev.eta - x[2];
        r.iterations = it;
        if (std::abs(f) <= 1e-14 * (1.0 + std::abs(x[2]))) {
            r.y = {x[0], x[1], y3};
            return r;
        }
        if (f > 0) hi = y3; else lo = y3;
        double next = y3 - f / (1.0 + ev.grad[2]);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        // eta is a long spectral sum; stop at its rounding level
        if (std::abs(next - y3) <= 1e-15 * (1.0 + std::abs(y3)) + 1e-13 * bound || hi - lo <= 1e-13 * (1.0 + bound)) {
            r.y = {x[0], x[1], next};
            return r;
        }
        y3 = next;
    }
    fail(ErrorKind::numerical, "Hanzawa inversion did not converge in 50 iterations");
}

Eigen::Matrix3d jacobian(const Point& y, const HeightState& s) {
    const auto ev = evaluate_eta(s, y);
    Eigen::Matrix3d J = Eigen::Matrix3d::Identity();
    J(2, 0) = ev.grad[0];
    J(2, 1) = ev.grad[1];
    J(2, 2) = 1.0 + ev.grad[2];
    return J;
}

Eigen::Matrix3d inverse_jacobian(const Point& y, const HeightState& s) {
    const auto ev = evaluate_eta(s, y);
    const double j = 1.0 + ev.grad[2];
    require(std::abs(j) > 1e-14, ErrorKind::domain, "1 + D3 eta vanishes");
    Eigen::Matrix3d K = Eigen::Matrix3d::Identity();
    K(2, 0) = -ev.grad[0] / j;
    K(2, 1) = -ev.grad[1] / j;
    K(2, 2) = 1.0 / j;
    return K;
}

HalfSpaceField calD(int j, int k, const Derivatives& f, const Derivatives& e) {
    HalfSpaceField out = f.d[0];
    const std::size_t n = out.size();
    const auto& ej = e.d[j].values();
    const auto& ek = e.d[k].values();
    const auto& e3 = e.d[2].values();
    for (std::size_t i = 0; i < n; ++i) {
        const double J = 1.0 + e3[i].real();
        const double Dj = ej[i].real(), Dk = ek[i].real();
        const double coef = (e.dd[j][k].values()[i].real() * J * J - Dk * e.dd[j][2].values()[i].real() * J -
                             Dj * e.dd[2][k].values()[i].real() * J + Dj * Dk * e.dd[2][2].values()[i].real()) /
                            (J * J * J);
        out.values()[i] = coef * f.d[2].values()[i] + (Dk / J) * f.dd[j][2].values()[i] +
                          (Dj / J) * f.dd[2][k].values()[i] - (Dj * Dk / (J * J)) * f.dd[2][2].values()[i];
    }
    return out;
}

TransformedDerivatives transformed_derivatives(const HalfSpaceField& fbar, const HeightState& s) {
    require(s.min_jacobian > 0.0, ErrorKind::domain, "1 + D3 eta vanishes on the grid");
    const Derivatives f = derivatives(fbar);
    TransformedDerivatives out;
    const auto& e3 = s.deta.d[2].values();
    for (int j = 0; j < 3; ++j) {
        out.first[j] = f.d[j];
        auto& v = out.first[j].values();
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] -= s.deta.d[j].values()[i].real() / (1.0 + e3[i].real()) * f.d[2].values()[i];
    }
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out.second[j][k] = f.dd[j][k] - calD(j, k, f, s.deta);
    return out;
}

} // namespace fbns::geometry
