#include "fbns/geometry/surface.hpp"

#include "fbns/spectral/ops.hpp"
#include "fbns/spectral/transform.hpp"

#include <cmath>

namespace fbns::geometry {

using spectral::Representation;
using spectral::SurfaceField;

std::array<double, 3> normal_from_gradient(double g1, double g2) {
    const double s = std::sqrt(1.0 + g1 * g1 + g2 * g2);
    return {-g1 / s, -g2 / s, 1.0 / s};
}

double curvature_remainder(double g1, double g2, double h11, double h12, double h22) {
    const double q = g1 * g1 + g2 * g2;
    const double s = std::sqrt(1.0 + q);
    const double lap = h11 + h22;
    const double quad = g1 * g1 * h11 + 2.0 * g1 * g2 * h12 + g2 * g2 * h22;
    return q * lap / ((1.0 + s) * s) + quad / (s * s * s);
}

double curvature(double g1, double g2, double h11, double h12, double h22) {
    return h11 + h22 - curvature_remainder(g1, g2, h11, h12, h22);
}

namespace {

struct SurfaceDerivs {
    SurfaceField g1, g2, h11, h12, h22;
};

SurfaceDerivs surface_derivatives(const SurfaceField& h) {
    const SurfaceField hs = h.representation() == Representation::physical ? spectral::forward_transform(h) : h;
    const SurfaceField d1 = spectral::derivative(hs, 0);
    const SurfaceField d2 = spectral::derivative(hs, 1);
    return {spectral::inverse_transform(d1), spectral::inverse_transform(d2),
            spectral::inverse_transform(spectral::derivative(d1, 0)),
            spectral::inverse_transform(spectral::derivative(d1, 1)),
            spectral::inverse_transform(spectral::derivative(d2, 1))};
}

} // namespace

SurfaceField curvature_remainder(const SurfaceField& h) {
    const auto d = surface_derivatives(h);
    SurfaceField out(h.grid(), Representation::physical);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = curvature_remainder(d.g1[i].real(), d.g2[i].real(), d.h11[i].real(), d.h12[i].real(),
                                     d.h22[i].real());
    return out;
}

SurfaceGeometry surface_normal_curvature(const SurfaceField& h) {
    const auto d = surface_derivatives(h);
    SurfaceGeometry out;
    for (auto& n : out.normal) n = SurfaceField(h.grid(), Representation::physical);
    out.kappa = SurfaceField(h.grid(), Representation::physical);
    out.remainder = SurfaceField(h.grid(), Representation::physical);
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double g1 = d.g1[i].real(), g2 = d.g2[i].real();
        const auto n = normal_from_gradient(g1, g2);
        for (int c = 0; c < 3; ++c) out.normal[c][i] = n[c];
        const double K = curvature_remainder(g1, g2, d.h11[i].real(), d.h12[i].real(), d.h22[i].real());
        out.remainder[i] = K;
        out.kappa[i] = d.h11[i].real() + d.h22[i].real() - K;
    }
    return out;
}

} // namespace fbns::geometry
