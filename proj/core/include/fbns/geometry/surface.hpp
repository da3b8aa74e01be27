#pragma once

#include "fbns/spectral/field.hpp"

#include <array>

namespace fbns::geometry {

struct SurfaceGeometry {
    std::array<spectral::SurfaceField, 3> normal;  ///< physical
    spectral::SurfaceField kappa;                  ///< physical, doubled mean curvature
    spectral::SurfaceField remainder;              ///< physical, the K(h) term
};

/// Pointwise forms given the surface gradient and Hessian.
std::array<double, 3> normal_from_gradient(double g1, double g2);
double curvature_remainder(double g1, double g2, double h11, double h12, double h22);
double curvature(double g1, double g2, double h11, double h12, double h22);

/// n = (-grad h, 1) / sqrt(1 + |grad h|^2), kappa = lap h - K(h).
SurfaceGeometry surface_normal_curvature(const spectral::SurfaceField& h);

/// K(h) evaluated on the grid (physical).
spectral::SurfaceField curvature_remainder(const spectral::SurfaceField& h);

} // namespace fbns::geometry
