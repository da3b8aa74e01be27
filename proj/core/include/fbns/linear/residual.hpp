#pragma once

#include "fbns/linear/propagator.hpp"

namespace fbns::linear {

/// Maxima over time samples and modes of each equation row.
struct ResidualReport {
    double momentum = 0.0;
    double divergence = 0.0;
    double stress = 0.0;
    double kinematic = 0.0;
    double scale = 0.0;
    double max_abs() const;
    double relative() const { return scale > 0.0 ? max_abs() / scale : max_abs(); }
};

/// Residuals of the linear system for a sampled solution. Time derivatives
/// come from du/dh when given, otherwise from three-point differences of the
/// samples (at least three needed).
ResidualReport linear_residual(const LinearSolution& sol, const LinearData& data, const PhysicalParams& params,
                               bool free_surface = true, const std::vector<HalfSpaceField>* du = nullptr,
                               const std::vector<SurfaceField>* dh = nullptr);

} // namespace fbns::linear
