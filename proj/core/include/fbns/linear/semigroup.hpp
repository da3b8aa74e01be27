#pragma once

#include "fbns/linear/propagator.hpp"
#include "fbns/symbols/contour.hpp"

namespace fbns::linear {

enum class SemigroupMethod { modal, contour };

struct SemigroupOptions {
    SemigroupMethod method = SemigroupMethod::modal;
    symbols::SectorSpec sector;
    int nodes_per_ray = 128;
    /// Relative change allowed when the contour truncation and node count double.
    double contour_tol = 1e-6;
    PropagatorOptions propagator;
};

struct ContourEvaluation {
    LinearSolution solution;
    /// Relative change of u under doubling S and the node count.
    double doubling_change = 0.0;
};

/// u(t) = (1 / 2 pi i) int_Gamma e^{lambda t} U(lambda) d lambda per mode, with U
/// from the resolvent solve at (F, K) = (u0, h0). Throws accuracy when the
/// doubling check exceeds opt.contour_tol.
ContourEvaluation evolve_contour(const HalfSpaceField& u0, const SurfaceField& h0, double t,
                                 const PhysicalParams& params, const SemigroupOptions& opt = {});

/// Semigroup applied to (u0, h0) at time t > 0 with the selected method.
LinearSolution evolve_semigroup(const HalfSpaceField& u0, const SurfaceField& h0, double t,
                                const PhysicalParams& params, const SemigroupOptions& opt = {});

} // namespace fbns::linear
