#pragma once

#include "fbns/linear/propagator.hpp"
#include "fbns/symbols/contour.hpp"

namespace fbns::linear {

struct KernelOptions {
    symbols::SectorSpec sector;
    int nodes_per_ray = 96;
    double mu = 1.0;
    /// Include the factor e^{-tau}, i.e. return B(tau) f rather than C(tau) f.
    bool shifted = true;
};

/// Boundary propagator applied to stress data f (spectral): C(tau) f is the
/// inverse Laplace transform of the explicit boundary-forced solution with
/// data f, and B(tau) = e^{-tau} C(tau). Result is spectral on vgrid.
HalfSpaceField boundary_kernel_apply(const VectorSurface& f, double tau, const VGridPtr& vgrid,
                                     const KernelOptions& opt = {});

struct KernelSample {
    double tau = 0.0;
    double norm0 = 0.0; ///< ||B(tau) f||_q
    double norm1 = 0.0; ///< ||grad B(tau) f||_q
};

std::vector<KernelSample> boundary_kernel_norms(const VectorSurface& f, const std::vector<double>& taus,
                                                const VGridPtr& vgrid, double q, const KernelOptions& opt = {});

} // namespace fbns::linear
