#pragma once

#include "fbns/analysis/norms.hpp"
#include "fbns/linear/propagator.hpp"

#include <vector>

namespace fbns::nonlinear {

using spectral::HalfSpaceField;
using spectral::SurfaceField;

/// Per-mode solver of w_t + w - mu Lap w = 0 on [-L, 0] with homogeneous
/// Neumann rows at both ends, which is the even extension across y3 = 0.
class DampedHeat {
public:
    DampedHeat(spectral::VGridPtr vgrid, double mu);

    /// w(t) and w_t(t) for spectral initial data w0 (any component count).
    void evolve(const HalfSpaceField& w0, const std::vector<double>& times, std::vector<HalfSpaceField>& w,
                std::vector<HalfSpaceField>& dw) const;

    /// Largest real part of the vertical operator spectrum (<= 0 up to rounding).
    double max_vertical_eigenvalue() const;

private:
    spectral::VGridPtr vgrid_;
    double mu_;
    Eigen::MatrixXd lift_;     ///< interior values -> all nodes
    Eigen::VectorXcd lambda_;  ///< spectrum of the interior D^2 block
    Eigen::MatrixXcd V_, Vinv_;
};

/// z* = (u* + w*, q*, h*, E(h*)) with (u*, q*, h*) the linear evolution of
/// (0, h0) and w* the damped heat flow of v0.
struct InitialFlow {
    analysis::StateZ z;
    std::vector<HalfSpaceField> w;
    std::vector<HalfSpaceField> dw;
};

InitialFlow initial_flow(const HalfSpaceField& v0, const SurfaceField& h0, const std::vector<double>& times,
                         const linear::ModalPropagator& prop);

/// Trajectory with every field zero on the given grids and times.
analysis::StateZ zero_state(const spectral::HGridPtr& hg, const spectral::VGridPtr& vg,
                            const std::vector<double>& times);

} // namespace fbns::nonlinear
