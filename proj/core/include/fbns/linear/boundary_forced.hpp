#pragma once

#include "fbns/linear/mode_solver.hpp"

namespace fbns::linear {

/// Explicit representation of the stress-driven Stokes problem
///   lambda v - Div T(v, q) = 0, div v = 0, T(v, q) e3 = h on x3 = 0,
/// evaluated at the given x3 <= 0 nodes. Zero mode uses the A -> 0 limit.
std::array<Vec, 3> solve_boundary_forced_mode(std::array<double, 2> xi, cplx lambda, const std::array<cplx, 3>& h,
                                              const Eigen::VectorXd& x3, double mu);

} // namespace fbns::linear
