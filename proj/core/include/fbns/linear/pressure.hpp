#pragma once

#include "fbns/linear/mode_solver.hpp"

namespace fbns::linear {

/// Pressure profile of one mode from a velocity profile and height:
///   (D^2 - A^2) p = (2 mu - 1)(D^2 - A^2) div u     in the interior,
///   p(0) = 2 mu D u3(0) - div u(0) + (c_g + c_sigma A^2) h,
///   D p = A p at the bottom (decay).
/// div u = i xi . u' + D u3 on the grid.
Vec reconstruct_pressure(const std::array<Vec, 3>& u, cplx h, std::array<double, 2> xi, const PhysicalParams& params,
                         const spectral::VerticalGrid& grid);

} // namespace fbns::linear
