#pragma once

#include "fbns/linear/mode_solver.hpp"
#include "fbns/spectral/field.hpp"

namespace fbns::linear {

/// Potential psi of one mode: (D^2 - A^2) psi = g in the interior, psi(0) = 0,
/// and the decaying Robin row D psi = A psi at the bottom (D psi = 0 for A = 0).
/// This is the half-space form of the odd-extension solution
/// d = -F^{-1}[i xi / |xi|^2 g^o].
Vec divergence_potential(const Vec& g, double A, const spectral::VerticalGrid& grid);

/// int_{-L}^0 e^{A y} g(y) dy by the grid quadrature; equals D psi(0).
cplx divergence_trace_integral(const Vec& g, double A, const spectral::VerticalGrid& grid);

/// Vector field d = (i xi1 psi, i xi2 psi, D psi) with div d = g, from a scalar
/// spectral field g. Nyquist lines are zero.
spectral::HalfSpaceField solve_divergence(const spectral::HalfSpaceField& g);

} // namespace fbns::linear
