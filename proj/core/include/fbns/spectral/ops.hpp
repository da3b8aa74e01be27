#pragma once

#include "fbns/spectral/field.hpp"

#include <array>

namespace fbns::spectral {

/// Multiplier i*xi_j for j in {0,1}; zero on Nyquist lines.
cplx ixi(const HorizontalGrid& g, std::size_t m, int j);

/// Derivative along axis j (0, 1 horizontal; 2 vertical through the grid's D).
/// Input and output are in spectral representation.
HalfSpaceField derivative(const HalfSpaceField& f, int axis);
SurfaceField derivative(const SurfaceField& f, int axis);

/// Applies a real matrix along x3 to every (component, mode) column.
HalfSpaceField apply_vertical(const HalfSpaceField& f, const Eigen::MatrixXd& op);

/// Product of scalar fields in physical representation.
HalfSpaceField multiply(const HalfSpaceField& a, const HalfSpaceField& b);

/// Constant-in-x3 lift of a surface field.
HalfSpaceField lift(const SurfaceField& s, const VGridPtr& vgrid);

/// Vector field assembled from three scalar fields.
HalfSpaceField stack(const HalfSpaceField& a, const HalfSpaceField& b, const HalfSpaceField& c);

/// Zeroes Nyquist lines of a spectral field.
void zero_nyquist(HalfSpaceField& f);
void zero_nyquist(SurfaceField& f);

/// Real part of physical values; imaginary residue is discarded.
void make_real(HalfSpaceField& f);
void make_real(SurfaceField& f);

/// Discrete L_r norm on the half-space (physical, pointwise Euclidean
/// magnitude over components), using horizontal cell area and vertical
/// quadrature weights.
double lr_norm(const HalfSpaceField& physical, double r);
double lr_norm(const SurfaceField& physical, double r);
/// L_r norm of the full gradient (all components, all three axes) of a
/// spectral field; derivatives are taken spectrally in x' and with D in x3,
/// and the real part of the physical values is used.
double gradient_lr_norm(const HalfSpaceField& spectral, double r);
double sup_norm(const HalfSpaceField& physical);

} // namespace fbns::spectral
