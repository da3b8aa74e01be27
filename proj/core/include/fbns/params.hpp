#pragma once

#include <complex>

namespace fbns {

using cplx = std::complex<double>;

/// Fluid constants with density normalised to one.
struct PhysicalParams {
    double mu = 1.0;       ///< viscosity
    double c_sigma = 1.0;  ///< surface tension
    double c_g = 1.0;      ///< gravity

    /// Per-mode restoring coefficient c_g + c_sigma |xi'|^2.
    double restoring(double A) const { return c_g + c_sigma * A * A; }
};

} // namespace fbns
