#pragma once

#include "fbns/params.hpp"
#include "fbns/spectral/field.hpp"

namespace fbns::nonlinear {

struct CompatibilityReport {
    double divergence = 0.0;  ///< max |div v0 - G(v0, E(h0))| over interior nodes
    double tangential = 0.0;  ///< max |[mu D(v0) e3 - H(v0, E(h0))]_tau| on y3 = 0
    double scale = 0.0;       ///< max |grad v0| + max |grad' h0|, the reference size
    double tol = 1e-8;
    bool pass = false;
};

/// Both residuals are measured on the grid in physical space and compared
/// with tol * scale (absolute when the scale is zero).
CompatibilityReport check_compatibility(const spectral::HalfSpaceField& v0, const spectral::SurfaceField& h0,
                                        const PhysicalParams& params, double tol = 1e-8, double c0 = 0.45);

} // namespace fbns::nonlinear
