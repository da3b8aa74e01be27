#pragma once

#include "fbns/spectral/field.hpp"

namespace fbns::spectral {

enum class CutoffKind { low, high };

struct CutoffSpec {
    double delta = 0.5;
    CutoffKind kind = CutoffKind::low;
};

/// Smooth profile: 1 for r <= 1, 0 for r >= 2, C-infinity in between.
double zeta_profile(double r);

/// zeta_low(xi) = zeta(|xi| / delta), zeta_high = 1 - zeta_low.
double cutoff_symbol(const CutoffSpec& spec, double abs_xi);

SurfaceField apply_cutoff(const SurfaceField& f, const CutoffSpec& spec);
HalfSpaceField apply_cutoff(const HalfSpaceField& f, const CutoffSpec& spec);

} // namespace fbns::spectral
