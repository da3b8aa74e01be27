#pragma once

#include "fbns/spectral/field.hpp"

namespace fbns::spectral {

/// Horizontal DFT. The forward map carries the 1/N^2 factor so that a single
/// Fourier mode of amplitude a has spectral coefficient a.
SurfaceField forward_transform(const SurfaceField& f);
SurfaceField inverse_transform(const SurfaceField& f);
HalfSpaceField forward_transform(const HalfSpaceField& f);
HalfSpaceField inverse_transform(const HalfSpaceField& f);

/// In-place transforms of a single contiguous nh x nh plane.
void forward_plane(int n, cplx* data);
void inverse_plane(int n, cplx* data);

} // namespace fbns::spectral
