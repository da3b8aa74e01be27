#pragma once

#include "fbns/spectral/field.hpp"

#include <iosfwd>
#include <string>

namespace fbns::spectral {

/// Binary snapshot: magic "FBNSFLD1", a fixed header (see docs/serialization.md)
/// and row-major complex<double> values in storage order.
void write_binary(const std::string& path, const HalfSpaceField& f);
HalfSpaceField read_binary(const std::string& path);

void write_binary(const std::string& path, const SurfaceField& f);
SurfaceField read_surface_binary(const std::string& path);

/// CSV companion: one row per stored value with its indices and coordinates.
void write_csv(std::ostream& os, const HalfSpaceField& f);
void write_csv(std::ostream& os, const SurfaceField& f);

} // namespace fbns::spectral
