#include "fbns/spectral/cutoff.hpp"

#include "fbns/error.hpp"

#include <cmath>

namespace fbns::spectral {

namespace {

double smooth_step(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

void check(const CutoffSpec& spec) {
    require(spec.delta > 0.0 && std::isfinite(spec.delta), ErrorKind::invalid_input, "cutoff delta must be positive");
}

} // namespace

double zeta_profile(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    const double a = smooth_step(2.0 - r);
    const double b = smooth_step(r - 1.0);
    return a / (a + b);
}

double cutoff_symbol(const CutoffSpec& spec, double abs_xi) {
    check(spec);
    const double low = zeta_profile(abs_xi / spec.delta);
    return spec.kind == CutoffKind::low ? low : 1.0 - low;
}

SurfaceField apply_cutoff(const SurfaceField& f, const CutoffSpec& spec) {
    check(spec);
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            "apply_cutoff expects a spectral field");
    SurfaceField out = f;
    const auto& g = *f.grid();
    for (std::size_t m = 0; m < g.size(); ++m) out[m] *= cutoff_symbol(spec, g.abs_xi(m));
    return out;
}

HalfSpaceField apply_cutoff(const HalfSpaceField& f, const CutoffSpec& spec) {
    check(spec);
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            "apply_cutoff expects a spectral field");
    HalfSpaceField out = f;
    const auto& g = *f.hgrid();
    std::vector<double> sym(g.size());
    for (std::size_t m = 0; m < g.size(); ++m) sym[m] = cutoff_symbol(spec, g.abs_xi(m));
    for (int c = 0; c < f.components(); ++c)
        for (int z = 0; z < f.nz(); ++z) {
            cplx* p = out.plane(c, z);
            for (std::size_t m = 0; m < g.size(); ++m) p[m] *= sym[m];
        }
    return out;
}

} // namespace fbns::spectral
