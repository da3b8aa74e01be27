#include "fbns/nonlinear/compatibility.hpp"

#include "fbns/error.hpp"
#include "fbns/nonlinear/terms.hpp"
#include "fbns/spectral/ops.hpp"
#include "fbns/spectral/transform.hpp"

#include <cmath>

namespace fbns::nonlinear {

using spectral::Representation;

CompatibilityReport check_compatibility(const HalfSpaceField& v0, const SurfaceField& h0,
                                        const PhysicalParams& params, double tol, double c0) {
    require(v0.representation() == Representation::spectral && v0.components() == 3, ErrorKind::invalid_input,
            "initial velocity must be a spectral vector field");
    require(h0.representation() == Representation::spectral, ErrorKind::invalid_input,
            "initial height must be spectral");
    const auto s = geometry::make_height_state(h0, v0.vgrid(), c0);
    const NonlinearTerms t = assemble_nonlinear(v0, s, nullptr, params);

    CompatibilityReport rep;
    rep.tol = tol;
    const HalfSpaceField res = spectral::inverse_transform(divergence(v0) - t.G);
    for (int z = 1; z + 1 < res.nz(); ++z)
        for (std::size_t m = 0; m < res.nh2(); ++m) rep.divergence = std::max(rep.divergence, std::abs(res(0, z, m)));
    const VectorSurface ns = normal_stress(v0, params.mu);
    for (int j = 0; j < 2; ++j) {
        const SurfaceField r = spectral::inverse_transform(ns[j] - t.H[j]);
        rep.tangential = std::max(rep.tangential, r.max_abs());
    }
    double gv = 0.0;
    for (int c = 0; c < 3; ++c)
        for (int a = 0; a < 3; ++a)
            gv = std::max(gv, spectral::inverse_transform(spectral::derivative(v0.component(c), a)).max_abs());
    double gh = 0.0;
    for (int a = 0; a < 2; ++a) gh = std::max(gh, spectral::inverse_transform(spectral::derivative(h0, a)).max_abs());
    rep.scale = gv + gh;
    const double bound = rep.scale > 0.0 ? tol * rep.scale : tol;
    rep.pass = rep.divergence <= bound && rep.tangential <= bound;
    return rep;
}

} // namespace fbns::nonlinear
