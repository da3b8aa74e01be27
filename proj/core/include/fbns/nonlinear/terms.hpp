#pragma once

#include "fbns/geometry/hanzawa.hpp"
#include "fbns/params.hpp"
#include "fbns/spectral/field.hpp"

#include <array>

namespace fbns::nonlinear {

using spectral::HalfSpaceField;
using spectral::SurfaceField;
using VectorSurface = std::array<SurfaceField, 3>;

/// Right-hand sides of the transformed system, all spectral with Nyquist
/// lines zeroed.
struct NonlinearTerms {
    HalfSpaceField F1, F2, F3;  ///< transport, moving-frame and viscous parts
    HalfSpaceField Gvec;        ///< -M1(eta) v
    HalfSpaceField G;           ///< grad eta . D3 v - D3 eta div v
    VectorSurface H;            ///< stress remainder on y3 = 0
    SurfaceField K;             ///< -v1 D1 eta - v2 D2 eta

    HalfSpaceField F() const { return F1 + F2 + F3; }
};

/// Throws domain unless the height state is invertible with 1 + D3 eta >= 1 - c0.
void require_admissible(const geometry::HeightState& s);

/// K(v, eta) alone, spectral.
SurfaceField kinematic_term(const HalfSpaceField& v, const geometry::HeightState& s);

/// d_t h from the kinematic relation d_t h = v3 + K(v, eta), spectral.
SurfaceField kinematic_dt_h(const HalfSpaceField& v, const geometry::HeightState& s);

/// Evaluates every term at (v, eta). v is spectral. d_t eta is taken from
/// s.dt_eta when present and from the kinematic relation otherwise; dt_v3 is
/// the spectral time derivative of v3 (null means zero).
NonlinearTerms assemble_nonlinear(const HalfSpaceField& v, const geometry::HeightState& s,
                                  const HalfSpaceField* dt_v3, const PhysicalParams& params);

/// Spectral helpers shared with the Picard solver.
HalfSpaceField divergence(const HalfSpaceField& v);
/// Div(mu D(v)) = mu (Lap v + grad div v).
HalfSpaceField div_stress(const HalfSpaceField& v, double mu);
/// mu D(v) e3 on y3 = 0.
VectorSurface normal_stress(const HalfSpaceField& v, double mu);

} // namespace fbns::nonlinear
