#pragma once

#include "fbns/spectral/field.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>

namespace fbns::geometry {

using spectral::HalfSpaceField;
using spectral::SurfaceField;

/// Mode-wise harmonic extension eta(xi', y3) = e^{|xi'| y3} h(xi').
/// The result has the representation of the input.
HalfSpaceField harmonic_extension(const SurfaceField& h, const spectral::VGridPtr& vgrid);

/// First and second y-derivatives of a scalar, in physical representation.
/// d[j] = D_j f, dd[j][k] = D_j D_k f (horizontal spectrally, vertical by D).
struct Derivatives {
    std::array<HalfSpaceField, 3> d;
    std::array<std::array<HalfSpaceField, 3>, 3> dd;
};
Derivatives derivatives(const HalfSpaceField& spectral_scalar);

/// Surface height with its harmonic extension and cached derivatives.
struct HeightState {
    SurfaceField h;         ///< spectral
    HalfSpaceField eta;     ///< spectral
    HalfSpaceField eta_phys;
    Derivatives deta;       ///< physical
    std::optional<HalfSpaceField> dt_eta;  ///< spectral
    double c0 = 0.45;
    double grad_sup = 0.0;  ///< max |grad eta| over grid nodes
    double min_jacobian = 1.0;  ///< min 1 + D3 eta
    bool invertible = false;
};

HeightState make_height_state(const SurfaceField& h, const spectral::VGridPtr& vgrid, double c0 = 0.45,
                              const std::optional<SurfaceField>& dt_h = std::nullopt);

using Point = std::array<double, 3>;

/// eta and grad eta at an arbitrary point via the exact spectral sum.
struct EtaPoint {
    double eta = 0.0;
    std::array<double, 3> grad{0.0, 0.0, 0.0};
};
EtaPoint evaluate_eta(const HeightState& s, const Point& y);

Point hanzawa_forward(const Point& y, const HeightState& s);

struct InverseResult {
    Point y;
    int iterations = 0;
};
/// Safeguarded Newton on y3 + eta(x', y3) = x3 with a bisection bracket.
InverseResult hanzawa_invert(const Point& x, const HeightState& s);

/// dx/dy and dy/dx at a point.
Eigen::Matrix3d jacobian(const Point& y, const HeightState& s);
Eigen::Matrix3d inverse_jacobian(const Point& y, const HeightState& s);

struct TransformedDerivatives {
    std::array<HalfSpaceField, 3> first;
    std::array<std::array<HalfSpaceField, 3>, 3> second;
};

/// Derivatives in x of f(x) = fbar(Theta^{-1}(x)) expressed on the fixed grid.
TransformedDerivatives transformed_derivatives(const HalfSpaceField& fbar_spectral, const HeightState& s);

/// The second-order operator D_jk(eta) applied to fbar, given derivatives of
/// fbar and eta (both physical).
HalfSpaceField calD(int j, int k, const Derivatives& f, const Derivatives& eta);

} // namespace fbns::geometry
