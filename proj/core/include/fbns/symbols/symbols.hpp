#pragma once

#include "fbns/params.hpp"

#include <array>

namespace fbns::symbols {

/// Sector Sigma_{eps, gamma0} = { |arg lambda| < pi - eps, |lambda| > gamma0 }.
struct SectorSpec {
    double epsilon = 0.7853981633974483;
    double gamma0 = 1.0;

    bool contains(cplx lambda) const;
    /// Real vertex 2 gamma0 / sin(eps) of the standard contour.
    double vertex() const;
    void validate() const;
};

struct SymbolBundle {
    std::array<double, 2> xi{0.0, 0.0};
    cplx lambda{0.0};
    double mu = 1.0;
    double A = 0.0;
    cplx B{0.0};
    cplx D{0.0};
};

/// True when lambda / mu + A^2 lies on the closed negative real axis.
bool on_branch_cut(double A, cplx lambda, double mu);

/// A = |xi'| and B = sqrt(lambda/mu + A^2) on the principal branch.
/// Throws branch_cut when lambda lies on (-inf, -mu A^2].
std::pair<double, cplx> eval_AB(std::array<double, 2> xi, cplx lambda, double mu);

cplx lopatinskii_D(double A, cplx B);

/// (e^{Ba} - e^{Aa}) / (B - A) for a <= 0, switching to a 32-point
/// Gauss-Legendre evaluation of a * int_0^1 e^{(B t + A (1-t)) a} dt near B = A.
cplx calM(double a, double A, cplx B);

/// True when calM uses the integral form for these arguments.
bool calM_uses_integral(double A, cplx B);

SymbolBundle make_bundle(std::array<double, 2> xi, cplx lambda, double mu);

} // namespace fbns::symbols
