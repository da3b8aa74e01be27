#pragma once

#include "fbns/params.hpp"
#include "fbns/spectral/grid.hpp"
#include "fbns/symbols/symbols.hpp"

#include <Eigen/Dense>

#include <array>

namespace fbns::linear {

using spectral::VGridPtr;
using Vec = Eigen::VectorXcd;

/// Vertical descriptor pencils (lambda M - K) for one |xi'|.
///
/// Poloidal block, unknowns (U3 on the nodes, H), rows:
///   0, 1      U3 = DU3 = 0 at the bottom
///   2..n-3    (lambda - mu L)(A^2 - D^2) U3 = A^2 F3 + D(i xi . F')
///   n-2       normal stress with the pressure eliminated
///   n-1       tangential stress, divergence part
///   n         kinematic condition
/// Toroidal block, unknown Omega = i xi1 U2 - i xi2 U1:
///   0 bottom Dirichlet, interior (lambda - mu L) Omega = curl F,
///   n-1 mu D Omega = curl h at the top.
/// L = D^2 - A^2 with D^2 taken as D * D. For A = 0 the toroidal block is the
/// scalar diffusion operator used for each tangential component.
struct ModeOperator {
    double A = 0.0;
    VGridPtr grid;
    PhysicalParams params;
    bool free_surface = true;
    Eigen::MatrixXd Mp, Kp;
    Eigen::MatrixXd Mt, Kt;
    int n() const { return grid->size(); }
};

ModeOperator build_mode_operator(double A, VGridPtr grid, const PhysicalParams& params, bool free_surface = true);

/// Per-mode data: interior forcing F (3 profiles), stress data h, kinematic K.
struct ModeData {
    std::array<Vec, 3> F;
    std::array<cplx, 3> h{cplx(0.0), cplx(0.0), cplx(0.0)};
    cplx K{0.0};
    static ModeData zero(int n);
};

Vec poloidal_rhs(const ModeOperator& op, std::array<double, 2> xi, const ModeData& d);
Vec toroidal_rhs(const ModeOperator& op, std::array<double, 2> xi, const ModeData& d);
/// Zero-mode rhs for tangential component j in {0, 1}.
Vec tangential_rhs(const ModeOperator& op, const ModeData& d, int j);

struct ModeProfile {
    std::array<double, 2> xi{0.0, 0.0};
    VGridPtr grid;
    std::array<Vec, 3> U;
    Vec P;
    cplx H{0.0};
    double rcond = 1.0;
};

/// Primitive variables from block states. For A > 0, tor = {Omega, unused};
/// for A = 0, tor = {U1, U2} and X holds only H in its last entry. dX is the
/// time derivative (or lambda X for the resolvent) of the poloidal state.
ModeProfile reconstruct(const ModeOperator& op, std::array<double, 2> xi, const Vec& X, const Vec& dX,
                        const std::array<Vec, 2>& tor, const ModeData& d);

struct ResolventOptions {
    symbols::SectorSpec sector;
    bool check_sector = true;
    bool free_surface = true;
};

/// Collocation solve of the mode-reduced resolvent problem on the given grid.
ModeProfile solve_resolvent_mode(std::array<double, 2> xi, cplx lambda, const ModeData& d,
                                 const PhysicalParams& params, const VGridPtr& grid,
                                 const ResolventOptions& opt = {});

/// Same, with a prebuilt operator.
ModeProfile solve_resolvent_mode(const ModeOperator& op, std::array<double, 2> xi, cplx lambda, const ModeData& d);

struct ModeResidual {
    double momentum = 0.0;
    double divergence = 0.0;
    double stress = 0.0;
    double kinematic = 0.0;
    double scale = 0.0;
    double max_abs() const;
    double relative() const { return scale > 0.0 ? max_abs() / scale : max_abs(); }
};

/// Residuals of the primitive mode equations. Momentum is checked on nodes
/// 2..n-3, where the vertical equation is collocated.
ModeResidual mode_residual(const ModeProfile& p, cplx lambda, const ModeData& d, const PhysicalParams& params,
                           bool free_surface = true);

/// Same with explicit time derivatives dU, dH in place of lambda U, lambda H.
ModeResidual mode_residual(const ModeProfile& p, const std::array<Vec, 3>& dU, cplx dH, const ModeData& d,
                           const PhysicalParams& params, bool free_surface = true);

/// Depth min(L, cap / A): e^{A x3} is the slowest vertical scale in the sector.
double adapted_depth(double A, cplx lambda, double mu, double L, double cap);

} // namespace fbns::linear
