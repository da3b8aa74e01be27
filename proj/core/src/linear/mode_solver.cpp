#include "fbns/linear/mode_solver.hpp"

#include "fbns/error.hpp"

#include <cmath>

namespace fbns::linear {

using Eigen::MatrixXd;

ModeData ModeData::zero(int n) {
    ModeData d;
    for (auto& f : d.F) f = Vec::Zero(n);
    return d;
}

ModeOperator build_mode_operator(double A, VGridPtr grid, const PhysicalParams& params, bool free_surface) {
    require(A >= 0.0, ErrorKind::invalid_input, "A must be nonnegative");
    ModeOperator op;
    op.A = A;
    op.grid = grid;
    op.params = params;
    op.free_surface = free_surface;
    const int n = grid->size();
    const double mu = params.mu;
    const MatrixXd& D = grid->D();
    const MatrixXd D2 = D * D;
    const MatrixXd I = MatrixXd::Identity(n, n);
    const MatrixXd L = D2 - A * A * I;
    const int top = n - 1;

    op.Mt = MatrixXd::Zero(n, n);
    op.Kt = MatrixXd::Zero(n, n);
    for (int r = 1; r < n - 1; ++r) {
        op.Mt(r, r) = 1.0;
        op.Kt.row(r) = mu * L.row(r);
    }
    op.Kt.row(0) = -I.row(0);
    op.Kt.row(top) = -mu * D.row(top);

    if (A == 0.0) return op;

    op.Mp = MatrixXd::Zero(n + 1, n + 1);
    op.Kp = MatrixXd::Zero(n + 1, n + 1);
    const MatrixXd W = A * A * I - D2;
    const MatrixXd LW = mu * L * W;
    for (int r = 2; r < n - 2; ++r) {
        op.Mp.row(r).head(n) = W.row(r);
        op.Kp.row(r).head(n) = LW.row(r);
    }
    op.Kp.row(0).head(n) = -I.row(0);
    op.Kp.row(1).head(n) = -D.row(0);
    const MatrixXd LD = L * D;
    op.Mp.row(n - 2).head(n) = D.row(top) / (A * A);
    op.Kp.row(n - 2).head(n) = -(2.0 * mu * D.row(top) - mu * LD.row(top) / (A * A));
    if (free_surface) op.Kp(n - 2, n) = -params.restoring(A);
    op.Kp.row(n - 1).head(n) = mu * (D2.row(top) + A * A * I.row(top));
    op.Mp(n, n) = 1.0;
    op.Kp(n, top) = 1.0;
    return op;
}

Vec poloidal_rhs(const ModeOperator& op, std::array<double, 2> xi, const ModeData& d) {
    const int n = op.n();
    const double A = op.A;
    const cplx i1(0.0, xi[0]), i2(0.0, xi[1]);
    const Vec ixF = i1 * d.F[0] + i2 * d.F[1];
    const Vec rhs_int = A * A * d.F[2] + op.grid->D().cast<cplx>() * ixF;
    Vec b = Vec::Zero(n + 1);
    for (int r = 2; r < n - 2; ++r) b(r) = rhs_int(r);
    b(n - 2) = d.h[2] - ixF(n - 1) / (A * A);
    b(n - 1) = i1 * d.h[0] + i2 * d.h[1];
    b(n) = d.K;
    return b;
}

Vec toroidal_rhs(const ModeOperator& op, std::array<double, 2> xi, const ModeData& d) {
    const int n = op.n();
    const cplx i1(0.0, xi[0]), i2(0.0, xi[1]);
    Vec b = i1 * d.F[1] - i2 * d.F[0];
    b(0) = 0.0;
    b(n - 1) = i1 * d.h[1] - i2 * d.h[0];
    return b;
}

Vec tangential_rhs(const ModeOperator& op, const ModeData& d, int j) {
    const int n = op.n();
    Vec b = d.F[j];
    b(0) = 0.0;
    b(n - 1) = d.h[j];
    return b;
}

ModeProfile reconstruct(const ModeOperator& op, std::array<double, 2> xi, const Vec& X, const Vec& dX,
                        const std::array<Vec, 2>& tor, const ModeData& d) {
    const int n = op.n();
    const double A = op.A;
    const double mu = op.params.mu;
    const Eigen::MatrixXcd D = op.grid->D().cast<cplx>();
    ModeProfile p;
    p.xi = xi;
    p.grid = op.grid;
    p.H = X(X.size() - 1);
    if (A == 0.0) {
        p.U[0] = tor[0];
        p.U[1] = tor[1];
        p.U[2] = Vec::Zero(n);
        // D P = F3 with P(0) = c_g H - h3.
        Eigen::MatrixXcd Dm = D;
        Vec rhs = d.F[2];
        Dm.row(n - 1).setZero();
        Dm(n - 1, n - 1) = 1.0;
        rhs(n - 1) = (op.free_surface ? op.params.c_g * p.H : cplx(0.0)) - d.h[2];
        p.P = Dm.partialPivLu().solve(rhs);
        return p;
    }
    const Vec U3 = X.head(n);
    const Vec Phi = -(D * U3);
    const cplx i1(0.0, xi[0]), i2(0.0, xi[1]);
    const Vec& Om = tor[0];
    p.U[0] = (-i1 * Phi + i2 * Om) / (A * A);
    p.U[1] = (-i2 * Phi - i1 * Om) / (A * A);
    p.U[2] = U3;
    const Vec DU3 = D * U3;
    const Vec LDU3 = D * (D * DU3) - A * A * DU3;
    const Vec ixF = i1 * d.F[0] + i2 * d.F[1];
    p.P = (-(D * dX.head(n)) + mu * LDU3 - ixF) / (A * A);
    return p;
}

ModeProfile solve_resolvent_mode(std::array<double, 2> xi, cplx lambda, const ModeData& d,
                                 const PhysicalParams& params, const VGridPtr& grid, const ResolventOptions& opt) {
    if (opt.check_sector) {
        opt.sector.validate();
        require(opt.sector.contains(lambda), ErrorKind::domain, "lambda lies outside the resolvent sector");
    }
    const double A = std::hypot(xi[0], xi[1]);
    const ModeOperator op = build_mode_operator(A, grid, params, opt.free_surface);
    return solve_resolvent_mode(op, xi, lambda, d);
}

namespace {

// Row-equilibrated LU; the collocated fourth-order rows are many orders of
// magnitude larger than the boundary rows.
struct ScaledLU {
    Eigen::VectorXd s;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
    explicit ScaledLU(Eigen::MatrixXcd m) : s(m.rows()) {
        for (int r = 0; r < m.rows(); ++r) {
            const double a = m.row(r).cwiseAbs().maxCoeff();
            s(r) = a > 0.0 ? 1.0 / a : 1.0;
            m.row(r) *= s(r);
        }
        lu.compute(m);
    }
    Vec solve(const Vec& b) const { return lu.solve(s.cast<cplx>().cwiseProduct(b)); }
    double rcond() const { return lu.rcond(); }
};

} // namespace

ModeProfile solve_resolvent_mode(const ModeOperator& op, std::array<double, 2> xi, cplx lambda, const ModeData& d) {
    const int n = op.n();
    for (const auto& f : d.F)
        require(f.size() == n, ErrorKind::invalid_input, "forcing profile size does not match the vertical grid");
    const Eigen::MatrixXcd Tm = lambda * op.Mt.cast<cplx>() - op.Kt.cast<cplx>();
    const ScaledLU tlu(Tm);
    double rc = tlu.rcond();
    std::array<Vec, 2> tor;
    Vec X, dX;
    if (op.A == 0.0) {
        tor[0] = tlu.solve(tangential_rhs(op, d, 0));
        tor[1] = tlu.solve(tangential_rhs(op, d, 1));
        X = Vec::Constant(1, d.K / lambda);
        dX = Vec::Constant(1, d.K);
    } else {
        const Eigen::MatrixXcd Pm = lambda * op.Mp.cast<cplx>() - op.Kp.cast<cplx>();
        const ScaledLU plu(Pm);
        rc = std::min(rc, plu.rcond());
        X = plu.solve(poloidal_rhs(op, xi, d));
        dX = lambda * X;
        tor[0] = tlu.solve(toroidal_rhs(op, xi, d));
        tor[1] = Vec::Zero(n);
    }
    if (!(rc > 1e-18)) fail(ErrorKind::numerical, "singular mode system, rcond = " + std::to_string(rc));
    ModeProfile p = reconstruct(op, xi, X, dX, tor, d);
    p.rcond = rc;
    return p;
}

double ModeResidual::max_abs() const { return std::max({momentum, divergence, stress, kinematic}); }

ModeResidual mode_residual(const ModeProfile& p, cplx lambda, const ModeData& d, const PhysicalParams& params,
                           bool free_surface) {
    return mode_residual(p, {lambda * p.U[0], lambda * p.U[1], lambda * p.U[2]}, lambda * p.H, d, params,
                         free_surface);
}

ModeResidual mode_residual(const ModeProfile& p, const std::array<Vec, 3>& dU, cplx dH, const ModeData& d,
                           const PhysicalParams& params, bool free_surface) {
    const int n = p.grid->size();
    const Eigen::MatrixXcd D = p.grid->D().cast<cplx>();
    const Eigen::MatrixXcd D2 = D * D;
    const double A2 = p.xi[0] * p.xi[0] + p.xi[1] * p.xi[1];
    const double A = std::sqrt(A2);
    const double mu = params.mu;
    const cplx i1(0.0, p.xi[0]), i2(0.0, p.xi[1]);
    ModeResidual r;
    const Vec DP = D * p.P;
    for (int c = 0; c < 3; ++c) {
        const Vec lapU = D2 * p.U[c] - A2 * p.U[c];
        const Vec grad = c == 0 ? Vec(i1 * p.P) : c == 1 ? Vec(i2 * p.P) : DP;
        const Vec res = dU[c] - mu * lapU + grad - d.F[c];
        for (int z = 2; z < n - 2; ++z) r.momentum = std::max(r.momentum, std::abs(res(z)));
        r.scale = std::max({r.scale, d.F[c].cwiseAbs().maxCoeff(), dU[c].cwiseAbs().maxCoeff(),
                            (mu * lapU).cwiseAbs().maxCoeff()});
    }
    const Vec div = i1 * p.U[0] + i2 * p.U[1] + D * p.U[2];
    r.divergence = div.cwiseAbs().maxCoeff();
    const int t = n - 1;
    const Vec DU1 = D * p.U[0], DU2 = D * p.U[1], DU3 = D * p.U[2];
    const double restoring = free_surface ? params.restoring(A) : 0.0;
    r.stress = std::max({std::abs(mu * (DU1(t) + i1 * p.U[2](t)) - d.h[0]),
                         std::abs(mu * (DU2(t) + i2 * p.U[2](t)) - d.h[1]),
                         std::abs(2.0 * mu * DU3(t) - p.P(t) + restoring * p.H - d.h[2])});
    if (free_surface) r.kinematic = std::abs(dH - p.U[2](t) - d.K);
    r.scale = std::max({r.scale, std::abs(d.K), std::abs(dH), std::abs(d.h[0]), std::abs(d.h[1]),
                        std::abs(d.h[2])});
    return r;
}

double adapted_depth(double A, cplx lambda, double mu, double L, double cap) {
    // slowest vertical decay is e^{A x3} since Re B >= A in the sector
    const cplx B = std::sqrt(lambda / mu + A * A);
    const double rate = std::min(A, B.real());
    return rate > 0.0 ? std::min(L, cap / rate) : L;
}

} // namespace fbns::linear
