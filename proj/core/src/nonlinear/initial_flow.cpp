#include "fbns/nonlinear/initial_flow.hpp"

#include "fbns/error.hpp"
#include "fbns/geometry/hanzawa.hpp"
#include "fbns/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace fbns::nonlinear {

using spectral::Representation;

DampedHeat::DampedHeat(spectral::VGridPtr vgrid, double mu) : vgrid_(std::move(vgrid)), mu_(mu) {
    require(mu > 0.0, ErrorKind::invalid_input, "viscosity must be positive");
    const int n = vgrid_->size();
    require(n >= 4, ErrorKind::invalid_input, "vertical grid too small");
    const Eigen::MatrixXd& D = vgrid_->D();
    const Eigen::MatrixXd D2 = D * D;
    const int ni = n - 2;
    // end values from D w = 0 at both ends
    Eigen::Matrix2d B;
    B << D(0, 0), D(0, n - 1), D(n - 1, 0), D(n - 1, n - 1);
    Eigen::MatrixXd R(2, ni);
    R.row(0) = -D.row(0).segment(1, ni);
    R.row(1) = -D.row(n - 1).segment(1, ni);
    const Eigen::MatrixXd E = B.partialPivLu().solve(R);
    lift_ = Eigen::MatrixXd::Zero(n, ni);
    lift_.row(0) = E.row(0);
    lift_.row(n - 1) = E.row(1);
    lift_.block(1, 0, ni, ni).setIdentity();
    const Eigen::MatrixXd Lint = D2.block(1, 0, ni, n) * lift_;
    const Eigen::EigenSolver<Eigen::MatrixXd> es(Lint);
    if (es.info() != Eigen::Success) fail(ErrorKind::numerical, "heat operator eigen-decomposition failed");
    lambda_ = es.eigenvalues();
    V_ = es.eigenvectors();
    Vinv_ = V_.inverse();
}

double DampedHeat::max_vertical_eigenvalue() const { return lambda_.real().maxCoeff(); }

void DampedHeat::evolve(const HalfSpaceField& w0, const std::vector<double>& times, std::vector<HalfSpaceField>& w,
                        std::vector<HalfSpaceField>& dw) const {
    require(w0.representation() == Representation::spectral, ErrorKind::invalid_input,
            "heat data must be spectral");
    require(*w0.vgrid() == *vgrid_, ErrorKind::invalid_input, "heat data lives on a different vertical grid");
    const auto& hg = *w0.hgrid();
    const int n = vgrid_->size(), ni = n - 2;
    const std::size_t nt = times.size();
    w.assign(nt, HalfSpaceField(w0.hgrid(), w0.vgrid(), w0.components(), Representation::spectral));
    dw = w;
    parallel_for(hg.size(), [&](std::size_t m) {
        const double A = hg.abs_xi(m);
        for (int c = 0; c < w0.components(); ++c) {
            Eigen::VectorXcd x(ni);
            for (int z = 0; z < ni; ++z) x(z) = w0(c, z + 1, m);
            if (x.isZero(0.0)) continue;
            const Eigen::VectorXcd coef = Vinv_ * x;
            for (std::size_t k = 0; k < nt; ++k) {
                Eigen::VectorXcd y(ni), dy(ni);
                for (int j = 0; j < ni; ++j) {
                    const cplx rate = mu_ * lambda_(j) - (1.0 + mu_ * A * A);
                    y(j) = std::exp(rate * times[k]) * coef(j);
                    dy(j) = rate * y(j);
                }
                const Eigen::VectorXcd val = lift_.cast<cplx>() * (V_ * y);
                const Eigen::VectorXcd dval = lift_.cast<cplx>() * (V_ * dy);
                for (int z = 0; z < n; ++z) {
                    w[k](c, z, m) = val(z);
                    dw[k](c, z, m) = dval(z);
                }
            }
        }
    });
}

analysis::StateZ zero_state(const spectral::HGridPtr& hg, const spectral::VGridPtr& vg,
                            const std::vector<double>& times) {
    analysis::StateZ z;
    z.times = times;
    for (std::size_t k = 0; k < times.size(); ++k) {
        z.v.emplace_back(hg, vg, 3, Representation::spectral);
        z.q.emplace_back(hg, vg, 1, Representation::spectral);
        z.h.emplace_back(hg, Representation::spectral);
        z.eta.emplace_back(hg, vg, 1, Representation::spectral);
        z.dv.emplace_back(hg, vg, 3, Representation::spectral);
        z.dh.emplace_back(hg, Representation::spectral);
    }
    return z;
}

InitialFlow initial_flow(const HalfSpaceField& v0, const SurfaceField& h0, const std::vector<double>& times,
                         const linear::ModalPropagator& prop) {
    require(!times.empty() && times.front() == 0.0, ErrorKind::invalid_input, "time grid must start at 0");
    linear::LinearData data;
    data.times = times;
    const linear::LinearSolution us = prop.solve(nullptr, &h0, data);

    InitialFlow out;
    DampedHeat(prop.vgrid(), prop.params().mu).evolve(v0, times, out.w, out.dw);
    auto& z = out.z;
    z.times = times;
    for (std::size_t k = 0; k < times.size(); ++k) {
        z.v.push_back(us.u[k] + out.w[k]);
        z.dv.push_back(us.du[k] + out.dw[k]);
        z.q.push_back(us.p[k]);
        z.h.push_back(us.h[k]);
        z.dh.push_back(us.dh[k]);
        z.eta.push_back(geometry::harmonic_extension(us.h[k], prop.vgrid()));
    }
    return out;
}

} // namespace fbns::nonlinear
