#include "fbns/linear/divergence.hpp"

#include "fbns/error.hpp"
#include "fbns/parallel.hpp"

#include <cmath>

namespace fbns::linear {

using spectral::Representation;

namespace {

Eigen::PartialPivLU<Eigen::MatrixXd> potential_lu(double A, const spectral::VerticalGrid& grid) {
    const int n = grid.size();
    Eigen::MatrixXd M = grid.D2() - A * A * Eigen::MatrixXd::Identity(n, n);
    M.row(0) = grid.D().row(0);
    M(0, 0) -= A;
    M.row(n - 1).setZero();
    M(n - 1, n - 1) = 1.0;
    return M.partialPivLu();
}

Vec potential_rhs(const Vec& g) {
    Vec b = g;
    b(0) = 0.0;
    b(b.size() - 1) = 0.0;
    return b;
}

} // namespace

Vec divergence_potential(const Vec& g, double A, const spectral::VerticalGrid& grid) {
    require(g.size() == grid.size(), ErrorKind::invalid_input, "profile size does not match the vertical grid");
    require(A >= 0.0, ErrorKind::invalid_input, "A must be nonnegative");
    return potential_lu(A, grid).solve(potential_rhs(g));
}

cplx divergence_trace_integral(const Vec& g, double A, const spectral::VerticalGrid& grid) {
    require(g.size() == grid.size(), ErrorKind::invalid_input, "profile size does not match the vertical grid");
    cplx s = 0.0;
    for (int j = 0; j < grid.size(); ++j) s += grid.weights()(j) * std::exp(A * grid.node(j)) * g(j);
    return s;
}

spectral::HalfSpaceField solve_divergence(const spectral::HalfSpaceField& g) {
    require(g.components() == 1, ErrorKind::invalid_input, "divergence data must be scalar");
    require(g.representation() == Representation::spectral, ErrorKind::invalid_input,
            "divergence data must be spectral");
    const auto& hg = *g.hgrid();
    const auto& vg = *g.vgrid();
    const int nz = vg.size();
    spectral::HalfSpaceField d(g.hgrid(), g.vgrid(), 3, Representation::spectral);
    const Eigen::MatrixXcd D = vg.D().cast<cplx>();
    parallel_for(hg.size(), [&](std::size_t m) {
        if (hg.is_nyquist(m)) return;
        Vec gm(nz);
        bool any = false;
        for (int z = 0; z < nz; ++z) {
            gm(z) = g(0, z, m);
            any = any || gm(z) != cplx(0.0);
        }
        if (!any) return;
        const Vec psi = divergence_potential(gm, hg.abs_xi(m), vg);
        const Vec dpsi = D * psi;
        const cplx i1(0.0, hg.xi1(m)), i2(0.0, hg.xi2(m));
        for (int z = 0; z < nz; ++z) {
            d(0, z, m) = i1 * psi(z);
            d(1, z, m) = i2 * psi(z);
            d(2, z, m) = dpsi(z);
        }
    });
    return d;
}

} // namespace fbns::linear
