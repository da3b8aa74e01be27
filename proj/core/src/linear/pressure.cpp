#include "fbns/linear/pressure.hpp"

#include "fbns/error.hpp"

#include <cmath>

namespace fbns::linear {

Vec reconstruct_pressure(const std::array<Vec, 3>& u, cplx h, std::array<double, 2> xi, const PhysicalParams& params,
                         const spectral::VerticalGrid& grid) {
    const int n = grid.size();
    for (const auto& c : u) require(c.size() == n, ErrorKind::invalid_input, "velocity profile size mismatch");
    const double A2 = xi[0] * xi[0] + xi[1] * xi[1];
    const double A = std::sqrt(A2);
    const double mu = params.mu;
    const Eigen::MatrixXcd D = grid.D().cast<cplx>();
    const cplx i1(0.0, xi[0]), i2(0.0, xi[1]);
    const Vec div = i1 * u[0] + i2 * u[1] + D * u[2];
    const Vec rhs_full = (2.0 * mu - 1.0) * (D * (D * div) - A2 * div);

    Eigen::MatrixXd M = grid.D2() - A2 * Eigen::MatrixXd::Identity(n, n);
    M.row(0) = grid.D().row(0);
    M(0, 0) -= A;
    M.row(n - 1).setZero();
    M(n - 1, n - 1) = 1.0;
    Vec b = rhs_full;
    b(0) = 0.0;
    const Vec Du3 = D * u[2];
    b(n - 1) = 2.0 * mu * Du3(n - 1) - div(n - 1) + params.restoring(A) * h;
    return M.cast<cplx>().partialPivLu().solve(b);
}

} // namespace fbns::linear
