#include "fbns/linear/boundary_forced.hpp"

#include "fbns/error.hpp"

#include <cmath>

namespace fbns::linear {

std::array<Vec, 3> solve_boundary_forced_mode(std::array<double, 2> xi, cplx lambda, const std::array<cplx, 3>& h,
                                              const Eigen::VectorXd& x3, double mu) {
    const auto [A, B] = symbols::eval_AB(xi, lambda, mu);
    const cplx D = symbols::lopatinskii_D(A, B);
    const double scale = std::pow(std::sqrt(std::abs(lambda)) + A, 3);
    if (std::abs(D) < 1e-12 * scale) fail(ErrorKind::near_degenerate, "Lopatinskii determinant is near zero");
    const int n = static_cast<int>(x3.size());
    std::array<Vec, 3> v;
    for (auto& c : v) c = Vec::Zero(n);
    const cplx I(0.0, 1.0);
    for (int z = 0; z < n; ++z) {
        const double a = x3(z);
        const cplx E = std::exp(B * a);
        if (A == 0.0) {
            v[0](z) = E * h[0] / (mu * B);
            v[1](z) = E * h[1] / (mu * B);
            continue;
        }
        const cplx AM = A * symbols::calM(a, A, B);
        for (int j = 0; j < 2; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 2; ++k) {
                s += 2.0 / mu * xi[j] * xi[k] * B / (A * D) * AM * h[k];
                s -= 1.0 / mu * xi[j] * xi[k] * (3.0 * B - A) / (B * D) * E * h[k];
            }
            s -= 1.0 / mu * I * xi[j] * (B * B + A * A) / (A * D) * AM * h[2];
            s += 1.0 / mu * I * xi[j] * (B - A) / D * E * h[2];
            s += 1.0 / (mu * B) * E * h[j];
            v[j](z) = s;
        }
        cplx s = 0.0;
        for (int k = 0; k < 2; ++k) {
            s -= 2.0 / mu * I * xi[k] * B / D * AM * h[k];
            s -= 1.0 / mu * I * xi[k] * (B - A) / D * E * h[k];
        }
        s -= 1.0 / mu * (B * B + A * A) / D * AM * h[2];
        s += 1.0 / mu * A * (B + A) / D * E * h[2];
        v[2](z) = s;
    }
    return v;
}

} // namespace fbns::linear
