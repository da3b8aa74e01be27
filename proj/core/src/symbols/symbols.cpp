#include "fbns/symbols/symbols.hpp"

#include "fbns/error.hpp"
#include "fbns/symbols/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

namespace fbns::symbols {

bool SectorSpec::contains(cplx lambda) const {
    return std::abs(std::arg(lambda)) < std::numbers::pi - epsilon && std::abs(lambda) > gamma0;
}

double SectorSpec::vertex() const { return 2.0 * gamma0 / std::sin(epsilon); }

void SectorSpec::validate() const {
    require(epsilon > 0.0 && epsilon < 0.5 * std::numbers::pi, ErrorKind::invalid_input,
            "sector angle must lie in (0, pi/2)");
    require(gamma0 >= 0.0, ErrorKind::invalid_input, "sector radius floor must be >= 0");
}

bool on_branch_cut(double A, cplx lambda, double mu) {
    const cplx w = lambda / mu + A * A;
    return w.imag() == 0.0 && w.real() <= 0.0 && !(A == 0.0 && lambda == 0.0);
}

std::pair<double, cplx> eval_AB(std::array<double, 2> xi, cplx lambda, double mu) {
    require(mu > 0.0, ErrorKind::invalid_input, "viscosity must be positive");
    const double A = std::hypot(xi[0], xi[1]);
    if (on_branch_cut(A, lambda, mu)) fail(ErrorKind::branch_cut, "lambda lies on (-inf, -mu |xi'|^2]");
    return {A, std::sqrt(lambda / mu + A * A)};
}

cplx lopatinskii_D(double A, cplx B) { return B * B * B + A * B * B + 3.0 * A * A * B - A * A * A; }

bool calM_uses_integral(double A, cplx B) {
    return std::abs(B - A) < 1e-6 * (std::abs(A) + std::abs(B) + 1.0);
}

cplx calM(double a, double A, cplx B) {
    require(a <= 0.0, ErrorKind::invalid_input, "calM needs a <= 0");
    if (a == 0.0) return 0.0;
    if (!calM_uses_integral(A, B)) return std::exp(A * a) * expm1((B - A) * a) / (B - A);
    const auto& [x, w] = gauss_legendre_unit(32);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * std::exp((B * x[i] + A * (1.0 - x[i])) * a);
    return a * acc;
}

SymbolBundle make_bundle(std::array<double, 2> xi, cplx lambda, double mu) {
    SymbolBundle b;
    b.xi = xi;
    b.lambda = lambda;
    b.mu = mu;
    std::tie(b.A, b.B) = eval_AB(xi, lambda, mu);
    b.D = lopatinskii_D(b.A, b.B);
    return b;
}

} // namespace fbns::symbols
