#include "fbns/spectral/grid.hpp"

#include "fbns/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fbns::spectral {

using std::numbers::pi;

HorizontalGrid::HorizontalGrid(double box_length, int modes_per_dim)
    : box_(box_length), n_(modes_per_dim) {
    require(box_length > 0.0, ErrorKind::invalid_input, "box_length must be positive");
    require(modes_per_dim >= 8 && modes_per_dim % 2 == 0, ErrorKind::invalid_input,
            "modes_per_dim must be even and >= 8");
}

double HorizontalGrid::dk() const { return 2.0 * pi / box_; }

double HorizontalGrid::wavenumber(int i) const { return dk() * signed_index(i); }

std::size_t HorizontalGrid::mode_of(int k1, int k2) const {
    auto wrap = [this](int k) { return ((k % n_) + n_) % n_; };
    return index(wrap(k1), wrap(k2));
}

double HorizontalGrid::abs_xi(std::size_t m) const { return std::hypot(xi1(m), xi2(m)); }

bool HorizontalGrid::is_nyquist(std::size_t m) const {
    return static_cast<int>(m / n_) == n_ / 2 || static_cast<int>(m % n_) == n_ / 2;
}

std::size_t HorizontalGrid::conjugate(std::size_t m) const {
    const int i1 = static_cast<int>(m / n_);
    const int i2 = static_cast<int>(m % n_);
    return index((n_ - i1) % n_, (n_ - i2) % n_);
}

std::vector<std::array<double, 2>> HorizontalGrid::wavenumbers() const {
    std::vector<std::array<double, 2>> out(size());
    for (std::size_t m = 0; m < size(); ++m) out[m] = xi(m);
    return out;
}

VerticalGrid VerticalGrid::chebyshev(double depth, int n) {
    require(depth > 0.0, ErrorKind::invalid_input, "depth must be positive");
    require(n >= 16, ErrorKind::invalid_input, "vertical node count must be >= 16");
    VerticalGrid g;
    g.scheme_ = VerticalScheme::collocation;
    g.depth_ = depth;
    const int N = n - 1;
    Eigen::VectorXd s(n);
    for (int j = 0; j < n; ++j) s(j) = -std::cos(pi * j / N);
    s(0) = -1.0;
    s(N) = 1.0;
    g.x_ = 0.5 * depth * (s.array() - 1.0);
    g.x_(N) = 0.0;
    g.x_(0) = -depth;

    Eigen::VectorXd c(n);
    for (int j = 0; j < n; ++j) c(j) = ((j == 0 || j == N) ? 2.0 : 1.0) * ((j % 2) ? -1.0 : 1.0);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            D(i, j) = (c(i) / c(j)) / (s(i) - s(j));
            row += D(i, j);
        }
        D(i, i) = -row;
    }
    g.d1_ = D * (2.0 / depth);
    g.d2_ = g.d1_ * g.d1_;

    // Clenshaw-Curtis weights on [-1, 1], scaled to [-L, 0].
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    for (int j = 0; j <= N; ++j) {
        const double theta = pi * j / N;
        double sum = 0.0;
        if (N % 2 == 0) {
            for (int k = 1; k < N / 2; ++k) sum += 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
            sum += std::cos(N * theta) / (static_cast<double>(N) * N - 1.0);
        } else {
            for (int k = 1; k <= (N - 1) / 2; ++k) sum += 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
        }
        const double base = (j == 0 || j == N) ? 1.0 / N : 2.0 / N;
        w(j) = base * (1.0 - sum);
        if (j == 0 || j == N) {
            w(j) = (N % 2 == 0) ? 1.0 / (static_cast<double>(N) * N - 1.0) : 1.0 / (static_cast<double>(N) * N);
        }
    }
    g.w_ = w * (0.5 * depth);

    g.bary_.resize(n);
    for (int j = 0; j < n; ++j) g.bary_(j) = ((j % 2) ? -1.0 : 1.0) * ((j == 0 || j == N) ? 0.5 : 1.0);
    return g;
}

VerticalGrid VerticalGrid::finite_difference(double depth, int n) {
    require(depth > 0.0, ErrorKind::invalid_input, "depth must be positive");
    require(n >= 16, ErrorKind::invalid_input, "vertical node count must be >= 16");
    VerticalGrid g;
    g.scheme_ = VerticalScheme::finite_difference;
    g.depth_ = depth;
    const double h = depth / (n - 1);
    g.x_.resize(n);
    for (int j = 0; j < n; ++j) g.x_(j) = -depth + j * h;
    g.x_(n - 1) = 0.0;

    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd D2 = Eigen::MatrixXd::Zero(n, n);
    for (int j = 1; j < n - 1; ++j) {
        D(j, j - 1) = -0.5 / h;
        D(j, j + 1) = 0.5 / h;
        D2(j, j - 1) = 1.0 / (h * h);
        D2(j, j) = -2.0 / (h * h);
        D2(j, j + 1) = 1.0 / (h * h);
    }
    D(0, 0) = -1.5 / h;
    D(0, 1) = 2.0 / h;
    D(0, 2) = -0.5 / h;
    D(n - 1, n - 1) = 1.5 / h;
    D(n - 1, n - 2) = -2.0 / h;
    D(n - 1, n - 3) = 0.5 / h;
    const double ih2 = 1.0 / (h * h);
    D2(0, 0) = 2.0 * ih2;
    D2(0, 1) = -5.0 * ih2;
    D2(0, 2) = 4.0 * ih2;
    D2(0, 3) = -1.0 * ih2;
    D2(n - 1, n - 1) = 2.0 * ih2;
    D2(n - 1, n - 2) = -5.0 * ih2;
    D2(n - 1, n - 3) = 4.0 * ih2;
    D2(n - 1, n - 4) = -1.0 * ih2;
    g.d1_ = D;
    g.d2_ = D2;
    g.w_ = Eigen::VectorXd::Constant(n, h);
    g.w_(0) = g.w_(n - 1) = 0.5 * h;
    return g;
}

VerticalGrid VerticalGrid::make(VerticalScheme scheme, double depth, int n) {
    return scheme == VerticalScheme::collocation ? chebyshev(depth, n) : finite_difference(depth, n);
}

Eigen::MatrixXd VerticalGrid::interpolation_to(const Eigen::VectorXd& points) const {
    const int n = size();
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(points.size(), n);
    for (int r = 0; r < points.size(); ++r) {
        const double p = points(r);
        if (p < -depth_ * (1.0 + 1e-13) || p > 1e-13 * depth_) continue;
        if (scheme_ == VerticalScheme::collocation) {
            int hit = -1;
            for (int j = 0; j < n; ++j)
                if (std::abs(p - x_(j)) <= 1e-14 * depth_) { hit = j; break; }
            if (hit >= 0) {
                P(r, hit) = 1.0;
                continue;
            }
            double den = 0.0;
            for (int j = 0; j < n; ++j) {
                const double t = bary_(j) / (p - x_(j));
                P(r, j) = t;
                den += t;
            }
            P.row(r) /= den;
        } else {
            const double h = depth_ / (n - 1);
            int j = static_cast<int>(std::floor((p + depth_) / h));
            j = std::clamp(j, 0, n - 2);
            const double a = (p - x_(j)) / h;
            P(r, j) = 1.0 - a;
            P(r, j + 1) = a;
        }
    }
    return P;
}

} // namespace fbns::spectral
