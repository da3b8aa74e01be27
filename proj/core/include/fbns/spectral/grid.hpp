#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

namespace fbns::spectral {

/// Doubly periodic horizontal grid with N x N points on [0, box)^2.
///
/// Mode and point storage share the row-major index m = i1 * N + i2, with i1
/// running along x1. Wavenumber index i maps to 2*pi/box * (i < N/2 ? i : i - N).
class HorizontalGrid {
public:
    HorizontalGrid(double box_length, int modes_per_dim);

    double box_length() const { return box_; }
    int n() const { return n_; }
    std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }
    double dx() const { return box_ / n_; }
    double dk() const;

    int signed_index(int i) const { return i < n_ / 2 ? i : i - n_; }
    double wavenumber(int i) const;
    std::size_t index(int i1, int i2) const { return static_cast<std::size_t>(i1) * n_ + i2; }
    /// Storage index of the mode with signed integer wavenumbers (k1, k2).
    std::size_t mode_of(int k1, int k2) const;

    double xi1(std::size_t m) const { return wavenumber(static_cast<int>(m / n_)); }
    double xi2(std::size_t m) const { return wavenumber(static_cast<int>(m % n_)); }
    std::array<double, 2> xi(std::size_t m) const { return {xi1(m), xi2(m)}; }
    double abs_xi(std::size_t m) const;
    bool is_nyquist(std::size_t m) const;
    /// Storage index of the mode -xi (conjugate partner for real fields).
    std::size_t conjugate(std::size_t m) const;

    double x(int i) const { return i * dx(); }
    std::vector<std::array<double, 2>> wavenumbers() const;

    bool operator==(const HorizontalGrid& o) const { return box_ == o.box_ && n_ == o.n_; }

private:
    double box_;
    int n_;
};

enum class VerticalScheme { collocation, finite_difference };

/// Discretisation of the truncated half-line [-L, 0]; nodes increase and the
/// last node sits exactly on the boundary x3 = 0.
class VerticalGrid {
public:
    static VerticalGrid chebyshev(double depth, int n);
    static VerticalGrid finite_difference(double depth, int n);
    static VerticalGrid make(VerticalScheme scheme, double depth, int n);

    VerticalScheme scheme() const { return scheme_; }
    double depth() const { return depth_; }
    int size() const { return static_cast<int>(x_.size()); }
    const Eigen::VectorXd& nodes() const { return x_; }
    double node(int j) const { return x_(j); }
    const Eigen::VectorXd& weights() const { return w_; }
    const Eigen::MatrixXd& D() const { return d1_; }
    const Eigen::MatrixXd& D2() const { return d2_; }
    int top() const { return size() - 1; }

    /// Same scheme and node count on a different depth.
    VerticalGrid with_depth(double depth) const { return make(scheme_, depth, size()); }

    /// Interpolation matrix from this grid to arbitrary points in [-L, 0];
    /// rows for points below -L are zero.
    Eigen::MatrixXd interpolation_to(const Eigen::VectorXd& points) const;

    bool operator==(const VerticalGrid& o) const {
        return scheme_ == o.scheme_ && depth_ == o.depth_ && x_.size() == o.x_.size();
    }

private:
    VerticalGrid() = default;
    VerticalScheme scheme_ = VerticalScheme::collocation;
    double depth_ = 0.0;
    Eigen::VectorXd x_;
    Eigen::VectorXd w_;
    Eigen::VectorXd bary_;
    Eigen::MatrixXd d1_;
    Eigen::MatrixXd d2_;
};

using HGridPtr = std::shared_ptr<const HorizontalGrid>;
using VGridPtr = std::shared_ptr<const VerticalGrid>;

inline HGridPtr make_hgrid(double box, int n) { return std::make_shared<const HorizontalGrid>(box, n); }
inline VGridPtr make_vgrid(VerticalScheme s, double depth, int n) {
    return std::make_shared<const VerticalGrid>(VerticalGrid::make(s, depth, n));
}

} // namespace fbns::spectral
