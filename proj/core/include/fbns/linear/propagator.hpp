#pragma once

#include "fbns/linear/mode_solver.hpp"
#include "fbns/spectral/field.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace fbns::linear {

using spectral::HalfSpaceField;
using spectral::HGridPtr;
using spectral::SurfaceField;
using VectorSurface = std::array<SurfaceField, 3>;

enum class Provenance { resolvent, boundary_forced, semigroup, duhamel };
std::string to_string(Provenance p);

/// Time samples of (u, p, h), all in spectral representation.
struct LinearSolution {
    std::vector<double> times;
    std::vector<HalfSpaceField> u;
    std::vector<HalfSpaceField> p;
    std::vector<SurfaceField> h;
    /// Time derivatives of u and h from the modal expansion; filled by the
    /// modal propagator, empty otherwise.
    std::vector<HalfSpaceField> du;
    std::vector<SurfaceField> dh;
    Provenance provenance = Provenance::semigroup;
};

/// Stress data on x3 = 0 sampled in time.
struct BoundaryData {
    std::vector<double> times;
    std::vector<VectorSurface> h;
};

/// Right-hand sides of the linear system sampled on a time grid, spectral.
/// Empty vectors stand for zero data.
struct LinearData {
    std::vector<double> times;
    std::vector<HalfSpaceField> f;
    std::vector<VectorSurface> h;
    std::vector<SurfaceField> k;
};

/// Eigen-expansion of the descriptor system M X' = K X + b.
///
/// With S = (K - s M)^{-1} M = V diag(m) V^{-1}, the coefficients
/// c = V^{-1} (K - s M)^{-1} b evolve as y' = (s + 1/m) y + c / m for m != 0,
/// while the `infinite` directions with m = 0 are algebraic: y = -c.
class DescriptorModes {
public:
    DescriptorModes() = default;
    DescriptorModes(const Eigen::MatrixXd& M, const Eigen::MatrixXd& K, int infinite, double shift);

    int size() const { return static_cast<int>(lambda_.size()); }
    const Vec& lambda() const { return lambda_; }
    /// Finite coefficients P_fin b and algebraic coefficients P_inf b.
    Vec finite_coeffs(const Vec& b) const { return pfin_ * b; }
    Vec infinite_coeffs(const Vec& b) const { return pinf_ * b; }
    /// X = W y - W_inf c_inf
    Vec state(const Vec& y, const Vec& cinf) const { return wfin_ * y - winf_ * cinf; }
    /// Largest real part among finite eigenvalues.
    double max_real() const;
    /// Smallest discarded |m| relative to the largest kept one.
    double separation() const { return separation_; }

private:
    Vec lambda_;
    Eigen::MatrixXcd wfin_, winf_, pfin_, pinf_;
    double separation_ = 0.0;
};

struct PropagatorOptions {
    double depth_cap = 30.0;
    double shift = 1.0;
    bool free_surface = true;
};

/// Per-mode modal time integrator for the linear free-boundary Stokes system
///   u_t - Div T(u, p) = f, div u = 0, T(u, p) e3 + (c_g - c_sigma Delta') h e3 = h_data,
///   h_t - u3 = k on x3 = 0.
/// Modes sharing |xi'| share one context (operators and eigen-expansions).
class ModalPropagator {
public:
    ModalPropagator(HGridPtr hgrid, VGridPtr vgrid, const PhysicalParams& params, const PropagatorOptions& opt = {});
    ~ModalPropagator();
    ModalPropagator(ModalPropagator&&) noexcept;
    ModalPropagator& operator=(ModalPropagator&&) noexcept;

    const HGridPtr& hgrid() const { return hgrid_; }
    const VGridPtr& vgrid() const { return vgrid_; }
    const PhysicalParams& params() const { return params_; }
    std::size_t context_count() const;
    /// Largest real part of any finite eigenvalue over all contexts.
    double max_growth() const;

    /// Homogeneous problem with initial data (u0, h0), sampled at t > 0.
    LinearSolution evolve(const HalfSpaceField& u0, const SurfaceField& h0, const std::vector<double>& times) const;

    /// Zero initial data and forcing sampled on data.times (increasing, first
    /// entry 0). The convolution is exact for data linear between samples.
    LinearSolution duhamel(const LinearData& data) const;

    /// Both at once: initial data plus forcing on data.times.
    LinearSolution solve(const HalfSpaceField* u0, const SurfaceField* h0, const LinearData& data) const;

    struct Context;

private:
    HGridPtr hgrid_;
    VGridPtr vgrid_;
    PhysicalParams params_;
    PropagatorOptions opt_;
    std::vector<std::shared_ptr<const Context>> contexts_;
    std::vector<int> context_of_mode_;
};

} // namespace fbns::linear
