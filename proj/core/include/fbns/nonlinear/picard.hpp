#pragma once

#include "fbns/analysis/exponents.hpp"
#include "fbns/analysis/norms.hpp"
#include "fbns/linear/propagator.hpp"

#include <string>
#include <vector>

namespace fbns::nonlinear {

struct PicardOptions {
    double tol = 1e-10;        ///< stop when the X-norm difference of iterates drops below this
    int max_iter = 30;
    double horizon = 5.0;
    double dt = 0.1;
    /// Admissible size of the data, measured by data_norm.
    double smallness = 1e-2;
    double compatibility_tol = 1e-8;
    double c0 = 0.45;
    analysis::ExponentConfig exponents;
    analysis::WeightConfig weights = analysis::WeightConfig::standard(3.19);
    linear::PropagatorOptions propagator;
};

/// Residual maxima of the full transformed system over samples and modes.
struct SystemResidual {
    double momentum = 0.0;
    double divergence = 0.0;
    double stress = 0.0;
    double kinematic = 0.0;
    double max_abs() const;
};

struct PicardReport {
    int iterates = 0;
    std::vector<double> diffs;   ///< ||z_{k+1} - z_k||_X
    std::vector<double> ratios;  ///< diffs[k] / diffs[k-1]
    std::vector<double> norms;   ///< ||z_k||_X of the correction
    double data_norm = 0.0;
    double initial_flow_norm = 0.0;
    double tol = 0.0;
    bool converged = false;
    SystemResidual residual;
};

struct PicardResult {
    analysis::StateZ z;        ///< full solution z* + correction
    analysis::StateZ correction;
    PicardReport report;
};

/// max(sup|v0|, sup|grad v0|, sup|h0|, sup|grad' h0|).
double data_norm(const spectral::HalfSpaceField& v0, const spectral::SurfaceField& h0);

/// Residual of the transformed system for a trajectory with time derivatives.
/// Momentum and divergence are measured on nodes 2..n-3.
SystemResidual system_residual(const analysis::StateZ& z, const PhysicalParams& params, double c0 = 0.45);

/// Fixed-point iteration z -> Phi(z) around the initial flow. Throws
/// invalid_input when the data is incompatible or too large and divergence
/// when the difference ratio reaches 1 twice in a row.
PicardResult picard_solve(const spectral::HalfSpaceField& v0, const spectral::SurfaceField& h0,
                          const PhysicalParams& params, const PicardOptions& opt = {});

std::string to_json(const PicardReport& rep);

} // namespace fbns::nonlinear
