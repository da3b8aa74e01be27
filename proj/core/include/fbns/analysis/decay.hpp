#pragma once

#include "fbns/geometry/hanzawa.hpp"
#include "fbns/params.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace fbns::analysis {

struct DecayFit {
    double exponent = 0.0;  ///< alpha in value ~ C t^{-alpha}
    double stderr_ = 0.0;
    double log_constant = 0.0;
    int samples = 0;
};

/// Least-squares fit of log value against log t over t in [t_min, t_max].
DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& value, double t_min, double t_max);

struct DecayReport {
    std::string quantity;
    double fitted = 0.0;
    double stderr_ = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    bool pass = false;
};

DecayReport make_decay_report(const std::string& quantity, const DecayFit& fit, double target, double tolerance,
                              double t_min, double t_max);

/// Column schema: quantity,fitted,stderr,target,tolerance,t_min,t_max,verdict
void write_decay_csv(std::ostream& os, const std::vector<DecayReport>& reports);

/// ||D_t^{1/2} f||_{L_p} on a uniform grid: the series is tapered by a cosine
/// ramp over its first and last 5% of samples, transformed, multiplied by
/// (1 + tau^2)^{order/2} and transformed back.
double fractional_time_norm(const std::vector<cplx>& series, double dt, double order, double p);

/// The cosine taper applied by fractional_time_norm.
std::vector<double> taper_window(std::size_t n, double fraction = 0.05);

/// ( int |v|^r (1 + D3 eta) dy )^{1/r}: L_r norm on the moving domain written
/// on the fixed grid. v physical.
double pushforward_norm(const spectral::HalfSpaceField& v_physical, const geometry::HeightState& s, double r);

} // namespace fbns::analysis
