#pragma once

#include "fbns/analysis/exponents.hpp"
#include "fbns/spectral/field.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace fbns::analysis {

using spectral::HalfSpaceField;
using spectral::SurfaceField;

/// Sampled trajectory z = (v, q, h, eta) with time derivatives of v and h.
/// All fields spectral; eta is the harmonic extension of h.
struct StateZ {
    std::vector<double> times;
    std::vector<HalfSpaceField> v;
    std::vector<HalfSpaceField> q;
    std::vector<SurfaceField> h;
    std::vector<HalfSpaceField> eta;
    std::vector<HalfSpaceField> dv;
    std::vector<SurfaceField> dh;
    std::size_t size() const { return times.size(); }
};

/// Differences of two trajectories on the same grids (used for Picard diffs).
StateZ difference(const StateZ& a, const StateZ& b);

/// ( int |grad^k f|^r )^{1/r} with all ordered k-th derivatives of all
/// components (k = 0 gives the plain L_r norm). f spectral, real part used.
double derivative_norm(const HalfSpaceField& f, int order, double r);

/// || F^{-1}[(1 + |xi'|^2)^{s/2} f] ||_{L_r}, the Bessel-potential surrogate of W^s_r.
double bessel_norm(const SurfaceField& spectral, double s, double r);

/// Per-exponent pieces of the maximal-regularity and decay norms.
struct NormBlock {
    double r = 2.0;
    double M = 0.0;  ///< M_{r,p}
    double N = 0.0;  ///< N_r
};

struct NormReport {
    std::vector<NormBlock> blocks;  ///< r = q and r = 2
    double Nqp = 0.0;               ///< N_{q,p}(z; a1, a2)
    double dt_eta_sup = 0.0;        ///< sup_t ||d_t eta||_{L_2}
    double X = 0.0;                 ///< total X_{q,p}(a1, a2) norm
};

/// Discrete analogues: L_p in time by the trapezoid rule on the sample
/// times, sup in time by the maximum over samples, (t + 2)^s weights included.
NormReport weighted_norms(const StateZ& z, const ExponentConfig& cfg, const WeightConfig& w);

void write_norm_csv(std::ostream& os, const NormReport& rep);

/// Trapezoid L_p norm of f(t_k) (t + 2)^s.
double time_lp(const std::vector<double>& t, const std::vector<double>& f, double p, double s = 0.0);
/// max_k (t_k + 2)^s f(t_k).
double time_sup(const std::vector<double>& t, const std::vector<double>& f, double s = 0.0);

} // namespace fbns::analysis
