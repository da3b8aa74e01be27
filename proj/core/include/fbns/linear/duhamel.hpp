#pragma once

#include "fbns/linear/propagator.hpp"

namespace fbns::linear {

struct DuhamelOptions {
    bool richardson = true;
    /// Bound on the estimated relative time-discretisation error of u.
    double tol = 1e-4;
};

struct DuhamelResult {
    LinearSolution solution;
    /// |u_h - u_2h| / 3 relative to max |u_h|, on the shared samples; 0 if skipped.
    double richardson_error = 0.0;
};

/// u(t) = int_0^t R(t - s)(f(s), h(s), k(s)) ds on a uniform grid with zero
/// initial data. The check reruns the convolution on every other sample and
/// throws accuracy when the estimate exceeds opt.tol.
DuhamelResult duhamel_solve(const ModalPropagator& prop, const LinearData& data, const DuhamelOptions& opt = {});

} // namespace fbns::linear
