#pragma once

#include "fbns/spectral/field.hpp"
#include "fbns/spectral/transform.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace fbns::testing {

using spectral::HalfSpaceField;
using spectral::Representation;
using spectral::SurfaceField;

inline spectral::VGridPtr cheb(double depth, int n) {
    return spectral::make_vgrid(spectral::VerticalScheme::collocation, depth, n);
}

/// Physical surface field sampled from f(x1, x2).
inline SurfaceField sample(const spectral::HGridPtr& g, const std::function<double(double, double)>& f) {
    SurfaceField s(g, Representation::physical);
    for (int i = 0; i < g->n(); ++i)
        for (int j = 0; j < g->n(); ++j) s[g->index(i, j)] = f(g->x(i), g->x(j));
    return s;
}

/// Physical field sampled from f(component, x1, x2, x3).
inline HalfSpaceField sample(const spectral::HGridPtr& g, const spectral::VGridPtr& v, int comps,
                             const std::function<double(int, double, double, double)>& f) {
    HalfSpaceField s(g, v, comps, Representation::physical);
    for (int c = 0; c < comps; ++c)
        for (int z = 0; z < v->size(); ++z)
            for (int i = 0; i < g->n(); ++i)
                for (int j = 0; j < g->n(); ++j) s(c, z, g->index(i, j)) = f(c, g->x(i), g->x(j), v->node(z));
    return s;
}

inline SurfaceField random_surface(const spectral::HGridPtr& g, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    SurfaceField s(g, Representation::physical);
    for (auto& v : s.values()) v = nd(rng);
    return s;
}

inline double max_diff(const HalfSpaceField& a, const HalfSpaceField& b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a.values()[i] - b.values()[i]));
    return r;
}

inline double max_diff(const SurfaceField& a, const SurfaceField& b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0, my = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]) / n;
        my += std::log(y[i]) / n;
    }
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
        sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    }
    return sxy / sxx;
}

} // namespace fbns::testing
