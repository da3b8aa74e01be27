#include "doctest.h"
#include "fixtures.hpp"

#include "fbns/error.hpp"
#include "fbns/geometry/hanzawa.hpp"
#include "fbns/geometry/surface.hpp"
#include "fbns/linear/propagator.hpp"
#include "fbns/nonlinear/compatibility.hpp"
#include "fbns/nonlinear/initial_flow.hpp"
#include "fbns/nonlinear/picard.hpp"
#include "fbns/nonlinear/terms.hpp"
#include "fbns/spectral/ops.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace fbns;
using namespace fbns::nonlinear;
using namespace fbns::testing;
using spectral::forward_transform;
using spectral::inverse_transform;
using spectral::Representation;

namespace {

constexpr double twopi = 2.0 * std::numbers::pi;

struct Grids {
    spectral::HGridPtr hg = spectral::make_hgrid(twopi, 8);
    spectral::VGridPtr vg = cheb(8.0, 40);
};

// v1 = sin x2 e^{y3}, v2 = cos x1 e^{2 y3}, v3 = sin(x1 + x2) e^{y3}
double vfield(int c, double x1, double x2, double y3) {
    switch (c) {
    case 0: return std::sin(x2) * std::exp(y3);
    case 1: return std::cos(x1) * std::exp(2 * y3);
    default: return std::sin(x1 + x2) * std::exp(y3);
    }
}

// (v . grad) v in closed form
double transport(int c, double x1, double x2, double y3) {
    const double e1 = std::exp(y3), e2 = std::exp(2 * y3);
    const double v1 = std::sin(x2) * e1, v2 = std::cos(x1) * e2, v3 = std::sin(x1 + x2) * e1;
    switch (c) {
    case 0: return v2 * std::cos(x2) * e1 + v3 * std::sin(x2) * e1;
    case 1: return -v1 * std::sin(x1) * e2 + 2 * v3 * std::cos(x1) * e2;
    default: return (v1 + v2) * std::cos(x1 + x2) * e1 + v3 * std::sin(x1 + x2) * e1;
    }
}

SurfaceField cos_surface(const spectral::HGridPtr& hg, double amp) {
    return forward_transform(sample(hg, [amp](double x1, double) { return amp * std::cos(x1); }));
}

HalfSpaceField zero_v(const Grids& g) { return HalfSpaceField(g.hg, g.vg, 3, Representation::spectral); }

double phys_max(const HalfSpaceField& f) { return inverse_transform(f).max_abs(); }
double phys_max(const SurfaceField& f) { return inverse_transform(f).max_abs(); }

} // namespace

TEST_CASE("nonlinear terms vanish at rest") {
    const Grids g;
    const PhysicalParams pp;
    const auto s = geometry::make_height_state(SurfaceField(g.hg, Representation::spectral), g.vg);
    const auto t = assemble_nonlinear(zero_v(g), s, nullptr, pp);
    CHECK(t.F().max_abs() == 0.0);
    CHECK(t.G.max_abs() == 0.0);
    CHECK(t.Gvec.max_abs() == 0.0);
    CHECK(t.K.max_abs() == 0.0);
    for (const auto& h : t.H) CHECK(h.max_abs() == 0.0);
}

TEST_CASE("zero velocity leaves only the curvature remainder") {
    const Grids g;
    PhysicalParams pp;
    pp.c_sigma = 1.7;
    const auto h = cos_surface(g.hg, 0.1);
    const auto s = geometry::make_height_state(h, g.vg);
    const auto t = assemble_nonlinear(zero_v(g), s, nullptr, pp);
    CHECK(t.F().max_abs() == 0.0);
    CHECK(t.G.max_abs() == 0.0);
    CHECK(t.K.max_abs() == 0.0);
    CHECK(t.H[0].max_abs() == 0.0);
    CHECK(t.H[1].max_abs() == 0.0);
    auto ref = forward_transform(geometry::curvature_remainder(h));
    spectral::zero_nyquist(ref);
    ref *= -pp.c_sigma;
    CHECK(ref.max_abs() > 1e-5);
    CHECK(max_diff(t.H[2], ref) <= 1e-12);
}

TEST_CASE("flat surface gives the transport term only") {
    const Grids g;
    const PhysicalParams pp;
    const auto v = forward_transform(sample(g.hg, g.vg, 3, vfield));
    const auto s = geometry::make_height_state(SurfaceField(g.hg, Representation::spectral), g.vg, 0.45,
                                               SurfaceField(g.hg, Representation::spectral));
    const auto t = assemble_nonlinear(v, s, nullptr, pp);
    const auto ref = sample(g.hg, g.vg, 3, [](int c, double x1, double x2, double y3) { return -transport(c, x1, x2, y3); });
    CHECK(max_diff(inverse_transform(t.F()), ref) < 1e-10);
    CHECK(t.F2.max_abs() == 0.0);
    CHECK(t.G.max_abs() == 0.0);
    CHECK(t.Gvec.max_abs() == 0.0);
    CHECK(t.K.max_abs() == 0.0);
    for (const auto& h : t.H) CHECK(h.max_abs() == 0.0);
}

TEST_CASE("nonlinear terms are quadratically small") {
    const Grids g;
    const PhysicalParams pp;
    std::vector<double> eps, size;
    for (double e : {1e-1, 1e-2, 1e-3}) {
        auto v = forward_transform(sample(g.hg, g.vg, 3, vfield));
        v *= e;
        const auto s = geometry::make_height_state(cos_surface(g.hg, e), g.vg);
        const auto t = assemble_nonlinear(v, s, nullptr, pp);
        auto hr = forward_transform(geometry::curvature_remainder(s.h));
        spectral::zero_nyquist(hr);
        hr *= -pp.c_sigma;
        SurfaceField h3 = t.H[2];
        h3 -= hr;
        const double n = phys_max(t.F()) + phys_max(t.G) + phys_max(t.H[0]) + phys_max(t.H[1]) + phys_max(h3) +
                         phys_max(t.K);
        eps.push_back(e);
        size.push_back(n);
    }
    CHECK(loglog_slope(eps, size) >= 1.9);
}

TEST_CASE("G is the divergence of Gvec") {
    const Grids g;
    const PhysicalParams pp;
    auto v = forward_transform(sample(g.hg, g.vg, 3, vfield));
    v *= 0.2;
    const auto s = geometry::make_height_state(
        forward_transform(sample(g.hg, [](double x1, double x2) { return 0.1 * std::cos(x1) + 0.05 * std::sin(2 * x2); })),
        g.vg);
    const auto t = assemble_nonlinear(v, s, nullptr, pp);
    const auto dG = divergence(t.Gvec);
    double e = 0.0;
    for (int z = 1; z < g.vg->size() - 1; ++z)
        for (std::size_t m = 0; m < g.hg->size(); ++m) e = std::max(e, std::abs(dG(0, z, m) - t.G(0, z, m)));
    CHECK(e <= 1e-9 * std::max(1.0, t.G.max_abs()));
}

TEST_CASE("inadmissible heights are rejected") {
    const Grids g;
    const auto s = geometry::make_height_state(cos_surface(g.hg, 0.6), g.vg);
    CHECK_THROWS_AS(require_admissible(s), Error);
    CHECK_THROWS_AS(assemble_nonlinear(zero_v(g), s, nullptr, {}), Error);
}

TEST_CASE("kinematic relation") {
    const Grids g;
    auto v = forward_transform(sample(g.hg, g.vg, 3, vfield));
    v *= 0.1;
    const auto s = geometry::make_height_state(cos_surface(g.hg, 0.1), g.vg);
    auto dh = kinematic_dt_h(v, s);
    dh -= kinematic_term(v, s);
    CHECK(max_diff(dh, v.trace(2)) < 1e-15);
    // K = -v1 D1 eta - v2 D2 eta at the surface: v1 = 0.1 sin x2, D1 h = -0.1 sin x1
    const auto K = inverse_transform(kinematic_term(v, s));
    double e = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            e = std::max(e, std::abs(K[g.hg->index(i, j)] -
                                     0.01 * std::sin(g.hg->x(j)) * std::sin(g.hg->x(i))));
    CHECK(e < 1e-14);
}

TEST_CASE("compatibility") {
    const Grids g;
    const PhysicalParams pp;
    SUBCASE("zero data") {
        const auto r = check_compatibility(zero_v(g), SurfaceField(g.hg, Representation::spectral), pp);
        CHECK(r.pass);
        CHECK(r.divergence == 0.0);
        CHECK(r.tangential == 0.0);
    }
    SUBCASE("solenoidal flow free of tangential stress") {
        // v = (sin x2 exp(-y3^2), 0, 0)
        const auto v = forward_transform(sample(g.hg, g.vg, 3, [](int c, double, double x2, double y3) {
            return c == 0 ? std::sin(x2) * std::exp(-y3 * y3) : 0.0;
        }));
        const auto r = check_compatibility(v, SurfaceField(g.hg, Representation::spectral), pp);
        CHECK(r.pass);
    }
    SUBCASE("generic data fails") {
        std::mt19937_64 rng(8);
        std::normal_distribution<double> nd;
        auto v = sample(g.hg, g.vg, 3, [&](int, double, double, double y3) { return nd(rng) * std::exp(y3); });
        const auto r = check_compatibility(forward_transform(v), SurfaceField(g.hg, Representation::spectral), pp);
        CHECK_FALSE(r.pass);
        CHECK(r.divergence > 0.0);
        CHECK(r.tangential > 0.0);
    }
}

TEST_CASE("initial flow") {
    const Grids g;
    const PhysicalParams pp;
    const linear::ModalPropagator prop(g.hg, g.vg, pp);
    const std::vector<double> times{0.0, 0.5, 1.0, 1.5, 2.0};
    SUBCASE("zero data") {
        const auto f = initial_flow(zero_v(g), SurfaceField(g.hg, Representation::spectral), times, prop);
        for (std::size_t k = 0; k < times.size(); ++k) {
            CHECK(f.z.v[k].max_abs() == 0.0);
            CHECK(f.z.h[k].max_abs() == 0.0);
            CHECK(f.z.q[k].max_abs() == 0.0);
        }
    }
    SUBCASE("single mode heat flow decays at rate 1 + mu |xi|^2") {
        const auto v0 = forward_transform(sample(g.hg, g.vg, 3, [](int c, double x1, double, double) {
            return c == 0 ? std::cos(x1) : 0.0;
        }));
        const auto f = initial_flow(v0, SurfaceField(g.hg, Representation::spectral), times, prop);
        for (std::size_t k = 0; k < times.size(); ++k) {
            CHECK(f.z.h[k].max_abs() == 0.0);
            CHECK(f.z.q[k].max_abs() == 0.0);
            HalfSpaceField ref = v0;
            ref *= std::exp(-2.0 * times[k]);
            CHECK(max_diff(f.w[k], ref) <= 1e-10 * v0.max_abs());
            CHECK(max_diff(f.z.v[k], f.w[k]) == 0.0);
        }
    }
    SUBCASE("heat flow decays exponentially for general data") {
        const DampedHeat heat(g.vg, pp.mu);
        CHECK(heat.max_vertical_eigenvalue() <= 1e-10);
        const auto v0 = forward_transform(sample(g.hg, g.vg, 3, [](int c, double x1, double x2, double y3) {
            return (c + 1) * std::sin(x1 + c * x2) * std::exp(y3) * (1 + y3);
        }));
        std::vector<HalfSpaceField> w, dw;
        std::vector<double> ts;
        for (int k = 1; k <= 10; ++k) ts.push_back(0.2 * k);
        heat.evolve(v0, ts, w, dw);
        std::vector<double> logs;
        for (const auto& x : w) logs.push_back(std::log(x.max_abs()));
        const double slope = (logs.back() - logs.front()) / (ts.back() - ts.front());
        CHECK(-slope > 0.9);
    }
}

TEST_CASE("Picard iteration") {
    const PhysicalParams pp;
    const auto hg = spectral::make_hgrid(twopi, 8);
    const auto vg = cheb(8.0, 28);
    PicardOptions o;
    o.horizon = 2.0;
    HalfSpaceField v0(hg, vg, 3, Representation::spectral);
    SUBCASE("zero data converges at once") {
        const auto r = picard_solve(v0, SurfaceField(hg, Representation::spectral), pp, o);
        CHECK(r.report.converged);
        CHECK(r.report.iterates == 1);
        for (const auto& v : r.z.v) CHECK(v.max_abs() == 0.0);
    }
    SUBCASE("small single mode height contracts") {
        const auto h0 = cos_surface(hg, 1e-3);
        const auto r = picard_solve(v0, h0, pp, o);
        CHECK(r.report.converged);
        REQUIRE(r.report.ratios.size() >= 1);
        for (double q : r.report.ratios) CHECK(q <= 0.5);
        CHECK(r.report.residual.max_abs() <= 10.0 * o.tol);
        CHECK(r.report.diffs.back() < o.tol);
        for (double n : r.report.norms) CHECK(n <= 2.0 * r.report.norms.front() + o.tol);
        const auto j = nlohmann::json::parse(to_json(r.report));
        CHECK(j.at("converged").get<bool>());
        CHECK(j.at("contraction_ratios").size() == r.report.ratios.size());
        CHECK(j.contains("residual"));
    }
    SUBCASE("large data is refused") {
        CHECK_THROWS_AS(picard_solve(v0, cos_surface(hg, 0.05), pp, o), Error);
    }
    SUBCASE("incompatible data is refused") {
        auto v = sample(hg, vg, 3, [](int c, double x1, double, double y3) {
            return c == 0 ? 1e-4 * std::cos(x1) * std::exp(y3) : 0.0;
        });
        CHECK_THROWS_AS(picard_solve(forward_transform(v), SurfaceField(hg, Representation::spectral), pp, o),
                        Error);
    }
}
