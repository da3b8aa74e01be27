#include "doctest.h"
#include "fixtures.hpp"

#include "fbns/error.hpp"
#include "fbns/spectral/cutoff.hpp"
#include "fbns/spectral/extension.hpp"
#include "fbns/spectral/io.hpp"
#include "fbns/spectral/ops.hpp"
#include "fbns/spectral/transform.hpp"

#include <cstdio>
#include <filesystem>
#include <numbers>
#include <sstream>

using namespace fbns;
using namespace fbns::spectral;
using fbns::testing::max_diff;
using fbns::testing::sample;

namespace {

constexpr double pi = std::numbers::pi;

// Direct O(N^4) DFT with the library's normalisation.
cplx direct_dft(const SurfaceField& f, int k1, int k2) {
    const auto& g = *f.grid();
    const int n = g.n();
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            acc += f[g.index(i, j)] * std::polar(1.0, -2.0 * pi / g.box_length() * (k1 * g.x(i) + k2 * g.x(j)));
    return acc / static_cast<double>(n * n);
}

} // namespace

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(HorizontalGrid(2 * pi, 6), Error);
    CHECK_THROWS_AS(HorizontalGrid(2 * pi, 9), Error);
    CHECK_THROWS_AS(VerticalGrid::chebyshev(10.0, 8), Error);
    const HorizontalGrid g(2 * pi, 8);
    int zeros = 0;
    for (const auto& w : g.wavenumbers()) {
        CHECK(std::abs(w[0] - std::round(w[0])) < 1e-14);
        if (w[0] == 0.0 && w[1] == 0.0) ++zeros;
    }
    CHECK(zeros == 1);
    for (auto scheme : {VerticalScheme::collocation, VerticalScheme::finite_difference}) {
        const auto v = VerticalGrid::make(scheme, 12.0, 24);
        CHECK(v.node(v.top()) == 0.0);
        for (int j = 1; j < v.size(); ++j) CHECK(v.node(j) > v.node(j - 1));
        CHECK(v.weights().minCoeff() > 0.0);
        CHECK(v.weights().sum() == doctest::Approx(12.0).epsilon(1e-10));
    }
}

TEST_CASE("forward transform") {
    auto g = make_hgrid(2 * pi, 8);
    SUBCASE("zero field") {
        const SurfaceField z(g, Representation::physical);
        CHECK(forward_transform(z).max_abs() == 0.0);
    }
    SUBCASE("cos x1 has two half-amplitude modes") {
        const auto s = forward_transform(sample(g, [](double x, double) { return std::cos(x); }));
        CHECK(std::abs(s[g->mode_of(1, 0)] - 0.5) < 1e-14);
        CHECK(std::abs(s[g->mode_of(-1, 0)] - 0.5) < 1e-14);
        double rest = 0.0;
        for (std::size_t m = 0; m < s.size(); ++m)
            if (m != g->mode_of(1, 0) && m != g->mode_of(-1, 0)) rest = std::max(rest, std::abs(s[m]));
        CHECK(rest < 1e-14);
    }
    SUBCASE("random field matches the direct DFT and round trips") {
        std::mt19937_64 rng(7);
        const auto f = fbns::testing::random_surface(g, rng);
        const auto s = forward_transform(f);
        for (int k1 = -3; k1 <= 4; ++k1)
            for (int k2 = -3; k2 <= 4; ++k2) CHECK(std::abs(s[g->mode_of(k1, k2)] - direct_dft(f, k1, k2)) < 1e-13);
        CHECK(max_diff(inverse_transform(s), f) < 1e-12 * f.max_abs());
    }
    SUBCASE("wrong representation is rejected") {
        CHECK_THROWS_AS(forward_transform(SurfaceField(g, Representation::spectral)), Error);
    }
}

TEST_CASE("inverse transform") {
    auto g = make_hgrid(2 * pi, 8);
    SurfaceField s(g, Representation::spectral);
    CHECK(inverse_transform(s).max_abs() == 0.0);
    s[g->mode_of(1, 0)] = 1.0;
    const auto p = inverse_transform(s);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(std::abs(p[g->index(i, j)] - std::polar(1.0, g->x(i))) < 1e-14);

    std::mt19937_64 rng(3);
    const auto f = fbns::testing::random_surface(g, rng);
    const auto fs = forward_transform(f);
    double phys = 0.0, spec = 0.0;
    for (const auto& v : f.values()) phys += std::norm(v) * g->dx() * g->dx();
    for (const auto& v : fs.values()) spec += std::norm(v) * g->box_length() * g->box_length();
    CHECK(phys == doctest::Approx(spec).epsilon(1e-12));
}

TEST_CASE("half-space transforms round trip for every shape") {
    auto g = make_hgrid(4.0, 8);
    for (int comps : {1, 3}) {
        auto v = fbns::testing::cheb(5.0, 16);
        const auto f = sample(g, v, comps, [](int c, double x, double y, double z) {
            return (c + 1) * std::sin(2 * pi * x / 4.0 + 0.3) * std::exp(z) + std::cos(2 * pi * y / 2.0);
        });
        const auto back = inverse_transform(forward_transform(f));
        CHECK(max_diff(back, f) < 1e-12 * f.max_abs());
    }
}

TEST_CASE("spectral derivatives keep conjugate symmetry") {
    auto g = make_hgrid(2 * pi, 16);
    auto v = fbns::testing::cheb(6.0, 20);
    const auto f = forward_transform(
        sample(g, v, 1, [](int, double x, double y, double z) { return std::sin(x) * std::cos(2 * y) * std::exp(z); }));
    CHECK(conjugate_asymmetry(f) < 1e-14);
    for (int a = 0; a < 3; ++a) CHECK(conjugate_asymmetry(derivative(f, a)) < 1e-13);
    const auto d1 = inverse_transform(derivative(f, 0));
    double err = 0.0;
    for (int z = 0; z < v->size(); ++z)
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j)
                err = std::max(err, std::abs(d1(0, z, g->index(i, j)) -
                                             std::cos(g->x(i)) * std::cos(2 * g->x(j)) * std::exp(v->node(z))));
    CHECK(err < 1e-12);
}

TEST_CASE("cutoffs") {
    auto g = make_hgrid(2 * pi, 16);
    std::mt19937_64 rng(11);
    const auto f = forward_transform(fbns::testing::random_surface(g, rng));
    SUBCASE("low plus high reproduces the field") {
        for (double delta : {0.5, 1.0, 2.5}) {
            const auto lo = apply_cutoff(f, {delta, CutoffKind::low});
            const auto hi = apply_cutoff(f, {delta, CutoffKind::high});
            CHECK(max_diff(lo + hi, f) < 1e-15);
        }
    }
    SUBCASE("low pass removes modes beyond 2 delta") {
        SurfaceField s(g, Representation::spectral);
        s[g->mode_of(3, 0)] = 1.0;
        CHECK(apply_cutoff(s, {1.0, CutoffKind::low}).max_abs() == 0.0);
    }
    SUBCASE("mode factors follow the scaled profile") {
        const double delta = 0.5;
        const auto lo = apply_cutoff(f, {delta, CutoffKind::low});
        for (std::size_t m = 0; m < f.size(); ++m) {
            const double r = g->abs_xi(m) / delta;
            // bump written out: exp(-1/(2-r)) / (exp(-1/(2-r)) + exp(-1/(r-1))) on (1, 2)
            double z = r <= 1.0 ? 1.0 : 0.0;
            if (r > 1.0 && r < 2.0) z = std::exp(-1.0 / (2.0 - r)) / (std::exp(-1.0 / (2.0 - r)) + std::exp(-1.0 / (r - 1.0)));
            CHECK(std::abs(lo[m] - z * f[m]) < 1e-14);
        }
    }
    SUBCASE("profile is a partition of unity in [0, 1]") {
        for (double r = 0.0; r < 3.0; r += 0.01) {
            const double lo = cutoff_symbol({1.0, CutoffKind::low}, r);
            const double hi = cutoff_symbol({1.0, CutoffKind::high}, r);
            CHECK(lo >= 0.0);
            CHECK(lo <= 1.0);
            CHECK(lo + hi == 1.0);
        }
    }
    CHECK_THROWS_AS(apply_cutoff(f, {0.0, CutoffKind::low}), Error);
    CHECK_THROWS_AS(apply_cutoff(f, {-1.0, CutoffKind::high}), Error);
}

TEST_CASE("odd/even extension") {
    auto g = make_hgrid(2 * pi, 8);
    auto v = fbns::testing::cheb(4.0, 16);
    SUBCASE("constant vertical field stays constant") {
        const auto f = sample(g, v, 3, [](int c, double, double, double) { return c == 2 ? 1.0 : 0.0; });
        const auto e = extend_odd_even(f);
        for (int c = 0; c < 3; ++c)
            for (int z = 0; z < e.nz(); ++z) CHECK(e.values[e.index(c, z, 5)] == cplx(c == 2 ? 1.0 : 0.0));
    }
    SUBCASE("odd function extends to itself") {
        const auto f = sample(g, v, 3, [](int c, double, double, double z) { return c == 0 ? z : 0.0; });
        const auto e = extend_odd_even(f);
        for (int z = 0; z < e.nz(); ++z) CHECK(std::abs(e.values[e.index(0, z, 3)] - e.nodes(z)) < 1e-14);
    }
    SUBCASE("zero") {
        const HalfSpaceField f(g, v, 3, Representation::physical);
        for (const auto& x : extend_odd_even(f).values) CHECK(x == cplx(0.0));
    }
}

TEST_CASE("divergence of the extension is the odd extension of the divergence") {
    // second-order vertical differences: the error drops by ~4 per refinement
    auto g = make_hgrid(2 * pi, 8);
    std::vector<double> errs;
    for (int n : {33, 65}) {
        auto v = make_vgrid(VerticalScheme::finite_difference, 3.0, n);
        const auto f = sample(g, v, 3, [](int c, double x, double y, double z) {
            if (c == 0) return std::sin(x) * std::sin(z);
            if (c == 1) return std::cos(y) * z * z * z;
            return std::cos(x) * std::cos(2 * z);
        });
        const auto div = sample(g, v, 1, [](int, double x, double y, double z) {
            return std::cos(x) * std::sin(z) - std::sin(y) * z * z * z - 2 * std::cos(x) * std::sin(2 * z);
        });
        const auto lhs = doubled_divergence(extend_odd_even(f));
        const auto rhs = extend_odd(div);
        const auto mask = doubled_interior_mask(lhs);
        double e = 0.0;
        for (int z = 0; z < lhs.nz(); ++z)
            if (mask[z])
                for (std::size_t m = 0; m < g->size(); ++m)
                    e = std::max(e, std::abs(lhs.values[lhs.index(0, z, m)] - rhs.values[rhs.index(0, z, m)]));
        errs.push_back(e);
    }
    CHECK(errs[1] < 1e-2);
    CHECK(std::log2(errs[0] / errs[1]) > 1.8);
}

TEST_CASE("binary and csv serialization") {
    auto g = make_hgrid(3.0, 8);
    auto v = fbns::testing::cheb(2.0, 16);
    const auto f = forward_transform(
        sample(g, v, 3, [](int c, double x, double, double z) { return c + std::sin(2 * pi * x / 3.0) * z; }));
    const auto dir = std::filesystem::temp_directory_path();
    const std::string p = (dir / "fbns_io_test.bin").string();
    write_binary(p, f);
    const auto r = read_binary(p);
    CHECK(r.components() == 3);
    CHECK(r.representation() == Representation::spectral);
    CHECK(r.hgrid()->box_length() == 3.0);
    CHECK(r.vgrid()->depth() == 2.0);
    CHECK(max_diff(r, f) == 0.0);

    SurfaceField s = f.trace(1);
    write_binary(p, s);
    CHECK(max_diff(read_surface_binary(p), s) == 0.0);
    CHECK_THROWS_AS(read_binary(p), Error);
    std::remove(p.c_str());

    std::ostringstream os;
    write_csv(os, s);
    std::string header;
    std::istringstream is(os.str());
    std::getline(is, header);
    CHECK(header.find("re") != std::string::npos);
    int rows = 0;
    for (std::string line; std::getline(is, line);) ++rows;
    CHECK(rows >= 64);
}
