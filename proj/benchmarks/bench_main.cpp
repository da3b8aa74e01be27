#include "fbns/geometry/hanzawa.hpp"
#include "fbns/linear/mode_solver.hpp"
#include "fbns/linear/propagator.hpp"
#include "fbns/nonlinear/terms.hpp"
#include "fbns/spectral/transform.hpp"
#include "fbns/symbols/multiplier.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace fbns;
using spectral::Representation;

namespace {

constexpr double twopi = 2.0 * std::numbers::pi;

spectral::SurfaceField random_surface(const spectral::HGridPtr& g, double scale) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> nd;
    spectral::SurfaceField s(g, Representation::physical);
    for (auto& v : s.values()) v = scale * nd(rng);
    return s;
}

void BM_surface_transform(benchmark::State& st) {
    const auto g = spectral::make_hgrid(twopi, static_cast<int>(st.range(0)));
    const auto s = random_surface(g, 1.0);
    for (auto _ : st) benchmark::DoNotOptimize(spectral::forward_transform(s));
    st.SetItemsProcessed(st.iterations() * static_cast<long>(g->size()));
}
BENCHMARK(BM_surface_transform)->Arg(64)->Arg(128)->Arg(256);

void BM_harmonic_extension(benchmark::State& st) {
    const auto g = spectral::make_hgrid(twopi, static_cast<int>(st.range(0)));
    const auto v = spectral::make_vgrid(spectral::VerticalScheme::collocation, 8.0, 48);
    const auto h = spectral::forward_transform(random_surface(g, 1e-2));
    for (auto _ : st) benchmark::DoNotOptimize(geometry::harmonic_extension(h, v));
}
BENCHMARK(BM_harmonic_extension)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_resolvent_mode(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const auto g = spectral::make_vgrid(spectral::VerticalScheme::collocation, 12.0, n);
    const PhysicalParams pp;
    linear::ModeData d = linear::ModeData::zero(n);
    for (int z = 0; z < n; ++z) d.F[2](z) = std::exp(g->node(z));
    const auto op = linear::build_mode_operator(std::hypot(1.0, 0.5), g, pp);
    for (auto _ : st) benchmark::DoNotOptimize(linear::solve_resolvent_mode(op, {1.0, 0.5}, cplx(10.0, 5.0), d));
}
BENCHMARK(BM_resolvent_mode)->Arg(64)->Arg(160)->Unit(benchmark::kMicrosecond);

void BM_propagator_setup(benchmark::State& st) {
    const auto h = spectral::make_hgrid(twopi, static_cast<int>(st.range(0)));
    const auto v = spectral::make_vgrid(spectral::VerticalScheme::collocation, 12.0, 40);
    for (auto _ : st) benchmark::DoNotOptimize(linear::ModalPropagator(h, v, PhysicalParams{}));
}
BENCHMARK(BM_propagator_setup)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_propagator_evolve(benchmark::State& st) {
    const auto h = spectral::make_hgrid(twopi, static_cast<int>(st.range(0)));
    const auto v = spectral::make_vgrid(spectral::VerticalScheme::collocation, 12.0, 40);
    const linear::ModalPropagator prop(h, v, PhysicalParams{});
    spectral::HalfSpaceField u0(h, v, 3, Representation::spectral);
    const auto h0 = spectral::forward_transform(random_surface(h, 1e-2));
    for (auto _ : st) benchmark::DoNotOptimize(prop.evolve(u0, h0, {1.0}));
}
BENCHMARK(BM_propagator_evolve)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_nonlinear_terms(benchmark::State& st) {
    const auto h = spectral::make_hgrid(twopi, static_cast<int>(st.range(0)));
    const auto v = spectral::make_vgrid(spectral::VerticalScheme::collocation, 8.0, 40);
    const auto hs = spectral::forward_transform(random_surface(h, 1e-3));
    const auto s = geometry::make_height_state(hs, v);
    spectral::HalfSpaceField vel(h, v, 3, Representation::spectral);
    for (auto _ : st) benchmark::DoNotOptimize(nonlinear::assemble_nonlinear(vel, s, nullptr, PhysicalParams{}));
}
BENCHMARK(BM_nonlinear_terms)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_multiplier_audit(benchmark::State& st) {
    symbols::AuditSpec spec;
    spec.sample_budget = static_cast<std::size_t>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(symbols::multiplier_bound_estimate("B^s", 1.0, 1, symbols::SectorSpec{}, spec, 1.0));
}
BENCHMARK(BM_multiplier_audit)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
