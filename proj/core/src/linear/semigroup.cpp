#include "fbns/linear/semigroup.hpp"

#include "fbns/error.hpp"
#include "fbns/parallel.hpp"

#include <cmath>

namespace fbns::linear {

using spectral::Representation;

namespace {

LinearSolution contour_pass(const HalfSpaceField& u0, const SurfaceField& h0, double t, const PhysicalParams& params,
                            const symbols::ContourSpec& c) {
    const auto& hg = u0.hgrid();
    const auto& vg = u0.vgrid();
    const int nz = vg->size();
    LinearSolution out;
    out.times = {t};
    out.u.emplace_back(hg, vg, 3, Representation::spectral);
    out.p.emplace_back(hg, vg, 1, Representation::spectral);
    out.h.emplace_back(hg, Representation::spectral);
    parallel_for(hg->size(), [&](std::size_t m) {
        if (hg->is_nyquist(m)) return;
        ModeData d = ModeData::zero(nz);
        bool any = h0[m] != cplx(0.0);
        for (int cc = 0; cc < 3; ++cc)
            for (int z = 0; z < nz; ++z) {
                d.F[cc](z) = u0(cc, z, m);
                any = any || d.F[cc](z) != cplx(0.0);
            }
        if (!any) return;
        d.K = h0[m];
        const auto xi = hg->xi(m);
        const ModeOperator op = build_mode_operator(hg->abs_xi(m), vg, params, true);
        std::array<Vec, 3> U;
        for (auto& v : U) v = Vec::Zero(nz);
        Vec P = Vec::Zero(nz);
        cplx H = 0.0;
        for (const auto& node : c.nodes) {
            const ModeProfile p = solve_resolvent_mode(op, xi, node.lambda, d);
            const cplx w = node.weight * std::exp(node.lambda * t);
            for (int cc = 0; cc < 3; ++cc) U[cc] += w * p.U[cc];
            P += w * p.P;
            H += w * p.H;
        }
        for (int cc = 0; cc < 3; ++cc)
            for (int z = 0; z < nz; ++z) out.u[0](cc, z, m) = U[cc](z);
        for (int z = 0; z < nz; ++z) out.p[0](0, z, m) = P(z);
        out.h[0][m] = H;
    });
    return out;
}

double relative_change(const HalfSpaceField& a, const HalfSpaceField& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::abs(a.values()[i] - b.values()[i]));
        den = std::max(den, std::abs(a.values()[i]));
    }
    return den > 0.0 ? num / den : num;
}

} // namespace

ContourEvaluation evolve_contour(const HalfSpaceField& u0, const SurfaceField& h0, double t,
                                 const PhysicalParams& params, const SemigroupOptions& opt) {
    require(t > 0.0, ErrorKind::invalid_input, "semigroup time must be positive");
    require(u0.representation() == Representation::spectral && h0.representation() == Representation::spectral,
            ErrorKind::invalid_input, "semigroup data must be spectral");
    require(u0.components() == 3, ErrorKind::invalid_input, "initial velocity must have 3 components");
    const auto c1 = symbols::adapted_contour(opt.sector, t, opt.nodes_per_ray);
    const auto c2 = symbols::adapted_contour(opt.sector, t, 2 * opt.nodes_per_ray, 2.0);
    ContourEvaluation ev;
    ev.solution = contour_pass(u0, h0, t, params, c1);
    const LinearSolution check = contour_pass(u0, h0, t, params, c2);
    ev.doubling_change = relative_change(check.u[0], ev.solution.u[0]);
    if (ev.doubling_change > opt.contour_tol)
        fail(ErrorKind::accuracy,
             "contour quadrature not converged: doubling changed u by " + std::to_string(ev.doubling_change));
    ev.solution.provenance = Provenance::semigroup;
    return ev;
}

LinearSolution evolve_semigroup(const HalfSpaceField& u0, const SurfaceField& h0, double t,
                                const PhysicalParams& params, const SemigroupOptions& opt) {
    require(t > 0.0, ErrorKind::invalid_input, "semigroup time must be positive");
    if (opt.method == SemigroupMethod::contour) return evolve_contour(u0, h0, t, params, opt).solution;
    const ModalPropagator prop(u0.hgrid(), u0.vgrid(), params, opt.propagator);
    return prop.evolve(u0, h0, {t});
}

} // namespace fbns::linear
