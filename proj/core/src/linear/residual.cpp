#include "fbns/linear/residual.hpp"

#include "fbns/error.hpp"

#include <cmath>

namespace fbns::linear {

double ResidualReport::max_abs() const { return std::max({momentum, divergence, stress, kinematic}); }

namespace {

// Three-point derivative weights at t[k] on a nonuniform grid.
std::array<std::pair<std::size_t, double>, 3> derivative_stencil(const std::vector<double>& t, std::size_t k) {
    const std::size_t n = t.size();
    const std::size_t c = k == 0 ? 1 : (k == n - 1 ? n - 2 : k);
    const std::array<std::size_t, 3> at{c - 1, c, c + 1};
    std::array<std::pair<std::size_t, double>, 3> w{};
    for (int i = 0; i < 3; ++i) {
        double num = 0.0, den = 1.0;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            den *= t[at[i]] - t[at[j]];
            const int l = 3 - i - j;
            num += t[k] - t[at[l]];
        }
        w[i] = {at[i], num / den};
    }
    return w;
}

} // namespace

ResidualReport linear_residual(const LinearSolution& sol, const LinearData& data, const PhysicalParams& params,
                               bool free_surface, const std::vector<HalfSpaceField>* du,
                               const std::vector<SurfaceField>* dh) {
    const std::size_t nt = sol.times.size();
    require(nt >= 1 && sol.u.size() == nt && sol.p.size() == nt && sol.h.size() == nt, ErrorKind::invalid_input,
            "solution samples are inconsistent");
    require(data.times.size() == nt, ErrorKind::invalid_input, "data and solution time grids differ");
    require((du && dh) || nt >= 3, ErrorKind::invalid_input, "need three samples or explicit time derivatives");
    const auto& hg = sol.u[0].hgrid();
    const auto& vg = sol.u[0].vgrid();
    const int nz = vg->size();
    ResidualReport rep;
    for (std::size_t k = 0; k < nt; ++k) {
        const auto st = (du && dh) ? std::array<std::pair<std::size_t, double>, 3>{}
                                   : derivative_stencil(sol.times, k);
        for (std::size_t m = 0; m < hg->size(); ++m) {
            ModeProfile p;
            p.xi = hg->xi(m);
            p.grid = vg;
            ModeData d = ModeData::zero(nz);
            std::array<Vec, 3> dU;
            for (int c = 0; c < 3; ++c) {
                p.U[c].resize(nz);
                dU[c] = Vec::Zero(nz);
                for (int z = 0; z < nz; ++z) {
                    p.U[c](z) = sol.u[k](c, z, m);
                    if (!data.f.empty()) d.F[c](z) = data.f[k](c, z, m);
                    if (du) {
                        dU[c](z) = (*du)[k](c, z, m);
                    } else {
                        for (const auto& [j, w] : st) dU[c](z) += w * sol.u[j](c, z, m);
                    }
                }
                if (!data.h.empty()) d.h[c] = data.h[k][c][m];
            }
            p.P.resize(nz);
            for (int z = 0; z < nz; ++z) p.P(z) = sol.p[k](0, z, m);
            p.H = sol.h[k][m];
            if (!data.k.empty()) d.K = data.k[k][m];
            cplx dH = 0.0;
            if (dh) {
                dH = (*dh)[k][m];
            } else {
                for (const auto& [j, w] : st) dH += w * sol.h[j][m];
            }
            const ModeResidual r = mode_residual(p, dU, dH, d, params, free_surface);
            rep.momentum = std::max(rep.momentum, r.momentum);
            rep.divergence = std::max(rep.divergence, r.divergence);
            rep.stress = std::max(rep.stress, r.stress);
            rep.kinematic = std::max(rep.kinematic, r.kinematic);
            rep.scale = std::max(rep.scale, r.scale);
        }
    }
    return rep;
}

} // namespace fbns::linear
