#include "fbns/linear/boundary_kernel.hpp"

#include "fbns/error.hpp"
#include "fbns/linear/boundary_forced.hpp"
#include "fbns/parallel.hpp"
#include "fbns/spectral/ops.hpp"
#include "fbns/spectral/transform.hpp"

#include <cmath>

namespace fbns::linear {

using spectral::Representation;

HalfSpaceField boundary_kernel_apply(const VectorSurface& f, double tau, const VGridPtr& vgrid,
                                     const KernelOptions& opt) {
    require(tau > 0.0, ErrorKind::invalid_input, "kernel time must be positive");
    for (const auto& c : f)
        require(c.representation() == Representation::spectral, ErrorKind::invalid_input,
                "kernel data must be spectral");
    const auto& hg = f[0].grid();
    const auto contour = symbols::adapted_contour(opt.sector, tau, opt.nodes_per_ray);
    const int nz = vgrid->size();
    HalfSpaceField out(hg, vgrid, 3, Representation::spectral);
    const double damp = opt.shifted ? std::exp(-tau) : 1.0;
    parallel_for(hg->size(), [&](std::size_t m) {
        if (hg->is_nyquist(m)) return;
        const std::array<cplx, 3> h{f[0][m], f[1][m], f[2][m]};
        if (h[0] == cplx(0.0) && h[1] == cplx(0.0) && h[2] == cplx(0.0)) return;
        std::array<Vec, 3> acc;
        for (auto& a : acc) a = Vec::Zero(nz);
        for (const auto& node : contour.nodes) {
            const auto v = solve_boundary_forced_mode(hg->xi(m), node.lambda, h, vgrid->nodes(), opt.mu);
            const cplx w = node.weight * std::exp(node.lambda * tau);
            for (int c = 0; c < 3; ++c) acc[c] += w * v[c];
        }
        for (int c = 0; c < 3; ++c)
            for (int z = 0; z < nz; ++z) out(c, z, m) = damp * acc[c](z);
    });
    return out;
}

std::vector<KernelSample> boundary_kernel_norms(const VectorSurface& f, const std::vector<double>& taus,
                                                const VGridPtr& vgrid, double q, const KernelOptions& opt) {
    std::vector<KernelSample> out;
    for (double tau : taus) {
        const HalfSpaceField u = boundary_kernel_apply(f, tau, vgrid, opt);
        HalfSpaceField phys = spectral::inverse_transform(u);
        spectral::make_real(phys);
        out.push_back({tau, spectral::lr_norm(phys, q), spectral::gradient_lr_norm(u, q)});
    }
    return out;
}

} // namespace fbns::linear
