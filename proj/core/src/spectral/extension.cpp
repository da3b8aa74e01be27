#include "fbns/spectral/extension.hpp"

#include "fbns/error.hpp"
#include "fbns/spectral/ops.hpp"
#include "fbns/spectral/transform.hpp"

namespace fbns::spectral {

namespace {

DoubledField extend(const HalfSpaceField& f, const std::vector<double>& parity) {
    require(f.representation() == Representation::physical, ErrorKind::invalid_input,
            "extend_odd_even expects a physical field");
    const int n = f.nz();
    const int nd = 2 * n - 1;
    DoubledField out;
    out.hgrid = f.hgrid();
    out.components = f.components();
    out.nodes.resize(nd);
    const auto& x = f.vgrid()->nodes();
    for (int j = 0; j < n; ++j) {
        out.nodes(j) = x(j);
        out.nodes(nd - 1 - j) = -x(j);
    }
    out.nodes(n - 1) = 0.0;
    const std::size_t nh2 = f.nh2();
    out.values.assign(static_cast<std::size_t>(out.components) * nd * nh2, cplx(0.0));
    for (int c = 0; c < f.components(); ++c) {
        for (int j = 0; j < n; ++j) {
            const cplx* src = f.plane(c, j);
            cplx* lo = out.values.data() + out.index(c, j, 0);
            cplx* hi = out.values.data() + out.index(c, nd - 1 - j, 0);
            for (std::size_t m = 0; m < nh2; ++m) {
                lo[m] = src[m];
                if (j != n - 1) hi[m] = parity[c] * src[m];
            }
        }
    }
    return out;
}

} // namespace

DoubledField extend_odd_even(const HalfSpaceField& f) {
    require(f.components() == 3, ErrorKind::invalid_input, "extend_odd_even expects a vector field");
    return extend(f, {-1.0, -1.0, 1.0});
}

DoubledField extend_odd(const HalfSpaceField& scalar) {
    require(scalar.components() == 1, ErrorKind::invalid_input, "extend_odd expects a scalar field");
    return extend(scalar, {-1.0});
}

std::vector<bool> doubled_interior_mask(const DoubledField& f) {
    const int nd = f.nz();
    std::vector<bool> mask(nd, true);
    mask[0] = mask[nd - 1] = false;
    mask[(nd - 1) / 2] = false;
    return mask;
}

DoubledField doubled_divergence(const DoubledField& f) {
    require(f.components == 3 && f.rep == Representation::physical, ErrorKind::invalid_input,
            "doubled_divergence expects a physical vector field");
    const int nd = f.nz();
    const auto& g = *f.hgrid;
    const std::size_t nh2 = g.size();
    DoubledField out;
    out.hgrid = f.hgrid;
    out.nodes = f.nodes;
    out.components = 1;
    out.values.assign(static_cast<std::size_t>(nd) * nh2, cplx(0.0));
    const auto mask = doubled_interior_mask(f);

    std::vector<cplx> buf(nh2);
    for (int z = 0; z < nd; ++z) {
        if (!mask[z]) continue;
        cplx* dst = out.values.data() + out.index(0, z, 0);
        for (int c = 0; c < 2; ++c) {
            std::copy_n(f.values.data() + f.index(c, z, 0), nh2, buf.data());
            forward_plane(g.n(), buf.data());
            for (std::size_t m = 0; m < nh2; ++m) buf[m] *= ixi(g, m, c);
            inverse_plane(g.n(), buf.data());
            for (std::size_t m = 0; m < nh2; ++m) dst[m] += buf[m];
        }
        const double h1 = f.nodes(z) - f.nodes(z - 1);
        const double h2 = f.nodes(z + 1) - f.nodes(z);
        const double wm = -h2 / (h1 * (h1 + h2));
        const double w0 = (h2 - h1) / (h1 * h2);
        const double wp = h1 / (h2 * (h1 + h2));
        const cplx* fm = f.values.data() + f.index(2, z - 1, 0);
        const cplx* f0 = f.values.data() + f.index(2, z, 0);
        const cplx* fp = f.values.data() + f.index(2, z + 1, 0);
        for (std::size_t m = 0; m < nh2; ++m) dst[m] += wm * fm[m] + w0 * f0[m] + wp * fp[m];
    }
    return out;
}

} // namespace fbns::spectral
