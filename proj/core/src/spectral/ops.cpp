#include "fbns/spectral/ops.hpp"

#include "fbns/error.hpp"
#include "fbns/spectral/transform.hpp"

#include <cmath>

namespace fbns::spectral {

cplx ixi(const HorizontalGrid& g, std::size_t m, int j) {
    const int i = j == 0 ? static_cast<int>(m / g.n()) : static_cast<int>(m % g.n());
    if (i == g.n() / 2) return 0.0;
    return {0.0, g.wavenumber(i)};
}

HalfSpaceField derivative(const HalfSpaceField& f, int axis) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            "derivative expects a spectral field");
    if (axis == 2) return apply_vertical(f, f.vgrid()->D());
    require(axis == 0 || axis == 1, ErrorKind::invalid_input, "derivative axis must be 0, 1 or 2");
    HalfSpaceField out = f;
    const auto& g = *f.hgrid();
    for (int c = 0; c < f.components(); ++c)
        for (int z = 0; z < f.nz(); ++z) {
            cplx* p = out.plane(c, z);
            for (std::size_t m = 0; m < g.size(); ++m) p[m] *= ixi(g, m, axis);
        }
    return out;
}

SurfaceField derivative(const SurfaceField& f, int axis) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            "derivative expects a spectral field");
    require(axis == 0 || axis == 1, ErrorKind::invalid_input, "surface derivative axis must be 0 or 1");
    SurfaceField out = f;
    for (std::size_t m = 0; m < out.size(); ++m) out[m] *= ixi(*f.grid(), m, axis);
    return out;
}

HalfSpaceField apply_vertical(const HalfSpaceField& f, const Eigen::MatrixXd& op) {
    const int nz = f.nz();
    require(op.rows() == nz && op.cols() == nz, ErrorKind::invalid_input, "vertical operator size mismatch");
    HalfSpaceField out(f.hgrid(), f.vgrid(), f.components(), f.representation());
    const std::size_t nh2 = f.nh2();
    for (int c = 0; c < f.components(); ++c)
        for (int i = 0; i < nz; ++i) {
            cplx* dst = out.plane(c, i);
            for (int j = 0; j < nz; ++j) {
                const double a = op(i, j);
                if (a == 0.0) continue;
                const cplx* src = f.plane(c, j);
                for (std::size_t m = 0; m < nh2; ++m) dst[m] += a * src[m];
            }
        }
    return out;
}

HalfSpaceField multiply(const HalfSpaceField& a, const HalfSpaceField& b) {
    require(a.representation() == Representation::physical && b.representation() == Representation::physical,
            ErrorKind::invalid_input, "multiply expects physical fields");
    require(a.components() == 1 && b.components() == 1 && a.size() == b.size(), ErrorKind::invalid_input,
            "multiply expects scalar fields of equal shape");
    HalfSpaceField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.values()[i] *= b.values()[i];
    return out;
}

HalfSpaceField lift(const SurfaceField& s, const VGridPtr& vgrid) {
    HalfSpaceField out(s.grid(), vgrid, 1, s.representation());
    for (int z = 0; z < out.nz(); ++z) std::copy(s.values().begin(), s.values().end(), out.plane(0, z));
    return out;
}

HalfSpaceField stack(const HalfSpaceField& a, const HalfSpaceField& b, const HalfSpaceField& c) {
    require(a.components() == 1 && b.components() == 1 && c.components() == 1 && a.size() == b.size() &&
                a.size() == c.size(),
            ErrorKind::invalid_input, "stack expects three scalar fields of equal shape");
    HalfSpaceField out(a.hgrid(), a.vgrid(), 3, a.representation());
    out.set_component(0, a);
    out.set_component(1, b);
    out.set_component(2, c);
    return out;
}

void zero_nyquist(HalfSpaceField& f) {
    const auto& g = *f.hgrid();
    for (int c = 0; c < f.components(); ++c)
        for (int z = 0; z < f.nz(); ++z) {
            cplx* p = f.plane(c, z);
            for (std::size_t m = 0; m < g.size(); ++m)
                if (g.is_nyquist(m)) p[m] = 0.0;
        }
}

void zero_nyquist(SurfaceField& f) {
    for (std::size_t m = 0; m < f.size(); ++m)
        if (f.grid()->is_nyquist(m)) f[m] = 0.0;
}

void make_real(HalfSpaceField& f) {
    for (auto& v : f.values()) v = v.real();
}

void make_real(SurfaceField& f) {
    for (auto& v : f.values()) v = v.real();
}

double lr_norm(const HalfSpaceField& f, double r) {
    require(f.representation() == Representation::physical, ErrorKind::invalid_input, "lr_norm expects physical field");
    require(r >= 1.0, ErrorKind::invalid_input, "lr_norm exponent must be >= 1");
    const double area = f.hgrid()->dx() * f.hgrid()->dx();
    const auto& w = f.vgrid()->weights();
    double total = 0.0;
    for (int z = 0; z < f.nz(); ++z) {
        double layer = 0.0;
        for (std::size_t m = 0; m < f.nh2(); ++m) {
            double mag2 = 0.0;
            for (int c = 0; c < f.components(); ++c) mag2 += std::norm(f(c, z, m));
            layer += std::pow(mag2, 0.5 * r);
        }
        total += w(z) * layer;
    }
    return std::pow(total * area, 1.0 / r);
}

double lr_norm(const SurfaceField& f, double r) {
    require(f.representation() == Representation::physical, ErrorKind::invalid_input, "lr_norm expects physical field");
    require(r >= 1.0, ErrorKind::invalid_input, "lr_norm exponent must be >= 1");
    const double area = f.grid()->dx() * f.grid()->dx();
    double total = 0.0;
    for (const auto& v : f.values()) total += std::pow(std::abs(v), r);
    return std::pow(total * area, 1.0 / r);
}

double gradient_lr_norm(const HalfSpaceField& f, double r) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            "gradient_lr_norm expects a spectral field");
    require(r >= 1.0, ErrorKind::invalid_input, "lr_norm exponent must be >= 1");
    std::vector<double> mag2(f.nz() * f.nh2(), 0.0);
    for (int axis = 0; axis < 3; ++axis) {
        const HalfSpaceField d = inverse_transform(derivative(f, axis));
        for (int c = 0; c < f.components(); ++c)
            for (int z = 0; z < f.nz(); ++z)
                for (std::size_t m = 0; m < f.nh2(); ++m) mag2[z * f.nh2() + m] += std::norm(d(c, z, m).real());
    }
    const double area = f.hgrid()->dx() * f.hgrid()->dx();
    const auto& w = f.vgrid()->weights();
    double total = 0.0;
    for (int z = 0; z < f.nz(); ++z) {
        double layer = 0.0;
        for (std::size_t m = 0; m < f.nh2(); ++m) layer += std::pow(mag2[z * f.nh2() + m], 0.5 * r);
        total += w(z) * layer;
    }
    return std::pow(total * area, 1.0 / r);
}

double sup_norm(const HalfSpaceField& f) {
    double best = 0.0;
    for (int z = 0; z < f.nz(); ++z)
        for (std::size_t m = 0; m < f.nh2(); ++m) {
            double mag2 = 0.0;
            for (int c = 0; c < f.components(); ++c) mag2 += std::norm(f(c, z, m));
            best = std::max(best, std::sqrt(mag2));
        }
    return best;
}

} // namespace fbns::spectral
