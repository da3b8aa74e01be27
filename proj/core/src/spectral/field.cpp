#include "fbns/spectral/field.hpp"

#include "fbns/error.hpp"

#include <algorithm>
#include <cmath>

namespace fbns::spectral {

SurfaceField::SurfaceField(HGridPtr grid, Representation rep)
    : grid_(std::move(grid)), rep_(rep) {
    require(grid_ != nullptr, ErrorKind::invalid_input, "surface field needs a grid");
    values_.assign(grid_->size(), cplx(0.0));
}

SurfaceField& SurfaceField::operator+=(const SurfaceField& o) {
    require(o.size() == size() && o.rep_ == rep_, ErrorKind::invalid_input, "surface field shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

SurfaceField& SurfaceField::operator-=(const SurfaceField& o) {
    require(o.size() == size() && o.rep_ == rep_, ErrorKind::invalid_input, "surface field shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

SurfaceField& SurfaceField::operator*=(cplx s) {
    for (auto& v : values_) v *= s;
    return *this;
}

double SurfaceField::max_abs() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

HalfSpaceField::HalfSpaceField(HGridPtr hgrid, VGridPtr vgrid, int components, Representation rep)
    : hgrid_(std::move(hgrid)), vgrid_(std::move(vgrid)), ncomp_(components), rep_(rep) {
    require(hgrid_ && vgrid_, ErrorKind::invalid_input, "half-space field needs both grids");
    require(components == 1 || components == 3, ErrorKind::invalid_input, "field rank must be scalar or vector3");
    values_.assign(static_cast<std::size_t>(ncomp_) * vgrid_->size() * hgrid_->size(), cplx(0.0));
}

HalfSpaceField HalfSpaceField::component(int c) const {
    require(c >= 0 && c < ncomp_, ErrorKind::invalid_input, "component index out of range");
    HalfSpaceField out(hgrid_, vgrid_, 1, rep_);
    const std::size_t block = static_cast<std::size_t>(nz()) * nh2();
    std::copy_n(values_.begin() + c * block, block, out.values_.begin());
    return out;
}

void HalfSpaceField::set_component(int c, const HalfSpaceField& scalar) {
    require(c >= 0 && c < ncomp_ && scalar.ncomp_ == 1 && scalar.size() * ncomp_ == size(),
            ErrorKind::invalid_input, "set_component shape mismatch");
    const std::size_t block = static_cast<std::size_t>(nz()) * nh2();
    std::copy_n(scalar.values_.begin(), block, values_.begin() + c * block);
}

SurfaceField HalfSpaceField::trace(int c) const {
    SurfaceField s(hgrid_, rep_);
    std::copy_n(plane(c, vgrid_->top()), nh2(), s.values().begin());
    return s;
}

bool HalfSpaceField::same_shape(const HalfSpaceField& o) const {
    return ncomp_ == o.ncomp_ && values_.size() == o.values_.size() && rep_ == o.rep_;
}

HalfSpaceField& HalfSpaceField::operator+=(const HalfSpaceField& o) {
    require(same_shape(o), ErrorKind::invalid_input, "half-space field shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

HalfSpaceField& HalfSpaceField::operator-=(const HalfSpaceField& o) {
    require(same_shape(o), ErrorKind::invalid_input, "half-space field shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

HalfSpaceField& HalfSpaceField::operator*=(cplx s) {
    for (auto& v : values_) v *= s;
    return *this;
}

double HalfSpaceField::max_abs() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

HalfSpaceField operator+(HalfSpaceField a, const HalfSpaceField& b) { return a += b; }
HalfSpaceField operator-(HalfSpaceField a, const HalfSpaceField& b) { return a -= b; }
HalfSpaceField operator*(cplx s, HalfSpaceField a) { return a *= s; }
SurfaceField operator+(SurfaceField a, const SurfaceField& b) { return a += b; }
SurfaceField operator-(SurfaceField a, const SurfaceField& b) { return a -= b; }
SurfaceField operator*(cplx s, SurfaceField a) { return a *= s; }

namespace {

double asymmetry(const HorizontalGrid& g, const cplx* v) {
    double dev = 0.0, scale = 0.0;
    for (std::size_t m = 0; m < g.size(); ++m) {
        scale = std::max(scale, std::abs(v[m]));
        if (g.is_nyquist(m)) continue;
        dev = std::max(dev, std::abs(v[m] - std::conj(v[g.conjugate(m)])));
    }
    return scale > 0.0 ? dev / scale : 0.0;
}

} // namespace

double conjugate_asymmetry(const SurfaceField& f) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input, "expected spectral field");
    return asymmetry(*f.grid(), f.values().data());
}

double conjugate_asymmetry(const HalfSpaceField& f) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input, "expected spectral field");
    double worst = 0.0;
    for (int c = 0; c < f.components(); ++c)
        for (int z = 0; z < f.nz(); ++z) worst = std::max(worst, asymmetry(*f.hgrid(), f.plane(c, z)));
    return worst;
}

} // namespace fbns::spectral
