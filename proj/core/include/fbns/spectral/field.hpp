#pragma once

#include "fbns/params.hpp"
#include "fbns/spectral/grid.hpp"

#include <cstddef>
#include <vector>

namespace fbns::spectral {

enum class Representation { physical, spectral };

/// Scalar function on the horizontal plane, stored as nh^2 complex values.
class SurfaceField {
public:
    SurfaceField() = default;
    SurfaceField(HGridPtr grid, Representation rep);

    const HGridPtr& grid() const { return grid_; }
    Representation representation() const { return rep_; }
    void set_representation(Representation r) { rep_ = r; }
    std::size_t size() const { return values_.size(); }

    cplx& operator[](std::size_t m) { return values_[m]; }
    const cplx& operator[](std::size_t m) const { return values_[m]; }
    std::vector<cplx>& values() { return values_; }
    const std::vector<cplx>& values() const { return values_; }

    SurfaceField& operator+=(const SurfaceField& o);
    SurfaceField& operator-=(const SurfaceField& o);
    SurfaceField& operator*=(cplx s);

    double max_abs() const;

private:
    HGridPtr grid_;
    Representation rep_ = Representation::physical;
    std::vector<cplx> values_;
};

/// Scalar or 3-vector field on the truncated half-space.
/// Storage index: (c * nz + z) * nh^2 + m.
class HalfSpaceField {
public:
    HalfSpaceField() = default;
    HalfSpaceField(HGridPtr hgrid, VGridPtr vgrid, int components, Representation rep);

    const HGridPtr& hgrid() const { return hgrid_; }
    const VGridPtr& vgrid() const { return vgrid_; }
    int components() const { return ncomp_; }
    int nz() const { return vgrid_->size(); }
    std::size_t nh2() const { return hgrid_->size(); }
    Representation representation() const { return rep_; }
    void set_representation(Representation r) { rep_ = r; }
    std::size_t size() const { return values_.size(); }

    std::size_t index(int c, int z, std::size_t m) const {
        return (static_cast<std::size_t>(c) * nz() + z) * nh2() + m;
    }
    cplx& operator()(int c, int z, std::size_t m) { return values_[index(c, z, m)]; }
    const cplx& operator()(int c, int z, std::size_t m) const { return values_[index(c, z, m)]; }
    cplx* plane(int c, int z) { return values_.data() + index(c, z, 0); }
    const cplx* plane(int c, int z) const { return values_.data() + index(c, z, 0); }
    std::vector<cplx>& values() { return values_; }
    const std::vector<cplx>& values() const { return values_; }

    HalfSpaceField component(int c) const;
    void set_component(int c, const HalfSpaceField& scalar);
    SurfaceField trace(int c) const;
    bool same_shape(const HalfSpaceField& o) const;

    HalfSpaceField& operator+=(const HalfSpaceField& o);
    HalfSpaceField& operator-=(const HalfSpaceField& o);
    HalfSpaceField& operator*=(cplx s);

    double max_abs() const;

private:
    HGridPtr hgrid_;
    VGridPtr vgrid_;
    int ncomp_ = 1;
    Representation rep_ = Representation::physical;
    std::vector<cplx> values_;
};

HalfSpaceField operator+(HalfSpaceField a, const HalfSpaceField& b);
HalfSpaceField operator-(HalfSpaceField a, const HalfSpaceField& b);
HalfSpaceField operator*(cplx s, HalfSpaceField a);
SurfaceField operator+(SurfaceField a, const SurfaceField& b);
SurfaceField operator-(SurfaceField a, const SurfaceField& b);
SurfaceField operator*(cplx s, SurfaceField a);

/// Max deviation from conjugate symmetry relative to the largest mode value.
double conjugate_asymmetry(const SurfaceField& spectral);
double conjugate_asymmetry(const HalfSpaceField& spectral);

} // namespace fbns::spectral
