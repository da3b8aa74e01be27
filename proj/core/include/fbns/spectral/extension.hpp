#pragma once

#include "fbns/spectral/field.hpp"

#include <Eigen/Dense>

namespace fbns::spectral {

/// Vector field on the symmetric interval [-L, L]; node j of the half grid
/// maps to index j and its mirror -x_j to index 2n - 2 - j.
struct DoubledField {
    HGridPtr hgrid;
    Eigen::VectorXd nodes;
    int components = 3;
    Representation rep = Representation::physical;
    std::vector<cplx> values;

    int nz() const { return static_cast<int>(nodes.size()); }
    std::size_t index(int c, int z, std::size_t m) const {
        return (static_cast<std::size_t>(c) * nz() + z) * hgrid->size() + m;
    }
};

/// Components 1, 2 extended oddly in x3, component 3 evenly.
DoubledField extend_odd_even(const HalfSpaceField& f);

/// Odd extension of a scalar field.
DoubledField extend_odd(const HalfSpaceField& scalar);

/// Divergence on the doubled grid: spectral in x', three-point differences
/// in x3 on the (non-uniform) node set. End nodes and the x3 = 0 junction are
/// left at zero.
DoubledField doubled_divergence(const DoubledField& f);

/// Interior node mask used by doubled_divergence.
std::vector<bool> doubled_interior_mask(const DoubledField& f);

} // namespace fbns::spectral
