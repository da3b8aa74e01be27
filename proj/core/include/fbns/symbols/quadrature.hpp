#pragma once

#include "fbns/params.hpp"

#include <utility>
#include <vector>

namespace fbns::symbols {

/// Gauss-Legendre nodes and weights on [0, 1].
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre_unit(int n);

/// e^z - 1 without cancellation for small |z|.
cplx expm1(cplx z);

} // namespace fbns::symbols
