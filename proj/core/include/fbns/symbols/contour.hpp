#pragma once

#include "fbns/params.hpp"
#include "fbns/symbols/symbols.hpp"

#include <vector>

namespace fbns::symbols {

/// One quadrature node. The weight already contains d lambda / (2 pi i), so
/// (1 / 2 pi i) int_Gamma f(lambda) d lambda ~ sum weight_k f(lambda_k).
struct ContourNode {
    cplx lambda;
    cplx weight;
};

struct ContourSpec {
    SectorSpec sector;
    double truncation = 50.0;
    int node_count = 400;
    std::vector<ContourNode> nodes;
};

/// Trapezoid rule on both rays lambda = v + s e^{+-i(pi - eps)}, s in [0, S],
/// with v = 2 gamma0 / sin(eps). node_count is split evenly between the rays.
ContourSpec contour_nodes(const SectorSpec& sector, double S, int node_count);

/// Time-adapted variant used for evaluation: the vertex is pulled to
/// 2 min(gamma0, 1/t) / sin(eps), the truncation is chosen so that
/// |e^{lambda t}| < e^{-40} at the ends, and each ray uses a trapezoid rule in
/// a sin-substitution that clusters nodes at the vertex and the cut-off.
/// truncation_scale multiplies S (used by the doubling check).
ContourSpec adapted_contour(const SectorSpec& sector, double t, int nodes_per_ray, double truncation_scale = 1.0);

/// sum_k w_k e^{lambda_k t} f(lambda_k)
template <class F>
auto inverse_laplace(const ContourSpec& c, double t, F&& f) {
    using R = decltype(f(cplx{}));
    R acc = f(c.nodes.front().lambda) * cplx(0.0);
    for (const auto& n : c.nodes) acc += (n.weight * std::exp(n.lambda * t)) * f(n.lambda);
    return acc;
}

} // namespace fbns::symbols
