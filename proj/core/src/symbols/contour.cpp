#include "fbns/symbols/contour.hpp"

#include "fbns/error.hpp"

#include <cmath>
#include <numbers>

namespace fbns::symbols {

namespace {

using std::numbers::pi;

// Adds both rays given per-ray parameters s_j and trapezoid weights ds_j.
void add_rays(ContourSpec& c, double vertex, const std::vector<double>& s, const std::vector<double>& ds) {
    const double th = pi - c.sector.epsilon;
    const cplx up = std::polar(1.0, th);
    const cplx down = std::polar(1.0, -th);
    const cplx inv2pii = 1.0 / cplx(0.0, 2.0 * pi);
    // Lower ray runs inward (from -S to the vertex), upper ray outward.
    for (std::size_t j = s.size(); j-- > 0;)
        c.nodes.push_back({vertex + s[j] * down, -down * ds[j] * inv2pii});
    for (std::size_t j = 0; j < s.size(); ++j) c.nodes.push_back({vertex + s[j] * up, up * ds[j] * inv2pii});
}

} // namespace

ContourSpec contour_nodes(const SectorSpec& sector, double S, int node_count) {
    sector.validate();
    require(S > 0.0, ErrorKind::invalid_input, "contour truncation must be positive");
    require(node_count >= 8 && node_count % 2 == 0, ErrorKind::invalid_input,
            "contour node count must be even and >= 8");
    ContourSpec c;
    c.sector = sector;
    c.truncation = S;
    c.node_count = node_count;
    const int m = node_count / 2;
    const double h = S / (m - 1);
    std::vector<double> s(m), ds(m);
    for (int j = 0; j < m; ++j) {
        s[j] = j * h;
        ds[j] = (j == 0 || j == m - 1) ? 0.5 * h : h;
    }
    add_rays(c, sector.vertex(), s, ds);
    return c;
}

ContourSpec adapted_contour(const SectorSpec& sector, double t, int nodes_per_ray, double truncation_scale) {
    sector.validate();
    require(t > 0.0, ErrorKind::invalid_input, "contour time must be positive");
    require(nodes_per_ray >= 8, ErrorKind::invalid_input, "need at least 8 nodes per ray");
    SectorSpec eff = sector;
    eff.gamma0 = std::min(sector.gamma0, 1.0 / t);
    const double v = eff.vertex();
    require(truncation_scale > 0.0, ErrorKind::invalid_input, "truncation scale must be positive");
    const double S = truncation_scale * (v * t + 40.0) / (t * std::cos(sector.epsilon));
    ContourSpec c;
    c.sector = eff;
    c.truncation = S;
    c.node_count = 2 * nodes_per_ray;
    const int m = nodes_per_ray;
    std::vector<double> s(m), ds(m);
    // s = S (u - sin(2 pi u) / (2 pi)); interior trapezoid nodes u = j / (m + 1).
    for (int j = 0; j < m; ++j) {
        const double u = (j + 1.0) / (m + 1.0);
        s[j] = S * (u - std::sin(2.0 * pi * u) / (2.0 * pi));
        ds[j] = S * (1.0 - std::cos(2.0 * pi * u)) / (m + 1.0);
    }
    add_rays(c, v, s, ds);
    return c;
}

} // namespace fbns::symbols
