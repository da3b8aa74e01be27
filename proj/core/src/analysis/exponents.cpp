#include "fbns/analysis/exponents.hpp"

#include "fbns/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fbns::analysis {

DecayRates rate_exponents(double s1, double s2) {
    require(std::isfinite(s1) && std::isfinite(s2), ErrorKind::invalid_input, "exponents must be finite");
    require(1.0 <= s1 && s1 <= 2.0 && 2.0 <= s2, ErrorKind::invalid_input,
            "rate exponents need 1 <= s1 <= 2 <= s2 < infinity");
    const double d = 1.0 / s1 - 1.0 / s2;
    return {d + 0.5 * (0.5 - 1.0 / s2), 1.5 * d};
}

double ExponentConfig::q_theta() const { return 2.0 * (1.0 - 1.0 / (3.0 - theta)); }

WeightConfig WeightConfig::standard(double q) {
    WeightConfig w;
    w.b1 = w.b2 = 2.0 / q + 0.375;
    return w;
}

bool in_nonlinear_range(double p, double q) {
    return p > 2.0 && std::isfinite(p) && q > 3.0 && q < 16.0 / 5.0 && 2.0 / p + 3.0 / q < 1.0;
}

ValidationReport validate_config(const ExponentConfig& cfg, const WeightConfig& w) {
    ValidationReport rep;
    auto add = [&](const char* group, const char* cond, double lhs, double rhs, bool pass) {
        rep.items.push_back({group, cond, lhs, rhs, pass});
        return pass;
    };
    const double p = cfg.p, q = cfg.q;
    const double inf = std::numeric_limits<double>::infinity();
    bool ok = true;
    ok &= add("pq", "2 < p < inf", p, 2.0, p > 2.0 && p < inf);
    ok &= add("pq", "3 < q < 16/5", q, 16.0 / 5.0, q > 3.0 && q < 16.0 / 5.0);
    ok &= add("pq", "2/p + 3/q < 1", 2.0 / p + 3.0 / q, 1.0, 2.0 / p + 3.0 / q < 1.0);
    rep.pq = ok;

    ok = true;
    ok &= add("pq:lin", "2 < p < inf", p, 2.0, p > 2.0 && p < inf);
    ok &= add("pq:lin", "3 < q < 4", q, 4.0, q > 3.0 && q < 4.0);
    ok &= add("pq:lin", "p(2/q - 1/2) > 1", p * (2.0 / q - 0.5), 1.0, p * (2.0 / q - 0.5) > 1.0);
    ok &= add("pq:lin", "2/p + 3/q < 1", 2.0 / p + 3.0 / q, 1.0, 2.0 / p + 3.0 / q < 1.0);
    rep.pq_lin = ok;

    ok = true;
    ok &= add("theta", "0 < theta < 1", cfg.theta, 1.0, cfg.theta > 0.0 && cfg.theta < 1.0);
    const double qt = cfg.q_theta();
    ok &= add("theta", "1 <= q_theta <= 4/3", qt, 4.0 / 3.0, qt >= 1.0 - 1e-15 && qt <= 4.0 / 3.0 + 1e-15);
    rep.theta = ok;

    ok = true;
    const double bmin = std::min({w.b1, w.b2, w.b3, w.b4});
    double mq = std::numeric_limits<double>::quiet_NaN();
    if (q >= 2.0 && cfg.q_bar() >= 1.0 && cfg.q_bar() <= 2.0) mq = rate_exponents(cfg.q_bar(), q).m;
    ok &= add("ab", "b1 > 1", w.b1, 1.0, w.b1 > 1.0);
    ok &= add("ab", "b2 > 1", w.b2, 1.0, w.b2 > 1.0);
    ok &= add("ab", "b3 >= 1", w.b3, 1.0, w.b3 >= 1.0);
    ok &= add("ab", "b4 >= 1", w.b4, 1.0, w.b4 >= 1.0);
    ok &= add("ab", "a1 > 0", w.a1, 0.0, w.a1 > 0.0);
    ok &= add("ab", "a2 > 0", w.a2, 0.0, w.a2 > 0.0);
    ok &= add("ab", "p(min b - a1) > 1", p * (bmin - w.a1), 1.0, p * (bmin - w.a1) > 1.0);
    ok &= add("ab", "p(m(q/2, q) + 1/4 - a1) > 1", p * (mq + 0.25 - w.a1), 1.0, p * (mq + 0.25 - w.a1) > 1.0);
    ok &= add("ab", "p(min b - a2) > 1", p * (bmin - w.a2), 1.0, p * (bmin - w.a2) > 1.0);
    ok &= add("ab", "p(1/2 + 2/q - a2) > 1", p * (0.5 + 2.0 / q - w.a2), 1.0, p * (0.5 + 2.0 / q - w.a2) > 1.0);
    ok &= add("ab", "c1 >= 0", w.c1, 0.0, w.c1 >= 0.0);
    ok &= add("ab", "d1 >= 0", w.d1, 0.0, w.d1 >= 0.0);
    ok &= add("ab", "p(1 + c1 - a0) > 1", p * (1.0 + w.c1 - w.a0()), 1.0, p * (1.0 + w.c1 - w.a0()) > 1.0);
    const double bmax34 = std::max(w.b3, w.b4);
    ok &= add("ab", "p(1 + d1 - max(b3, b4)) > 1", p * (1.0 + w.d1 - bmax34), 1.0, p * (1.0 + w.d1 - bmax34) > 1.0);
    rep.weights = ok;
    return rep;
}

} // namespace fbns::analysis
