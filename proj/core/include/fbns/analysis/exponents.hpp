#pragma once

#include <string>
#include <vector>

namespace fbns::analysis {

struct DecayRates {
    double m = 0.0;
    double n = 0.0;
};

/// m = (1/s1 - 1/s2) + (1/2)(1/2 - 1/s2), n = (3/2)(1/s1 - 1/s2)
/// for 1 <= s1 <= 2 <= s2 < infinity.
DecayRates rate_exponents(double s1, double s2);

struct ExponentConfig {
    double p = 64.0;
    double q = 3.19;
    double theta = 0.5;
    double q_bar() const { return q / 2.0; }
    /// 2 (1 - 1 / (3 - theta)), in [1, 4/3] for theta in [0, 1].
    double q_theta() const;
};

struct WeightConfig {
    double a1 = 0.5;
    double a2 = 0.75;
    double b1 = 1.0;
    double b2 = 1.0;
    double b3 = 1.0;
    double b4 = 1.0;
    double c1 = 0.0;
    double d1 = 0.25;
    double a0() const { return a1 > a2 ? a1 : a2; }
    /// The choice used for the nonlinear problem: b1 = b2 = 2/q + 3/8.
    static WeightConfig standard(double q);
};

struct ValidationItem {
    std::string group;
    std::string condition;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    bool pq = false;      ///< nonlinear range
    bool pq_lin = false;  ///< linear range
    bool weights = false;
    bool theta = false;
    bool valid() const { return pq && pq_lin && weights && theta; }
};

ValidationReport validate_config(const ExponentConfig& cfg, const WeightConfig& w);

/// Direct arithmetic form of the nonlinear range, used as the oracle:
/// 2 < p, 3 < q < 16/5, 2/p + 3/q < 1.
bool in_nonlinear_range(double p, double q);

} // namespace fbns::analysis
