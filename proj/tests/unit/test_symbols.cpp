#include "doctest.h"

#include "fbns/error.hpp"
#include "fbns/symbols/contour.hpp"
#include "fbns/symbols/multiplier.hpp"
#include "fbns/symbols/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

using namespace fbns;
using namespace fbns::symbols;

namespace {

constexpr double pi = std::numbers::pi;

// a e^{Aa} sum_k ((B - A) a)^k / (k + 1)!
cplx calM_series(double a, double A, cplx B) {
    const cplx z = (B - A) * a;
    cplx term = 1.0, acc = 0.0;
    for (int k = 0; k < 30; ++k) {
        acc += term;
        term *= z / static_cast<double>(k + 2);
    }
    return a * std::exp(A * a) * acc;
}

} // namespace

TEST_CASE("A and B") {
    auto [A0, B0] = eval_AB({0.0, 0.0}, 1.0, 1.0);
    CHECK(A0 == 0.0);
    CHECK(std::abs(B0 - 1.0) < 1e-15);
    auto [A1, B1] = eval_AB({3.0, 4.0}, 0.0, 1.0);
    CHECK(A1 == 5.0);
    CHECK(std::abs(B1 - 5.0) < 1e-14);
    auto [A2, B2] = eval_AB({1.0, 0.0}, cplx(0.0, 1.0), 1.0);
    CHECK(A2 == 1.0);
    CHECK(B2.real() == doctest::Approx(1.09868411346781).epsilon(1e-12));
    CHECK(B2.imag() == doctest::Approx(0.45508986056222733).epsilon(1e-12));
    CHECK_THROWS_AS(eval_AB({1.0, 0.0}, -2.0, 1.0), Error);
    try {
        eval_AB({0.0, 0.0}, -0.5, 1.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::branch_cut);
    }
}

TEST_CASE("B has nonnegative real part and squares back") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 2000; ++k) {
        const double x1 = 10 * u(rng), x2 = 10 * u(rng);
        const cplx lam = std::polar(std::exp(8 * u(rng)), 0.999 * (pi - pi / 4) * u(rng));
        const auto b = make_bundle({x1, x2}, lam, 0.7);
        CHECK(b.B.real() >= 0.0);
        CHECK(std::abs(b.B * b.B - (lam / 0.7 + b.A * b.A)) <= 1e-12 * std::abs(b.B * b.B));
        CHECK(std::abs(b.D - lopatinskii_D(b.A, b.B)) == 0.0);
    }
}

TEST_CASE("Lopatinskii polynomial") {
    CHECK(lopatinskii_D(0.0, 1.0) == cplx(1.0));
    CHECK(lopatinskii_D(1.0, 1.0) == cplx(4.0));
    CHECK(lopatinskii_D(1.0, 0.0) == cplx(-1.0));
}

TEST_CASE("calM") {
    CHECK(calM(0.0, 2.0, cplx(3.0, 1.0)) == cplx(0.0));
    CHECK(std::abs(calM(-1.5, 2.0, 2.0) - (-1.5 * std::exp(-3.0))) < 1e-15);
    CHECK(std::abs(calM(-1.0, 0.0, 1.0) - (std::exp(-1.0) - 1.0)) < 1e-15);
    CHECK_THROWS_AS(calM(0.5, 1.0, 1.0), Error);
}

TEST_CASE("calM is continuous across the method switch") {
    const double A = 1.3;
    for (double a : {-0.1, -1.0, -4.0}) {
        for (double rel : {1e-7, 5e-7, 9.9e-7, 1.01e-6, 2e-6, 1e-5}) {
            const cplx B = A + rel * (2 * A + 1) * cplx(0.6, 0.8);
            const cplx ref = calM_series(a, A, B);
            CHECK(std::abs(calM(a, A, B) - ref) <= 1e-10 * std::abs(ref));
        }
    }
    CHECK(calM_uses_integral(A, A + 1e-9));
    CHECK_FALSE(calM_uses_integral(A, A + 1.0));
}

TEST_CASE("standard contour") {
    const SectorSpec sec{pi / 4, 1.0};
    CHECK(sec.vertex() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    const auto c = contour_nodes(sec, 50.0, 400);
    CHECK(c.nodes.size() == 400);
    double re_max = -1e300;
    for (const auto& n : c.nodes) {
        re_max = std::max(re_max, n.lambda.real());
        const bool has_conj = std::any_of(c.nodes.begin(), c.nodes.end(), [&](const ContourNode& o) {
            return std::abs(o.lambda - std::conj(n.lambda)) < 1e-12 && std::abs(o.weight - std::conj(n.weight)) < 1e-12;
        });
        CHECK(has_conj);
        // on a ray of direction pi - eps from the vertex
        const cplx d = n.lambda - sec.vertex();
        if (std::abs(d) > 0.0) CHECK(std::abs(std::abs(std::arg(d)) - (pi - pi / 4)) < 1e-12);
    }
    CHECK(re_max == doctest::Approx(sec.vertex()).epsilon(1e-14));
    CHECK_THROWS_AS(contour_nodes({0.0, 1.0}, 50.0, 400), Error);
    CHECK_THROWS_AS(contour_nodes({pi / 2, 1.0}, 50.0, 400), Error);
    CHECK_THROWS_AS(contour_nodes(sec, 50.0, 7), Error);
    CHECK_THROWS_AS(contour_nodes(sec, -1.0, 400), Error);
}

TEST_CASE("contour reproduces the residue of 1/lambda") {
    const SectorSpec sec{pi / 4, 1.0};
    for (double t : {0.1, 0.3, 1.0, 3.0, 10.0}) {
        const auto c = adapted_contour(sec, t, 128);
        const cplx v = inverse_laplace(c, t, [](cplx l) { return 1.0 / l; });
        CHECK(std::abs(v - 1.0) < 1e-8);
    }
}

TEST_CASE("sector membership") {
    const SectorSpec sec{pi / 4, 1.0};
    CHECK(sec.contains(2.0));
    CHECK_FALSE(sec.contains(0.5));
    CHECK(sec.contains(std::polar(3.0, 0.74 * pi)));
    CHECK_FALSE(sec.contains(std::polar(3.0, 0.76 * pi)));
}

TEST_CASE("multiplier audits") {
    const SectorSpec sec{pi / 4, 1.0};
    AuditSpec spec;
    spec.sample_budget = 1500;
    SUBCASE("A^1 is order 1 type 2 and B is order 1 type 1") {
        const auto a = multiplier_bound_estimate("A^s", 1.0, 2, sec, spec, 1.0);
        const auto b = multiplier_bound_estimate("B^s", 1.0, 1, sec, spec, 1.0);
        CHECK(std::isfinite(a.constant));
        CHECK(a.constant < 10.0);
        CHECK(std::isfinite(b.constant));
        CHECK(b.constant < 10.0);
        CHECK(a.rows.size() == 12);
    }
    SUBCASE("xi1 audited as order 0 type 2 grows with the sampled range") {
        std::vector<double> est;
        for (double xmax : {1e1, 1e2, 1e3, 1e4}) {
            AuditSpec s2 = spec;
            s2.xi_max = xmax;
            est.push_back(multiplier_bound_estimate("xi1", 0.0, 2, sec, s2, 0.0).constant);
        }
        for (std::size_t k = 1; k < est.size(); ++k) CHECK(est[k] > 5.0 * est[k - 1]);
    }
    SUBCASE("product closure") {
        const auto a = multiplier_bound_estimate("A^s", 1.0, 2, sec, spec, 1.0);
        const auto b = multiplier_bound_estimate("B^s", 1.0, 1, sec, spec, 1.0);
        const auto ab = multiplier_bound_estimate("A*B", 2.0, 2, sec, spec, 0.0);
        CHECK(ab.constant <= 4.0 * a.constant * b.constant);
    }
    SUBCASE("boundary formula fractions are bounded") {
        for (const auto& id : MultiplierRegistry::instance().ids()) {
            if (id.rfind("bf:", 0) != 0) continue;
            const auto r = multiplier_bound_estimate(id, 0.0, 2, sec, spec, 0.0);
            CHECK_MESSAGE(r.constant < 1e3, id);
        }
    }
    CHECK_THROWS_AS(multiplier_bound_estimate("nope", 0.0, 1, sec, spec, 0.0), Error);
    std::ostringstream os;
    write_audit_csv(os, {multiplier_bound_estimate("1/B", -1.0, 1, sec, spec, 0.0)});
    CHECK(os.str().rfind("symbol_id,s,type,alpha1,alpha2,tau,constant", 0) == 0);
}

TEST_CASE("Lopatinskii ratio on the sector") {
    const SectorSpec sec{pi / 4, 1.0};
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double lo = 1e300, hi = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const double r = std::exp(std::log(1e-3) + std::log(1e7) * u(rng));
        const double ph = 2 * pi * u(rng);
        const cplx lam = std::polar(std::exp(std::log(1.0 + 1e-9) + std::log(1e8) * u(rng)),
                                    (pi - sec.epsilon) * (2 * u(rng) - 1) * (1 - 1e-9));
        const auto b = make_bundle({r * std::cos(ph), r * std::sin(ph)}, lam, 1.0);
        const double ratio = std::abs(b.D) / std::pow(std::sqrt(std::abs(lam)) + b.A, 3);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(lo > 0.0);
    CHECK(hi / lo < 1e3);
}
