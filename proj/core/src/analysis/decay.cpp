#include "fbns/analysis/decay.hpp"

#include "fbns/error.hpp"

#include <fftw3.h>

#include <cmath>
#include <iomanip>
#include <mutex>
#include <numbers>

namespace fbns::analysis {

DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& value, double t_min, double t_max) {
    require(t.size() == value.size(), ErrorKind::invalid_input, "series length mismatch");
    std::vector<double> x, y;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] < t_min || t[k] > t_max) continue;
        require(t[k] > 0.0, ErrorKind::invalid_input, "fit window must lie in t > 0");
        require(value[k] > 0.0 && std::isfinite(value[k]), ErrorKind::invalid_input,
                "decay fit needs positive values");
        x.push_back(std::log(t[k]));
        y.push_back(std::log(value[k]));
    }
    const std::size_t n = x.size();
    require(n >= 10, ErrorKind::invalid_input, "decay fit needs at least 10 samples in the window");
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    require(sxx > 0.0, ErrorKind::invalid_input, "fit window has no spread in t");
    const double slope = sxy / sxx;
    const double icpt = my - slope * mx;
    double ss = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double e = y[k] - (icpt + slope * x[k]);
        ss += e * e;
    }
    DecayFit f;
    f.exponent = -slope;
    f.stderr_ = std::sqrt(ss / static_cast<double>(n - 2) / sxx);
    f.log_constant = icpt;
    f.samples = static_cast<int>(n);
    return f;
}

DecayReport make_decay_report(const std::string& quantity, const DecayFit& fit, double target, double tolerance,
                              double t_min, double t_max) {
    DecayReport r;
    r.quantity = quantity;
    r.fitted = fit.exponent;
    r.stderr_ = fit.stderr_;
    r.target = target;
    r.tolerance = tolerance;
    r.t_min = t_min;
    r.t_max = t_max;
    r.pass = std::abs(fit.exponent - target) <= tolerance;
    return r;
}

void write_decay_csv(std::ostream& os, const std::vector<DecayReport>& reports) {
    os << "quantity,fitted,stderr,target,tolerance,t_min,t_max,verdict\n";
    os << std::setprecision(10);
    for (const auto& r : reports)
        os << r.quantity << ',' << r.fitted << ',' << r.stderr_ << ',' << r.target << ',' << r.tolerance << ','
           << r.t_min << ',' << r.t_max << ',' << (r.pass ? "pass" : "fail") << '\n';
}

std::vector<double> taper_window(std::size_t n, double fraction) {
    std::vector<double> w(n, 1.0);
    const std::size_t m = static_cast<std::size_t>(std::floor(fraction * n));
    for (std::size_t k = 0; k < m; ++k) {
        const double v = 0.5 * (1.0 - std::cos(std::numbers::pi * (k + 0.5) / m));
        w[k] = v;
        w[n - 1 - k] = v;
    }
    return w;
}

double fractional_time_norm(const std::vector<cplx>& series, double dt, double order, double p) {
    require(dt > 0.0, ErrorKind::invalid_input, "time step must be positive");
    require(p >= 1.0, ErrorKind::invalid_input, "norm exponent must be >= 1");
    const std::size_t n = series.size();
    require(n >= 4, ErrorKind::invalid_input, "fractional norm needs at least 4 samples");
    const auto w = taper_window(n);
    std::vector<cplx> buf(n);
    for (std::size_t k = 0; k < n; ++k) buf[k] = w[k] * series[k];
    auto* data = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan fwd, bwd;
    {
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        fwd = fftw_plan_dft_1d(static_cast<int>(n), data, data, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(static_cast<int>(n), data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(fwd);
    const double T = n * dt;
    for (std::size_t k = 0; k < n; ++k) {
        const long j = k < (n + 1) / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
        const double tau = 2.0 * std::numbers::pi * j / T;
        buf[k] *= std::pow(1.0 + tau * tau, 0.5 * order) / static_cast<double>(n);
    }
    fftw_execute(bwd);
    {
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }
    double acc = 0.0;
    for (const auto& v : buf) acc += std::pow(std::abs(v), p);
    return std::pow(acc * dt, 1.0 / p);
}

double pushforward_norm(const spectral::HalfSpaceField& v, const geometry::HeightState& s, double r) {
    require(v.representation() == spectral::Representation::physical, ErrorKind::invalid_input,
            "pushforward norm expects a physical field");
    require(r >= 1.0, ErrorKind::invalid_input, "norm exponent must be >= 1");
    if (!s.invertible) fail(ErrorKind::domain, "Hanzawa map is not invertible: |grad eta| exceeds c0");
    const auto& j3 = s.deta.d[2];
    require(j3.nz() == v.nz() && j3.nh2() == v.nh2(), ErrorKind::invalid_input, "height state grid mismatch");
    const double area = v.hgrid()->dx() * v.hgrid()->dx();
    const auto& w = v.vgrid()->weights();
    double total = 0.0;
    for (int z = 0; z < v.nz(); ++z) {
        double layer = 0.0;
        for (std::size_t m = 0; m < v.nh2(); ++m) {
            double mag2 = 0.0;
            for (int c = 0; c < v.components(); ++c) mag2 += std::norm(v(c, z, m));
            layer += std::pow(mag2, 0.5 * r) * (1.0 + j3(0, z, m).real());
        }
        total += w(z) * layer;
    }
    return std::pow(total * area, 1.0 / r);
}

} // namespace fbns::analysis
