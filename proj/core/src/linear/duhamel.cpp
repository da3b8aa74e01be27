#include "fbns/linear/duhamel.hpp"

#include "fbns/error.hpp"

#include <cmath>

namespace fbns::linear {

namespace {

template <class T>
std::vector<T> every_other(const std::vector<T>& v) {
    std::vector<T> out;
    for (std::size_t k = 0; k < v.size(); k += 2) out.push_back(v[k]);
    return out;
}

} // namespace

DuhamelResult duhamel_solve(const ModalPropagator& prop, const LinearData& data, const DuhamelOptions& opt) {
    const auto& t = data.times;
    require(t.size() >= 2, ErrorKind::invalid_input, "time grid needs at least two samples");
    const double dt = t[1] - t[0];
    for (std::size_t k = 1; k < t.size(); ++k)
        require(std::abs(t[k] - t[k - 1] - dt) <= 1e-9 * std::max(1.0, t.back()), ErrorKind::invalid_input,
                "time grid must be uniform");
    DuhamelResult res;
    res.solution = prop.duhamel(data);
    if (!opt.richardson || t.size() < 5 || (t.size() - 1) % 2 != 0) return res;

    LinearData coarse;
    coarse.times = every_other(data.times);
    if (!data.f.empty()) coarse.f = every_other(data.f);
    if (!data.h.empty()) coarse.h = every_other(data.h);
    if (!data.k.empty()) coarse.k = every_other(data.k);
    const LinearSolution c = prop.duhamel(coarse);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < coarse.times.size(); ++k) {
        const auto& a = res.solution.u[2 * k].values();
        const auto& b = c.u[k].values();
        for (std::size_t i = 0; i < a.size(); ++i) {
            num = std::max(num, std::abs(a[i] - b[i]));
            den = std::max(den, std::abs(a[i]));
        }
    }
    res.richardson_error = den > 0.0 ? num / (3.0 * den) : 0.0;
    if (res.richardson_error > opt.tol)
        fail(ErrorKind::accuracy, "Duhamel time grid too coarse: Richardson estimate " +
                                      std::to_string(res.richardson_error));
    return res;
}

} // namespace fbns::linear
