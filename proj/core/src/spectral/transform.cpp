#include "fbns/spectral/transform.hpp"

#include "fbns/error.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace fbns::spectral {

namespace {

struct PlanPair {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
};

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

// Plans are created once per size with FFTW_UNALIGNED so they can be reused
// through the new-array execute interface on arbitrary buffers.
const PlanPair& plans(int n) {
    static std::map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(plan_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cplx> scratch(static_cast<std::size_t>(n) * n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    PlanPair p;
    p.forward = fftw_plan_dft_2d(n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.backward = fftw_plan_dft_2d(n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(n, p).first->second;
}

void run(fftw_plan plan, cplx* data) {
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, buf, buf);
}

} // namespace

void forward_plane(int n, cplx* data) {
    run(plans(n).forward, data);
    const double scale = 1.0 / (static_cast<double>(n) * n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n) * n; ++i) data[i] *= scale;
}

void inverse_plane(int n, cplx* data) { run(plans(n).backward, data); }

SurfaceField forward_transform(const SurfaceField& f) {
    require(f.representation() == Representation::physical, ErrorKind::invalid_input,
            "forward_transform expects a physical field");
    require(f.size() == f.grid()->size(), ErrorKind::invalid_input, "field shape does not match grid");
    SurfaceField out = f;
    forward_plane(f.grid()->n(), out.values().data());
    out.set_representation(Representation::spectral);
    return out;
}

SurfaceField inverse_transform(const SurfaceField& f) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            "inverse_transform expects a spectral field");
    require(f.size() == f.grid()->size(), ErrorKind::invalid_input, "field shape does not match grid");
    SurfaceField out = f;
    inverse_plane(f.grid()->n(), out.values().data());
    out.set_representation(Representation::physical);
    return out;
}

HalfSpaceField forward_transform(const HalfSpaceField& f) {
    require(f.representation() == Representation::physical, ErrorKind::invalid_input,
            "forward_transform expects a physical field");
    require(f.size() == static_cast<std::size_t>(f.components()) * f.nz() * f.nh2(), ErrorKind::invalid_input,
            "field shape does not match grid");
    HalfSpaceField out = f;
    for (int c = 0; c < f.components(); ++c)
        for (int z = 0; z < f.nz(); ++z) forward_plane(f.hgrid()->n(), out.plane(c, z));
    out.set_representation(Representation::spectral);
    return out;
}

HalfSpaceField inverse_transform(const HalfSpaceField& f) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            "inverse_transform expects a spectral field");
    require(f.size() == static_cast<std::size_t>(f.components()) * f.nz() * f.nh2(), ErrorKind::invalid_input,
            "field shape does not match grid");
    HalfSpaceField out = f;
    for (int c = 0; c < f.components(); ++c)
        for (int z = 0; z < f.nz(); ++z) inverse_plane(f.hgrid()->n(), out.plane(c, z));
    out.set_representation(Representation::physical);
    return out;
}

} // namespace fbns::spectral
