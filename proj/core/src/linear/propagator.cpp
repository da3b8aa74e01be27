#include "fbns/linear/propagator.hpp"

#include "fbns/error.hpp"
#include "fbns/parallel.hpp"
#include "fbns/symbols/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace fbns::linear {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using spectral::Representation;

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::resolvent: return "resolvent";
    case Provenance::boundary_forced: return "boundary-forced";
    case Provenance::semigroup: return "semigroup";
    case Provenance::duhamel: return "duhamel";
    }
    return "unknown";
}

DescriptorModes::DescriptorModes(const MatrixXd& M, const MatrixXd& K, int infinite, double shift) {
    const int n = static_cast<int>(M.rows());
    require(infinite >= 0 && infinite < n, ErrorKind::invalid_input, "bad infinite-eigenvalue count");
    const Eigen::PartialPivLU<MatrixXd> lu(K - shift * M);
    const MatrixXd S = lu.solve(M);
    const Eigen::EigenSolver<MatrixXd> es(S);
    if (es.info() != Eigen::Success) fail(ErrorKind::numerical, "descriptor eigen-decomposition failed");
    const Vec m = es.eigenvalues();
    const MatrixXcd V = es.eigenvectors();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return std::abs(m(a)) < std::abs(m(b)); });

    const Eigen::PartialPivLU<MatrixXcd> vlu(V);
    const MatrixXcd P = vlu.solve(lu.inverse().cast<cplx>());
    const int nf = n - infinite;
    lambda_.resize(nf);
    wfin_.resize(n, nf);
    pfin_.resize(nf, n);
    winf_.resize(n, infinite);
    pinf_.resize(infinite, n);
    for (int j = 0; j < infinite; ++j) {
        winf_.col(j) = V.col(order[j]);
        pinf_.row(j) = P.row(order[j]);
    }
    for (int j = 0; j < nf; ++j) {
        const int o = order[infinite + j];
        const cplx mj = m(o);
        lambda_(j) = shift + 1.0 / mj;
        wfin_.col(j) = V.col(o) / mj;
        pfin_.row(j) = P.row(o);
    }
    const double kept = nf > 0 ? std::abs(m(order[infinite])) : 1.0;
    const double dropped = infinite > 0 ? std::abs(m(order[infinite - 1])) : 0.0;
    separation_ = kept > 0.0 ? dropped / kept : 0.0;
}

double DescriptorModes::max_real() const {
    double r = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < lambda_.size(); ++j) r = std::max(r, lambda_(j).real());
    return r;
}

struct ModalPropagator::Context {
    double A = 0.0;
    VGridPtr grid;
    ModeOperator op;
    DescriptorModes pol;
    DescriptorModes tor;
    bool same_grid = true;
    MatrixXd to_mode;
    MatrixXd from_mode;
};

namespace {

cplx phi1(cplx z) {
    if (std::abs(z) < 1e-5) return 1.0 + z * (0.5 + z / 6.0);
    return symbols::expm1(z) / z;
}

cplx phi2(cplx z) {
    if (std::abs(z) < 1e-2) return 0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z * (1.0 / 120.0 + z / 720.0)));
    return (symbols::expm1(z) - z) / (z * z);
}

// Second-order derivative weights on a possibly nonuniform grid.
std::array<double, 3> fd_weights(const std::vector<double>& t, std::size_t k, std::array<std::size_t, 3>& at) {
    const std::size_t n = t.size();
    std::size_t c = k;
    if (k == 0) c = 1;
    if (k == n - 1) c = n - 2;
    at = {c - 1, c, c + 1};
    const double x = t[k];
    std::array<double, 3> w{};
    for (int i = 0; i < 3; ++i) {
        double num = 0.0, den = 1.0;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            den *= t[at[i]] - t[at[j]];
            double prod = 1.0;
            for (int l = 0; l < 3; ++l)
                if (l != i && l != j) prod *= x - t[at[l]];
            num += prod;
        }
        w[i] = num / den;
    }
    return w;
}

std::vector<Vec> time_derivative(const std::vector<Vec>& c, const std::vector<double>& t) {
    std::vector<Vec> out(c.size());
    if (c.size() < 2) {
        for (std::size_t k = 0; k < c.size(); ++k) out[k] = Vec::Zero(c[k].size());
        return out;
    }
    if (c.size() == 2) {
        const Vec d = (c[1] - c[0]) / (t[1] - t[0]);
        out[0] = out[1] = d;
        return out;
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
        std::array<std::size_t, 3> at{};
        const auto w = fd_weights(t, k, at);
        out[k] = w[0] * c[at[0]] + w[1] * c[at[1]] + w[2] * c[at[2]];
    }
    return out;
}

// Coefficient trajectory y_k of y' = lambda y + c(t), c linear between samples.
std::vector<Vec> integrate(const Vec& lambda, const Vec& y0, const std::vector<Vec>& c, const std::vector<double>& t) {
    std::vector<Vec> y(t.size());
    y[0] = y0;
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        const double h = t[k + 1] - t[k];
        Vec next(lambda.size());
        for (int j = 0; j < lambda.size(); ++j) {
            const cplx z = lambda(j) * h;
            const cplx p1 = phi1(z), p2 = phi2(z);
            next(j) = std::exp(z) * y[k](j) + h * (c[k](j) * (p1 - p2) + c[k + 1](j) * p2);
        }
        y[k + 1] = std::move(next);
    }
    return y;
}

Vec profile(const HalfSpaceField& f, int c, std::size_t m) {
    Vec v(f.nz());
    for (int z = 0; z < f.nz(); ++z) v(z) = f(c, z, m);
    return v;
}

void require_spectral(const HalfSpaceField& f, const spectral::HorizontalGrid& g, int nz, int comps, const char* what) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            std::string(what) + " must be in spectral representation");
    require(*f.hgrid() == g && f.nz() == nz && f.components() == comps, ErrorKind::invalid_input,
            std::string(what) + " does not match the propagator grids");
}

void require_spectral(const SurfaceField& f, const spectral::HorizontalGrid& g, const char* what) {
    require(f.representation() == Representation::spectral, ErrorKind::invalid_input,
            std::string(what) + " must be in spectral representation");
    require(*f.grid() == g, ErrorKind::invalid_input, std::string(what) + " does not match the horizontal grid");
}

} // namespace

ModalPropagator::ModalPropagator(HGridPtr hgrid, VGridPtr vgrid, const PhysicalParams& params,
                                 const PropagatorOptions& opt)
    : hgrid_(std::move(hgrid)), vgrid_(std::move(vgrid)), params_(params), opt_(opt) {
    require(opt.depth_cap > 0.0, ErrorKind::invalid_input, "depth cap must be positive");
    const auto& g = *hgrid_;
    std::map<long, int> key_to_ctx;
    std::vector<long> keys;
    context_of_mode_.assign(g.size(), -1);
    for (std::size_t m = 0; m < g.size(); ++m) {
        if (g.is_nyquist(m)) continue;
        const long k1 = g.signed_index(static_cast<int>(m / g.n()));
        const long k2 = g.signed_index(static_cast<int>(m % g.n()));
        const long key = k1 * k1 + k2 * k2;
        auto it = key_to_ctx.find(key);
        if (it == key_to_ctx.end()) {
            it = key_to_ctx.emplace(key, static_cast<int>(keys.size())).first;
            keys.push_back(key);
        }
        context_of_mode_[m] = it->second;
    }
    contexts_.resize(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) {
        auto ctx = std::make_shared<Context>();
        ctx->A = g.dk() * std::sqrt(static_cast<double>(keys[i]));
        const double depth = ctx->A > 0.0 ? std::min(vgrid_->depth(), opt_.depth_cap / ctx->A) : vgrid_->depth();
        ctx->same_grid = depth >= vgrid_->depth();
        ctx->grid = ctx->same_grid ? vgrid_
                                   : std::make_shared<const spectral::VerticalGrid>(vgrid_->with_depth(depth));
        if (!ctx->same_grid) {
            ctx->to_mode = vgrid_->interpolation_to(ctx->grid->nodes());
            ctx->from_mode = ctx->grid->interpolation_to(vgrid_->nodes());
        }
        ctx->op = build_mode_operator(ctx->A, ctx->grid, params_, opt_.free_surface);
        if (ctx->A > 0.0) ctx->pol = DescriptorModes(ctx->op.Mp, ctx->op.Kp, 3, opt_.shift);
        ctx->tor = DescriptorModes(ctx->op.Mt, ctx->op.Kt, 2, opt_.shift);
        contexts_[i] = std::move(ctx);
    });
}

ModalPropagator::~ModalPropagator() = default;
ModalPropagator::ModalPropagator(ModalPropagator&&) noexcept = default;
ModalPropagator& ModalPropagator::operator=(ModalPropagator&&) noexcept = default;

std::size_t ModalPropagator::context_count() const { return contexts_.size(); }

double ModalPropagator::max_growth() const {
    double r = -std::numeric_limits<double>::infinity();
    for (const auto& c : contexts_) {
        if (c->A > 0.0) r = std::max(r, c->pol.max_real());
        r = std::max(r, c->tor.max_real());
    }
    return r;
}

LinearSolution ModalPropagator::evolve(const HalfSpaceField& u0, const SurfaceField& h0,
                                       const std::vector<double>& times) const {
    require(!times.empty(), ErrorKind::invalid_input, "need at least one output time");
    for (double t : times) require(t >= 0.0, ErrorKind::invalid_input, "output times must be nonnegative");
    // Homogeneous evolution is exact per sample, so each time is its own
    // one-step problem from t = 0.
    LinearSolution out;
    out.provenance = Provenance::semigroup;
    for (double t : times) {
        LinearData d;
        d.times = t > 0.0 ? std::vector<double>{0.0, t} : std::vector<double>{0.0};
        LinearSolution s = solve(&u0, &h0, d);
        out.times.push_back(t);
        out.u.push_back(std::move(s.u.back()));
        out.p.push_back(std::move(s.p.back()));
        out.h.push_back(std::move(s.h.back()));
        out.du.push_back(std::move(s.du.back()));
        out.dh.push_back(std::move(s.dh.back()));
    }
    return out;
}

LinearSolution ModalPropagator::duhamel(const LinearData& data) const {
    LinearSolution s = solve(nullptr, nullptr, data);
    s.provenance = Provenance::duhamel;
    return s;
}

LinearSolution ModalPropagator::solve(const HalfSpaceField* u0, const SurfaceField* h0, const LinearData& data) const {
    const auto& g = *hgrid_;
    const int nz = vgrid_->size();
    const std::vector<double>& t = data.times;
    const std::size_t nt = t.size();
    require(nt >= 1, ErrorKind::invalid_input, "empty time grid");
    require(t[0] == 0.0, ErrorKind::invalid_input, "time grid must start at 0");
    for (std::size_t k = 1; k < nt; ++k)
        require(t[k] > t[k - 1], ErrorKind::invalid_input, "time grid must be increasing");
    require(data.f.empty() || data.f.size() == nt, ErrorKind::invalid_input, "forcing length mismatch");
    require(data.h.empty() || data.h.size() == nt, ErrorKind::invalid_input, "stress data length mismatch");
    require(data.k.empty() || data.k.size() == nt, ErrorKind::invalid_input, "kinematic data length mismatch");
    for (const auto& f : data.f) require_spectral(f, g, nz, 3, "forcing");
    for (const auto& h : data.h)
        for (const auto& c : h) require_spectral(c, g, "stress data");
    for (const auto& k : data.k) require_spectral(k, g, "kinematic data");
    if (u0) require_spectral(*u0, g, nz, 3, "initial velocity");
    if (h0) require_spectral(*h0, g, "initial height");

    LinearSolution out;
    out.provenance = Provenance::semigroup;
    out.times = t;
    for (std::size_t k = 0; k < nt; ++k) {
        out.u.emplace_back(hgrid_, vgrid_, 3, Representation::spectral);
        out.p.emplace_back(hgrid_, vgrid_, 1, Representation::spectral);
        out.h.emplace_back(hgrid_, Representation::spectral);
        out.du.emplace_back(hgrid_, vgrid_, 3, Representation::spectral);
        out.dh.emplace_back(hgrid_, Representation::spectral);
    }

    parallel_for(g.size(), [&](std::size_t m) {
        const int ci = context_of_mode_[m];
        if (ci < 0) return;
        const Context& ctx = *contexts_[ci];
        const ModeOperator& op = ctx.op;
        const int n = ctx.grid->size();
        const auto xi = g.xi(m);
        auto to_mode = [&](Vec v) { return ctx.same_grid ? v : Vec(ctx.to_mode * v); };
        auto from_mode = [&](const Vec& v) { return ctx.same_grid ? v : Vec(ctx.from_mode * v); };

        std::vector<ModeData> d(nt, ModeData::zero(n));
        for (std::size_t k = 0; k < nt; ++k) {
            if (!data.f.empty())
                for (int c = 0; c < 3; ++c) d[k].F[c] = to_mode(profile(data.f[k], c, m));
            if (!data.h.empty())
                for (int c = 0; c < 3; ++c) d[k].h[c] = data.h[k][c][m];
            if (!data.k.empty()) d[k].K = data.k[k][m];
        }
        ModeData init = ModeData::zero(n);
        if (u0)
            for (int c = 0; c < 3; ++c) init.F[c] = to_mode(profile(*u0, c, m));
        if (h0) init.K = (*h0)[m];

        // Evolves one descriptor block; returns states and their time derivatives.
        auto run_block = [&](const DescriptorModes& dm, auto&& rhs, std::vector<Vec>& X, std::vector<Vec>& dX) {
            std::vector<Vec> cf(nt), ci(nt);
            for (std::size_t k = 0; k < nt; ++k) {
                const Vec b = rhs(d[k]);
                cf[k] = dm.finite_coeffs(b);
                ci[k] = dm.infinite_coeffs(b);
            }
            const Vec y0 = (u0 || h0) ? dm.finite_coeffs(rhs(init)) : Vec::Zero(dm.size());
            const std::vector<Vec> y = integrate(dm.lambda(), y0, cf, t);
            const std::vector<Vec> dci = time_derivative(ci, t);
            X.resize(nt);
            dX.resize(nt);
            for (std::size_t k = 0; k < nt; ++k) {
                X[k] = dm.state(y[k], ci[k]);
                dX[k] = dm.state(dm.lambda().cwiseProduct(y[k]) + cf[k], dci[k]);
            }
        };

        std::vector<ModeProfile> prof(nt), dprof(nt);
        const ModeData none = ModeData::zero(n);
        if (ctx.A == 0.0) {
            std::array<std::vector<Vec>, 2> U, dU;
            for (int j = 0; j < 2; ++j)
                run_block(ctx.tor, [&](const ModeData& dd) { return tangential_rhs(op, dd, j); }, U[j], dU[j]);
            cplx H = h0 ? (*h0)[m] : cplx(0.0);
            for (std::size_t k = 0; k < nt; ++k) {
                if (k > 0) H += 0.5 * (t[k] - t[k - 1]) * (d[k - 1].K + d[k].K);
                const Vec X = Vec::Constant(1, H);
                prof[k] = reconstruct(op, xi, X, Vec::Constant(1, d[k].K), {U[0][k], U[1][k]}, d[k]);
                dprof[k].U = {dU[0][k], dU[1][k], Vec::Zero(n)};
                dprof[k].H = d[k].K;
            }
        } else {
            std::vector<Vec> X, dX, Om, dOm;
            run_block(ctx.pol, [&](const ModeData& dd) { return poloidal_rhs(op, xi, dd); }, X, dX);
            run_block(ctx.tor, [&](const ModeData& dd) { return toroidal_rhs(op, xi, dd); }, Om, dOm);
            for (std::size_t k = 0; k < nt; ++k) {
                prof[k] = reconstruct(op, xi, X[k], dX[k], {Om[k], Vec::Zero(n)}, d[k]);
                // the pressure of this reconstruction is meaningless; only U and H are kept
                dprof[k] = reconstruct(op, xi, dX[k], dX[k], {dOm[k], Vec::Zero(n)}, none);
            }
        }
        for (std::size_t k = 0; k < nt; ++k) {
            for (int c = 0; c < 3; ++c) {
                const Vec v = from_mode(prof[k].U[c]);
                for (int z = 0; z < nz; ++z) out.u[k](c, z, m) = v(z);
                const Vec dv = from_mode(dprof[k].U[c]);
                for (int z = 0; z < nz; ++z) out.du[k](c, z, m) = dv(z);
            }
            out.dh[k][m] = dprof[k].H;
            const Vec p = from_mode(prof[k].P);
            for (int z = 0; z < nz; ++z) out.p[k](0, z, m) = p(z);
            out.h[k][m] = prof[k].H;
        }
    });
    return out;
}

} // namespace fbns::linear
