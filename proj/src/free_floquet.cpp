#include "floquet/free_floquet.hpp"
#include "floquet/special.hpp"

#include <algorithm>

namespace flq {

cplx helmholtz_kernel(cplx z, double r) {
    if (!(r > 0.0))
        throw Error(ErrorKind::Domain, "helmholtz_kernel: r = 0 is the kernel singularity (handled by the quadrature)");
    return std::exp(kI * sqrt_branch(z) * r) / (4.0 * kPi * r);
}

double eigenfunction_normalization(int m, double lambda) {
    if (!(lambda > m))
        throw Error(ErrorKind::Domain, "free_eigenfunction: channel " + std::to_string(m) + " is closed at this lambda");
    return std::pow(lambda - m, 0.25) / (std::sqrt(2.0) * 4.0 * kPi * kPi);
}

cplx free_eigenfunction(int m, double lambda, const Vec3& nu, double t, const Vec3& x) {
    const double c = eigenfunction_normalization(m, lambda);
    const double kappa = std::sqrt(lambda - m);
    return c * std::exp(kI * (m * t + kappa * nu.dot(x)));
}

CVec bandlimited_plane_wave(const SpatialGrid& grid, double kappa, const Vec3& nu, int lmax) {
    const int na = grid.n_ang(), nr = grid.n_r();
    std::vector<std::vector<double>> P(na);
    for (int i = 0; i < na; ++i) P[i] = legendre_all(lmax, nu.dot(grid.sphere.nodes[i]));
    std::vector<double> jl(lmax + 1);
    CVec out(grid.size());
    for (int a = 0; a < nr; ++a) {
        sph_bessel_j(lmax, kappa * grid.radial_nodes[a], jl.data());
        for (int i = 0; i < na; ++i) {
            cplx acc = 0.0, il = 1.0;
            for (int l = 0; l <= lmax; ++l) {
                acc += il * (2.0 * l + 1.0) * jl[l] * P[i][l];
                il *= kI;
            }
            out[a * na + i] = acc;
        }
    }
    return out;
}

cplx grid_fourier(const SpatialGrid& grid, const CVec& f, const Vec3& k) {
    cplx acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        if (f[j] == cplx(0.0)) continue;
        acc += grid.weights[j] * std::exp(-kI * k.dot(grid.points[j])) * f[j];
    }
    return acc * std::pow(2.0 * kPi, -1.5);
}

CVec trace_operator(double rho, const SpatialGrid& grid, const CVec& f, const std::vector<Vec3>& dirs) {
    if (rho < 0.0) throw Error(ErrorKind::Validation, "trace_operator: rho must be >= 0");
    CVec out = CVec::Zero(static_cast<Eigen::Index>(dirs.size()));
    if (rho == 0.0) return out;
    for (std::size_t i = 0; i < dirs.size(); ++i) out[i] = rho * grid_fourier(grid, f, rho * dirs[i]);
    return out;
}

CVec trace_operator(double rho, const SpatialGrid& grid, const CVec& f) {
    return trace_operator(rho, grid, f, grid.sphere.nodes);
}

CVec trace_adjoint(double rho, const SpatialGrid& grid, const SphereRule& dirs, const CVec& g) {
    CVec out = CVec::Zero(grid.size());
    const double c = rho * std::pow(2.0 * kPi, -1.5);
    for (int j = 0; j < grid.size(); ++j) {
        cplx acc = 0.0;
        for (int i = 0; i < dirs.size(); ++i)
            acc += dirs.weights[i] * std::exp(kI * rho * dirs.nodes[i].dot(grid.points[j])) * g[i];
        out[j] = c * acc;
    }
    return out;
}

CVec channel_trace(const ChannelSet& ch, int m, const SpatialGrid& grid, const CVec& fm) {
    const double kappa = ch.kappa(m);
    // (1/sqrt 2)(lambda-m)^{-1/4} T(kappa) (F_s f)_m with (F_s f)_m = sqrt(2 pi) f_m
    return (std::sqrt(kPi) / std::sqrt(kappa)) * trace_operator(kappa, grid, fm);
}

cplx resolvent_wavenumber(cplx z, Side side) {
    if (z.imag() == 0.0) {
        if (z.real() > 0.0) return side == Side::Plus ? std::sqrt(z.real()) : -std::sqrt(z.real());
        if (z.real() < 0.0) return cplx(0.0, std::sqrt(-z.real()));
        throw Error(ErrorKind::Domain, "free resolvent evaluated at the threshold z = 0");
    }
    return sqrt_branch(z);
}

std::vector<CMat> radial_green_matrices(const SpatialGrid& grid, cplx k, int lmax) {
    const int nr = grid.n_r();
    const double L = grid.L;
    Lagrange lag(grid.radial_nodes);
    std::vector<CMat> G(lmax + 1, CMat::Zero(nr, nr));
    std::vector<cplx> jq(lmax + 1), hq(lmax + 1), ja(lmax + 1), ha(lmax + 1);
    std::vector<double> basis(nr);
    constexpr int per_panel = 16;
    constexpr double max_panel = 0.5;
    for (int a = 0; a < nr; ++a) {
        const double ra = grid.radial_nodes[a];
        // inner panels on [0, r_a]
        std::vector<double> inner{0.0};
        const int n_in = std::max(1, static_cast<int>(std::ceil(ra / max_panel)));
        for (int p = 1; p <= n_in; ++p) inner.push_back(ra * p / n_in);
        // outer panels on [r_a, L], geometrically graded away from r_a
        std::vector<double> outer{ra};
        while (outer.back() < L) {
            const double b = outer.back();
            outer.push_back(std::min(L, b + std::min(max_panel, b)));
        }
        Rule1D qi = composite_gauss(inner, per_panel);
        Rule1D qo = composite_gauss(outer, per_panel);
        std::vector<CVec> A(lmax + 1, CVec::Zero(nr)), B(lmax + 1, CVec::Zero(nr));
        for (std::size_t q = 0; q < qi.x.size(); ++q) {
            lag.basis(qi.x[q], basis.data());
            sph_bessel_jh(lmax, k * qi.x[q], jq.data(), hq.data());
            for (int l = 0; l <= lmax; ++l) {
                const cplx c = qi.w[q] * jq[l];
                for (int b = 0; b < nr; ++b) A[l][b] += c * basis[b];
            }
        }
        for (std::size_t q = 0; q < qo.x.size(); ++q) {
            lag.basis(qo.x[q], basis.data());
            sph_bessel_jh(lmax, k * qo.x[q], jq.data(), hq.data());
            for (int l = 0; l <= lmax; ++l) {
                const cplx c = qo.w[q] * hq[l];
                for (int b = 0; b < nr; ++b) B[l][b] += c * basis[b];
            }
        }
        sph_bessel_jh(lmax, k * ra, ja.data(), ha.data());
        for (int l = 0; l <= lmax; ++l)
            for (int b = 0; b < nr; ++b) G[l](a, b) = kI * k * (ha[l] * A[l][b] + ja[l] * B[l][b]);
    }
    return G;
}

FreeResolvent::FreeResolvent(const SpatialGrid& grid, ResolventMethod method) : grid_(grid), method_(method) {
    if (method_ == ResolventMethod::PartialWave) {
        const int na = grid_.n_ang(), lmax = grid_.band_limit();
        projectors_.assign(lmax + 1, RMat::Zero(na, na));
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) {
                auto P = legendre_all(lmax, grid_.sphere.nodes[i].dot(grid_.sphere.nodes[j]));
                for (int l = 0; l <= lmax; ++l)
                    projectors_[l](i, j) = (2.0 * l + 1.0) / (4.0 * kPi) * P[l] * grid_.sphere.weights[j];
            }
    }
}

CMat FreeResolvent::build(cplx z, Side side) const {
    const cplx k = resolvent_wavenumber(z, side);
    const int N = grid_.size();
    CMat M = CMat::Zero(N, N);
    if (method_ == ResolventMethod::Direct) {
        for (int j = 0; j < N; ++j) {
            const double w = grid_.weights[j];
            for (int i = 0; i < N; ++i) {
                if (i == j) {
                    const double a = std::cbrt(3.0 * w / (4.0 * kPi));
                    M(i, i) = w * kI * k / (4.0 * kPi) + 0.5 * a * a;
                } else {
                    const double r = (grid_.points[i] - grid_.points[j]).norm();
                    M(i, j) = w * std::exp(kI * k * r) / (4.0 * kPi * r);
                }
            }
        }
        return M;
    }
    const int na = grid_.n_ang(), nr = grid_.n_r(), lmax = grid_.band_limit();
    std::vector<CMat> G = radial_green_matrices(grid_, k, lmax);
    for (int l = 0; l <= lmax; ++l) {
        const CMat Pl = projectors_[l].cast<cplx>();
        for (int a = 0; a < nr; ++a)
            for (int b = 0; b < nr; ++b) {
                const double rb = grid_.radial_nodes[b];
                const cplx c = G[l](a, b) * rb * rb;
                M.block(a * na, b * na, na, na) += c * Pl;
            }
    }
    return M;
}

const CMat& FreeResolvent::block(cplx z, Side side) const {
    const int s = (z.imag() == 0.0 && z.real() > 0.0) ? (side == Side::Plus ? 1 : -1) : 0;
    auto key = std::make_tuple(z.real(), z.imag(), s);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    auto m = std::make_shared<CMat>(build(z, side));
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = cache_.emplace(key, m);
    return *it->second;
}

CVec FreeResolvent::apply(cplx z, Side side, const CVec& f) const { return block(z, side) * f; }

GridFunction apply_R0(const FreeResolvent& R, const ChannelSet& channels, Side side, const GridFunction& f) {
    GridFunction out(f.m_min, f.n_channels(), static_cast<int>(f.data.rows()));
    for (int m = f.m_min; m <= f.m_max(); ++m) {
        const double z = channels.lambda - m;
        if (std::abs(z) < 1e-12) throw Error(ErrorKind::Domain, "apply_R0: channel at threshold");
        if (f.col(m).cwiseAbs().maxCoeff() == 0.0) continue;
        out.col(m) = R.apply(cplx(z, 0.0), side, f.col(m));
    }
    return out;
}

cplx convolve_at(const SpatialGrid& grid, cplx z, Side side, const CVec& f, const Vec3& x) {
    const cplx k = resolvent_wavenumber(z, side);
    cplx acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        if (f[j] == cplx(0.0)) continue;
        const double r = (x - grid.points[j]).norm();
        acc += grid.weights[j] * std::exp(kI * k * r) / (4.0 * kPi * r) * f[j];
    }
    return acc;
}

cplx convolve_radial_derivative_at(const SpatialGrid& grid, cplx z, Side side, const CVec& f, const Vec3& x) {
    const cplx k = resolvent_wavenumber(z, side);
    const Vec3 xh = x / x.norm();
    cplx acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        if (f[j] == cplx(0.0)) continue;
        const Vec3 d = x - grid.points[j];
        const double r = d.norm();
        const cplx h = std::exp(kI * k * r) / (4.0 * kPi * r);
        acc += grid.weights[j] * h * (kI * k - 1.0 / r) * (xh.dot(d) / r) * f[j];
    }
    return acc;
}

} // namespace flq
