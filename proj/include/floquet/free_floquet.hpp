// free_floquet.hpp -- the free quasi-Hamiltonian F0 = -i d/dt - Laplacian:
// Helmholtz kernels, the channel-diagonal free resolvent on a SpatialGrid,
// trace operators and generalized eigenfunctions.

#pragma once

#include "floquet/common.hpp"
#include "floquet/domain.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace flq {

// Channel-indexed grid function: column j holds channel m_min + j.
struct GridFunction {
    int m_min = 0;
    CMat data;  // rows: grid nodes, cols: channels

    GridFunction() = default;
    GridFunction(int m_min_, int n_channels, int n_nodes)
        : m_min(m_min_), data(CMat::Zero(n_nodes, n_channels)) {}
    int n_channels() const { return static_cast<int>(data.cols()); }
    int m_max() const { return m_min + n_channels() - 1; }
    bool has(int m) const { return m >= m_min && m <= m_max(); }
    auto col(int m) { return data.col(m - m_min); }
    auto col(int m) const { return data.col(m - m_min); }
};

// e^{i sqrt(z) r} / (4 pi r) with Im sqrt(z) >= 0.
cplx helmholtz_kernel(cplx z, double r);

// Generalized eigenfunction of F0 (open channels only):
// (1/sqrt 2) (lambda - m)^{1/4} / (2 pi)^2 e^{imt} e^{i sqrt(lambda - m) nu.x}.
cplx free_eigenfunction(int m, double lambda, const Vec3& nu, double t, const Vec3& x);
double eigenfunction_normalization(int m, double lambda);

// Plane wave e^{i kappa nu.x} truncated to angular momenta l <= lmax (the
// grid's band limit): sum_l i^l (2l+1) j_l(kappa r) P_l(nu . xhat).
CVec bandlimited_plane_wave(const SpatialGrid& grid, double kappa, const Vec3& nu, int lmax);

// Quadrature Fourier transform (2 pi)^{-3/2} sum_j w_j e^{-i k.x_j} f_j.
cplx grid_fourier(const SpatialGrid& grid, const CVec& f, const Vec3& k);

// (T(rho) f)(nu) = rho * fhat(rho nu) at the given directions (default: grid sphere).
CVec trace_operator(double rho, const SpatialGrid& grid, const CVec& f);
CVec trace_operator(double rho, const SpatialGrid& grid, const CVec& f, const std::vector<Vec3>& dirs);
// Adjoint: (T(rho)^* g)(x_j) = rho (2 pi)^{-3/2} sum_i w_i e^{i rho nu_i . x_j} g_i.
CVec trace_adjoint(double rho, const SpatialGrid& grid, const SphereRule& dirs, const CVec& g);

// Channel trace T_m(lambda) acting on a single temporal mode f_m (the mode
// amplitude of e^{imt} f_m): sqrt(pi) (lambda - m)^{1/4} fhat_m(kappa_m nu).
CVec channel_trace(const ChannelSet& ch, int m, const SpatialGrid& grid, const CVec& fm);

// Discretization of the weakly singular convolution.
enum class ResolventMethod {
    PartialWave,  // angular projectors x radial product integration (default)
    Direct        // plain kernel off the diagonal, self-cell Newtonian correction
};

// Radial product-integration matrices G_l(a, b) = int_0^L g_l(r_a, r) L_b(r) dr
// with g_l(r, r') = i k j_l(k r_<) h_l(k r_>), k = sqrt(z) on the chosen side.
std::vector<CMat> radial_green_matrices(const SpatialGrid& grid, cplx k, int lmax);

// Wave number sqrt(z) for boundary value `side` (real z) or complex z.
cplx resolvent_wavenumber(cplx z, Side side);

// Dense matrices of r0(z) on the grid, cached per (z, side).
class FreeResolvent {
public:
    explicit FreeResolvent(const SpatialGrid& grid, ResolventMethod method = ResolventMethod::PartialWave);

    const SpatialGrid& grid() const { return grid_; }
    ResolventMethod method() const { return method_; }

    // Dense N x N matrix approximating f -> int h0(sqrt z |x - y|) f(y) dy.
    const CMat& block(cplx z, Side side) const;
    CVec apply(cplx z, Side side, const CVec& f) const;

private:
    CMat build(cplx z, Side side) const;
    SpatialGrid grid_;
    ResolventMethod method_;
    mutable std::map<std::tuple<double, double, int>, std::shared_ptr<CMat>> cache_;
    mutable std::mutex mu_;
    std::vector<RMat> projectors_;  // Pi_l(i, j) = (2l+1)/(4 pi) P_l(xi.xj) w_j
};

// Channel-diagonal application of R0(lambda +- i0) = (+) r0(lambda - m +- i0) P_m.
GridFunction apply_R0(const FreeResolvent& R, const ChannelSet& channels, Side side, const GridFunction& f);

// Off-grid evaluation of int h0(sqrt z |x - y|) f(y) dy by plain quadrature
// (x must stay away from the grid nodes; used outside the support of f).
cplx convolve_at(const SpatialGrid& grid, cplx z, Side side, const CVec& f, const Vec3& x);
// Radial derivative (xhat . grad) of the same convolution at x.
cplx convolve_radial_derivative_at(const SpatialGrid& grid, cplx z, Side side, const CVec& f, const Vec3& x);

} // namespace flq
