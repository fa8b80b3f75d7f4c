// faddeev.hpp -- Faddeev Green operators g_nu(p, gamma) with complex momentum
// p = p_perp + z nu, their channel direct sums H_nu, and complex geometrical
// optics (CGO) solutions of the Floquet equation.
//
// Two independent discretizations are provided:
//   * the direct route: the defining Fourier integral
//       g f(x) = (2 pi)^{-3/2} int e^{ik.x} fhat(k) / (k^2 + 2 p.k - gamma) dk
//     over the ball |k| <= K, in cylindrical coordinates about the axis through
//     -p_perp along nu (where the symbol depends on two variables only) and
//     polar coordinates about the singular circle in that half-plane;
//   * the split route h = h1 + h2 (cutoff f(k_nu) separating the region near
//     k_nu = 0, where a transverse 2D resolvent with a Hankel kernel is used),
//     evaluated pointwise for Gaussian sources; it also gives the boundary
//     values g_{nu,+-} at real z.

#pragma once

#include "floquet/common.hpp"
#include "floquet/domain.hpp"
#include "floquet/free_floquet.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace flq {

// ---- parameters ----

struct FaddeevParams {
    Vec3 nu{0, 0, 1};
    Vec3 p_perp{1, 0, 0};    // real, orthogonal to nu
    cplx z{0.0, 1.0};        // Im z != 0, or real z for the boundary value below
    double gamma = 0.0;
    Side boundary = Side::Plus;  // real z: g_{nu,+} (z + i0) or g_{nu,-} (z - i0)

    cplx p_dot_p() const { return p_perp.squaredNorm() + z * z; }
};

// Orthogonality |p_perp . nu| <= 1e-12 (1 + |p_perp|), unit nu; throws Validation.
void validate_params(const FaddeevParams& q);

// Orthonormal frame (e1, e2, nu) with e1 along p_perp when p_perp != 0.
void faddeev_frame(const FaddeevParams& q, Vec3& e1, Vec3& e2);

// Raised-cosine cutoff: 1 for |xi| <= eps, 0 for |xi| >= 2 eps, cos^2 between.
double cutoff_mollifier(double xi, double eps);

// Default cutoff width 0.1 min(1, |p_perp^2 + gamma|^{1/2}).
double default_cutoff_eps(const FaddeevParams& q);

// ---- direct route ----

struct KRuleOptions {
    double K = 6.0;        // radius of the k-ball
    double extent = 8.0;   // largest |x - y| to be resolved by the oscillatory factors
    double density = 1.0;  // node-count multiplier
};

// Nodes k_j and weights c_j with g f(x) ~ sum_j c_j e^{i k_j . x} fhat(k_j)
// (fhat with the (2 pi)^{-3/2} convention).
struct KRule {
    std::vector<Vec3> k;
    std::vector<cplx> c;
    int size() const { return static_cast<int>(k.size()); }
};

KRule faddeev_k_rule(const FaddeevParams& q, const KRuleOptions& opt = {});

// Fourier transform of a Gaussian source A exp(-|x - c|^2 / w^2) (analytic).
struct GaussianSource {
    Vec3 center{0, 0, 0};
    double width = 1.0;
    cplx amplitude = 1.0;
    cplx fourier(const Vec3& k) const;
    cplx value(const Vec3& x) const;
};

// Direct-route evaluation for an analytic source at arbitrary points.
CVec faddeev_direct_at(const FaddeevParams& q, const GaussianSource& f, const std::vector<Vec3>& points,
                       const KRuleOptions& opt = {});

// Discrete operator on a SpatialGrid: fhat by grid quadrature, then the k-rule.
class FaddeevOperator {
public:
    FaddeevOperator(const SpatialGrid& grid, const FaddeevParams& q, const KRuleOptions& opt = {});
    // Restrict inputs/outputs to nodes with |x| <= r_max (others return 0).
    void set_active_radius(double r_max);

    const FaddeevParams& params() const { return q_; }
    const KRule& rule() const { return rule_; }
    CVec apply(const CVec& f) const;
    // Same operator evaluated off-grid (rows = points).
    CVec apply_to_points(const CVec& f, const std::vector<Vec3>& points) const;
    // Fourier samples fhat(k_j) of grid data (used by residual checks).
    CVec transform(const CVec& f) const;

    int active_count() const { return static_cast<int>(active_.size()); }

private:
    const SpatialGrid& grid_;
    FaddeevParams q_;
    KRule rule_;
    RMat kmat_;                // 3 x n_k
    CVec cvec_;                // rule weights
    std::vector<int> active_;  // node indices with |x| <= r_max
    RMat xa_;                  // active positions (n_a x 3)
    RVec wa_;                  // active volume weights
};

// ---- split route ----

struct SplitOptions {
    double eps = -1.0;            // cutoff width (default_cutoff_eps when < 0)
    int kz_nodes_per_panel = 24;  // k_nu panels
    int s_nodes_per_panel = 24;
    int theta_nodes = 96;
    int u_nodes_per_panel = 20;   // h2 radial panels
    int beta_nodes = 96;          // h2 angular (periodic)
};

struct SplitValue {
    cplx h1 = 0.0, h2 = 0.0;
    cplx total() const { return h1 + h2; }
};

// g f(x) = e^{-i p_perp.x} (h1~ + h2~)(e^{i p_perp.y} f)(x) for a Gaussian source.
SplitValue faddeev_split_at(const FaddeevParams& q, const GaussianSource& f, const Vec3& x,
                            const SplitOptions& opt = {});

// Right side of the boundary identity for real p = p_perp + p_nu nu:
//   e^{-ip.x} ( R0(|p|^2 + i0) - (i pi/|p|) T*(|p|) chi_{+-(w.nu) > +-p_nu/|p|} T(|p|) ) e^{ip.x} f,
// built from the grid resolvent and trace operators, returned at grid nodes.
CVec boundary_identity_rhs(const FreeResolvent& R, const FaddeevParams& q, const CVec& f, int cap_nodes = 48);

// Quadrature rule on the spherical cap {w : w.axis > c} (c in (-1, 1)).
SphereRule cap_rule(const Vec3& axis, double c, int n_t, int n_phi);

// ---- channel direct sum and CGO solutions ----

struct CgoOptions {
    KRuleOptions krule;
    int channel_halfwidth = 2;       // retained channels m - W .. m + W
    double tol = 1e-10;
    int max_iterations = 200;
    double active_radius = -1.0;     // default: where |V| > 1e-10 max|V|
    bool verify = true;              // evaluate the weak Floquet-equation residual
    double max_weak_residual = 1e-3; // above this: Numerical error (grid-refinement hint)
};

// H_nu = (+)_n h_nu(p_perp, z, gamma_n) P_n with gamma_n = m - n (+ base gamma).
class ChannelFaddeev {
public:
    ChannelFaddeev(const SpatialGrid& grid, const FaddeevParams& base, int m, int n_lo, int n_hi,
                   const KRuleOptions& opt = {});
    void set_active_radius(double r_max);
    int m() const { return m_; }
    int n_lo() const { return n_lo_; }
    int n_hi() const { return n_hi_; }
    const FaddeevOperator& block(int n) const { return *blocks_.at(n - n_lo_); }
    GridFunction apply(const GridFunction& f) const;

private:
    int m_, n_lo_, n_hi_;
    std::vector<std::unique_ptr<FaddeevOperator>> blocks_;
};

// Rejects p_perp^2 + gamma within 1e-6 of an integer (excluded set).
void check_channel_admissible(const FaddeevParams& base);

struct CgoReport {
    double residual = 0.0;         // LS residual ||(I + V2 H V1) Gamma - rhs|| / ||rhs||
    int iterations = 0;
    double weak_residual = -1.0;   // Floquet-equation residual in weak form (if evaluated)
    double growth_exponent = 0.0;  // max |Im p| |x| over active nodes
};

struct CgoSolution {
    FaddeevParams params;
    int m = 0;
    double lambda = 0.0;
    GridFunction gamma;        // density Gamma on the retained channels
    GridFunction reduced;      // Phi = e^{-ip.x} Omega = e^{imt} - H V1 Gamma
    GridFunction v1_gamma;     // V1 Gamma (input of H)
    CgoReport report;

    // Omega at grid node j, channel n (may overflow for large Im z |x|).
    cplx omega(const SpatialGrid& grid, int n, int j) const;
};

// Solves (I + V2 H V1) Gamma = e^{imt} V2 by GMRES; requires p.p = lambda - m.
CgoSolution solve_cgo(const SpatialGrid& grid, const FactorizedPotential& F, const FaddeevParams& q, int m,
                      double lambda, const CgoOptions& opt = {});

// Weak-form residual of (F0 + V - lambda) Omega = 0 against Gaussian test
// functions chi = e^{i conj(p).x} eta_n e^{int}; relative to |<chi, V Omega>|.
// Default test set: a few displaced Gaussians on channels m-1, m, m+1 (when retained).
std::vector<std::pair<int, GaussianSource>> default_cgo_tests(int m, int n_lo, int n_hi);

double cgo_weak_residual(const SpatialGrid& grid, const FactorizedPotential& F, const CgoSolution& sol,
                         const std::vector<std::pair<int, GaussianSource>>& tests);

} // namespace flq
