// inversion.hpp -- moment parameters, the CGO pairing integral, its large-rho
// limit and recovery of the space-time Fourier transform of the potential.
//
// For a query (k, m1, m2, rho) with frame (nu, omega), k.nu = k.omega = 0:
//   p_perp  =  k/2 + a1 omega,  a_j = (rho^2 - k^2/4 + lambda - m_j)^{1/2},
//   p'_perp = -k/2 + a2 omega,
// and with the free comparison potential the pairing integral is
//   I = int int V Omega_{m1}(p_perp, i rho) conj(e^{i(p'_perp - i rho nu).x} e^{i m2 t}) dt dx
//     = 2 pi int e^{i (k + (a1 - a2) omega).x} (V Phi)_{m2}(x) dx,
// which tends to 2 pi int e^{ik.x} V_{m2 - m1}(x) dx as rho -> infinity.

#pragma once

#include "floquet/common.hpp"
#include "floquet/domain.hpp"
#include "floquet/faddeev.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace flq {

// ---- moment parameters ----

struct MomentQuery {
    Vec3 k{0, 0, 0};
    int m1 = 0, m2 = 0;
    double lambda = 0.0;
    double rho = 0.0;
    Vec3 nu{0, 0, 1}, omega{1, 0, 0};
    double a1 = 0.0, a2 = 0.0;
    FaddeevParams first;   // (p_perp, z = i rho)
    FaddeevParams second;  // (p'_perp, z = -i rho)

    // Real wave vector of the pairing phase: k + (a1 - a2) omega.
    Vec3 pairing_vector() const { return k + (a1 - a2) * omega; }
};

// rho_min = max(k^2/4 - lambda + m0, 0)^{1/2} with m0 = max(m1, m2).
double rho_min(const Vec3& k, double lambda, int m1, int m2);

// Default admissible frame for k (any orthonormal pair when k = 0).
void moment_frame(const Vec3& k, Vec3& nu, Vec3& omega);

// Builds the query. Errors: rho <= rho_min (Validation); rho^2 + lambda - m_j
// within 1e-6 of an integer (Exceptional, message suggests an admissible rho).
MomentQuery moment_params(const Vec3& k, double lambda, int m1, int m2, double rho,
                          const std::optional<std::pair<Vec3, Vec3>>& frame = std::nullopt);

// Nearest rho' >= rho with rho'^2 + lambda - m admissible for all m in [m_lo, m_hi].
double admissible_rho(double rho, double lambda, int m_lo, int m_hi);

// ---- pairing integral ----

struct MomentValue {
    cplx value = 0.0;
    CgoReport cgo;
};

// Direct evaluation: one CGO solve at the query's own parameters.
MomentValue moment_integral(const SpatialGrid& grid, const FactorizedPotential& F, const MomentQuery& q,
                            const CgoOptions& opt = {});

// Born-level value 2 pi int e^{ik.x} V_{m2-m1}(x) dx by grid quadrature (the rho -> infinity target).
cplx born_moment(const SpatialGrid& grid, const FourierPotential& V, const Vec3& k, int m1, int m2);

// Evaluates pairing integrals for many k from one CGO solve per (rho, m1).
// All supported potentials are radial, so the CGO field for the frame
// (nu, p_perp) is the rotation of the one computed in the canonical frame
// nu = e_z, p_perp = |p_perp| e_x; |p_perp|^2 = rho^2 + lambda - m1 does not depend on k.
class MomentEngine {
public:
    MomentEngine(const SpatialGrid& grid, const FactorizedPotential& F, double lambda, const CgoOptions& opt = {});

    MomentValue integral(const MomentQuery& q);
    // The canonical CGO solution for (rho, m1) (solved on first use).
    const CgoSolution& canonical(double rho, int m1);
    int solves() const { return static_cast<int>(cache_.size()); }
    double lambda() const { return lambda_; }

private:
    const SpatialGrid& grid_;
    const FactorizedPotential& F_;
    double lambda_;
    CgoOptions opt_;
    std::map<std::pair<double, int>, CgoSolution> cache_;
    std::map<std::pair<double, int>, GridFunction> vphi_;  // V Phi per canonical solution
};

// ---- large-rho limit ----

struct LimitResult {
    cplx value = 0.0;                 // extrapolated
    std::vector<double> rho;
    std::vector<cplx> samples;
    double spread = 0.0;              // |extrapolated - last sample| / max(|extrapolated|, tiny)
    bool monotone = true;             // successive differences shrink
    bool low_confidence() const { return !monotone; }
};

// Polynomial (Richardson) extrapolation in h = 1/rho to h = 0 from the
// samples; uses at most `max_order` + 1 of the largest rho values.
cplx richardson_limit(const std::vector<double>& rho, const std::vector<cplx>& samples, int max_order = 2);

LimitResult fourier_limit(MomentEngine& engine, const Vec3& k, int m1, int m2, const std::vector<double>& rho_list);

// ---- reconstruction ----

struct KLattice {
    double extent = 2.5;  // k in [-extent, extent]^3
    int n = 9;            // points per axis
    double spacing() const { return n > 1 ? 2.0 * extent / (n - 1) : 0.0; }
    std::vector<Vec3> points() const;
};

struct ReconstructOptions {
    KLattice lattice;
    std::vector<int> mode_range{-1, 0, 1};  // recovered temporal modes d = m2 - m1
    std::vector<double> rho_list{4.0, 8.0, 16.0};
    int m1 = 0;
    CgoOptions cgo;
};

struct FourierSample {
    Vec3 k;
    int mode = 0;             // d: coefficient of e^{i d t}
    cplx value = 0.0;         // estimate of int e^{ik.x} V_d(x) dx
    bool low_confidence = false;
    bool skipped = false;     // outside the reachable ball
};

struct RecoveredPotential {
    std::vector<FourierSample> samples;
    std::vector<double> rho_list;
    std::map<int, CVec> modes;            // reconstructed V_d on the grid nodes
    double relative_l2_error = -1.0;      // against the truth when supplied
    double hermitian_defect = 0.0;        // max |V^(-k,-d) - conj V^(k,d)| / max |V^|
    int cgo_solves = 0;
    int skipped = 0;
};

// Reachable ball: rho_min(k) < min(rho_list) for every recovered mode.
bool k_reachable(const Vec3& k, double lambda, int m1, int m2, const std::vector<double>& rho_list);

RecoveredPotential reconstruct(const SpatialGrid& grid, const FactorizedPotential& F, double lambda,
                               const ReconstructOptions& opt, const FourierPotential* truth = nullptr);

// Relative L2 error of mode sets over the grid (modes missing on one side count as zero).
double relative_mode_error(const SpatialGrid& grid, const std::map<int, CVec>& a, const std::map<int, CVec>& truth,
                           const std::vector<int>& modes);

// CSV `kx,ky,kz,dm,re,im,confidence` plus a '#' summary block.
void write_reconstruction_csv(const std::string& path, const RecoveredPotential& r);
// Reads samples and the summary block back (the grid modes are not stored).
RecoveredPotential read_reconstruction_csv(const std::string& path);

} // namespace flq
