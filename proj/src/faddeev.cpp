// faddeev.cpp -- Faddeev Green operators (direct k-space rule and split route),
// the boundary identity, channel direct sums and CGO solutions.

#include "floquet/faddeev.hpp"

#include "floquet/kernels.hpp"
#include "floquet/quadrature.hpp"
#include "floquet/special.hpp"

#include <unsupported/Eigen/IterativeSolvers>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

// ---- matrix-free operator for Eigen's GMRES ----

namespace flq::detail {
class CgoSystem;
}

namespace Eigen::internal {
template <>
struct traits<flq::detail::CgoSystem> : public traits<Eigen::SparseMatrix<std::complex<double>>> {};
} // namespace Eigen::internal

namespace flq::detail {

// x -> x + P_act H W x on the stacked active-node unknowns (channel-major).
class CgoSystem : public Eigen::EigenBase<CgoSystem> {
public:
    using Scalar = cplx;
    using RealScalar = double;
    using StorageIndex = int;
    enum { ColsAtCompileTime = Eigen::Dynamic, MaxColsAtCompileTime = Eigen::Dynamic, IsRowMajor = false };

    CgoSystem(const SpatialGrid& grid, const ChannelFaddeev& H, const std::map<int, CVec>& W,
              const std::vector<int>& active)
        : grid_(grid), H_(H), W_(W), active_(active) {}

    Eigen::Index rows() const { return static_cast<Eigen::Index>(active_.size()) * n_ch(); }
    Eigen::Index cols() const { return rows(); }

    template <typename Rhs>
    Eigen::Product<CgoSystem, Rhs, Eigen::AliasFreeProduct> operator*(const Eigen::MatrixBase<Rhs>& x) const {
        return Eigen::Product<CgoSystem, Rhs, Eigen::AliasFreeProduct>(*this, x.derived());
    }

    int n_ch() const { return H_.n_hi() - H_.n_lo() + 1; }

    // Full-grid channel function from stacked active values.
    GridFunction expand(const CVec& x) const {
        const int na = static_cast<int>(active_.size());
        GridFunction g(H_.n_lo(), n_ch(), grid_.size());
        for (int c = 0; c < n_ch(); ++c)
            for (int a = 0; a < na; ++a) g.data(active_[a], c) = x[c * na + a];
        return g;
    }

    // (W Phi)_n = sum_d W_d Phi_{n-d}, restricted to the retained window.
    GridFunction potential_times(const GridFunction& phi) const {
        GridFunction out(phi.m_min, phi.n_channels(), grid_.size());
        for (int n = phi.m_min; n <= phi.m_max(); ++n)
            for (const auto& [d, wd] : W_) {
                if (!phi.has(n - d)) continue;
                out.col(n) += wd.cwiseProduct(phi.col(n - d));
            }
        return out;
    }

    CVec apply(const CVec& x) const {
        const int na = static_cast<int>(active_.size());
        GridFunction hw = H_.apply(potential_times(expand(x)));
        CVec y = x;
        for (int c = 0; c < n_ch(); ++c)
            for (int a = 0; a < na; ++a) y[c * na + a] += hw.data(active_[a], c);
        return y;
    }

private:
    const SpatialGrid& grid_;
    const ChannelFaddeev& H_;
    const std::map<int, CVec>& W_;
    const std::vector<int>& active_;
};

} // namespace flq::detail

namespace Eigen::internal {
template <typename Rhs>
struct generic_product_impl<flq::detail::CgoSystem, Rhs, SparseShape, DenseShape, GemvProduct>
    : generic_product_impl_base<flq::detail::CgoSystem, Rhs,
                                generic_product_impl<flq::detail::CgoSystem, Rhs>> {
    using Scalar = typename Product<flq::detail::CgoSystem, Rhs>::Scalar;
    template <typename Dest>
    static void scaleAndAddTo(Dest& dst, const flq::detail::CgoSystem& lhs, const Rhs& rhs, const Scalar& alpha) {
        flq::CVec x = rhs;
        dst.noalias() += alpha * lhs.apply(x);
    }
};
} // namespace Eigen::internal

namespace flq {

namespace {

const double kFourierNorm = std::pow(2.0 * kPi, -1.5);
constexpr int kChunk = 384;

void require_complex_z(const FaddeevParams& q, const char* who) {
    if (std::abs(q.z.imag()) < 1e-12)
        throw Error(ErrorKind::Validation, std::string(who) + ": requires Im z != 0 (use the split route for boundary values)");
}

// Exceptional-point exclusion: the singular set degenerates when p_perp^2 + gamma -> 0.
void check_excluded(const FaddeevParams& q) {
    const double r0sq = q.p_perp.squaredNorm() + q.gamma;
    if (std::abs(r0sq) < 1e-6)
        throw Error(ErrorKind::Exceptional,
                    "Faddeev operator: p_perp^2 + gamma = " + std::to_string(r0sq) +
                        " lies in the excluded (exceptional-point) region");
}

// Breakpoints a = t_0 < ... < t_k = b with spacing <= h.
std::vector<double> subdivide(const std::vector<double>& coarse, double h) {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
        const double a = coarse[i], b = coarse[i + 1];
        if (b - a <= 1e-14) continue;
        const int n = std::max(1, static_cast<int>(std::ceil((b - a) / h)));
        for (int j = 0; j < n; ++j) out.push_back(a + (b - a) * j / n);
    }
    out.push_back(coarse.back());
    return out;
}

std::vector<double> sorted_unique(std::vector<double> v, double lo, double hi) {
    std::vector<double> out;
    for (double x : v)
        if (x >= lo && x <= hi) out.push_back(x);
    std::sort(out.begin(), out.end());
    std::vector<double> u;
    for (double x : out)
        if (u.empty() || x - u.back() > 1e-12) u.push_back(x);
    return u;
}

RMat positions(const std::vector<Vec3>& pts) {
    RMat X(static_cast<Eigen::Index>(pts.size()), 3);
    for (std::size_t i = 0; i < pts.size(); ++i) X.row(static_cast<Eigen::Index>(i)) = pts[i].transpose();
    return X;
}

RMat kmatrix(const KRule& r) {
    RMat K(3, r.size());
    for (int j = 0; j < r.size(); ++j) K.col(j) = r.k[j];
    return K;
}

void phase_block(const RMat& X, const RMat& Kc, RMat& C, RMat& S) {
    RMat ph = X * Kc;
    C.resize(ph.rows(), ph.cols());
    S.resize(ph.rows(), ph.cols());
    kernels::sincos_array(ph.data(), C.data(), S.data(), ph.size());
}

// fhat_j = (2 pi)^{-3/2} sum_l wf_l e^{-i k_j . x_l}
CVec analyze(const RMat& X, const RMat& K, const CVec& wf) {
    const Eigen::Index nk = K.cols();
    CVec fhat(nk);
    const RVec wr = wf.real(), wi = wf.imag();
    RMat C, S;
    for (Eigen::Index j0 = 0; j0 < nk; j0 += kChunk) {
        const Eigen::Index b = std::min<Eigen::Index>(kChunk, nk - j0);
        phase_block(X, K.middleCols(j0, b), C, S);
        RVec re = C.transpose() * wr + S.transpose() * wi;
        RVec im = C.transpose() * wi - S.transpose() * wr;
        for (Eigen::Index j = 0; j < b; ++j) fhat[j0 + j] = kFourierNorm * cplx(re[j], im[j]);
    }
    return fhat;
}

// out_i = sum_j g_j e^{i k_j . x_i}
CVec synthesize(const RMat& X, const RMat& K, const CVec& g) {
    const Eigen::Index nk = K.cols();
    RVec ore = RVec::Zero(X.rows()), oim = RVec::Zero(X.rows());
    RMat C, S;
    for (Eigen::Index j0 = 0; j0 < nk; j0 += kChunk) {
        const Eigen::Index b = std::min<Eigen::Index>(kChunk, nk - j0);
        phase_block(X, K.middleCols(j0, b), C, S);
        const RVec gr = g.segment(j0, b).real(), gi = g.segment(j0, b).imag();
        ore.noalias() += C * gr - S * gi;
        oim.noalias() += C * gi + S * gr;
    }
    CVec out(X.rows());
    for (Eigen::Index i = 0; i < X.rows(); ++i) out[i] = cplx(ore[i], oim[i]);
    return out;
}

} // namespace

// ---- parameters ----

void validate_params(const FaddeevParams& q) {
    if (!q.nu.allFinite() || !q.p_perp.allFinite() || !std::isfinite(q.z.real()) || !std::isfinite(q.z.imag()))
        throw Error(ErrorKind::Validation, "Faddeev parameters must be finite");
    if (std::abs(q.nu.norm() - 1.0) > 1e-12) throw Error(ErrorKind::Validation, "nu must be a unit vector");
    if (std::abs(q.p_perp.dot(q.nu)) > 1e-12 * (1.0 + q.p_perp.norm()))
        throw Error(ErrorKind::Validation, "p_perp must be orthogonal to nu");
}

void faddeev_frame(const FaddeevParams& q, Vec3& e1, Vec3& e2) {
    const double P = q.p_perp.norm();
    e1 = P > 1e-14 ? Vec3(q.p_perp / P) : Vec3(q.nu.unitOrthogonal());
    e2 = q.nu.cross(e1);
}

double cutoff_mollifier(double xi, double eps) {
    const double a = std::abs(xi);
    if (a <= eps) return 1.0;
    if (a >= 2.0 * eps) return 0.0;
    const double c = std::cos(0.5 * kPi * (a - eps) / eps);
    return c * c;
}

double default_cutoff_eps(const FaddeevParams& q) {
    return 0.1 * std::min(1.0, std::sqrt(std::abs(q.p_perp.squaredNorm() + q.gamma)));
}

// ---- direct route ----

KRule faddeev_k_rule(const FaddeevParams& q, const KRuleOptions& opt) {
    validate_params(q);
    require_complex_z(q, "direct Faddeev rule");
    check_excluded(q);
    if (opt.K <= 0.0 || opt.extent <= 0.0 || opt.density <= 0.0)
        throw Error(ErrorKind::Validation, "k-rule options must be positive");

    Vec3 e1, e2;
    faddeev_frame(q, e1, e2);
    const double P = q.p_perp.norm(), K = opt.K, X = opt.extent;
    const double r0sq = P * P + q.gamma;
    const double R0 = r0sq > 0.0 ? std::sqrt(r0sq) : 0.0;
    const cplx z = q.z;
    // Node count for an interval over which the phase k.x varies by `phase`.
    auto count = [&](double phase) { return std::max(6, static_cast<int>(std::ceil(opt.density * (0.3 * phase + 8.0)))); };

    // Cross-section (s, k_nu), s = |k + p_perp|_perp >= 0: the disc (s - P)^2 + k_nu^2 <= K^2.
    // Polar coordinates (tau, alpha) about the singular point (R0, 0) when it lies inside.
    const bool circle = r0sq > 0.0 && std::abs(R0 - P) < K;
    const double sc = circle ? R0 : P;
    const double delta = sc - P;
    const double a_lo = sc <= 0.0 ? -0.5 * kPi : -kPi;
    const double a_hi = -a_lo;
    std::vector<double> br{a_lo, a_hi, 0.0};
    if (sc > 0.0 && P < K) {
        const double h = std::sqrt(K * K - P * P);
        br.push_back(std::atan2(h, -sc));
        br.push_back(std::atan2(-h, -sc));
    }
    if (circle) {
        // Zeros of 2 R0 cos(alpha) + 2 Re z sin(alpha): the reduced denominator has a
        // complex pole at distance ~ |Im z| / R0 there, so the panels are graded.
        const double h = std::max(std::abs(z.imag()) / std::abs(cplx(R0, z.real())), 1e-4);
        for (double a0 : {std::atan2(R0, -z.real()), std::atan2(-R0, z.real())}) {
            br.push_back(a0);
            for (double g : {1.0, 3.0, 10.0, 30.0}) {
                br.push_back(a0 - g * h);
                br.push_back(a0 + g * h);
            }
        }
    }
    br = sorted_unique(br, a_lo, a_hi);

    KRule rule;
    const double tau_max = K + std::abs(delta);
    for (std::size_t ip = 0; ip + 1 < br.size(); ++ip) {
        const double a0 = br[ip], a1 = br[ip + 1];
        Rule1D ra = gauss_legendre(count(tau_max * X * (a1 - a0)), a0, a1);
        for (std::size_t ia = 0; ia < ra.x.size(); ++ia) {
            const double ca = std::cos(ra.x[ia]), sa = std::sin(ra.x[ia]);
            double te = -delta * ca + std::sqrt(std::max(0.0, delta * delta * ca * ca - delta * delta + K * K));
            if (ca < 0.0 && sc > 0.0) te = std::min(te, -sc / ca);
            if (te <= 1e-14) continue;
            Rule1D rt = gauss_legendre(count(te * X), 0.0, te);
            for (std::size_t it = 0; it < rt.x.size(); ++it) {
                const double tau = rt.x[it];
                const double s = sc + tau * ca, kn = tau * sa;
                if (s <= 0.0) continue;
                cplx base;
                if (circle)
                    base = ra.w[ia] * rt.w[it] * s / (2.0 * R0 * ca + tau + 2.0 * z * sa);
                else
                    base = ra.w[ia] * rt.w[it] * tau * s / (s * s + kn * kn + 2.0 * z * kn - r0sq);
                bool full = P < 1e-14;
                double thm = kPi;
                if (!full) {
                    const double c0 = (P * P + s * s + kn * kn - K * K) / (2.0 * P * s);
                    if (c0 >= 1.0) continue;
                    if (c0 <= -1.0)
                        full = true;
                    else
                        thm = std::acos(c0);
                }
                Rule1D rth = full ? periodic_trapezoid(count(2.0 * kPi * s * X))
                                  : gauss_legendre(count(2.0 * thm * s * X), -thm, thm);
                for (std::size_t j = 0; j < rth.x.size(); ++j) {
                    const double th = rth.x[j];
                    rule.k.push_back(-q.p_perp + s * (std::cos(th) * e1 + std::sin(th) * e2) + kn * q.nu);
                    rule.c.push_back(kFourierNorm * base * rth.w[j]);
                }
            }
        }
    }
    return rule;
}

cplx GaussianSource::fourier(const Vec3& k) const {
    const double w2 = width * width;
    return amplitude * std::pow(0.5 * w2, 1.5) * std::exp(-0.25 * w2 * k.squaredNorm()) *
           std::exp(-kI * k.dot(center));
}

cplx GaussianSource::value(const Vec3& x) const {
    return amplitude * std::exp(-(x - center).squaredNorm() / (width * width));
}

CVec faddeev_direct_at(const FaddeevParams& q, const GaussianSource& f, const std::vector<Vec3>& points,
                       const KRuleOptions& opt) {
    const KRule rule = faddeev_k_rule(q, opt);
    CVec g(rule.size());
    for (int j = 0; j < rule.size(); ++j) g[j] = rule.c[j] * f.fourier(rule.k[j]);
    return synthesize(positions(points), kmatrix(rule), g);
}

FaddeevOperator::FaddeevOperator(const SpatialGrid& grid, const FaddeevParams& q, const KRuleOptions& opt)
    : grid_(grid), q_(q), rule_(faddeev_k_rule(q, opt)) {
    kmat_ = kmatrix(rule_);
    cvec_ = CVec(rule_.size());
    for (int j = 0; j < rule_.size(); ++j) cvec_[j] = rule_.c[j];
    set_active_radius(std::numeric_limits<double>::infinity());
}

void FaddeevOperator::set_active_radius(double r_max) {
    active_.clear();
    for (int j = 0; j < grid_.size(); ++j)
        if (grid_.radius(j) <= r_max * (1.0 + 1e-12)) active_.push_back(j);
    xa_.resize(static_cast<Eigen::Index>(active_.size()), 3);
    wa_.resize(static_cast<Eigen::Index>(active_.size()));
    for (std::size_t a = 0; a < active_.size(); ++a) {
        xa_.row(static_cast<Eigen::Index>(a)) = grid_.points[active_[a]].transpose();
        wa_[static_cast<Eigen::Index>(a)] = grid_.weights[active_[a]];
    }
}

CVec FaddeevOperator::transform(const CVec& f) const {
    if (f.size() != grid_.size()) throw Error(ErrorKind::Validation, "Faddeev operator: input size mismatch");
    CVec wf(static_cast<Eigen::Index>(active_.size()));
    for (std::size_t a = 0; a < active_.size(); ++a) wf[static_cast<Eigen::Index>(a)] = wa_[a] * f[active_[a]];
    return analyze(xa_, kmat_, wf);
}

CVec FaddeevOperator::apply(const CVec& f) const {
    if (f.size() != grid_.size()) throw Error(ErrorKind::Validation, "Faddeev operator: input size mismatch");
    const Eigen::Index na = xa_.rows(), nk = kmat_.cols();
    RVec wr(na), wi(na);
    for (Eigen::Index a = 0; a < na; ++a) {
        const cplx v = wa_[a] * f[active_[a]];
        wr[a] = v.real();
        wi[a] = v.imag();
    }
    RVec ore = RVec::Zero(na), oim = RVec::Zero(na);
    RMat C, S;
    for (Eigen::Index j0 = 0; j0 < nk; j0 += kChunk) {
        const Eigen::Index b = std::min<Eigen::Index>(kChunk, nk - j0);
        phase_block(xa_, kmat_.middleCols(j0, b), C, S);
        RVec re = C.transpose() * wr + S.transpose() * wi;
        RVec im = C.transpose() * wi - S.transpose() * wr;
        RVec gr(b), gi(b);
        for (Eigen::Index j = 0; j < b; ++j) {
            const cplx g = cvec_[j0 + j] * kFourierNorm * cplx(re[j], im[j]);
            gr[j] = g.real();
            gi[j] = g.imag();
        }
        ore.noalias() += C * gr - S * gi;
        oim.noalias() += C * gi + S * gr;
    }
    CVec out = CVec::Zero(grid_.size());
    for (Eigen::Index a = 0; a < na; ++a) out[active_[a]] = cplx(ore[a], oim[a]);
    return out;
}

CVec FaddeevOperator::apply_to_points(const CVec& f, const std::vector<Vec3>& points) const {
    CVec g = transform(f).cwiseProduct(cvec_);
    return synthesize(positions(points), kmat_, g);
}

// ---- split route ----

SplitValue faddeev_split_at(const FaddeevParams& q, const GaussianSource& f, const Vec3& x, const SplitOptions& opt) {
    validate_params(q);
    check_excluded(q);
    Vec3 e1, e2;
    faddeev_frame(q, e1, e2);
    const double P = q.p_perp.norm();
    const double r0sq = P * P + q.gamma;
    const cplx z = q.z;
    const bool real_z = z.imag() == 0.0;
    const double eps = opt.eps > 0.0 ? opt.eps : default_cutoff_eps(q);
    const double sb = side_sign(q.boundary);

    const double x1 = x.dot(e1), x2 = x.dot(e2), xn = x.dot(q.nu);
    const double c1 = f.center.dot(e1), c2 = f.center.dot(e2), cn = f.center.dot(q.nu);
    const double w = f.width, w2 = w * w;
    const double dperp = std::hypot(x1 - c1, x2 - c2), dnu = std::abs(xn - cn);
    const double kf = 12.9 / w;  // Gaussian spectrum below 1e-18 beyond
    auto A_of = [&](double kn) { return cplx(r0sq, 0.0) - kn * kn - 2.0 * z * kn; };
    // Real z: s^2 - A + i sigma 0 on the k_nu > 0 / k_nu < 0 half-lines.
    auto sigma_of = [&](double kn) { return sb * (kn > 0.0 ? 1.0 : -1.0); };

    // ---- h1: (1 - f(k_nu)) part, cylindrical coordinates about k_perp = 0 ----
    auto g_perp = [&](cplx s, double s_re) {
        const double arg = 0.5 * w2 * std::max(s_re, 0.0) * P;
        bool full = true;
        double thm = kPi;
        if (arg > 0.0) {
            const double c0 = 1.0 - 41.5 / arg;
            if (c0 > -1.0) {
                thm = std::acos(c0);
                full = false;
            }
        }
        const double span = full ? 2.0 * kPi : 2.0 * thm;
        const int n = std::max(opt.theta_nodes, static_cast<int>(std::ceil(0.6 * std::abs(s) * (dperp + 1.0) * span + 16)));
        Rule1D r = full ? periodic_trapezoid(n) : gauss_legendre(n, -thm, thm);
        cplx acc = 0.0;
        for (std::size_t j = 0; j < r.x.size(); ++j) {
            const double ct = std::cos(r.x[j]), st = std::sin(r.x[j]);
            const cplx d1 = s * ct - P, d2 = s * st;
            acc += r.w[j] * std::exp(kI * s * (ct * x1 + st * x2) - 0.25 * w2 * (d1 * d1 + d2 * d2) -
                                     kI * (d1 * c1 + d2 * c2));
        }
        return acc;
    };
    const double amp3 = std::pow(0.5 * w2, 1.5);
    auto t1 = [&](double kn) { return f.amplitude * amp3 * std::exp(-0.25 * w2 * kn * kn - kI * kn * cn); };

    const double s_lo = std::max(0.0, P - kf), s_hi = P + kf;
    Rule1D rs = composite_gauss(subdivide({s_lo, s_hi}, 1.0 / std::max(1.0, dperp / 6.0)), opt.s_nodes_per_panel);
    std::vector<cplx> gs(rs.x.size());
    for (std::size_t j = 0; j < rs.x.size(); ++j) gs[j] = g_perp(rs.x[j], rs.x[j]);

    auto log_path = [&](double s, cplx A, double sigma) {
        const cplx v = s * s - A;
        if (!real_z) return std::log(v);
        if (v.real() > 0.0) return cplx(std::log(v.real()), 0.0);
        return cplx(std::log(std::max(-v.real(), 1e-300)), kPi * sigma);
    };

    // k_nu breakpoints: cutoff edges and graded points about the roots of Re A.
    std::vector<double> cand{-kf, -2.0 * eps, -eps, eps, 2.0 * eps, kf};
    {
        const double zr = z.real();
        const double disc = zr * zr + r0sq;
        if (disc > 0.0) {
            for (double root : {-zr - std::sqrt(disc), -zr + std::sqrt(disc)}) {
                cand.push_back(root);
                for (double g : {1e-4, 1e-3, 1e-2, 0.03, 0.1, 0.3}) {
                    cand.push_back(root - g);
                    cand.push_back(root + g);
                }
            }
        }
    }
    const double hk = 0.5 / std::max(1.0, dnu / 6.0);
    cplx h1 = 0.0;
    for (int half = 0; half < 2; ++half) {
        const double lo = half == 0 ? -kf : eps, hi = half == 0 ? -eps : kf;
        std::vector<double> b = sorted_unique(cand, lo, hi);
        if (b.size() < 2) continue;
        Rule1D rk = composite_gauss(subdivide(b, hk), opt.kz_nodes_per_panel);
        for (std::size_t i = 0; i < rk.x.size(); ++i) {
            const double kn = rk.x[i];
            const double weight = 1.0 - cutoff_mollifier(kn, eps);
            if (weight == 0.0) continue;
            const cplx A = A_of(kn);
            const double sigma = sigma_of(kn);
            cplx sp;
            if (real_z)
                sp = A.real() >= 0.0 ? cplx(std::sqrt(A.real()), 0.0) : cplx(0.0, std::sqrt(-A.real()));
            else
                sp = std::sqrt(A);
            const double sp_clamped = std::clamp(sp.real(), s_lo, s_hi);
            const bool subtract = std::abs(sp - sp_clamped) < 1.0;
            cplx I = 0.0;
            if (subtract) {
                const cplx gp = g_perp(sp, sp.real());
                for (std::size_t j = 0; j < rs.x.size(); ++j) {
                    const cplx den = rs.x[j] * rs.x[j] - A;
                    if (std::abs(den) < 1e-13) continue;
                    I += rs.w[j] * rs.x[j] * (gs[j] - gp) / den;
                }
                I += gp * 0.5 * (log_path(s_hi, A, sigma) - log_path(s_lo, A, sigma));
            } else {
                for (std::size_t j = 0; j < rs.x.size(); ++j) I += rs.w[j] * rs.x[j] * gs[j] / (rs.x[j] * rs.x[j] - A);
            }
            h1 += rk.w[i] * weight * std::exp(kI * kn * xn) * t1(kn) * I;
        }
    }
    h1 *= kFourierNorm;

    // ---- h2: f(k_nu) part, 1D Fourier in k_nu times the 2D resolvent ----
    const double U = dperp + 6.5 * w;
    std::vector<double> ub{0.0, 1e-4, 1e-3, 1e-2, 0.1, 0.3, 0.6};
    while (ub.back() < U) ub.push_back(std::min(U, ub.back() + 0.5));
    Rule1D ru = composite_gauss(ub, opt.u_nodes_per_panel);
    std::vector<cplx> bu(ru.x.size());
    for (std::size_t i = 0; i < ru.x.size(); ++i) {
        const double u = ru.x[i];
        const int nb = std::max(opt.beta_nodes, static_cast<int>(std::ceil(2.0 * (P * u + 2.0 * u * dperp / w2))) + 32);
        Rule1D rb = periodic_trapezoid(nb);
        cplx acc = 0.0;
        for (std::size_t j = 0; j < rb.x.size(); ++j) {
            const double y1 = x1 + u * std::cos(rb.x[j]), y2 = x2 + u * std::sin(rb.x[j]);
            acc += rb.w[j] * std::exp(kI * P * y1 - ((y1 - c1) * (y1 - c1) + (y2 - c2) * (y2 - c2)) / w2);
        }
        bu[i] = acc;
    }
    auto t2 = [&](double kn) { return f.amplitude * std::sqrt(kPi) * w * std::exp(-kI * kn * cn - 0.25 * w2 * kn * kn); };
    Rule1D rk2 = composite_gauss({-2.0 * eps, -eps, 0.0, eps, 2.0 * eps}, opt.kz_nodes_per_panel);
    cplx h2 = 0.0;
    for (std::size_t i = 0; i < rk2.x.size(); ++i) {
        const double kn = rk2.x[i];
        const double weight = cutoff_mollifier(kn, eps);
        if (weight == 0.0) continue;
        const cplx A = A_of(kn);
        const bool conj_kernel = real_z && A.real() > 0.0 && sigma_of(kn) > 0.0;
        cplx k;
        if (real_z)
            k = A.real() >= 0.0 ? cplx(std::sqrt(A.real()), 0.0) : cplx(0.0, std::sqrt(-A.real()));
        else
            k = sqrt_branch(A);
        cplx inner = 0.0;
        for (std::size_t j = 0; j < ru.x.size(); ++j) {
            cplx ker = 0.25 * kI * hankel1_0(k * ru.x[j]);
            if (conj_kernel) ker = std::conj(ker);
            inner += ru.w[j] * ru.x[j] * ker * bu[j];
        }
        h2 += rk2.w[i] * weight * std::exp(kI * kn * xn) * t2(kn) * inner;
    }
    h2 /= 2.0 * kPi;

    const cplx back = std::exp(-kI * P * x1);
    return SplitValue{back * h1, back * h2};
}

// ---- boundary identity ----

SphereRule cap_rule(const Vec3& axis, double c, int n_t, int n_phi) {
    if (!(c > -1.0 && c < 1.0)) throw Error(ErrorKind::Validation, "cap_rule: c must lie in (-1, 1)");
    const Vec3 a = axis.normalized();
    const Vec3 b1 = a.unitOrthogonal(), b2 = a.cross(b1);
    Rule1D rt = gauss_legendre(n_t, c, 1.0);
    Rule1D rp = periodic_trapezoid(n_phi);
    SphereRule r;
    for (std::size_t i = 0; i < rt.x.size(); ++i) {
        const double t = rt.x[i], st = std::sqrt(std::max(0.0, 1.0 - t * t));
        for (std::size_t j = 0; j < rp.x.size(); ++j) {
            r.nodes.push_back(t * a + st * (std::cos(rp.x[j]) * b1 + std::sin(rp.x[j]) * b2));
            r.weights.push_back(rt.w[i] * rp.w[j]);
        }
    }
    return r;
}

CVec boundary_identity_rhs(const FreeResolvent& R, const FaddeevParams& q, const CVec& f, int cap_nodes) {
    validate_params(q);
    if (q.z.imag() != 0.0) throw Error(ErrorKind::Validation, "boundary identity: z must be real");
    if (q.gamma != 0.0) throw Error(ErrorKind::Validation, "boundary identity: gamma must be 0");
    const SpatialGrid& grid = R.grid();
    if (f.size() != grid.size()) throw Error(ErrorKind::Validation, "boundary identity: input size mismatch");
    const double pn = q.z.real();
    const Vec3 p = q.p_perp + pn * q.nu;
    const double kappa = p.norm();
    if (kappa < 1e-12) throw Error(ErrorKind::Domain, "boundary identity: |p| = 0");

    CVec phase(grid.size());
    for (int j = 0; j < grid.size(); ++j) phase[j] = std::exp(kI * p.dot(grid.points[j]));
    const CVec F = phase.cwiseProduct(f);
    const CVec r = R.apply(cplx(kappa * kappa, 0.0), Side::Plus, F);
    const bool plus = q.boundary == Side::Plus;
    const SphereRule cap = cap_rule(plus ? q.nu : Vec3(-q.nu), plus ? pn / kappa : -pn / kappa, cap_nodes, 2 * cap_nodes);
    const CVec tf = trace_operator(kappa, grid, F, cap.nodes);
    const CVec back = trace_adjoint(kappa, grid, cap, tf);
    return phase.conjugate().cwiseProduct(r - (kI * kPi / kappa) * back);
}

// ---- channel direct sum ----

void check_channel_admissible(const FaddeevParams& base) {
    const double v = base.p_perp.squaredNorm() + base.gamma;
    if (std::abs(v - std::round(v)) < 1e-6)
        throw Error(ErrorKind::Exceptional, "channel sum: p_perp^2 = " + std::to_string(v) +
                                                " is (within 1e-6) an integer; the parameter lies in the excluded set");
}

ChannelFaddeev::ChannelFaddeev(const SpatialGrid& grid, const FaddeevParams& base, int m, int n_lo, int n_hi,
                               const KRuleOptions& opt)
    : m_(m), n_lo_(n_lo), n_hi_(n_hi) {
    if (n_hi < n_lo) throw Error(ErrorKind::Validation, "channel sum: empty channel window");
    check_channel_admissible(base);
    for (int n = n_lo; n <= n_hi; ++n) {
        FaddeevParams q = base;
        q.gamma = base.gamma + (m - n);
        blocks_.push_back(std::make_unique<FaddeevOperator>(grid, q, opt));
    }
}

void ChannelFaddeev::set_active_radius(double r_max) {
    for (auto& b : blocks_) b->set_active_radius(r_max);
}

GridFunction ChannelFaddeev::apply(const GridFunction& f) const {
    const int nn = static_cast<int>(f.data.rows());
    GridFunction out(n_lo_, n_hi_ - n_lo_ + 1, nn);
    for (int n = n_lo_; n <= n_hi_; ++n)
        if (f.has(n) && f.col(n).squaredNorm() > 0.0) out.col(n) = block(n).apply(f.col(n));
    return out;
}

// ---- CGO solutions ----

cplx CgoSolution::omega(const SpatialGrid& grid, int n, int j) const {
    const Vec3& x = grid.points[j];
    const cplx phase = std::exp(kI * (params.p_perp.dot(x) + params.z * params.nu.dot(x)));
    return phase * (reduced.has(n) ? reduced.data(j, n - reduced.m_min) : cplx(0.0));
}

std::vector<std::pair<int, GaussianSource>> default_cgo_tests(int m, int n_lo, int n_hi) {
    std::vector<std::pair<int, GaussianSource>> t;
    const std::vector<Vec3> centers{Vec3(0.3, -0.2, 0.4), Vec3(-0.5, 0.4, -0.1), Vec3(0.1, 0.6, -0.5)};
    for (int n = std::max(m - 1, n_lo); n <= std::min(m + 1, n_hi); ++n)
        for (const Vec3& c : centers) t.push_back({n, GaussianSource{c, 1.1, 1.0}});
    return t;
}

double cgo_weak_residual(const SpatialGrid& grid, const FactorizedPotential& F, const CgoSolution& sol,
                         const std::vector<std::pair<int, GaussianSource>>& tests) {
    const Vec3 pr = sol.params.p_perp;
    const CVec3 pbar = pr.cast<cplx>() + std::conj(sol.params.z) * sol.params.nu.cast<cplx>();
    const cplx pbar2 = pbar.cwiseProduct(pbar).sum();  // bilinear pbar . pbar
    // V Phi on the retained channels
    const auto W = F.product_modes();
    const GridFunction& phi = sol.reduced;
    double num = 0.0, den = 0.0;
    for (const auto& [n, eta] : tests) {
        if (!phi.has(n)) continue;
        const double w2 = eta.width * eta.width;
        cplx r = 0.0, s = 0.0;
        for (int j = 0; j < grid.size(); ++j) {
            const Vec3 d = grid.points[j] - eta.center;
            const cplx e = eta.value(grid.points[j]);
            // (-Lap - 2i pbar.grad + pbar.pbar + n - lambda) eta, pointwise
            const cplx lap = (4.0 * d.squaredNorm() / (w2 * w2) - 6.0 / w2) * e;
            const cplx grad_dot = -2.0 / w2 * pbar.cwiseProduct(d.cast<cplx>()).sum() * e;
            const cplx Leta = -lap - 2.0 * kI * grad_dot + (pbar2 + double(n) - sol.lambda) * e;
            cplx vphi = 0.0;
            for (const auto& [dd, wd] : W)
                if (phi.has(n - dd)) vphi += wd[j] * phi.data(j, n - dd - phi.m_min);
            const double wj = grid.weights[j];
            r += wj * (std::conj(Leta) * phi.data(j, n - phi.m_min) + std::conj(e) * vphi);
            s += wj * std::conj(e) * vphi;
        }
        num += std::norm(r);
        den += std::norm(s);
    }
    if (den < 1e-28) return std::sqrt(num);
    return std::sqrt(num / den);
}

CgoSolution solve_cgo(const SpatialGrid& grid, const FactorizedPotential& F, const FaddeevParams& q, int m,
                      double lambda, const CgoOptions& opt) {
    validate_params(q);
    require_complex_z(q, "CGO solution");
    const cplx pp = q.p_dot_p() - q.gamma;
    if (std::abs(pp - (lambda - m)) > 1e-10 * (1.0 + std::abs(lambda - m)))
        throw Error(ErrorKind::Validation, "CGO solution: (p_perp + z nu)^2 must equal lambda - m");
    check_channel_admissible(q);
    if (opt.channel_halfwidth < 0) throw Error(ErrorKind::Validation, "CGO solution: negative channel half-width");

    const int n_lo = m - opt.channel_halfwidth, n_hi = m + opt.channel_halfwidth;
    const int nch = n_hi - n_lo + 1, N = grid.size();
    CgoSolution sol;
    sol.params = q;
    sol.m = m;
    sol.lambda = lambda;
    sol.reduced = GridFunction(n_lo, nch, N);
    sol.reduced.col(m).setOnes();
    sol.gamma = GridFunction(n_lo, nch, N);
    sol.v1_gamma = GridFunction(n_lo, nch, N);

    // Retained product modes and the active (support) radius.
    std::map<int, CVec> W;
    double wmax = 0.0;
    for (const auto& [d, v] : F.product_modes()) wmax = std::max(wmax, v.cwiseAbs().maxCoeff());
    for (const auto& [d, v] : F.product_modes())
        if (std::abs(d) < nch && v.cwiseAbs().maxCoeff() > 1e-15 * wmax) W.emplace(d, v);
    if (W.empty() || wmax == 0.0) {
        sol.report.weak_residual = 0.0;
        return sol;
    }
    double r_act = opt.active_radius;
    if (r_act <= 0.0) {
        r_act = 0.0;
        for (int j = 0; j < N; ++j) {
            double a = 0.0;
            for (const auto& [d, v] : W) a = std::max(a, std::abs(v[j]));
            if (a > 1e-10 * wmax) r_act = std::max(r_act, grid.radius(j));
        }
    }
    std::vector<int> active;
    for (int j = 0; j < N; ++j)
        if (grid.radius(j) <= r_act * (1.0 + 1e-12)) active.push_back(j);
    const int na = static_cast<int>(active.size());

    KRuleOptions kopt = opt.krule;
    kopt.extent = std::min(kopt.extent, 2.0 * r_act);
    ChannelFaddeev H(grid, q, m, n_lo, n_hi, kopt);
    H.set_active_radius(r_act);

    detail::CgoSystem A(grid, H, W, active);
    CVec b = CVec::Zero(static_cast<Eigen::Index>(na) * nch);
    b.segment(static_cast<Eigen::Index>(m - n_lo) * na, na).setOnes();

    Eigen::GMRES<detail::CgoSystem, Eigen::IdentityPreconditioner> gmres;
    gmres.setTolerance(opt.tol);
    gmres.setMaxIterations(opt.max_iterations);
    gmres.set_restart(std::min(opt.max_iterations, 60));
    gmres.compute(A);
    CVec x = gmres.solve(b);
    sol.report.iterations = static_cast<int>(gmres.iterations());
    sol.report.residual = (A.apply(x) - b).norm() / b.norm();
    sol.report.growth_exponent = std::abs(q.z.imag()) * r_act;
    if (!(sol.report.residual < std::max(100.0 * opt.tol, 1e-8)))
        throw Error(ErrorKind::Exceptional,
                    "CGO solution: GMRES failed to converge (residual " + std::to_string(sol.report.residual) +
                        "); (p_perp, z) is near the exceptional set or the system is ill-conditioned");

    // Extend Phi to the whole grid: Phi = e^{imt} - H (V Phi).
    const GridFunction vphi = A.potential_times(A.expand(x));
    sol.v1_gamma = vphi;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (vphi.col(n).squaredNorm() == 0.0) continue;
        sol.reduced.col(n) -= H.block(n).apply_to_points(vphi.col(n), grid.points);
    }
    // Gamma = V2 Phi
    for (int n = n_lo; n <= n_hi; ++n)
        for (const auto& [d, v2] : F.q2_modes)
            if (sol.reduced.has(n - d)) sol.gamma.col(n) += v2.cwiseProduct(sol.reduced.col(n - d));

    if (opt.verify) {
        sol.report.weak_residual = cgo_weak_residual(grid, F, sol, default_cgo_tests(m, n_lo, n_hi));
        if (sol.report.weak_residual > opt.max_weak_residual)
            throw Error(ErrorKind::Numerical,
                        "CGO solution: Floquet-equation residual " + std::to_string(sol.report.weak_residual) +
                            " exceeds " + std::to_string(opt.max_weak_residual) +
                            "; refine the grid (n_r, angular order) or the k-rule (K, density)");
    }
    return sol;
}

} // namespace flq
