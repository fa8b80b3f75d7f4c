// channel_solver.cpp -- dense coupled-channel Lippmann-Schwinger solvers.

#include "floquet/channel_solver.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace flq {

namespace {

void check_budget(double n_unknowns, const char* what) {
    const double bytes = n_unknowns * n_unknowns * sizeof(cplx);
    if (bytes > kDenseBudgetBytes) {
        std::ostringstream os;
        os << what << ": dense system of " << static_cast<long long>(n_unknowns) << " unknowns needs "
           << bytes / 1e9 << " GB (budget " << kDenseBudgetBytes / 1e9 << " GB); reduce n_r, the angular order or M";
        throw Error(ErrorKind::Sizing, os.str());
    }
}

const CMat& channel_block(const FreeResolvent& R, const ChannelSet& ch, int m, Side side) {
    const double z = ch.lambda - m;
    if (std::abs(z) < 1e-12) throw Error(ErrorKind::Domain, "channel at threshold: lambda - m = 0");
    return R.block(cplx(z, 0.0), side);
}

double rcond_to_condition(double rc) { return rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity(); }

void check_condition(double cond, const char* what) {
    if (!(cond < 1e12)) {
        std::ostringstream os;
        os << what << ": system is numerically singular (condition ~ " << cond
           << "); lambda may be an exceptional point or an embedded eigenvalue";
        throw Error(ErrorKind::Exceptional, os.str());
    }
}

bool nonzero(const CVec& v) { return v.size() && v.cwiseAbs().maxCoeff() > 0.0; }

} // namespace

// ---- coupling operator ----

double CouplingOperator::block_norm_sum() const {
    double best = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        double s = 0.0;
        for (int kp = k_lo; kp <= k_hi; ++kp) {
            auto it = blocks.find({k, kp});
            if (it != blocks.end()) s += it->second.norm();
        }
        best = std::max(best, s);
    }
    return best;
}

CMat CouplingOperator::dense() const {
    const int nk = n_density();
    CMat D = CMat::Zero(static_cast<Eigen::Index>(nk) * n_nodes, static_cast<Eigen::Index>(nk) * n_nodes);
    for (const auto& [key, blk] : blocks)
        D.block(static_cast<Eigen::Index>(key.first - k_lo) * n_nodes,
                static_cast<Eigen::Index>(key.second - k_lo) * n_nodes, n_nodes, n_nodes) = blk;
    return D;
}

CouplingOperator assemble_coupling(const FreeResolvent& R, const ChannelSet& channels,
                                   const FactorizedPotential& F, Side side) {
    CouplingOperator Q;
    Q.channels = channels;
    Q.side = side;
    Q.n_nodes = R.grid().size();
    const int w = std::max(F.q1_width(), F.q2_width());
    Q.k_lo = channels.m_lo - w;
    Q.k_hi = channels.m_hi + w;
    check_budget(static_cast<double>(Q.n_density()) * Q.n_nodes, "assemble_coupling");
    // d_{k,k'} = sum_l diag(q2_{k-l}) r0(lambda - l) diag(q1_{l-k'})
    for (int l = channels.m_lo; l <= channels.m_hi; ++l) {
        const CMat& r0 = channel_block(R, channels, l, side);
        for (const auto& [a, q1] : F.q1_modes) {
            if (!nonzero(q1)) continue;
            const int kp = l - a;
            const CMat r0q1 = r0 * q1.asDiagonal();
            for (const auto& [b, q2] : F.q2_modes) {
                if (!nonzero(q2)) continue;
                const int k = l + b;
                CMat term = q2.asDiagonal() * r0q1;
                auto it = Q.blocks.find({k, kp});
                if (it == Q.blocks.end()) Q.blocks.emplace(std::make_pair(k, kp), std::move(term));
                else it->second += term;
            }
        }
    }
    return Q;
}

// ---- incident waves ----

CVec incident_field(const FreeResolvent& R, const ChannelSet& ch, int m, const Vec3& nu) {
    if (!ch.is_open(m)) throw Error(ErrorKind::Domain, "incident wave requested in a closed channel");
    const double kappa = ch.kappa(m);
    const double c = eigenfunction_normalization(m, ch.lambda);
    const SpatialGrid& g = R.grid();
    if (R.method() == ResolventMethod::PartialWave)
        return c * bandlimited_plane_wave(g, kappa, nu.normalized(), g.band_limit());
    CVec out(g.size());
    const Vec3 k = kappa * nu.normalized();
    for (int j = 0; j < g.size(); ++j) out[j] = c * std::exp(kI * k.dot(g.points[j]));
    return out;
}

// ---- density route ----

DistortedWave solve_distorted_wave(const FreeResolvent& R, const CouplingOperator& Q,
                                   const FactorizedPotential& F, const Incident& inc, WaveSign sign) {
    if (Q.side != resolvent_side(sign))
        throw Error(ErrorKind::Validation, "solve_distorted_wave: coupling operator built for the other boundary value");
    const ChannelSet& ch = Q.channels;
    if (std::abs(inc.lambda - ch.lambda) > 1e-14)
        throw Error(ErrorKind::Validation, "solve_distorted_wave: incident quasi-energy differs from the operator's");
    if (inc.m < ch.m_lo || inc.m > ch.m_hi)
        throw Error(ErrorKind::Validation, "solve_distorted_wave: incident channel outside the retained window");
    const int N = Q.n_nodes, nk = Q.n_density();
    const CVec phi_m = incident_field(R, ch, inc.m, inc.nu);

    // psi_in = B phi_m: (V2 phi_m)_k = q2_{k-m} phi_m
    CVec rhs = CVec::Zero(static_cast<Eigen::Index>(nk) * N);
    for (const auto& [b, q2] : F.q2_modes) {
        const int k = inc.m + b;
        if (k < Q.k_lo || k > Q.k_hi) continue;
        rhs.segment(static_cast<Eigen::Index>(k - Q.k_lo) * N, N) += q2.cwiseProduct(phi_m);
    }
    CMat A = Q.dense();
    A.diagonal().array() += 1.0;
    Eigen::PartialPivLU<CMat> lu(A);
    DistortedWave out;
    out.incident = inc;
    out.sign = sign;
    out.report.condition = rcond_to_condition(lu.rcond());
    out.report.unknowns = static_cast<int>(A.rows());
    check_condition(out.report.condition, "solve_distorted_wave");
    const CVec psi = lu.solve(rhs);
    const double rn = rhs.norm();
    out.report.residual = rn > 0.0 ? (A * psi - rhs).norm() / rn : 0.0;

    out.psi = GridFunction(Q.k_lo, nk, N);
    for (int k = Q.k_lo; k <= Q.k_hi; ++k) out.psi.col(k) = psi.segment(static_cast<Eigen::Index>(k - Q.k_lo) * N, N);

    // phi_n = delta_{nm} phi_m - r0(lambda - n) sum_k q1_{n-k} psi_k
    out.phi = GridFunction(ch.m_lo, ch.count(), N);
    out.phi.col(inc.m) = phi_m;
    for (int n = ch.m_lo; n <= ch.m_hi; ++n) {
        CVec src = CVec::Zero(N);
        for (const auto& [a, q1] : F.q1_modes) {
            const int k = n - a;
            if (!out.psi.has(k)) continue;
            src += q1.cwiseProduct(out.psi.col(k));
        }
        if (!nonzero(src)) continue;
        out.phi.col(n) -= channel_block(R, ch, n, Q.side) * src;
    }
    return out;
}

// ---- field route ----

FieldSolver::FieldSolver(const FreeResolvent& R, const ChannelSet& channels, const FactorizedPotential& F,
                         WaveSign sign)
    : R_(R), F_(F), ch_(channels), sign_(sign), N_(R.grid().size()) {
    double wmax = 0.0;
    for (const auto& [d, w] : F.product_modes())
        if (w.size()) wmax = std::max(wmax, w.cwiseAbs().maxCoeff());
    for (const auto& [d, w] : F.product_modes())
        if (w.size() && w.cwiseAbs().maxCoeff() > 1e-15 * wmax && std::abs(d) < ch_.count()) W_[d] = w;
    decoupled_ = W_.empty() || (W_.size() == 1 && W_.begin()->first == 0);
    const Side side = resolvent_side(sign_);
    const int nc = ch_.count();
    if (decoupled_) {
        check_budget(N_, "FieldSolver");
        const CVec w0 = W_.count(0) ? W_.at(0) : CVec(CVec::Zero(N_));
        double cond = 1.0;
        for (int n = ch_.m_lo; n <= ch_.m_hi; ++n) {
            CMat A = channel_block(R_, ch_, n, side) * w0.asDiagonal();
            A.diagonal().array() += 1.0;
            lu_.emplace_back(A);
            cond = std::max(cond, rcond_to_condition(lu_.back().rcond()));
        }
        cond_ = cond;
    } else {
        check_budget(static_cast<double>(nc) * N_, "FieldSolver");
        CMat A = CMat::Zero(static_cast<Eigen::Index>(nc) * N_, static_cast<Eigen::Index>(nc) * N_);
        for (int n = ch_.m_lo; n <= ch_.m_hi; ++n) {
            const CMat& r0 = channel_block(R_, ch_, n, side);
            for (const auto& [d, w] : W_) {
                const int k = n - d;
                if (k < ch_.m_lo || k > ch_.m_hi) continue;
                A.block(static_cast<Eigen::Index>(ch_.index(n)) * N_, static_cast<Eigen::Index>(ch_.index(k)) * N_, N_, N_)
                    = r0 * w.asDiagonal();
            }
        }
        A.diagonal().array() += 1.0;
        lu_.emplace_back(std::move(A));
        cond_ = rcond_to_condition(lu_.back().rcond());
    }
    check_condition(cond_, "FieldSolver");
}

CMat FieldSolver::solve(const CMat& rhs) const {
    if (!decoupled_) return lu_.front().solve(rhs);
    CMat out(rhs.rows(), rhs.cols());
    for (int n = ch_.m_lo; n <= ch_.m_hi; ++n) {
        const Eigen::Index off = static_cast<Eigen::Index>(ch_.index(n)) * N_;
        out.middleRows(off, N_) = lu_[ch_.index(n)].solve(rhs.middleRows(off, N_));
    }
    return out;
}

CMat FieldSolver::apply(const CMat& phi) const {
    const Side side = resolvent_side(sign_);
    CMat out = phi;
    for (int n = ch_.m_lo; n <= ch_.m_hi; ++n) {
        CMat src = CMat::Zero(N_, phi.cols());
        bool any = false;
        for (const auto& [d, w] : W_) {
            const int k = n - d;
            if (k < ch_.m_lo || k > ch_.m_hi) continue;
            src += w.asDiagonal() * phi.middleRows(static_cast<Eigen::Index>(ch_.index(k)) * N_, N_);
            any = true;
        }
        if (!any) continue;
        out.middleRows(static_cast<Eigen::Index>(ch_.index(n)) * N_, N_) += channel_block(R_, ch_, n, side) * src;
    }
    return out;
}

GridFunction FieldSolver::potential_times(const CVec& phi) const {
    GridFunction out(ch_.m_lo, ch_.count(), N_);
    for (int n = ch_.m_lo; n <= ch_.m_hi; ++n)
        for (const auto& [d, w] : W_) {
            const int k = n - d;
            if (k < ch_.m_lo || k > ch_.m_hi) continue;
            out.col(n) += w.cwiseProduct(phi.segment(static_cast<Eigen::Index>(ch_.index(k)) * N_, N_));
        }
    return out;
}

std::vector<DistortedWave> FieldSolver::solve_many(const std::vector<Incident>& incs) const {
    const int nc = ch_.count();
    CMat rhs = CMat::Zero(static_cast<Eigen::Index>(nc) * N_, static_cast<Eigen::Index>(incs.size()));
    for (size_t c = 0; c < incs.size(); ++c) {
        const Incident& inc = incs[c];
        if (std::abs(inc.lambda - ch_.lambda) > 1e-14)
            throw Error(ErrorKind::Validation, "FieldSolver: incident quasi-energy differs from the solver's");
        if (inc.m < ch_.m_lo || inc.m > ch_.m_hi)
            throw Error(ErrorKind::Validation, "FieldSolver: incident channel outside the retained window");
        rhs.block(static_cast<Eigen::Index>(ch_.index(inc.m)) * N_, static_cast<Eigen::Index>(c), N_, 1)
            = incident_field(R_, ch_, inc.m, inc.nu);
    }
    const CMat sol = solve(rhs);
    const CMat res = apply(sol) - rhs;
    std::vector<DistortedWave> out(incs.size());
    for (size_t c = 0; c < incs.size(); ++c) {
        DistortedWave& dw = out[c];
        dw.incident = incs[c];
        dw.sign = sign_;
        dw.report.condition = cond_;
        dw.report.unknowns = static_cast<int>(rhs.rows());
        const double rn = rhs.col(static_cast<Eigen::Index>(c)).norm();
        dw.report.residual = rn > 0.0 ? res.col(static_cast<Eigen::Index>(c)).norm() / rn : 0.0;
        dw.phi = GridFunction(ch_.m_lo, nc, N_);
        for (int n = ch_.m_lo; n <= ch_.m_hi; ++n)
            dw.phi.col(n) = sol.block(static_cast<Eigen::Index>(ch_.index(n)) * N_, static_cast<Eigen::Index>(c), N_, 1);
        // density V2 phi on C +- width(q2)
        const int w2 = F_.q2_width();
        dw.psi = GridFunction(ch_.m_lo - w2, nc + 2 * w2, N_);
        for (const auto& [b, q2] : F_.q2_modes) {
            if (!nonzero(q2)) continue;
            for (int k = ch_.m_lo; k <= ch_.m_hi; ++k)
                if (dw.psi.has(k + b)) dw.psi.col(k + b) += q2.cwiseProduct(dw.phi.col(k));
        }
    }
    return out;
}

DistortedWave FieldSolver::solve(const Incident& inc) const { return solve_many({inc}).front(); }

} // namespace flq
