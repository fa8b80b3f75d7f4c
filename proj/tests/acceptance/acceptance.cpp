// acceptance.cpp -- one pass/fail line per acceptance criterion (1-10).
//
// Usage: acceptance [--cli PATH] [--only 1,4,9]
// The command-line tool path is needed by criterion 10 (exit codes).
// Exit status: 0 when every selected criterion passes, 1 otherwise.

#include "floquet/cli.hpp"
#include "floquet/faddeev.hpp"
#include "floquet/inversion.hpp"
#include "floquet/smatrix.hpp"
#include "floquet/timedomain.hpp"
#include "oracles/partial_wave.hpp"

#include <CLI11.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace flq;

namespace {

// ---- pinned tolerances ----

constexpr double kTolUnitarity = 1e-3;         // criterion 1
constexpr double kTolPartialWave = 1e-3;       // criterion 2, relative to the block maximum
constexpr double kBornHalvingSlack = 0.25;     // criterion 3, ratio 2 +- 25%
constexpr double kTolBoundary = 1e-3;          // criterion 4
constexpr double kTolDecayExponent = 0.15;     // criterion 5, relative to -1
constexpr double kTolCgoResidual = 1e-3;       // criterion 6
constexpr double kTolPairing = 1e-2;           // criterion 7
constexpr double kTolReconstruction = 0.15;    // criterion 8
constexpr double kReconstructionExtent = 2.5;  // criterion 8 k-lattice half-width
constexpr double kTolForward = 0.05;           // criterion 9, weak Yukawa forward amplitude
constexpr double kTolSideband = 0.10;          // criterion 9, sideband ratios
constexpr double kMinQuantized = 0.99;         // criterion 9, mass at integer offsets

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

SpatialGrid grid_for(const std::string& preset, int n_r, int order) {
    // the Yukawa tail e^{-1.5 r}/r needs a larger cutoff than the Gaussians
    return build_grid(preset == "yukawa" ? 10.0 : 6.0, n_r, order);
}

// ---- 1: unitarity ----

Outcome criterion_unitarity() {
    Outcome o{true, ""};
    double worst = 0.0;
    bool decreasing = true;
    for (const char* preset : {"yukawa", "driven-gaussian", "two-mode"})
        for (double lambda : {0.37, 2.6}) {
            double d[2];
            for (int i = 0; i < 2; ++i) {
                const SpatialGrid g = grid_for(preset, i == 0 ? 20 : 40, 7);  // 26 angular nodes
                const FactorizedPotential F = factorize(sample_potential(preset_potential(preset), g), g);
                const FreeResolvent R(g);
                d[i] = unitarity_defect(assemble_S(R, channel_set(lambda, 3), F)).max();
            }
            worst = std::max(worst, d[0]);
            if (!(d[1] < d[0])) decreasing = false;
            o.detail += std::string(preset) + "@" + fmt(lambda) + ": " + fmt(d[0]) + "->" + fmt(d[1]) + "; ";
        }
    o.pass = worst < kTolUnitarity && decreasing;
    o.detail = "max defect (n_r 20) " + fmt(worst) + (decreasing ? ", decreasing" : ", NOT decreasing") +
               " under n_r doubling [" + o.detail + "]";
    return o;
}

// ---- 2: time-independent reduction ----

Outcome criterion_partial_wave() {
    const std::string preset = "yukawa";
    const SpatialGrid g = grid_for(preset, 20, 17);  // band limit 8
    const PotentialSpec spec = preset_potential(preset);
    const FactorizedPotential F = factorize(sample_potential(spec, g), g);
    const FreeResolvent R(g);
    double worst = 0.0;
    bool block_diagonal = true;
    for (double lambda : {0.37, 2.6}) {
        const ChannelSet ch = channel_set(lambda, 3);
        const ScatteringMatrix S = assemble_S(R, ch, F);
        for (const auto& [key, blk] : S.blocks) {
            if (key.first != key.second) {
                if (blk.cwiseAbs().maxCoeff() != 0.0) block_diagonal = false;
                continue;
            }
            const double k = std::sqrt(lambda - key.first);
            std::vector<double> delta;
            for (int l = 0; l <= 8; ++l)
                delta.push_back(oracle::phase_shift([&](double r) { return spec.mode_value(0, r).real(); }, k, l, g.L));
            double err = 0.0, ref = 0.0;
            for (int i = 0; i < S.n_dirs(); ++i)
                for (int j = 0; j < S.n_dirs(); ++j) {
                    const cplx v = oracle::amplitude(delta, S.sphere.nodes[i].dot(S.sphere.nodes[j]));
                    err = std::max(err, std::abs(blk(i, j) - v));
                    ref = std::max(ref, std::abs(v));
                }
            worst = std::max(worst, err / ref);
        }
    }
    return {block_diagonal && worst < kTolPartialWave,
            std::string(block_diagonal ? "off-diagonal blocks exactly zero" : "off-diagonal blocks NONZERO") +
                ", max entrywise deviation from the partial-wave oracle (l <= 8) " + fmt(worst) +
                " of the block maximum"};
}

// ---- 3: Born scaling ----

Outcome criterion_born() {
    const std::string preset = "driven-gaussian";
    const SpatialGrid g = grid_for(preset, 20, 7);
    const FreeResolvent R(g);
    const ChannelSet ch = channel_set(2.6, 3);
    std::vector<double> rel;
    for (double eps : {0.2, 0.1, 0.05}) {
        const FactorizedPotential F = factorize(sample_potential(preset_potential(preset, eps), g), g);
        const CMat T = assemble_S(R, ch, F).t_matrix();
        const CMat B = born_S(R, ch, F).t_matrix();
        rel.push_back((T - B).norm() / B.norm());
    }
    const double r1 = rel[0] / rel[1], r2 = rel[1] / rel[2];
    const bool ok = std::abs(r1 - 2.0) <= 2.0 * kBornHalvingSlack && std::abs(r2 - 2.0) <= 2.0 * kBornHalvingSlack;
    return {ok, "relative Born deviation " + fmt(rel[0]) + ", " + fmt(rel[1]) + ", " + fmt(rel[2]) +
                    " for eps 0.2, 0.1, 0.05; halving ratios " + fmt(r1) + ", " + fmt(r2)};
}

// ---- 4: Faddeev boundary identity ----

Outcome criterion_boundary() {
    const SpatialGrid g = build_grid(6.0, 20, 25);
    const FreeResolvent R(g);
    const GaussianSource f{Vec3(0.2, -0.1, 0.3), 1.0, 1.0};
    CVec fv(g.size());
    for (int j = 0; j < g.size(); ++j) fv[j] = f.value(g.points[j]);
    struct Point { double p; double z; Side side; };
    const Point points[] = {{1.0, 0.7, Side::Plus}, {0.6, 1.1, Side::Minus}, {1.4, -0.5, Side::Plus}};
    double worst = 0.0;
    std::string per;
    for (const auto& pt : points) {
        FaddeevParams q;
        q.p_perp = Vec3(pt.p, 0.0, 0.0);
        q.z = cplx(pt.z, 0.0);
        q.boundary = pt.side;
        const CVec rhs = boundary_identity_rhs(R, q, fv, 48);
        double num = 0.0, den = 0.0;
        int count = 0;
        for (int j = 0; j < g.size(); ++j) {
            if (g.radius(j) > 2.0 || count++ % 7) continue;
            const cplx v = faddeev_split_at(q, f, g.points[j]).total();
            num += std::norm(v - rhs[j]);
            den += std::norm(v);
        }
        const double rel = std::sqrt(num / den);
        worst = std::max(worst, rel);
        per += fmt(rel) + " ";
    }
    return {worst < kTolBoundary, "relative error at 3 points (|p_perp|, z, side): " + per};
}

// ---- 5: Faddeev decay ----

Outcome criterion_decay() {
    const SpatialGrid g = build_grid(4.0, 10, 11);
    const GaussianSource f{Vec3(0.2, -0.1, 0.3), 1.0, 1.0};
    double fn = 0.0;
    for (int j = 0; j < g.size(); ++j) fn += g.weights[j] * std::norm(f.value(g.points[j]));
    std::vector<double> lx, ly;
    const double p = 1.0;
    for (double rho : {2.0, 4.0, 8.0, 16.0, 32.0}) {
        FaddeevParams q;
        q.p_perp = Vec3(p, 0.0, 0.0);
        q.z = cplx(0.0, rho);
        KRuleOptions kopt;
        kopt.K = 10.0;
        kopt.extent = 8.0;
        const CVec v = faddeev_direct_at(q, f, g.points, kopt);
        double n = 0.0;
        for (int j = 0; j < g.size(); ++j) n += g.weights[j] * std::norm(v[j]);
        lx.push_back(std::log(p + rho));
        ly.push_back(0.5 * std::log(n / fn));
    }
    const double n = static_cast<double>(lx.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i] / n;
        my += ly[i] / n;
    }
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = sxy / sxx;
    return {std::abs(slope + 1.0) <= kTolDecayExponent,
            "fitted exponent of ||g(p_perp, i rho) f|| vs |p_perp| + rho over rho in [2, 32]: " + fmt(slope)};
}

// ---- 6: CGO residual ----

Outcome criterion_cgo() {
    const double lambda = 0.37;
    struct Point { double rho; int m; double angle; };
    const Point points[] = {{3.0, 0, 0.0}, {4.0, 0, 0.9}, {6.0, 0, 2.1}, {4.5, -1, 0.4}, {5.0, 1, 1.3}};
    double worst = 0.0;
    std::string per;
    for (const char* preset : {"yukawa", "driven-gaussian", "two-mode"}) {
        const SpatialGrid g = build_grid(6.0, 16, 17);
        const FactorizedPotential F = factorize(sample_potential(preset_potential(preset), g), g);
        double pw = 0.0;
        for (const auto& pt : points) {
            FaddeevParams q;
            const double P = std::sqrt(lambda - pt.m + pt.rho * pt.rho);
            q.p_perp = P * Vec3(std::cos(pt.angle), std::sin(pt.angle), 0.0);
            q.z = cplx(0.0, pt.rho);
            CgoOptions opt;
            opt.krule.K = 5.0;
            opt.max_weak_residual = 1.0;  // reported here, judged below
            const CgoSolution s = solve_cgo(g, F, q, pt.m, lambda, opt);
            pw = std::max(pw, s.report.weak_residual);
        }
        worst = std::max(worst, pw);
        per += std::string(preset) + " " + fmt(pw) + "; ";
    }
    return {worst < kTolCgoResidual, "max weak residual of (F0 + V - lambda) Omega over 5 points: " + per};
}

// ---- 7: pairing identity ----

Outcome criterion_pairing() {
    const double lambda = 2.6, Rs = 6.5;
    const SpatialGrid g = build_grid(6.0, 16, 17);
    const FactorizedPotential F = factorize(sample_potential(preset_potential("driven-gaussian"), g), g);
    const FreeResolvent R(g);
    const ChannelSet ch = channel_set(lambda, 1);
    const FieldSolver solver(R, ch, F, WaveSign::Minus);
    const CMat St = assemble_S(solver).operator_matrix();
    const SphereRule& sph = g.sphere;
    const int nd = sph.size(), no = static_cast<int>(ch.open.size());
    const SphereRule surf = product_sphere(64, 128);
    std::mt19937 rng(7);
    std::normal_distribution<double> n01;
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        // weighted coefficients G = W^{1/2} g of the two sphere functions g, g~
        CVec G(no * nd), Gt(no * nd);
        for (int i = 0; i < no * nd; ++i) {
            G[i] = cplx(n01(rng), n01(rng));
            Gt[i] = cplx(n01(rng), n01(rng));
        }
        const cplx rhs = Gt.dot((St - CMat::Identity(no * nd, no * nd)) * G);

        // distorted Herglotz wave U = sum_m int g_m(nu) phi_{-,m}(nu) dnu
        CMat inc = CMat::Zero(static_cast<Eigen::Index>(g.size()) * ch.count(), 1);
        for (int a = 0; a < no; ++a) {
            const int m = ch.open[a];
            for (int j = 0; j < nd; ++j)
                inc.block(static_cast<Eigen::Index>(ch.index(m)) * g.size(), 0, g.size(), 1) +=
                    std::sqrt(sph.weights[j]) * G[a * nd + j] * incident_field(R, ch, m, sph.nodes[j]);
        }
        const GridFunction vphi = solver.potential_times(solver.solve(inc).col(0));

        // surface Wronskian of U against the free Herglotz wave of g~, channel by channel
        cplx lhs = 0.0;
        for (int b = 0; b < no; ++b) {
            const int n = ch.open[b];
            const double kap = ch.kappa(n), c = eigenfunction_normalization(n, lambda);
            const CVec vp = -vphi.col(n);
            const cplx z(lambda - n, 0.0);
            for (int s = 0; s < surf.size(); ++s) {
                const Vec3 xh = surf.nodes[s], x = Rs * xh;
                cplx U = convolve_at(g, z, Side::Plus, vp, x);
                cplx dU = convolve_radial_derivative_at(g, z, Side::Plus, vp, x);
                cplx ut = 0.0, dut = 0.0;
                for (int j = 0; j < nd; ++j) {
                    const Vec3 k = kap * sph.nodes[j];
                    const cplx e = c * std::exp(kI * k.dot(x)) * std::sqrt(sph.weights[j]);
                    U += G[b * nd + j] * e;
                    dU += G[b * nd + j] * e * kI * k.dot(xh);
                    ut += Gt[b * nd + j] * e;
                    dut += Gt[b * nd + j] * e * kI * k.dot(xh);
                }
                lhs -= surf.weights[s] * Rs * Rs * (dU * std::conj(ut) - U * std::conj(dut));
            }
        }
        lhs *= 4.0 * kPi * kPi * kI;
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return {worst < kTolPairing, "max relative mismatch of surface pairing vs ((S - S~) g, g~) over 4 random pairs: " +
                                     fmt(worst)};
}

// ---- 8: reconstruction round trip ----

Outcome criterion_reconstruction() {
    const SpatialGrid g = build_grid(6.0, 16, 17);
    const FourierPotential V = sample_potential(preset_potential("born-gaussian"), g);
    const FactorizedPotential F = factorize(V, g);
    const double lambda = 0.37;
    ReconstructOptions opt;
    opt.cgo.krule.K = 5.0;
    // 9^3 lattice on [-2.5, 2.5]^3: the inverse-transform floor (truncation of
    // the Gaussian's transform plus periodic images at 2 pi / spacing) is
    // ~0.65% here versus ~5.7% at extent 3, so the rho-dependent error is what
    // the comparison between schedules actually sees.
    opt.lattice.extent = kReconstructionExtent;
    double err[2], sample_err[2];
    int i = 0;
    for (const std::vector<double>& rl : {std::vector<double>{4, 8, 16}, std::vector<double>{4, 8, 16, 32}}) {
        opt.rho_list = rl;
        const RecoveredPotential r = reconstruct(g, F, lambda, opt, &V);
        err[i] = r.relative_l2_error;
        // the rho-dependent part: Fourier samples against the exact transform
        double num = 0.0, den = 0.0;
        for (const FourierSample& s : r.samples) {
            if (s.skipped) continue;
            const cplx exact = born_moment(g, V, s.k, opt.m1, opt.m1 + s.mode) / (2.0 * kPi);
            num += std::norm(s.value - exact);
            den += std::norm(exact);
        }
        sample_err[i] = std::sqrt(num / den);
        ++i;
    }
    const bool ok = err[0] < kTolReconstruction && err[1] <= err[0];
    return {ok, "relative L2 mode error " + fmt(err[0]) + " (rho <= 16), " + fmt(err[1]) +
                    " (rho <= 32); Fourier-sample error " + fmt(sample_err[0]) + " -> " + fmt(sample_err[1])};
}

// ---- 9: time-domain cross-check ----

struct CrossRun {
    TransitionResult td;
    std::map<std::tuple<int, int, int, int>, cplx> ref;
};

CrossRun cross_run(const std::string& preset, double scale, int M, int n_r, int order) {
    const PotentialSpec spec = preset_potential(preset, scale);
    PacketSpec pk;
    pk.lambda = 1.3;
    pk.sigma_par = 0.045 / pk.kappa();
    TransitionOptions opt;
    opt.channels = {-1, 0, 1};
    opt.directions = {Vec3(0, 0, 1), Vec3(std::sin(0.5), 0.0, std::cos(0.5))};
    CrossRun out;
    out.td = extract_transition(pk, spec, opt);
    const SpatialGrid g = build_grid(8.0, n_r, order);
    const FactorizedPotential F = factorize(sample_potential(spec, g), g);
    const FreeResolvent R(g);
    const ChannelSet ch = channel_set(pk.lambda, M);
    const FieldSolver solver(R, ch, F, WaveSign::Minus);
    const DistortedWave wave = solver.solve(Incident{pk.m, pk.lambda, pk.direction});
    for (const auto& [key, v] : out.td.T)
        out.ref[key] = amplitude(solver, wave, std::get<0>(key), opt.directions[std::get<2>(key)]);
    return out;
}

Outcome criterion_timedomain() {
    std::string detail;
    bool ok = true;

    const CrossRun y = cross_run("yukawa", 0.1, 1, 20, 15);
    double fwd = 0.0;
    for (int d : {0, 1}) {
        const auto key = std::make_tuple(0, 0, d, 0);
        fwd = std::max(fwd, std::abs(y.td.T.at(key) - y.ref.at(key)) / std::abs(y.ref.at(key)));
    }
    ok = ok && fwd <= kTolForward && y.td.quantized_fraction > kMinQuantized;
    detail += "Yukawa amplitude deviation " + fmt(fwd) + " (forward and 0.5 rad)";

    const CrossRun d = cross_run("driven-gaussian", 0.05, 2, 20, 15);
    double side = 0.0;
    for (int dir : {0, 1})
        for (int n : {-1, 1}) {
            const auto kn = std::make_tuple(n, 0, dir, 0), k0 = std::make_tuple(0, 0, dir, 0);
            const double rt = std::abs(d.td.T.at(kn)) / std::abs(d.td.T.at(k0));
            const double rs = std::abs(d.ref.at(kn)) / std::abs(d.ref.at(k0));
            side = std::max(side, std::abs(rt - rs) / rs);
        }
    ok = ok && side <= kTolSideband && d.td.quantized_fraction > kMinQuantized;
    detail += "; driven sideband-ratio deviation " + fmt(side) + "; mass at integer offsets " +
              fmt(y.td.quantized_fraction) + " (Yukawa), " + fmt(d.td.quantized_fraction) + " (driven)";
    return {ok, detail};
}

// ---- 10: negative controls ----

int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_negative(const std::string& cli) {
    if (cli.empty()) return {false, "no --cli path given"};
    const auto dir = std::filesystem::temp_directory_path() / "floquet_acceptance_cli";
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
        const std::string path = (dir / name).string();
        std::ofstream(path) << text;
        return path;
    };
    struct Case { std::string what, command, file; int expect; };
    const std::vector<Case> cases = {
        {"integer lambda", "direct", write("integer.cfg", "command = direct\nlambda = 2\n"), 2},
        {"rho below rho_min", "moment",
         write("rho.cfg", "command = moment\nlambda = 0.37\nmoment.k = 4, 0, 0\nmoment.rho = 1\n"), 2},
        {"p_perp^2 integer", "moment",
         write("resonant.cfg", "command = moment\nlambda = 0.75\nmoment.k = 0, 0, 0\nmoment.rho = 1.5\n"), 4},
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        const int code = run_cli(cli, c.command + " --config \"" + c.file + "\"");
        ok = ok && code == c.expect;
        detail += c.what + " -> exit " + std::to_string(code) + " (want " + std::to_string(c.expect) + "); ";
    }
    std::filesystem::remove_all(dir);
    return {ok, detail};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance suite: one pass/fail line per criterion"};
    std::string cli_path;
    std::vector<int> only;
    app.add_option("--cli", cli_path, "path of the floquet command-line tool");
    app.add_option("--only", only, "criteria to run (default: all)")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"unitarity", criterion_unitarity},
        {"time-independent reduction", criterion_partial_wave},
        {"Born scaling", criterion_born},
        {"Faddeev boundary identity", criterion_boundary},
        {"Faddeev decay", criterion_decay},
        {"CGO residual", criterion_cgo},
        {"pairing identity", criterion_pairing},
        {"reconstruction round trip", criterion_reconstruction},
        {"time-domain cross-check", criterion_timedomain},
        {"negative controls", [&] { return criterion_negative(cli_path); }},
    };
    const std::set<int> selected(only.begin(), only.end());
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << criteria[i].first << "): " << o.detail
                  << " [" << fmt(secs) << " s]" << std::endl;
    }
    std::cout << (failures == 0 ? "all selected criteria passed" : std::to_string(failures) + " criterion/criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
