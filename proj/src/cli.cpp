// cli.cpp -- batch drivers: direct S-matrix runs, reconstruction, the
// time-domain cross-check, single pairing queries and the self-test.

#include "floquet/cli.hpp"

#include "floquet/faddeev.hpp"
#include "floquet/inversion.hpp"
#include "floquet/io.hpp"
#include "floquet/smatrix.hpp"
#include "floquet/timedomain.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

namespace flq {

namespace {

std::string prepare_output(const RunConfig& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) throw Error(ErrorKind::Config, "cannot create output directory '" + cfg.output_dir + "': " + ec.message());
    return cfg.output_dir;
}

std::string join(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

} // namespace

// ---- direct ----

int run_direct(const RunConfig& cfg, std::ostream& log) {
    validate_config(cfg);
    const PotentialSpec spec = config_potential(cfg);
    const SpatialGrid grid = build_grid(cfg.grid_L, cfg.grid_nr, cfg.grid_order);
    const FourierPotential V = sample_potential(spec, grid);
    const FactorizedPotential F = factorize(V, grid);
    if (F.warning) log << "warning: " << *F.warning << "\n";
    const FreeResolvent R(grid);
    const ChannelSet ch = channel_set(cfg.lambda, cfg.M);
    const FieldSolver solver(R, ch, F, WaveSign::Minus);
    ScatteringMatrix S = assemble_S(solver);
    S.potential = cfg.potential_file.empty() ? cfg.potential_preset : cfg.potential_file;
    const UnitarityDefect d = unitarity_defect(S);

    const std::string dir = prepare_output(cfg);
    const std::string path = join(dir, "smatrix.csv");
    write_smatrix_csv(S, path);
    std::ofstream meta(join(dir, "direct_meta.txt"));
    meta << "lambda = " << format_double(cfg.lambda) << "\nM = " << cfg.M << "\nopen_channels = " << ch.open.size()
         << "\ndirections = " << S.n_dirs() << "\nunitarity_left = " << format_double(d.left)
         << "\nunitarity_right = " << format_double(d.right) << "\ncondition = " << format_double(solver.condition())
         << "\ngrid_hash = " << grid.hash() << "\n";
    log << "direct: " << S.dimension() << " x " << S.dimension() << " S-matrix written to " << path
        << "; unitarity defect " << d.max() << " (tolerance " << cfg.tol_unitarity << ")\n";
    return d.max() <= cfg.tol_unitarity ? kExitOk : kExitTolerance;
}

// ---- invert ----

int run_invert(const RunConfig& cfg, std::ostream& log) {
    validate_config(cfg);
    const PotentialSpec spec = config_potential(cfg);
    const SpatialGrid grid = build_grid(cfg.grid_L, cfg.grid_nr, cfg.grid_order);
    const FourierPotential V = sample_potential(spec, grid);
    const FactorizedPotential F = factorize(V, grid);
    ReconstructOptions opt;
    opt.lattice.extent = cfg.k_extent;
    opt.lattice.n = cfg.k_points;
    opt.mode_range = cfg.inversion_modes;
    opt.rho_list = cfg.rho_schedule;
    opt.m1 = cfg.inversion_m1;
    opt.cgo.krule.K = cfg.cgo_K;
    const RecoveredPotential r = reconstruct(grid, F, cfg.lambda, opt, &V);
    const std::string dir = prepare_output(cfg);
    const std::string path = join(dir, "reconstruction.csv");
    write_reconstruction_csv(path, r);
    log << "invert: " << r.samples.size() << " samples (" << r.skipped << " outside the reachable ball), "
        << r.cgo_solves << " CGO solves; relative L2 error " << r.relative_l2_error << " (tolerance "
        << cfg.tol_reconstruction << "); written to " << path << "\n";
    return r.relative_l2_error <= cfg.tol_reconstruction ? kExitOk : kExitTolerance;
}

// ---- crosscheck ----

int run_crosscheck(const RunConfig& cfg, std::ostream& log) {
    validate_config(cfg);
    const PotentialSpec spec = config_potential(cfg);
    PacketSpec pk;
    pk.m = cfg.incident;
    pk.lambda = cfg.lambda;
    if (!(pk.energy() > 0.0)) throw Error(ErrorKind::Domain, "crosscheck: the incident channel is closed");
    pk.sigma_par = 0.045 / pk.kappa();
    TransitionOptions opt;
    opt.lattice = Lattice{{cfg.lattice[0], cfg.lattice[1], cfg.lattice[2]}, cfg.lattice_spacing};
    opt.dt = 2.0 * kPi / cfg.steps_per_period;
    opt.channels = {pk.m - 1, pk.m, pk.m + 1};
    opt.directions = {Vec3(0, 0, 1), Vec3(std::sin(0.5), 0.0, std::cos(0.5))};
    const TransitionResult td = extract_transition(pk, spec, opt);

    const SpatialGrid grid = build_grid(cfg.grid_L, cfg.grid_nr, cfg.grid_order);
    const FourierPotential V = sample_potential(spec, grid);
    const FactorizedPotential F = factorize(V, grid);
    const FreeResolvent R(grid);
    const ChannelSet ch = channel_set(cfg.lambda, cfg.M);
    const FieldSolver solver(R, ch, F, WaveSign::Minus);
    const DistortedWave wave = solver.solve(Incident{pk.m, pk.lambda, pk.direction});

    double tmax = 0.0;
    std::map<std::tuple<int, int, int, int>, cplx> ref;
    for (const auto& [key, v] : td.T) {
        const int n = std::get<0>(key);
        if (n < ch.m_lo || n > ch.m_hi || !ch.is_open(n)) continue;
        ref[key] = amplitude(solver, wave, n, opt.directions[static_cast<std::size_t>(std::get<2>(key))]);
        tmax = std::max(tmax, std::abs(ref[key]));
    }
    double worst = 0.0;
    for (const auto& [key, r] : ref) {
        const cplx t = td.T.at(key);
        if (std::abs(r) < 1e-3 * tmax) continue;  // channels the potential does not couple
        const double rel = std::abs(t - r) / std::abs(r);
        worst = std::max(worst, rel);
        log << "crosscheck: n=" << std::get<0>(key) << " dir=" << std::get<2>(key) << " time-domain " << t
            << " stationary " << r << " rel " << rel << "\n";
    }
    const std::string dir = prepare_output(cfg);
    write_transition_csv(join(dir, "transition.csv"), td, opt.directions);
    log << "crosscheck: quantized mass fraction " << td.quantized_fraction << ", worst relative deviation " << worst
        << " (tolerance " << cfg.tol_crosscheck << ")\n";
    return (worst <= cfg.tol_crosscheck && td.quantized_fraction > 0.99) ? kExitOk : kExitTolerance;
}

// ---- moment ----

int run_moment(const RunConfig& cfg, std::ostream& log) {
    validate_config(cfg);
    const MomentQuery q = moment_params(cfg.moment_k, cfg.lambda, cfg.moment_m1, cfg.moment_m2, cfg.moment_rho);
    const PotentialSpec spec = config_potential(cfg);
    const SpatialGrid grid = build_grid(cfg.grid_L, cfg.grid_nr, cfg.grid_order);
    const FourierPotential V = sample_potential(spec, grid);
    const FactorizedPotential F = factorize(V, grid);
    CgoOptions opt;
    opt.krule.K = cfg.cgo_K;
    opt.channel_halfwidth = std::max(2, std::abs(cfg.moment_m2 - cfg.moment_m1));
    MomentEngine engine(grid, F, cfg.lambda, opt);
    const MomentValue v = engine.integral(q);
    const cplx born = born_moment(grid, V, cfg.moment_k, cfg.moment_m1, cfg.moment_m2);
    log << "moment: I = " << v.value << " (rho " << cfg.moment_rho << "), Born value " << born
        << ", CGO weak residual " << v.cgo.weak_residual << "\n";
    return kExitOk;
}

// ---- selftest ----

int run_selftest(const SelftestOptions& opt, std::ostream& log) {
    int failures = 0;
    auto check = [&](const std::string& name, const std::function<std::string(bool&)>& body) {
        bool ok = false;
        std::string detail;
        try {
            detail = body(ok);
        } catch (const Error& e) {
            detail = std::string("error: ") + e.what();
            ok = false;
        }
        log << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
        if (!ok) ++failures;
    };

    const PotentialSpec spec = preset_potential(opt.preset);
    const SpatialGrid grid = build_grid(6.0, 16, 7);
    const double lambda = 2.6;

    check("integer lambda rejected", [&](bool& ok) {
        try {
            (void)channel_set(2.0, 2);
        } catch (const Error& e) {
            ok = e.kind() == ErrorKind::Validation;
            return std::string("exit code ") + std::to_string(exit_code(e.kind()));
        }
        return std::string("accepted");
    });

    check("zero potential gives S = I", [&](bool& ok) {
        const FourierPotential V = sample_potential(preset_potential("zero"), grid);
        const FactorizedPotential F = factorize(V, grid);
        const FreeResolvent R(grid);
        const ScatteringMatrix S = assemble_S(R, channel_set(lambda, 2), F);
        const CMat A = S.operator_matrix();
        const double dev = (A - CMat::Identity(A.rows(), A.cols())).norm();
        ok = dev == 0.0;
        return "||S - I|| = " + format_double(dev);
    });

    ScatteringMatrix S;
    check("unitarity (" + opt.preset + ")", [&](bool& ok) {
        const FourierPotential V = sample_potential(spec, grid);
        const FactorizedPotential F = factorize(V, grid);
        const FreeResolvent R(grid);
        S = assemble_S(R, channel_set(lambda, 2), F);
        if (opt.perturb_kernel)
            for (auto& [key, block] : S.blocks) block *= 1.05;  // injected kernel perturbation
        const double d = unitarity_defect(S).max();
        ok = d < 1e-3;
        return "defect " + format_double(d) + (opt.perturb_kernel ? " (perturbed kernel injected)" : "");
    });

    check("S-matrix CSV round trip", [&](bool& ok) {
        const std::string path = (std::filesystem::temp_directory_path() / "floquet_selftest_S.csv").string();
        write_smatrix_csv(S, path);
        const ScatteringMatrix back = read_smatrix_csv(path);
        std::filesystem::remove(path);
        ok = back.blocks.size() == S.blocks.size();
        for (const auto& [key, block] : S.blocks) ok = ok && back.blocks.count(key) && back.blocks.at(key) == block;
        return std::string(ok ? "bit-identical" : "mismatch");
    });

    check("time-independent potential decouples channels", [&](bool& ok) {
        const FourierPotential V = sample_potential(preset_potential("yukawa", 0.2), grid);
        const FactorizedPotential F = factorize(V, grid);
        const FreeResolvent R(grid);
        const ScatteringMatrix Y = assemble_S(R, channel_set(lambda, 2), F);
        double off = 0.0;
        for (const auto& [key, block] : Y.blocks)
            if (key.first != key.second) off = std::max(off, block.cwiseAbs().maxCoeff());
        ok = off == 0.0;
        return "max off-diagonal block entry " + format_double(off);
    });

    check("Faddeev direct vs split route", [&](bool& ok) {
        FaddeevParams q;
        q.p_perp = Vec3(1.0, 0.0, 0.0);
        q.z = cplx(0.0, 1.0);
        GaussianSource f;
        f.width = 1.2;
        KRuleOptions kopt;
        kopt.K = 8.0;  // the source spectrum is below 1e-8 beyond this radius
        kopt.extent = 6.0;
        const Vec3 x(0.3, -0.2, 0.5);
        const cplx a = faddeev_direct_at(q, f, {x}, kopt)[0];
        const cplx b = faddeev_split_at(q, f, x).total();
        const double rel = std::abs(a - b) / std::abs(b);
        ok = rel < 1e-6;
        return "relative difference " + format_double(rel);
    });

    check("free packet vs closed form", [&](bool& ok) {
        const Lattice lat{{32, 32, 32}, 0.5};
        const Vec3 x0(0, 0, -1), k0(0, 0, 1);
        const Wavepacket p = gaussian_packet(lat, x0, k0, 1.2);
        const Wavepacket q = propagate(p, nullptr, 0.0, 0.5, 0.5 / 16);
        double err = 0.0;
        for (std::size_t i = 0; i < lat.size(); ++i)
            err = std::max(err, std::abs(q.data[static_cast<Eigen::Index>(i)] - free_gaussian(lat.point(i), 0.5, x0, k0, 1.2)));
        ok = err < 1e-6;
        return "max error " + format_double(err);
    });

    check("split-step norm conservation", [&](bool& ok) {
        const Lattice lat{{32, 32, 32}, 0.5};
        const Wavepacket p = gaussian_packet(lat, Vec3(0, 0, -2), Vec3(0, 0, 1), 1.2);
        const LatticePotential V = lattice_potential(spec, lat);
        PropagateReport rep;
        (void)propagate(p, &V, 0.0, 2.0 * kPi, 2.0 * kPi / 64, &rep);
        ok = rep.norm_drift < 1e-8;
        return "drift over one period " + format_double(rep.norm_drift);
    });

    log << (failures == 0 ? "selftest: all checks passed\n" : "selftest: " + std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? kExitOk : kExitTolerance;
}

int run_command(const RunConfig& cfg, std::ostream& log) {
    if (cfg.command == "direct") return run_direct(cfg, log);
    if (cfg.command == "invert") return run_invert(cfg, log);
    if (cfg.command == "crosscheck") return run_crosscheck(cfg, log);
    if (cfg.command == "moment") return run_moment(cfg, log);
    if (cfg.command == "selftest") {
        SelftestOptions o;
        o.preset = cfg.potential_preset;
        return run_selftest(o, log);
    }
    throw Error(ErrorKind::Config, "unknown command '" + cfg.command + "'");
}

} // namespace flq
