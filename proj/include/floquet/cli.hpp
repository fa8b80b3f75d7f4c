// cli.hpp -- run configuration (flat dotted-key text), the batch drivers behind
// the command-line tool, and the error-to-exit-code mapping.

#pragma once

#include "floquet/common.hpp"
#include "floquet/domain.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace flq {

// ---- configuration ----

// Keys (all optional except `command`); bounds are checked by validate_config:
//   command                   direct | invert | crosscheck | selftest | moment
//   potential.preset          preset name (default yukawa)
//   potential.scale           strength multiplier, 0 <= s <= 100
//   potential.file            potential description file (overrides the preset)
//   grid.L                    radial cutoff, 0 < L <= 50
//   grid.n_r                  radial nodes, 4 <= n_r <= 96
//   grid.angular_order        Lebedev degree (3, 5, ..., 31)
//   lambda                    quasi-energy, not an integer
//   M                         channel truncation, 1 <= M <= 10
//   rho.schedule              increasing list, each 0 < rho <= 1e3
//   output.dir                output directory (env FLOQUET_OUTPUT_DIR overrides)
//   tolerance.unitarity       (0, 1]
//   tolerance.reconstruction  (0, 10]
//   tolerance.crosscheck      (0, 1]
//   inversion.k_extent        0 <= extent <= 20
//   inversion.k_points        1 <= n <= 33
//   inversion.modes           list of temporal modes, |d| <= 4
//   inversion.m1              incident channel of the CGO solutions
//   cgo.K                     Fourier-ball radius of the Faddeev rule, 1 <= K <= 20
//   crosscheck.lattice        three even sizes, each 8 <= n <= 1024
//   crosscheck.spacing        lattice spacing, 0 < h <= 2
//   crosscheck.steps_per_period  time steps per period 2 pi, 8 <= s <= 4096
//   crosscheck.incident       incident channel m
//   moment.k                  k vector "kx, ky, kz"
//   moment.m1, moment.m2      channels of the single pairing query
//   moment.rho                rho of the single pairing query
// Lines are `key = value`; '#' starts a comment.
struct RunConfig {
    std::string command;
    std::string potential_preset = "yukawa";
    double potential_scale = 1.0;
    std::string potential_file;
    double grid_L = 6.0;
    int grid_nr = 20;
    int grid_order = 7;
    double lambda = 2.6;
    int M = 3;
    std::vector<double> rho_schedule{4.0, 8.0, 16.0};
    std::string output_dir = "floquet_out";
    double tol_unitarity = 1e-3;
    double tol_reconstruction = 0.15;
    double tol_crosscheck = 0.05;
    double k_extent = 2.5;
    int k_points = 9;
    std::vector<int> inversion_modes{-1, 0, 1};
    int inversion_m1 = 0;
    double cgo_K = 5.0;
    std::vector<int> lattice{64, 64, 320};
    double lattice_spacing = 0.75;
    int steps_per_period = 64;
    int incident = 0;
    Vec3 moment_k{0.0, 0.0, 0.0};
    int moment_m1 = 0, moment_m2 = 0;
    double moment_rho = 4.0;

    std::string source;  // file the configuration came from (for messages)
};

// Parses `key = value` text; unknown keys and malformed values are Config errors.
RunConfig parse_config(const std::string& text, const std::string& source = "<string>");
// Missing or unreadable file: Config error.
RunConfig load_config(const std::string& path);
// Bound checks (Validation) and referenced-file existence (Config).
void validate_config(const RunConfig& cfg);

// Potential description file: `kind = gaussian|yukawa`, `delta0 = x`, and one
// `mode = d, re, im, width` line per temporal mode.
PotentialSpec read_potential_file(const std::string& path);
PotentialSpec config_potential(const RunConfig& cfg);

// ---- exit codes ----

// 0 success, 2 validation/config/domain/sizing, 3 numerical tolerance, 4 exceptional parameter.
int exit_code(ErrorKind kind);
inline constexpr int kExitOk = 0;
inline constexpr int kExitTolerance = 3;

// ---- drivers (return the exit status; errors propagate as flq::Error) ----

int run_direct(const RunConfig& cfg, std::ostream& log);
int run_invert(const RunConfig& cfg, std::ostream& log);
int run_crosscheck(const RunConfig& cfg, std::ostream& log);
int run_moment(const RunConfig& cfg, std::ostream& log);

struct SelftestOptions {
    std::string preset = "driven-gaussian";
    bool perturb_kernel = false;  // negative control: inject a perturbed scattering kernel
};
int run_selftest(const SelftestOptions& opt, std::ostream& log);

int run_command(const RunConfig& cfg, std::ostream& log);

} // namespace flq
