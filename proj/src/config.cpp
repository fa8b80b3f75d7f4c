// config.cpp -- flat dotted-key run configuration and potential files.

#include "floquet/cli.hpp"

#include "floquet/io.hpp"
#include "floquet/quadrature.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace flq {

namespace {

std::vector<double> parse_doubles(const std::string& v, const std::string& ctx) {
    std::vector<double> out;
    for (const auto& t : split(v, ',')) out.push_back(parse_double(t, ctx));
    return out;
}

std::vector<int> parse_ints(const std::string& v, const std::string& ctx) {
    std::vector<int> out;
    for (const auto& t : split(v, ',')) out.push_back(static_cast<int>(parse_int(t, ctx)));
    return out;
}

[[noreturn]] void bad(const RunConfig& c, const std::string& msg) {
    throw Error(ErrorKind::Validation, c.source + ": " + msg);
}

} // namespace

// ---- parsing ----

RunConfig parse_config(const std::string& text, const std::string& source) {
    RunConfig c;
    c.source = source;
    using Setter = std::function<void(const std::string&, const std::string&)>;
    const std::map<std::string, Setter> keys = {
        {"command", [&](const std::string& v, const std::string&) { c.command = v; }},
        {"potential.preset", [&](const std::string& v, const std::string&) { c.potential_preset = v; }},
        {"potential.scale", [&](const std::string& v, const std::string& x) { c.potential_scale = parse_double(v, x); }},
        {"potential.file", [&](const std::string& v, const std::string&) { c.potential_file = v; }},
        {"grid.L", [&](const std::string& v, const std::string& x) { c.grid_L = parse_double(v, x); }},
        {"grid.n_r", [&](const std::string& v, const std::string& x) { c.grid_nr = static_cast<int>(parse_int(v, x)); }},
        {"grid.angular_order",
         [&](const std::string& v, const std::string& x) { c.grid_order = static_cast<int>(parse_int(v, x)); }},
        {"lambda", [&](const std::string& v, const std::string& x) { c.lambda = parse_double(v, x); }},
        {"M", [&](const std::string& v, const std::string& x) { c.M = static_cast<int>(parse_int(v, x)); }},
        {"rho.schedule", [&](const std::string& v, const std::string& x) { c.rho_schedule = parse_doubles(v, x); }},
        {"output.dir", [&](const std::string& v, const std::string&) { c.output_dir = v; }},
        {"tolerance.unitarity",
         [&](const std::string& v, const std::string& x) { c.tol_unitarity = parse_double(v, x); }},
        {"tolerance.reconstruction",
         [&](const std::string& v, const std::string& x) { c.tol_reconstruction = parse_double(v, x); }},
        {"tolerance.crosscheck",
         [&](const std::string& v, const std::string& x) { c.tol_crosscheck = parse_double(v, x); }},
        {"inversion.k_extent", [&](const std::string& v, const std::string& x) { c.k_extent = parse_double(v, x); }},
        {"inversion.k_points",
         [&](const std::string& v, const std::string& x) { c.k_points = static_cast<int>(parse_int(v, x)); }},
        {"inversion.modes", [&](const std::string& v, const std::string& x) { c.inversion_modes = parse_ints(v, x); }},
        {"inversion.m1",
         [&](const std::string& v, const std::string& x) { c.inversion_m1 = static_cast<int>(parse_int(v, x)); }},
        {"cgo.K", [&](const std::string& v, const std::string& x) { c.cgo_K = parse_double(v, x); }},
        {"crosscheck.lattice", [&](const std::string& v, const std::string& x) { c.lattice = parse_ints(v, x); }},
        {"crosscheck.spacing",
         [&](const std::string& v, const std::string& x) { c.lattice_spacing = parse_double(v, x); }},
        {"crosscheck.steps_per_period",
         [&](const std::string& v, const std::string& x) { c.steps_per_period = static_cast<int>(parse_int(v, x)); }},
        {"crosscheck.incident",
         [&](const std::string& v, const std::string& x) { c.incident = static_cast<int>(parse_int(v, x)); }},
        {"moment.k",
         [&](const std::string& v, const std::string& x) {
             const auto k = parse_doubles(v, x);
             if (k.size() != 3) throw Error(ErrorKind::Config, x + ": expected three components");
             c.moment_k = Vec3(k[0], k[1], k[2]);
         }},
        {"moment.m1", [&](const std::string& v, const std::string& x) { c.moment_m1 = static_cast<int>(parse_int(v, x)); }},
        {"moment.m2", [&](const std::string& v, const std::string& x) { c.moment_m2 = static_cast<int>(parse_int(v, x)); }},
        {"moment.rho", [&](const std::string& v, const std::string& x) { c.moment_rho = parse_double(v, x); }},
    };

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        const std::string where = source + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw Error(ErrorKind::Config, where + ": expected 'key = value'");
        const std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
        auto it = keys.find(key);
        if (it == keys.end()) throw Error(ErrorKind::Config, where + ": unknown key '" + key + "'");
        try {
            it->second(val, where + " (" + key + ")");
        } catch (const Error& e) {
            throw Error(ErrorKind::Config, e.what());
        }
    }
    if (const char* env = std::getenv("FLOQUET_OUTPUT_DIR"); env && *env) c.output_dir = env;
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorKind::Config, "cannot open configuration file '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str(), path);
}

// ---- validation ----

void validate_config(const RunConfig& c) {
    static const std::vector<std::string> commands{"direct", "invert", "crosscheck", "selftest", "moment"};
    if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
        throw Error(ErrorKind::Config, c.source + ": command must be one of direct, invert, crosscheck, selftest, moment");
    if (!(c.potential_scale >= 0.0 && c.potential_scale <= 100.0)) bad(c, "potential.scale must lie in [0, 100]");
    if (!c.potential_file.empty() && !std::filesystem::exists(c.potential_file))
        throw Error(ErrorKind::Config, c.source + ": potential file '" + c.potential_file + "' does not exist");
    if (!(c.grid_L > 0.0 && c.grid_L <= 50.0)) bad(c, "grid.L must lie in (0, 50]");
    if (c.grid_nr < 4 || c.grid_nr > 96) bad(c, "grid.n_r must lie in [4, 96]");
    const auto& degs = lebedev_degrees();
    if (std::find(degs.begin(), degs.end(), c.grid_order) == degs.end())
        bad(c, "grid.angular_order must be an odd Lebedev degree in [3, 31]");
    if (!std::isfinite(c.lambda)) bad(c, "lambda must be finite");
    if (std::abs(c.lambda - std::round(c.lambda)) < 1e-9)
        bad(c, "lambda = " + format_double(c.lambda) + " is an integer (threshold); choose lambda outside Z");
    if (c.M < 1 || c.M > 10) bad(c, "M must lie in [1, 10]");
    if (c.rho_schedule.empty()) bad(c, "rho.schedule must not be empty");
    for (std::size_t i = 0; i < c.rho_schedule.size(); ++i) {
        if (!(c.rho_schedule[i] > 0.0 && c.rho_schedule[i] <= 1e3)) bad(c, "rho.schedule entries must lie in (0, 1e3]");
        if (i > 0 && !(c.rho_schedule[i] > c.rho_schedule[i - 1])) bad(c, "rho.schedule must be increasing");
    }
    if (c.output_dir.empty()) bad(c, "output.dir must not be empty");
    if (!(c.tol_unitarity > 0.0 && c.tol_unitarity <= 1.0)) bad(c, "tolerance.unitarity must lie in (0, 1]");
    if (!(c.tol_reconstruction > 0.0 && c.tol_reconstruction <= 10.0))
        bad(c, "tolerance.reconstruction must lie in (0, 10]");
    if (!(c.tol_crosscheck > 0.0 && c.tol_crosscheck <= 1.0)) bad(c, "tolerance.crosscheck must lie in (0, 1]");
    if (!(c.k_extent >= 0.0 && c.k_extent <= 20.0)) bad(c, "inversion.k_extent must lie in [0, 20]");
    if (c.k_points < 1 || c.k_points > 33) bad(c, "inversion.k_points must lie in [1, 33]");
    if (c.inversion_modes.empty()) bad(c, "inversion.modes must not be empty");
    for (int d : c.inversion_modes)
        if (std::abs(d) > 4) bad(c, "inversion.modes entries must satisfy |d| <= 4");
    if (!(c.cgo_K >= 1.0 && c.cgo_K <= 20.0)) bad(c, "cgo.K must lie in [1, 20]");
    if (c.lattice.size() != 3) bad(c, "crosscheck.lattice needs three sizes");
    for (int n : c.lattice)
        if (n < 8 || n > 1024 || n % 2 != 0) bad(c, "crosscheck.lattice sizes must be even and in [8, 1024]");
    if (!(c.lattice_spacing > 0.0 && c.lattice_spacing <= 2.0)) bad(c, "crosscheck.spacing must lie in (0, 2]");
    if (c.steps_per_period < 8 || c.steps_per_period > 4096)
        bad(c, "crosscheck.steps_per_period must lie in [8, 4096]");
    if (!(c.moment_rho > 0.0)) bad(c, "moment.rho must be positive");
}

// ---- potentials ----

PotentialSpec read_potential_file(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    PotentialSpec p;
    bool have_kind = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = lines[i];
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const std::string where = path + ":" + std::to_string(i + 1);
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::Config, where + ": expected 'key = value'");
        const std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
        if (key == "kind") {
            if (val == "gaussian") p.kind = PotentialKind::Gaussian;
            else if (val == "yukawa") p.kind = PotentialKind::Yukawa;
            else throw Error(ErrorKind::Config, where + ": kind must be gaussian or yukawa");
            have_kind = true;
        } else if (key == "delta0") {
            p.delta0 = parse_double(val, where);
        } else if (key == "mode") {
            const auto f = split(val, ',');
            if (f.size() != 4) throw Error(ErrorKind::Config, where + ": mode needs 'd, re, im, width'");
            ModeSpec m;
            m.m = static_cast<int>(parse_int(f[0], where));
            m.amplitude = cplx(parse_double(f[1], where), parse_double(f[2], where));
            m.width = parse_double(f[3], where);
            if (!(m.width > 0.0)) throw Error(ErrorKind::Config, where + ": width must be positive");
            p.modes.push_back(m);
        } else {
            throw Error(ErrorKind::Config, where + ": unknown key '" + key + "'");
        }
    }
    if (!have_kind) throw Error(ErrorKind::Config, path + ": missing 'kind'");
    if (!(p.delta0 > 0.0)) throw Error(ErrorKind::Config, path + ": delta0 must be positive");
    return p;
}

PotentialSpec config_potential(const RunConfig& cfg) {
    PotentialSpec p = cfg.potential_file.empty() ? preset_potential(cfg.potential_preset)
                                                 : read_potential_file(cfg.potential_file);
    return p.scaled(cfg.potential_scale);
}

// ---- exit codes ----

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Validation:
        case ErrorKind::Config:
        case ErrorKind::Domain:
        case ErrorKind::Sizing:
            return 2;
        case ErrorKind::Numerical:
            return 3;
        case ErrorKind::Exceptional:
            return 4;
    }
    return 1;
}

} // namespace flq
