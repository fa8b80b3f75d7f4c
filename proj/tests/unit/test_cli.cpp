// Configuration parsing, validation, potential files, exit codes and a small
// end-to-end run of the direct driver.

#include "doctest.h"
#include "floquet/cli.hpp"
#include "floquet/smatrix.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace flq;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Numerical;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("configuration text is parsed with comments and lists") {
    const RunConfig c = parse_config(
        "# sample\n"
        "command = invert\n"
        "potential.preset = born-gaussian   # weak\n"
        "grid.n_r = 16\n"
        "grid.angular_order = 17\n"
        "lambda = 0.37\n"
        "rho.schedule = 4, 8, 16, 32\n"
        "inversion.modes = -1, 1\n"
        "crosscheck.lattice = 32, 32, 128\n"
        "moment.k = 1.5, 0, -0.5\n");
    CHECK(c.command == "invert");
    CHECK(c.potential_preset == "born-gaussian");
    CHECK(c.grid_nr == 16);
    CHECK(c.grid_order == 17);
    CHECK(c.lambda == 0.37);
    CHECK(c.rho_schedule == std::vector<double>{4, 8, 16, 32});
    CHECK(c.inversion_modes == std::vector<int>{-1, 1});
    CHECK(c.lattice == std::vector<int>{32, 32, 128});
    CHECK((c.moment_k - Vec3(1.5, 0, -0.5)).norm() == 0.0);
    CHECK_NOTHROW(validate_config(c));
}

TEST_CASE("malformed configurations are Config errors") {
    CHECK(kind_of([] { parse_config("command = direct\nbogus.key = 1\n"); }) == ErrorKind::Config);
    CHECK(kind_of([] { parse_config("grid.n_r = sixteen\n"); }) == ErrorKind::Config);
    CHECK(kind_of([] { parse_config("just some words\n"); }) == ErrorKind::Config);
    CHECK(kind_of([] { parse_config("moment.k = 1, 2\n"); }) == ErrorKind::Config);
    CHECK(kind_of([] { load_config("/nonexistent/run.cfg"); }) == ErrorKind::Config);
    CHECK(kind_of([] { validate_config(parse_config("command = fly\n")); }) == ErrorKind::Config);
    CHECK(kind_of([] { validate_config(parse_config("command = direct\npotential.file = /nonexistent/v.txt\n")); }) ==
          ErrorKind::Config);
}

TEST_CASE("out-of-range values are Validation errors") {
    const char* cases[] = {"lambda = 3", "lambda = -1.0", "grid.n_r = 2", "grid.angular_order = 8", "M = 0",
                           "rho.schedule = 8, 4", "rho.schedule = -1", "tolerance.unitarity = 0",
                           "potential.scale = 1000", "crosscheck.lattice = 33, 32, 32", "inversion.modes = 7",
                           "cgo.K = 0.5", "moment.rho = 0"};
    for (const char* line : cases) {
        CAPTURE(line);
        const RunConfig c = parse_config(std::string("command = direct\n") + line + "\n");
        CHECK(kind_of([&] { validate_config(c); }) == ErrorKind::Validation);
    }
}

TEST_CASE("output directory can be overridden from the environment") {
    ::setenv("FLOQUET_OUTPUT_DIR", "/tmp/floquet_env_out", 1);
    const RunConfig c = parse_config("command = direct\noutput.dir = elsewhere\n");
    ::unsetenv("FLOQUET_OUTPUT_DIR");
    CHECK(c.output_dir == "/tmp/floquet_env_out");
    CHECK(parse_config("output.dir = elsewhere\n").output_dir == "elsewhere");
}

TEST_CASE("potential description files") {
    const std::string path = temp_path("floquet_unit_potential.txt");
    {
        std::ofstream os(path);
        os << "# driven Gaussian\nkind = gaussian\ndelta0 = 1.0\n"
              "mode = -1, -0.2, 0, 1.0\nmode = 0, -0.8, 0, 1.0\nmode = 1, -0.2, 0, 1.0\n";
    }
    const PotentialSpec p = read_potential_file(path);
    CHECK(p.kind == PotentialKind::Gaussian);
    CHECK(p.modes.size() == 3);
    CHECK(p.mode_value(0, 0.0) == cplx(-0.8, 0.0));
    RunConfig c = parse_config("command = direct\npotential.scale = 0.5\npotential.file = " + path + "\n");
    CHECK(config_potential(c).mode_value(1, 0.0) == cplx(-0.1, 0.0));
    {
        std::ofstream os(path);
        os << "kind = gaussian\nmode = 0, -0.8, 0\n";
    }
    CHECK(kind_of([&] { read_potential_file(path); }) == ErrorKind::Config);
    {
        std::ofstream os(path);
        os << "delta0 = 1\n";
    }
    CHECK(kind_of([&] { read_potential_file(path); }) == ErrorKind::Config);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(exit_code(ErrorKind::Validation) == 2);
    CHECK(exit_code(ErrorKind::Config) == 2);
    CHECK(exit_code(ErrorKind::Domain) == 2);
    CHECK(exit_code(ErrorKind::Sizing) == 2);
    CHECK(exit_code(ErrorKind::Numerical) == 3);
    CHECK(exit_code(ErrorKind::Exceptional) == 4);
}

TEST_CASE("direct driver writes a readable S-matrix") {
    const std::string out = temp_path("floquet_unit_direct");
    std::filesystem::remove_all(out);
    const RunConfig c = parse_config("command = direct\npotential.preset = driven-gaussian\ngrid.L = 5\n"
                                     "grid.n_r = 8\ngrid.angular_order = 7\nlambda = 1.4\nM = 2\noutput.dir = " +
                                     out + "\n");
    std::ostringstream log;
    CHECK(run_command(c, log) == kExitOk);
    const ScatteringMatrix S = read_smatrix_csv(out + "/smatrix.csv");
    CHECK(S.lambda == 1.4);
    CHECK(unitarity_defect(S).max() < 1e-3);
    CHECK(std::filesystem::exists(out + "/direct_meta.txt"));
    std::filesystem::remove_all(out);
}

TEST_CASE("moment driver maps parameter errors") {
    RunConfig c = parse_config("command = moment\nlambda = 0.37\nmoment.k = 4, 0, 0\nmoment.rho = 1\n");
    std::ostringstream log;
    CHECK(kind_of([&] { run_moment(c, log); }) == ErrorKind::Validation);
    c = parse_config("command = moment\nlambda = 0.75\nmoment.k = 0, 0, 0\nmoment.rho = 1.5\n");
    CHECK(kind_of([&] { run_moment(c, log); }) == ErrorKind::Exceptional);
}

} // TEST_SUITE
