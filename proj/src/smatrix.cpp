// smatrix.cpp -- scattering amplitudes and the discrete scattering operator.

#include "floquet/smatrix.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace flq {

// ---- amplitudes ----

namespace {

// Conjugated test waves 2 pi c_n conj(phi_n(x; nu_i)) w_x, one column per direction.
CMat pairing_waves(const FieldSolver& solver, int n, const std::vector<Vec3>& dirs) {
    const FreeResolvent& R = solver.resolvent();
    const SpatialGrid& g = R.grid();
    CMat E(g.size(), static_cast<Eigen::Index>(dirs.size()));
    for (size_t i = 0; i < dirs.size(); ++i) {
        CVec e = incident_field(R, solver.channels(), n, dirs[i]);
        for (int x = 0; x < g.size(); ++x) E(x, static_cast<Eigen::Index>(i)) = 2.0 * kPi * g.weights[x] * std::conj(e[x]);
    }
    return E;
}

CVec stacked(const GridFunction& phi) {
    CVec v(phi.data.size());
    const Eigen::Index N = phi.data.rows();
    for (int c = 0; c < phi.n_channels(); ++c) v.segment(c * N, N) = phi.data.col(c);
    return v;
}

} // namespace

cplx amplitude(const FieldSolver& solver, const DistortedWave& wave, int n, const Vec3& nu) {
    if (!solver.channels().is_open(n)) throw Error(ErrorKind::Domain, "amplitude: outgoing channel is closed");
    const GridFunction Vphi = solver.potential_times(stacked(wave.phi));
    const CMat E = pairing_waves(solver, n, {nu});
    return (E.col(0).transpose() * Vphi.col(n))(0);
}

ScatteringMatrix assemble_S(const FieldSolver& solver) {
    const ChannelSet& ch = solver.channels();
    const SpatialGrid& g = solver.resolvent().grid();
    ScatteringMatrix S;
    S.lambda = ch.lambda;
    S.open = ch.open;
    S.sphere = g.sphere;
    S.sign = solver.sign();
    S.M = ch.M;
    S.m_lo = ch.m_lo;
    S.m_hi = ch.m_hi;
    S.grid_hash = g.hash();
    const int nd = g.n_ang();
    std::map<int, CMat> E;
    for (int n : ch.open) E[n] = pairing_waves(solver, n, g.sphere.nodes);
    for (int m : ch.open) {
        std::vector<Incident> incs;
        for (int j = 0; j < nd; ++j) incs.push_back({m, ch.lambda, g.sphere.nodes[j]});
        const auto waves = solver.solve_many(incs);
        for (int n : ch.open) S.blocks[{n, m}] = CMat(nd, nd);
        for (int j = 0; j < nd; ++j) {
            const GridFunction Vphi = solver.potential_times(stacked(waves[j].phi));
            for (int n : ch.open) S.blocks[{n, m}].col(j) = E[n].transpose() * Vphi.col(n);
        }
    }
    return S;
}

ScatteringMatrix assemble_S(const FreeResolvent& R, const ChannelSet& channels, const FactorizedPotential& F,
                            WaveSign sign) {
    FieldSolver solver(R, channels, F, sign);
    return assemble_S(solver);
}

ScatteringMatrix born_S(const FreeResolvent& R, const ChannelSet& ch, const FactorizedPotential& F) {
    const SpatialGrid& g = R.grid();
    ScatteringMatrix S;
    S.lambda = ch.lambda;
    S.open = ch.open;
    S.sphere = g.sphere;
    S.M = ch.M;
    S.m_lo = ch.m_lo;
    S.m_hi = ch.m_hi;
    S.grid_hash = g.hash();
    const auto W = F.product_modes();
    const int nd = g.n_ang();
    std::map<int, CMat> inc;
    for (int m : ch.open) {
        inc[m] = CMat(g.size(), nd);
        for (int j = 0; j < nd; ++j) inc[m].col(j) = incident_field(R, ch, m, g.sphere.nodes[j]);
    }
    for (int n : ch.open)
        for (int m : ch.open) {
            auto it = W.find(n - m);
            CMat blk = CMat::Zero(nd, nd);
            if (it != W.end()) {
                const CVec wt = (2.0 * kPi) * it->second.cwiseProduct(Eigen::Map<const RVec>(g.weights.data(), g.size()).cast<cplx>());
                blk = inc[n].adjoint() * wt.asDiagonal() * inc[m];
            }
            S.blocks[{n, m}] = blk;
        }
    return S;
}

// ---- operator form and diagnostics ----

CMat ScatteringMatrix::t_matrix() const {
    const int nd = n_dirs(), no = static_cast<int>(open.size());
    CMat T = CMat::Zero(no * nd, no * nd);
    for (int a = 0; a < no; ++a)
        for (int b = 0; b < no; ++b) {
            auto it = blocks.find({open[a], open[b]});
            if (it != blocks.end()) T.block(a * nd, b * nd, nd, nd) = it->second;
        }
    return T;
}

CMat ScatteringMatrix::operator_matrix() const {
    const int nd = n_dirs(), no = static_cast<int>(open.size());
    RVec sw(no * nd);
    for (int a = 0; a < no; ++a)
        for (int i = 0; i < nd; ++i) sw[a * nd + i] = std::sqrt(sphere.weights[i]);
    const cplx f = sign == WaveSign::Minus ? -2.0 * kPi * kI : 2.0 * kPi * kI;
    CMat S = f * (sw.asDiagonal() * t_matrix() * sw.asDiagonal());
    S.diagonal().array() += 1.0;
    return S;
}

namespace {
double spectral_norm(const CMat& A) {
    if (A.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMat> svd(A);
    return svd.singularValues()(0);
}
} // namespace

UnitarityDefect unitarity_defect(const ScatteringMatrix& S) {
    const CMat A = S.operator_matrix();
    const CMat I = CMat::Identity(A.rows(), A.cols());
    return {spectral_norm(A.adjoint() * A - I), spectral_norm(A * A.adjoint() - I)};
}

double inverse_formula_defect(const ScatteringMatrix& S_minus, const ScatteringMatrix& T_plus) {
    if (S_minus.open != T_plus.open || S_minus.n_dirs() != T_plus.n_dirs())
        throw Error(ErrorKind::Validation, "inverse_formula_defect: incompatible channel/direction sets");
    const CMat A = S_minus.operator_matrix() * T_plus.operator_matrix();
    return spectral_norm(A - CMat::Identity(A.rows(), A.cols()));
}

RVec compact_profile(const ScatteringMatrix& S) {
    CMat A = S.operator_matrix();
    A.diagonal().array() -= 1.0;
    Eigen::JacobiSVD<CMat> svd(A);
    return svd.singularValues();
}

// ---- CSV ----

namespace {

std::string fmt(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

double parse_double(const std::string& s, const std::string& path) {
    double v = 0.0;
    const char* b = s.data();
    while (*b == ' ') ++b;
    auto [p, ec] = std::from_chars(b, s.data() + s.size(), v);
    if (ec != std::errc()) throw Error(ErrorKind::Validation, "read_smatrix_csv: bad number '" + s + "' in " + path);
    return v;
}

} // namespace

void write_smatrix_csv(const ScatteringMatrix& S, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error(ErrorKind::Config, "cannot write " + path);
    const UnitarityDefect d = unitarity_defect(S);
    os << "# floquet-smatrix v1\n";
    os << "# lambda=" << fmt(S.lambda) << "\n";
    os << "# sign=" << (S.sign == WaveSign::Minus ? "minus" : "plus") << "\n";
    os << "# M=" << S.M << "\n# m_lo=" << S.m_lo << "\n# m_hi=" << S.m_hi << "\n";
    os << "# angular_order=" << S.sphere.degree << "\n";
    os << "# grid_hash=" << S.grid_hash << "\n";
    os << "# potential=" << S.potential << "\n";
    os << "# open=";
    for (size_t i = 0; i < S.open.size(); ++i) os << (i ? ";" : "") << S.open[i];
    os << "\n# unitarity_defect=" << fmt(d.max()) << "\n";
    os << "n,m,i_nu,i_nu_prime,re,im\n";
    for (const auto& [key, blk] : S.blocks)
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j)
                os << key.first << ',' << key.second << ',' << i << ',' << j << ',' << fmt(blk(i, j).real()) << ','
                   << fmt(blk(i, j).imag()) << '\n';
    if (!os) throw Error(ErrorKind::Config, "write failed: " + path);
}

ScatteringMatrix read_smatrix_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorKind::Config, "cannot open " + path);
    ScatteringMatrix S;
    std::string line;
    int order = -1;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = line.substr(2, eq - 2), val = line.substr(eq + 1);
            if (key == "lambda") S.lambda = parse_double(val, path);
            else if (key == "sign") S.sign = val == "plus" ? WaveSign::Plus : WaveSign::Minus;
            else if (key == "M") S.M = std::stoi(val);
            else if (key == "m_lo") S.m_lo = std::stoi(val);
            else if (key == "m_hi") S.m_hi = std::stoi(val);
            else if (key == "angular_order") order = std::stoi(val);
            else if (key == "grid_hash") S.grid_hash = val;
            else if (key == "potential") S.potential = val;
            else if (key == "open") {
                std::stringstream ss(val);
                std::string tok;
                while (std::getline(ss, tok, ';'))
                    if (!tok.empty()) S.open.push_back(std::stoi(tok));
            }
            continue;
        }
        if (!header) {
            if (line.rfind("n,m,", 0) != 0) throw Error(ErrorKind::Validation, "read_smatrix_csv: missing column header in " + path);
            header = true;
            if (order < 0) throw Error(ErrorKind::Validation, "read_smatrix_csv: missing angular_order in " + path);
            S.sphere = lebedev(order);
            for (int n : S.open)
                for (int m : S.open) S.blocks[{n, m}] = CMat::Zero(S.n_dirs(), S.n_dirs());
            continue;
        }
        std::stringstream ss(line);
        std::string f[6];
        for (auto& s : f)
            if (!std::getline(ss, s, ',')) throw Error(ErrorKind::Validation, "read_smatrix_csv: short row in " + path);
        const int n = std::stoi(f[0]), m = std::stoi(f[1]), i = std::stoi(f[2]), j = std::stoi(f[3]);
        auto it = S.blocks.find({n, m});
        if (it == S.blocks.end() || i < 0 || j < 0 || i >= S.n_dirs() || j >= S.n_dirs())
            throw Error(ErrorKind::Validation, "read_smatrix_csv: index out of range in " + path);
        it->second(i, j) = cplx(parse_double(f[4], path), parse_double(f[5], path));
    }
    if (!header) throw Error(ErrorKind::Validation, "read_smatrix_csv: no data in " + path);
    return S;
}

} // namespace flq
