// inversion.cpp -- moment parameters, pairing integrals, the large-rho limit
// and the Fourier-lattice reconstruction of the potential.

#include "floquet/inversion.hpp"

#include "floquet/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace flq {

namespace {

double distance_to_integer(double v) { return std::abs(v - std::round(v)); }

// (V Phi)_n = sum_d W_d Phi_{n-d} on the channels of Phi.
GridFunction potential_times(const FactorizedPotential& F, const GridFunction& phi) {
    GridFunction out(phi.m_min, phi.n_channels(), static_cast<int>(phi.data.rows()));
    for (const auto& [d, wd] : F.product_modes())
        for (int n = phi.m_min; n <= phi.m_max(); ++n)
            if (phi.has(n - d)) out.col(n) += wd.cwiseProduct(phi.col(n - d));
    return out;
}

cplx pairing_sum(const SpatialGrid& grid, const Vec3& q, const CVec& f) {
    cplx acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) acc += grid.weights[j] * std::exp(kI * q.dot(grid.points[j])) * f[j];
    return 2.0 * kPi * acc;
}

// The growing factor e^{-rho nu.x} of Omega and the decaying conj of the free
// comparison CGO must cancel exactly in the pairing exponent.
void check_balance(const MomentQuery& q, double r_max) {
    const CVec3 p1 = q.first.p_perp.cast<cplx>() + q.first.z * q.first.nu.cast<cplx>();
    const CVec3 p2 = q.second.p_perp.cast<cplx>() + q.second.z * q.second.nu.cast<cplx>();
    // conj(e^{i p2.x}) = e^{-i conj(p2).x}
    const CVec3 total = p1 - p2.conjugate();
    const double growth = total.imag().norm() * r_max;
    if (growth > 1e-8 * (1.0 + q.rho * r_max))
        throw Error(ErrorKind::Numerical, "moment integral: unbalanced growth exponent " + std::to_string(growth));
}

} // namespace

// ---- moment parameters ----

double rho_min(const Vec3& k, double lambda, int m1, int m2) {
    const double m0 = std::max(m1, m2);
    return std::sqrt(std::max(0.25 * k.squaredNorm() - lambda + m0, 0.0));
}

void moment_frame(const Vec3& k, Vec3& nu, Vec3& omega) {
    const double kn = k.norm();
    if (kn < 1e-14) {
        nu = Vec3(0, 0, 1);
        omega = Vec3(1, 0, 0);
        return;
    }
    const Vec3 kh = k / kn;
    nu = kh.unitOrthogonal();
    omega = kh.cross(nu);
}

double admissible_rho(double rho, double lambda, int m_lo, int m_hi) {
    (void)m_lo;
    (void)m_hi;  // integer shifts do not change the fractional part
    const double v = rho * rho + lambda;
    double frac = v - std::floor(v);
    if (std::abs(frac - 0.5) < 0.5 - 1e-3) return rho;
    double shift = 0.5 - frac;
    if (shift < 0.0) shift += 1.0;
    return std::sqrt(rho * rho + shift);
}

MomentQuery moment_params(const Vec3& k, double lambda, int m1, int m2, double rho,
                          const std::optional<std::pair<Vec3, Vec3>>& frame) {
    if (!k.allFinite() || !std::isfinite(rho) || !std::isfinite(lambda))
        throw Error(ErrorKind::Validation, "moment query: non-finite input");
    const double rmin = rho_min(k, lambda, m1, m2);
    if (!(rho > rmin))
        throw Error(ErrorKind::Validation, "moment query: rho = " + format_double(rho) + " must exceed rho_min = " +
                                               format_double(rmin) + " for |k| = " + format_double(k.norm()));
    for (int m : {m1, m2})
        if (distance_to_integer(rho * rho + lambda - m) < 1e-6)
            throw Error(ErrorKind::Exceptional,
                        "moment query: rho^2 + lambda - m is an integer (excluded set); try rho = " +
                            format_double(admissible_rho(rho, lambda, std::min(m1, m2), std::max(m1, m2))));
    MomentQuery q;
    q.k = k;
    q.m1 = m1;
    q.m2 = m2;
    q.lambda = lambda;
    q.rho = rho;
    if (frame) {
        q.nu = frame->first.normalized();
        q.omega = frame->second.normalized();
        const double tol = 1e-10 * (1.0 + k.norm());
        if (std::abs(q.nu.dot(k)) > tol || std::abs(q.omega.dot(k)) > tol || std::abs(q.nu.dot(q.omega)) > 1e-10)
            throw Error(ErrorKind::Validation, "moment query: frame must satisfy k.nu = k.omega = nu.omega = 0");
    } else {
        moment_frame(k, q.nu, q.omega);
    }
    const double kk = 0.25 * k.squaredNorm();
    q.a1 = std::sqrt(rho * rho - kk + lambda - m1);
    q.a2 = std::sqrt(rho * rho - kk + lambda - m2);
    q.first.nu = q.nu;
    q.first.p_perp = 0.5 * k + q.a1 * q.omega;
    q.first.z = cplx(0.0, rho);
    q.second.nu = q.nu;
    q.second.p_perp = -0.5 * k + q.a2 * q.omega;
    q.second.z = cplx(0.0, -rho);
    return q;
}

// ---- pairing integral ----

MomentValue moment_integral(const SpatialGrid& grid, const FactorizedPotential& F, const MomentQuery& q,
                            const CgoOptions& opt) {
    check_balance(q, grid.L);
    MomentValue out;
    if (F.is_zero()) return out;
    CgoOptions o = opt;
    o.channel_halfwidth = std::max(o.channel_halfwidth, std::abs(q.m2 - q.m1));
    const CgoSolution sol = solve_cgo(grid, F, q.first, q.m1, q.lambda, o);
    const GridFunction vphi = potential_times(F, sol.reduced);
    out.value = pairing_sum(grid, q.pairing_vector(), vphi.col(q.m2));
    out.cgo = sol.report;
    return out;
}

cplx born_moment(const SpatialGrid& grid, const FourierPotential& V, const Vec3& k, int m1, int m2) {
    return pairing_sum(grid, k, V.mode(m2 - m1));
}

MomentEngine::MomentEngine(const SpatialGrid& grid, const FactorizedPotential& F, double lambda, const CgoOptions& opt)
    : grid_(grid), F_(F), lambda_(lambda), opt_(opt) {}

const CgoSolution& MomentEngine::canonical(double rho, int m1) {
    const auto key = std::make_pair(rho, m1);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    FaddeevParams q;
    q.nu = Vec3(0, 0, 1);
    q.p_perp = Vec3(std::sqrt(rho * rho + lambda_ - m1), 0, 0);
    q.z = cplx(0.0, rho);
    CgoSolution sol = solve_cgo(grid_, F_, q, m1, lambda_, opt_);
    vphi_[key] = potential_times(F_, sol.reduced);
    return cache_.emplace(key, std::move(sol)).first->second;
}

MomentValue MomentEngine::integral(const MomentQuery& q) {
    check_balance(q, grid_.L);
    MomentValue out;
    if (F_.is_zero()) return out;
    if (std::abs(q.m2 - q.m1) > opt_.channel_halfwidth)
        throw Error(ErrorKind::Validation, "moment engine: |m2 - m1| exceeds the retained channel half-width");
    const CgoSolution& sol = canonical(q.rho, q.m1);
    const GridFunction& vphi = vphi_.at({q.rho, q.m1});
    // Rotation R with R p_perp^ = e_x, R nu = e_z.
    const Vec3 e1 = q.first.p_perp.normalized();
    const Vec3 e2 = q.nu.cross(e1);
    const Vec3 Q = q.pairing_vector();
    const Vec3 RQ(e1.dot(Q), e2.dot(Q), q.nu.dot(Q));
    out.value = pairing_sum(grid_, RQ, vphi.col(q.m2));
    out.cgo = sol.report;
    return out;
}

// ---- large-rho limit ----

cplx richardson_limit(const std::vector<double>& rho, const std::vector<cplx>& samples, int max_order) {
    if (rho.size() != samples.size() || rho.empty())
        throw Error(ErrorKind::Validation, "richardson_limit: need matching, non-empty samples");
    const int n = static_cast<int>(rho.size());
    const int use = std::min(n, max_order + 1);
    std::vector<double> h;
    std::vector<cplx> p;
    for (int i = n - use; i < n; ++i) {
        h.push_back(1.0 / rho[i]);
        p.push_back(samples[i]);
    }
    // Neville's scheme at h = 0.
    for (int level = 1; level < use; ++level)
        for (int i = 0; i + level < use; ++i)
            p[i] = (h[i + level] * p[i] - h[i] * p[i + 1]) / (h[i + level] - h[i]);
    return p[0];
}

LimitResult fourier_limit(MomentEngine& engine, const Vec3& k, int m1, int m2, const std::vector<double>& rho_list) {
    if (rho_list.size() < 3) throw Error(ErrorKind::Validation, "fourier_limit: at least 3 rho values are required");
    for (std::size_t i = 1; i < rho_list.size(); ++i)
        if (!(rho_list[i] > rho_list[i - 1])) throw Error(ErrorKind::Validation, "fourier_limit: rho list must increase");
    LimitResult r;
    r.rho = rho_list;
    for (double rho : rho_list) {
        const MomentQuery q = moment_params(k, engine.lambda(), m1, m2, rho);
        r.samples.push_back(engine.integral(q).value);
    }
    r.value = richardson_limit(r.rho, r.samples);
    const double scale = std::max({std::abs(r.value), std::abs(r.samples.back()), 1e-300});
    r.spread = std::abs(r.value - r.samples.back()) / scale;
    for (std::size_t i = 2; i < r.samples.size(); ++i) {
        const double d1 = std::abs(r.samples[i - 1] - r.samples[i - 2]);
        const double d2 = std::abs(r.samples[i] - r.samples[i - 1]);
        if (d2 > d1 + 1e-12 * scale) r.monotone = false;
    }
    return r;
}

// ---- reconstruction ----

std::vector<Vec3> KLattice::points() const {
    std::vector<Vec3> pts;
    if (n < 1) return pts;
    const double h = spacing();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                const auto c = [&](int a) { return n > 1 ? -extent + a * h : 0.0; };
                pts.emplace_back(c(i), c(j), c(l));
            }
    return pts;
}

bool k_reachable(const Vec3& k, double lambda, int m1, int m2, const std::vector<double>& rho_list) {
    if (rho_list.empty()) return false;
    return rho_min(k, lambda, m1, m2) < *std::min_element(rho_list.begin(), rho_list.end());
}

double relative_mode_error(const SpatialGrid& grid, const std::map<int, CVec>& a, const std::map<int, CVec>& truth,
                           const std::vector<int>& modes) {
    double num = 0.0, den = 0.0;
    const CVec zero = CVec::Zero(grid.size());
    for (int d : modes) {
        const CVec& x = a.count(d) ? a.at(d) : zero;
        const CVec& t = truth.count(d) ? truth.at(d) : zero;
        for (int j = 0; j < grid.size(); ++j) {
            num += grid.weights[j] * std::norm(x[j] - t[j]);
            den += grid.weights[j] * std::norm(t[j]);
        }
    }
    if (den == 0.0) return std::sqrt(num);
    return std::sqrt(num / den);
}

RecoveredPotential reconstruct(const SpatialGrid& grid, const FactorizedPotential& F, double lambda,
                               const ReconstructOptions& opt, const FourierPotential* truth) {
    if (opt.lattice.n < 1 || opt.lattice.extent < 0.0) throw Error(ErrorKind::Validation, "reconstruct: bad k-lattice");
    if (opt.mode_range.empty()) throw Error(ErrorKind::Validation, "reconstruct: empty mode range");
    CgoOptions cgo = opt.cgo;
    for (int d : opt.mode_range) cgo.channel_halfwidth = std::max(cgo.channel_halfwidth, std::abs(d));
    MomentEngine engine(grid, F, lambda, cgo);
    RecoveredPotential out;
    out.rho_list = opt.rho_list;
    const std::vector<Vec3> ks = opt.lattice.points();
    for (const Vec3& k : ks)
        for (int d : opt.mode_range) {
            FourierSample s;
            s.k = k;
            s.mode = d;
            const int m2 = opt.m1 + d;
            if (!k_reachable(k, lambda, opt.m1, m2, opt.rho_list)) {
                s.skipped = true;
                ++out.skipped;
                out.samples.push_back(s);
                continue;
            }
            const LimitResult lim = fourier_limit(engine, k, opt.m1, m2, opt.rho_list);
            s.value = lim.value / (2.0 * kPi);
            s.low_confidence = lim.low_confidence();
            out.samples.push_back(s);
        }
    out.cgo_solves = engine.solves();

    // Inverse transform on the lattice: V_d(x) = (2 pi)^{-3} sum_k dk^3 e^{-ik.x} V^_d(k).
    const double h = opt.lattice.spacing();
    const double cell = opt.lattice.n > 1 ? h * h * h : 1.0;
    for (int d : opt.mode_range) {
        CVec v = CVec::Zero(grid.size());
        for (const FourierSample& s : out.samples) {
            if (s.mode != d || s.skipped) continue;
            for (int j = 0; j < grid.size(); ++j) v[j] += std::exp(-kI * s.k.dot(grid.points[j])) * s.value;
        }
        out.modes[d] = v * (cell / std::pow(2.0 * kPi, 3));
    }

    // Hermitian symmetry of the samples (real potentials).
    double vmax = 0.0, defect = 0.0;
    std::map<std::tuple<long, long, long, int>, cplx> index;
    const auto key = [&](const Vec3& k, int d) {
        const double step = h > 0.0 ? h : 1.0;
        return std::make_tuple(std::lround(k.x() / step), std::lround(k.y() / step), std::lround(k.z() / step), d);
    };
    for (const FourierSample& s : out.samples)
        if (!s.skipped) {
            index[key(s.k, s.mode)] = s.value;
            vmax = std::max(vmax, std::abs(s.value));
        }
    for (const FourierSample& s : out.samples) {
        if (s.skipped) continue;
        auto it = index.find(key(-s.k, -s.mode));
        if (it != index.end()) defect = std::max(defect, std::abs(it->second - std::conj(s.value)));
    }
    out.hermitian_defect = vmax > 0.0 ? defect / vmax : 0.0;

    if (truth) out.relative_l2_error = relative_mode_error(grid, out.modes, truth->modes, opt.mode_range);
    return out;
}

void write_reconstruction_csv(const std::string& path, const RecoveredPotential& r) {
    std::ofstream os(path);
    if (!os) throw Error(ErrorKind::Config, "cannot write " + path);
    os << "# floquet-reconstruction v1\n";
    os << "# rho=";
    for (std::size_t i = 0; i < r.rho_list.size(); ++i) os << (i ? ";" : "") << format_double(r.rho_list[i]);
    os << "\n# cgo_solves=" << r.cgo_solves << "\n# skipped=" << r.skipped << "\n";
    os << "# hermitian_defect=" << format_double(r.hermitian_defect) << "\n";
    os << "# relative_l2_error=" << format_double(r.relative_l2_error) << "\n";
    os << "kx,ky,kz,dm,re,im,confidence\n";
    for (const FourierSample& s : r.samples)
        os << format_double(s.k.x()) << ',' << format_double(s.k.y()) << ',' << format_double(s.k.z()) << ','
           << s.mode << ',' << format_double(s.value.real()) << ',' << format_double(s.value.imag()) << ','
           << (s.skipped ? "skipped" : (s.low_confidence ? "low" : "ok")) << '\n';
    if (!os) throw Error(ErrorKind::Config, "write failed: " + path);
}

RecoveredPotential read_reconstruction_csv(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || trim(lines[0]) != "# floquet-reconstruction v1")
        throw Error(ErrorKind::Config, "read_reconstruction_csv: " + path + " lacks the v1 header");
    RecoveredPotential r;
    bool columns = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = trim(line.substr(1, eq - 1)), val = trim(line.substr(eq + 1));
            if (key == "rho") {
                for (const auto& t : split(val, ';')) r.rho_list.push_back(parse_double(t, path + ": rho"));
            } else if (key == "cgo_solves") {
                r.cgo_solves = static_cast<int>(parse_int(val, path + ": cgo_solves"));
            } else if (key == "skipped") {
                r.skipped = static_cast<int>(parse_int(val, path + ": skipped"));
            } else if (key == "hermitian_defect") {
                r.hermitian_defect = parse_double(val, path + ": hermitian_defect");
            } else if (key == "relative_l2_error") {
                r.relative_l2_error = parse_double(val, path + ": relative_l2_error");
            }
            continue;
        }
        if (!columns) {
            if (line != "kx,ky,kz,dm,re,im,confidence")
                throw Error(ErrorKind::Config, "read_reconstruction_csv: unexpected column line in " + path);
            columns = true;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 7) throw Error(ErrorKind::Config, "read_reconstruction_csv: malformed row in " + path);
        FourierSample s;
        s.k = Vec3(parse_double(f[0], path), parse_double(f[1], path), parse_double(f[2], path));
        s.mode = static_cast<int>(parse_int(f[3], path));
        s.value = cplx(parse_double(f[4], path), parse_double(f[5], path));
        const std::string c = trim(f[6]);
        if (c == "skipped") s.skipped = true;
        else if (c == "low") s.low_confidence = true;
        else if (c != "ok") throw Error(ErrorKind::Config, "read_reconstruction_csv: bad confidence '" + c + "'");
        r.samples.push_back(s);
    }
    return r;
}

} // namespace flq
