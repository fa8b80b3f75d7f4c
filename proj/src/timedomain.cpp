// timedomain.cpp -- FFTW split-step propagation and wavepacket extraction.

#include "floquet/timedomain.hpp"

#include "floquet/channel_solver.hpp"
#include "floquet/faddeev.hpp"
#include "floquet/io.hpp"
#include "floquet/kernels.hpp"
#include "floquet/quadrature.hpp"

#include <fftw3.h>

#include <cstdint>
#include <cstring>
#include <fstream>
#include <mutex>
#include <sstream>

namespace flq {

// ---- lattice ----

double Lattice::coord(int axis, int j) const {
    const int nn = n[axis];
    return ((j < nn / 2) ? j : j - nn) * h + 0.5 * h;
}

double Lattice::wavenumber(int axis, int j) const {
    const int nn = n[axis];
    return 2.0 * kPi * ((j < nn / 2) ? j : j - nn) / (nn * h);
}

Vec3 Lattice::point(std::size_t idx) const {
    const int l = static_cast<int>(idx % n[2]);
    const int j = static_cast<int>((idx / n[2]) % n[1]);
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(n[1]) * n[2]));
    return {coord(0, i), coord(1, j), coord(2, l)};
}

Vec3 Lattice::wavevector(std::size_t idx) const {
    const int l = static_cast<int>(idx % n[2]);
    const int j = static_cast<int>((idx / n[2]) % n[1]);
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(n[1]) * n[2]));
    return {wavenumber(0, i), wavenumber(1, j), wavenumber(2, l)};
}

double Wavepacket::norm() const {
    return std::sqrt(data.squaredNorm() * lattice.cell_volume());
}

namespace {

void check_lattice(const Lattice& lat) {
    for (int a = 0; a < 3; ++a)
        if (lat.n[a] < 4 || lat.n[a] % 2 != 0)
            throw Error(ErrorKind::Validation, "lattice: each dimension must be even and >= 4");
    if (!(lat.h > 0.0)) throw Error(ErrorKind::Validation, "lattice: spacing must be positive");
    if (lat.size() * 16.0 * 6.0 > kDenseBudgetBytes)
        throw Error(ErrorKind::Sizing, "lattice: " + std::to_string(lat.size()) + " nodes exceed the memory budget");
}

// ---- FFT plans ----

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class Fft3 {
public:
    Fft3(const Lattice& lat, CVec& buf) : n_(lat.size()) {
        std::lock_guard<std::mutex> lock(planner_mutex());
        auto* p = reinterpret_cast<fftw_complex*>(buf.data());
        fwd_ = fftw_plan_dft_3d(lat.n[0], lat.n[1], lat.n[2], p, p, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_3d(lat.n[0], lat.n[1], lat.n[2], p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!fwd_ || !bwd_) throw Error(ErrorKind::Numerical, "FFTW plan creation failed");
    }
    ~Fft3() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }
    Fft3(const Fft3&) = delete;
    Fft3& operator=(const Fft3&) = delete;

    // Unnormalized forward transform sum_j e^{-ik.x_j} f_j (up to the offset phase).
    void forward(CVec& f) const { exec(fwd_, f); }
    // Inverse including the 1/N factor.
    void backward(CVec& f) const {
        exec(bwd_, f);
        f /= static_cast<double>(n_);
    }

private:
    static void exec(fftw_plan p, CVec& f) {
        auto* q = reinterpret_cast<fftw_complex*>(f.data());
        fftw_execute_dft(p, q, q);
    }
    std::size_t n_;
    fftw_plan fwd_ = nullptr, bwd_ = nullptr;
};

RVec wave_squared(const Lattice& lat) {
    RVec k2(static_cast<Eigen::Index>(lat.size()));
    for (std::size_t i = 0; i < lat.size(); ++i) k2[static_cast<Eigen::Index>(i)] = lat.wavevector(i).squaredNorm();
    return k2;
}

// e^{-i tau * a} elementwise.
CVec phase_factor(const RVec& a, double tau) {
    const Eigen::Index n = a.size();
    RVec ph = -tau * a, c(n), s(n);
    kernels::sincos_array(ph.data(), c.data(), s.data(), n);
    CVec out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = cplx(c[i], s[i]);
    return out;
}

// Fraction of spectral mass beyond 0.8 Nyquist along any axis.
double nyquist_mass(const Lattice& lat, const CVec& fhat) {
    const double lim = 0.8 * lat.nyquist();
    double hi = 0.0, tot = 0.0;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const double w = std::norm(fhat[static_cast<Eigen::Index>(i)]);
        tot += w;
        if (lat.wavevector(i).cwiseAbs().maxCoeff() > lim) hi += w;
    }
    return tot > 0.0 ? hi / tot : 0.0;
}

} // namespace

// ---- packets ----

Wavepacket gaussian_packet(const Lattice& lat, const Vec3& x0, const Vec3& k0, double w) {
    check_lattice(lat);
    if (!(w > 0.0)) throw Error(ErrorKind::Validation, "gaussian_packet: width must be positive");
    Wavepacket p;
    p.lattice = lat;
    p.data.resize(static_cast<Eigen::Index>(lat.size()));
    for (std::size_t i = 0; i < lat.size(); ++i) p.data[static_cast<Eigen::Index>(i)] = free_gaussian(lat.point(i), 0.0, x0, k0, w);
    return p;
}

cplx free_gaussian(const Vec3& x, double t, const Vec3& x0, const Vec3& k0, double w) {
    const cplx s = 1.0 + 2.0 * kI * t / (w * w);
    const Vec3 d = x - x0 - 2.0 * t * k0;
    return std::pow(s, -1.5) *
           std::exp(-d.squaredNorm() / (2.0 * w * w * s) + kI * (k0.dot(x - x0) - k0.squaredNorm() * t));
}

// ---- potential ----

RVec LatticePotential::at(double t) const {
    RVec v = RVec::Zero(static_cast<Eigen::Index>(lattice.size()));
    for (const auto& [d, vd] : modes) {
        const cplx e = std::exp(kI * (static_cast<double>(d) * t));
        v += (vd * e).real();
    }
    return v;
}

namespace {

// Integral of mode d over the cube [c - a/2, c + a/2]^3, subdividing cubes
// that touch the origin (where Yukawa profiles are singular).
cplx cube_integral(const PotentialSpec& spec, int d, const Vec3& c, double a, int depth, const Rule1D& g) {
    const bool touches = (c.cwiseAbs().array() <= 0.5 * a + 1e-14 * a).all();
    if (touches && depth > 0) {
        cplx acc = 0.0;
        for (int s = 0; s < 8; ++s) {
            const Vec3 o(s & 1 ? 0.25 : -0.25, s & 2 ? 0.25 : -0.25, s & 4 ? 0.25 : -0.25);
            acc += cube_integral(spec, d, c + a * o, 0.5 * a, depth - 1, g);
        }
        return acc;
    }
    cplx acc = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i)
        for (std::size_t j = 0; j < g.x.size(); ++j)
            for (std::size_t l = 0; l < g.x.size(); ++l) {
                const Vec3 y = c + a * Vec3(g.x[i], g.x[j], g.x[l]);
                acc += g.w[i] * g.w[j] * g.w[l] * spec.mode_value(d, y.norm());
            }
    return acc * (a * a * a);
}

} // namespace

LatticePotential lattice_potential(const PotentialSpec& spec, const Lattice& lat) {
    check_lattice(lat);
    LatticePotential V;
    V.lattice = lat;
    // Singular profiles are represented by cell averages (point samples of
    // 1/r bias the lattice sums); cells touching the origin are subdivided.
    const bool singular = spec.kind == PotentialKind::Yukawa;
    const Rule1D g = gauss_legendre(4, -0.5, 0.5);
    for (int d : spec.mode_list()) {
        CVec v(static_cast<Eigen::Index>(lat.size()));
        for (std::size_t i = 0; i < lat.size(); ++i) {
            const Vec3 x = lat.point(i);
            if (singular)
                v[static_cast<Eigen::Index>(i)] = cube_integral(spec, d, x, lat.h, 12, g) / lat.cell_volume();
            else
                v[static_cast<Eigen::Index>(i)] = spec.mode_value(d, x.norm());
        }
        V.modes[d] = std::move(v);
    }
    return V;
}

LatticePotential lattice_potential(const FourierPotential& V, const Lattice& lat) {
    if (!V.spec) throw Error(ErrorKind::Validation, "lattice_potential: the potential has no analytic source");
    return lattice_potential(*V.spec, lat);
}

// ---- propagation ----

Wavepacket propagate(const Wavepacket& pkt, const LatticePotential* V, double t0, double t1, double dt,
                     PropagateReport* report) {
    const Lattice& lat = pkt.lattice;
    check_lattice(lat);
    if (static_cast<std::size_t>(pkt.data.size()) != lat.size())
        throw Error(ErrorKind::Validation, "propagate: packet data does not match its lattice");
    if (V && (V->lattice.n != lat.n || V->lattice.h != lat.h))
        throw Error(ErrorKind::Validation, "propagate: potential and packet lattices differ");
    if (!(dt > 0.0)) throw Error(ErrorKind::Validation, "propagate: dt must be positive");
    const double ratio = (t1 - t0) / dt;
    const long steps = std::lround(ratio);
    if (steps < 0 || std::abs(ratio - static_cast<double>(steps)) > 1e-9 * std::max(1.0, ratio))
        throw Error(ErrorKind::Validation, "propagate: dt must divide t1 - t0");

    Wavepacket out = pkt;
    out.t = t1;
    PropagateReport rep;
    rep.steps = static_cast<int>(steps);
    const double n0 = pkt.norm();
    if (steps == 0) {
        if (report) *report = rep;
        return out;
    }

    CVec& f = out.data;
    Fft3 fft(lat, f);
    const RVec k2 = wave_squared(lat);
    const CVec half = phase_factor(k2, 0.5 * dt);
    const CVec full = phase_factor(k2, dt);

    const bool static_v = V && V->modes.size() == 1 && V->modes.begin()->first == 0;
    CVec vphase;
    if (static_v) vphase = phase_factor(V->at(0.0), dt);

    fft.forward(f);
    rep.nyquist_mass = nyquist_mass(lat, f);
    f.array() *= half.array();
    for (long s = 0; s < steps; ++s) {
        if (V && !V->modes.empty()) {
            fft.backward(f);
            if (static_v) {
                f.array() *= vphase.array();
            } else {
                const double tm = t0 + (static_cast<double>(s) + 0.5) * dt;
                f.array() *= phase_factor(V->at(tm), dt).array();
            }
            fft.forward(f);
        }
        f.array() *= (s + 1 == steps ? half : full).array();
    }
    rep.nyquist_mass = std::max(rep.nyquist_mass, nyquist_mass(lat, f));
    fft.backward(f);

    rep.norm_drift = n0 > 0.0 ? std::abs(out.norm() / n0 - 1.0) : 0.0;
    if (rep.nyquist_mass > 1e-8) {
        std::ostringstream os;
        os << "propagate: spectral mass " << rep.nyquist_mass
           << " beyond 0.8 Nyquist; refine the lattice spacing";
        rep.warning = os.str();
    }
    if (report) *report = rep;
    return out;
}

Wavepacket free_propagate(const Wavepacket& pkt, double t1) {
    const Lattice& lat = pkt.lattice;
    check_lattice(lat);
    Wavepacket out = pkt;
    out.t = t1;
    Fft3 fft(lat, out.data);
    fft.forward(out.data);
    out.data.array() *= phase_factor(wave_squared(lat), t1 - pkt.t).array();
    fft.backward(out.data);
    return out;
}

// ---- transition extraction ----

double channel_constant(double lambda, int n) {
    return std::pow(lambda - n, 0.25) / (std::sqrt(2.0) * 4.0 * kPi * kPi);
}

cplx PacketSpec::amplitude(const Vec3& k) const {
    const Vec3 nu = direction.normalized();
    const double kp = k.dot(nu);
    const double kt2 = std::max(0.0, k.squaredNorm() - kp * kp);
    const double norm = 1.0 / std::sqrt(std::pow(2.0 * kPi, 4.5) * sigma_par * sigma_perp * sigma_perp);
    const double dk = kp - kappa();
    return norm * std::exp(-dk * dk / (4.0 * sigma_par * sigma_par) - kt2 / (4.0 * sigma_perp * sigma_perp)) *
           std::exp(kI * (start * kp));  // e^{-ik.x0}, x0 = -start nu'
}

namespace {

// W(kappa') = (kappa'/2) int_{S^2} a(kappa' w) dw on the cap carrying the packet.
cplx shell_smearing(const PacketSpec& pkt, double kp) {
    if (!(kp > 0.0)) return 0.0;
    const double sp = std::min(1.0, 10.0 * pkt.sigma_perp / kp);
    const double c_perp = std::sqrt(1.0 - sp * sp);
    const double c_par = (pkt.kappa() - 10.0 * pkt.sigma_par) / kp;
    const double c = std::clamp(std::max(c_perp, c_par), -0.999999, 0.999999);
    const double phase_span = pkt.start * kp * (1.0 - c);
    const int n_t = std::max(24, static_cast<int>(std::ceil(2.0 * phase_span)) + 16);
    const SphereRule cap = cap_rule(pkt.direction.normalized(), c, n_t, 48);
    cplx acc = 0.0;
    for (int i = 0; i < cap.size(); ++i) acc += cap.weights[i] * pkt.amplitude(kp * cap.nodes[i]);
    return 0.5 * kp * acc;
}

} // namespace

TransitionResult extract_transition(const PacketSpec& pkt, const PotentialSpec& Vspec, const TransitionOptions& opt) {
    const Lattice& lat = opt.lattice;
    check_lattice(lat);
    if (!(pkt.energy() > 0.0)) throw Error(ErrorKind::Domain, "extract_transition: incident channel is closed");
    if (!(pkt.sigma_par > 0.0 && pkt.sigma_perp > 0.0))
        throw Error(ErrorKind::Validation, "extract_transition: packet spreads must be positive");
    const double lambda = pkt.lambda;
    if (std::abs(lambda - std::round(lambda)) < 1e-6)
        throw Error(ErrorKind::Exceptional, "extract_transition: lambda is a threshold");

    // Incident packet from its momentum amplitude.
    Wavepacket p0;
    p0.lattice = lat;
    p0.data.resize(static_cast<Eigen::Index>(lat.size()));
    const Vec3 off = lat.offset();
    const double dk3 = std::pow(2.0 * kPi, 3) / (static_cast<double>(lat.size()) * lat.cell_volume());
    CVec b(static_cast<Eigen::Index>(lat.size()));
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const Vec3 k = lat.wavevector(i);
        b[static_cast<Eigen::Index>(i)] = pkt.amplitude(k) * dk3 * std::exp(kI * k.dot(off));
    }
    {
        p0.data = b;
        Fft3 fft(lat, p0.data);
        fft.backward(p0.data);
        p0.data *= static_cast<double>(lat.size());
    }

    const double v = 2.0 * pkt.kappa();
    const double T_raw = 2.0 * pkt.start / v + opt.extra_time;
    const long steps = std::max(1L, static_cast<long>(std::ceil(T_raw / opt.dt)));
    const double T = static_cast<double>(steps) * opt.dt;

    const LatticePotential V = lattice_potential(Vspec, lat);
    TransitionResult res;
    res.final_time = T;
    Wavepacket pT = propagate(p0, &V, 0.0, T, opt.dt, &res.propagation);

    // Clearing check on the full field.
    double inside = 0.0, total = 0.0;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const double w = std::norm(pT.data[static_cast<Eigen::Index>(i)]);
        total += w;
        if (lat.point(i).norm() < opt.clear_radius) inside += w;
    }
    res.inside_fraction = total > 0.0 ? inside / total : 0.0;
    if (res.inside_fraction > opt.max_inside) {
        std::ostringstream os;
        os << "extract_transition: inconclusive, " << res.inside_fraction
           << " of the packet remains inside r < " << opt.clear_radius << " at t = " << T;
        throw Error(ErrorKind::Numerical, os.str());
    }

    // Scattered momentum density pulled back to t = 0.
    CVec chi = pT.data;
    {
        Fft3 fft(lat, chi);
        fft.forward(chi);
    }
    const double pref = std::pow(2.0 * kPi, -1.5) * lat.cell_volume();
    const double N = static_cast<double>(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        const Vec3 k = lat.wavevector(i);
        const double k2 = k.squaredNorm();
        const cplx sc = chi[ii] - N * b[ii] * std::exp(-kI * (k2 * T));
        chi[ii] = std::exp(kI * (k2 * T)) * pref * std::exp(-kI * k.dot(off)) * sc;
    }

    // Channel bands and masses.
    std::vector<int> open;
    for (int n : opt.channels)
        if (lambda - n > 0.0) open.push_back(n);
    double in_bands = 0.0;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const double w = std::norm(chi[static_cast<Eigen::Index>(i)]);
        res.scattered_mass += w;
        const double k2 = lat.wavevector(i).squaredNorm();
        const double nr = std::round(lambda - k2);  // nearest channel for this energy
        if (std::abs(k2 - (lambda - nr)) < opt.band) {
            in_bands += w;
            res.band_mass[static_cast<int>(nr)] += w;
        }
    }
    res.quantized_fraction = res.scattered_mass > 0.0 ? in_bands / res.scattered_mass : 1.0;

    // Cone projections with the shell smearing factor.
    const double cm = channel_constant(lambda, pkt.m);
    for (std::size_t di = 0; di < opt.directions.size(); ++di) {
        const Vec3 nu = opt.directions[di].normalized();
        const double cc = std::cos(opt.cone);
        for (int n : open) {
            const double En = lambda - n;
            cplx num = 0.0;
            double den = 0.0;
            for (std::size_t i = 0; i < lat.size(); ++i) {
                const Vec3 k = lat.wavevector(i);
                const double k2 = k.squaredNorm();
                if (std::abs(k2 - En) >= opt.band) continue;
                const double kn = std::sqrt(k2);
                if (k.dot(nu) < cc * kn) continue;
                const double kp2 = k2 + n - pkt.m;  // incident-shell radius squared
                if (kp2 <= 0.0) continue;
                const cplx W = shell_smearing(pkt, std::sqrt(kp2));
                num += std::conj(W) * chi[static_cast<Eigen::Index>(i)];
                den += std::norm(W);
            }
            if (den <= 0.0) throw Error(ErrorKind::Validation, "extract_transition: empty projection cone; widen it");
            const cplx A = (num / den) / (-2.0 * kPi * kI);
            const cplx Tnm = 2.0 * kPi * channel_constant(lambda, n) * cm * std::pow(2.0 * kPi, 1.5) * A;
            res.T[{n, pkt.m, static_cast<int>(di), 0}] = Tnm;
        }
    }
    return res;
}

// ---- I/O ----

namespace {
constexpr char kPacketMagic[8] = {'F', 'L', 'Q', 'P', 'K', 'T', '1', '\n'};
}

void write_packet(const std::string& path, const Wavepacket& pkt) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::Config, "write_packet: cannot open " + path);
    os.write(kPacketMagic, sizeof kPacketMagic);
    for (int a = 0; a < 3; ++a) {
        const std::int32_t n = pkt.lattice.n[a];
        os.write(reinterpret_cast<const char*>(&n), sizeof n);
    }
    os.write(reinterpret_cast<const char*>(&pkt.lattice.h), sizeof(double));
    os.write(reinterpret_cast<const char*>(&pkt.t), sizeof(double));
    os.write(reinterpret_cast<const char*>(pkt.data.data()),
             static_cast<std::streamsize>(pkt.data.size() * sizeof(cplx)));
    if (!os) throw Error(ErrorKind::Config, "write_packet: write failed for " + path);
}

Wavepacket read_packet(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::Config, "read_packet: cannot open " + path);
    char magic[8];
    is.read(magic, sizeof magic);
    if (!is || std::memcmp(magic, kPacketMagic, sizeof magic) != 0)
        throw Error(ErrorKind::Config, "read_packet: " + path + " is not a packet snapshot (bad header)");
    Wavepacket p;
    for (int a = 0; a < 3; ++a) {
        std::int32_t n = 0;
        is.read(reinterpret_cast<char*>(&n), sizeof n);
        p.lattice.n[a] = n;
    }
    is.read(reinterpret_cast<char*>(&p.lattice.h), sizeof(double));
    is.read(reinterpret_cast<char*>(&p.t), sizeof(double));
    if (!is) throw Error(ErrorKind::Config, "read_packet: truncated header in " + path);
    check_lattice(p.lattice);
    p.data.resize(static_cast<Eigen::Index>(p.lattice.size()));
    is.read(reinterpret_cast<char*>(p.data.data()), static_cast<std::streamsize>(p.data.size() * sizeof(cplx)));
    if (!is) throw Error(ErrorKind::Config, "read_packet: truncated data in " + path);
    return p;
}

void write_transition_csv(const std::string& path, const TransitionResult& r, const std::vector<Vec3>& directions) {
    std::ofstream os(path);
    if (!os) throw Error(ErrorKind::Config, "write_transition_csv: cannot open " + path);
    os << "# floquet-transition v1\n";
    os << "# final_time=" << format_double(r.final_time) << "\n";
    os << "# scattered_mass=" << format_double(r.scattered_mass) << "\n";
    os << "# quantized_fraction=" << format_double(r.quantized_fraction) << "\n";
    os << "# inside_fraction=" << format_double(r.inside_fraction) << "\n";
    for (const auto& [n, mass] : r.band_mass) os << "# band_mass[" << n << "]=" << format_double(mass) << "\n";
    os << "n,m,dir,nx,ny,nz,re,im\n";
    for (const auto& [key, v] : r.T) {
        const int n = std::get<0>(key), m = std::get<1>(key), d = std::get<2>(key);
        const Vec3 nu = directions.at(static_cast<std::size_t>(d)).normalized();
        os << n << ',' << m << ',' << d << ',' << format_double(nu.x()) << ',' << format_double(nu.y()) << ','
           << format_double(nu.z()) << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
    if (!os) throw Error(ErrorKind::Config, "write_transition_csv: write failed for " + path);
}

TransitionResult read_transition_csv(const std::string& path, std::vector<Vec3>* directions) {
    const std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || trim(lines[0]) != "# floquet-transition v1")
        throw Error(ErrorKind::Config, "read_transition_csv: " + path + " lacks the v1 header");
    TransitionResult r;
    std::map<int, Vec3> dirs;
    bool columns = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = trim(line.substr(1, eq - 1));
            const double v = parse_double(line.substr(eq + 1), path + ": " + key);
            if (key == "final_time") r.final_time = v;
            else if (key == "scattered_mass") r.scattered_mass = v;
            else if (key == "quantized_fraction") r.quantized_fraction = v;
            else if (key == "inside_fraction") r.inside_fraction = v;
            else if (key.rfind("band_mass[", 0) == 0 && key.back() == ']')
                r.band_mass[static_cast<int>(parse_int(key.substr(10, key.size() - 11), path))] = v;
            continue;
        }
        if (!columns) {
            if (line != "n,m,dir,nx,ny,nz,re,im")
                throw Error(ErrorKind::Config, "read_transition_csv: unexpected column line in " + path);
            columns = true;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 8) throw Error(ErrorKind::Config, "read_transition_csv: malformed row in " + path);
        const int n = static_cast<int>(parse_int(f[0], path)), m = static_cast<int>(parse_int(f[1], path));
        const int d = static_cast<int>(parse_int(f[2], path));
        dirs[d] = Vec3(parse_double(f[3], path), parse_double(f[4], path), parse_double(f[5], path));
        r.T[{n, m, d, 0}] = cplx(parse_double(f[6], path), parse_double(f[7], path));
    }
    if (directions) {
        directions->clear();
        for (const auto& [d, v] : dirs) {
            if (d != static_cast<int>(directions->size()))
                throw Error(ErrorKind::Config, "read_transition_csv: direction indices are not contiguous");
            directions->push_back(v);
        }
    }
    return r;
}

} // namespace flq
