#include "floquet/domain.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace flq {

// ----------------------------------------------------------------- grid ----

Vec3 SpatialGrid::point(int idx) const { return points[idx]; }
double SpatialGrid::weight(int idx) const { return weights[idx]; }

std::string SpatialGrid::hash() const {
    std::ostringstream os;
    os.precision(17);
    os << L << ',' << n_r() << ',' << sphere.degree << ',' << n_ang();
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : os.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::ostringstream hx;
    hx << std::hex << h;
    return hx.str();
}

SpatialGrid build_grid(double L, int n_r, int angular_order) {
    if (!(L > 0.0)) throw Error(ErrorKind::Validation, "build_grid: cutoff radius L must be > 0");
    if (n_r < 4) throw Error(ErrorKind::Validation, "build_grid: n_r must be >= 4");
    SpatialGrid g;
    g.sphere = lebedev(angular_order);  // throws Config for unsupported orders
    g.L = L;
    Rule1D r = gauss_legendre(n_r, 0.0, L);
    g.radial_nodes = r.x;
    g.radial_weights = r.w;
    const int na = g.n_ang();
    g.points.resize(static_cast<std::size_t>(n_r) * na);
    g.weights.resize(g.points.size());
    for (int a = 0; a < n_r; ++a)
        for (int i = 0; i < na; ++i) {
            const int idx = a * na + i;
            g.points[idx] = r.x[a] * g.sphere.nodes[i];
            g.weights[idx] = r.w[a] * r.x[a] * r.x[a] * g.sphere.weights[i];
        }
    return g;
}

double default_cutoff(double delta0, double eps_trunc) {
    if (!(delta0 > 0.0)) throw Error(ErrorKind::Validation, "decay rate delta0 must be > 0");
    return std::log(1.0 / eps_trunc) / delta0;
}

// ------------------------------------------------------------ potential ----

cplx PotentialSpec::mode_value(int m, double r) const {
    cplx acc = 0.0;
    for (const auto& ms : modes) {
        if (ms.m != m) continue;
        switch (kind) {
            case PotentialKind::Gaussian:
                acc += ms.amplitude * std::exp(-(r * r) / (ms.width * ms.width));
                break;
            case PotentialKind::Yukawa:
                acc += ms.amplitude * std::exp(-r / ms.width) / r;
                break;
            case PotentialKind::Table: {
                const auto& tr = ms.table_r;
                if (tr.empty() || r > tr.back()) break;
                if (r <= tr.front()) {
                    acc += ms.table_v.front();
                    break;
                }
                auto it = std::upper_bound(tr.begin(), tr.end(), r);
                const std::size_t j = static_cast<std::size_t>(it - tr.begin());
                const double s = (r - tr[j - 1]) / (tr[j] - tr[j - 1]);
                acc += (1.0 - s) * ms.table_v[j - 1] + s * ms.table_v[j];
                break;
            }
        }
    }
    return acc;
}

double PotentialSpec::value(double t, const Vec3& x) const {
    const double r = x.norm();
    cplx acc = 0.0;
    for (int m : mode_list()) acc += std::exp(kI * double(m) * t) * mode_value(m, r);
    return acc.real();
}

int PotentialSpec::max_mode() const {
    int mm = 0;
    for (const auto& ms : modes)
        if (ms.amplitude != cplx(0.0)) mm = std::max(mm, std::abs(ms.m));
    return mm;
}

std::vector<int> PotentialSpec::mode_list() const {
    std::vector<int> ms;
    for (const auto& m : modes)
        if (std::find(ms.begin(), ms.end(), m.m) == ms.end()) ms.push_back(m.m);
    std::sort(ms.begin(), ms.end());
    return ms;
}

PotentialSpec PotentialSpec::scaled(double eps) const {
    PotentialSpec out = *this;
    for (auto& m : out.modes) {
        m.amplitude *= eps;
        for (auto& v : m.table_v) v *= eps;
    }
    return out;
}

bool PotentialSpec::empty() const {
    for (const auto& m : modes) {
        if (m.amplitude != cplx(0.0)) return false;
        for (const auto& v : m.table_v)
            if (v != cplx(0.0)) return false;
    }
    return true;
}

std::vector<std::string> preset_names() {
    return {"zero", "yukawa", "driven-gaussian", "two-mode", "born-gaussian"};
}

PotentialSpec preset_potential(const std::string& name, double s) {
    PotentialSpec p;
    if (name == "zero") {
        p.kind = PotentialKind::Gaussian;
        p.delta0 = 1.0;
    } else if (name == "yukawa") {
        // attractive Yukawa -g e^{-mu r}/r with mu = 1.5
        p.kind = PotentialKind::Yukawa;
        p.delta0 = 0.75;
        p.modes = {{0, cplx(-0.5 * s), 1.0 / 1.5, {}, {}}};
    } else if (name == "driven-gaussian") {
        // -g (1 + 0.5 cos t) e^{-r^2}
        p.kind = PotentialKind::Gaussian;
        p.delta0 = 1.0;
        const double g = 0.8 * s;
        p.modes = {{-1, cplx(-0.25 * g), 1.0, {}, {}},
                   {0, cplx(-g), 1.0, {}, {}},
                   {1, cplx(-0.25 * g), 1.0, {}, {}}};
    } else if (name == "two-mode") {
        // -g e^{-r^2} (1 + 0.4 cos t + 0.3 sin 2t): breaks t -> -t symmetry
        p.kind = PotentialKind::Gaussian;
        p.delta0 = 1.0;
        const double g = 0.8 * s;
        p.modes = {{-2, cplx(0.0, -0.15 * g), 1.0, {}, {}},
                   {-1, cplx(-0.2 * g), 1.0, {}, {}},
                   {0, cplx(-g), 1.0, {}, {}},
                   {1, cplx(-0.2 * g), 1.0, {}, {}},
                   {2, cplx(0.0, 0.15 * g), 1.0, {}, {}}};
    } else if (name == "born-gaussian") {
        // weak, wide driven Gaussian used by the reconstruction round trip
        p.kind = PotentialKind::Gaussian;
        p.delta0 = 1.0;
        const double g = 0.05 * s;
        p.modes = {{-1, cplx(-0.3 * g), 1.5, {}, {}},
                   {0, cplx(-g), 1.5, {}, {}},
                   {1, cplx(-0.3 * g), 1.5, {}, {}}};
    } else {
        std::string names;
        for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
        throw Error(ErrorKind::Config, "unknown potential preset '" + name + "'; known: " + names);
    }
    return p;
}

int FourierPotential::max_mode() const {
    int mm = 0;
    for (const auto& [m, v] : modes)
        if (v.size() && v.cwiseAbs().maxCoeff() > 0.0) mm = std::max(mm, std::abs(m));
    return mm;
}

CVec FourierPotential::mode(int m) const {
    auto it = modes.find(m);
    if (it != modes.end()) return it->second;
    return CVec::Zero(grid_size());
}

int FourierPotential::grid_size() const {
    return modes.empty() ? 0 : static_cast<int>(modes.begin()->second.size());
}

FourierPotential sample_potential(const PotentialSpec& spec, const SpatialGrid& grid) {
    FourierPotential V;
    V.delta0 = spec.delta0;
    V.spec = std::make_shared<PotentialSpec>(spec);
    const int N = grid.size();
    V.modes[0] = CVec::Zero(N);
    for (int m : spec.mode_list()) {
        CVec v(N);
        for (int j = 0; j < N; ++j) v[j] = spec.mode_value(m, grid.radius(j));
        V.modes[m] = v;
    }
    return V;
}

double reality_violation(const FourierPotential& V) {
    double worst = 0.0;
    for (const auto& [m, v] : V.modes) {
        CVec partner = V.mode(-m);
        if (partner.size() != v.size()) partner = CVec::Zero(v.size());
        worst = std::max(worst, (v - partner.conjugate()).cwiseAbs().maxCoeff());
    }
    return worst;
}

// --------------------------------------------------------- factorization ----

std::map<int, CVec> FactorizedPotential::product_modes() const {
    std::map<int, CVec> out;
    for (const auto& [a, qa] : q1_modes)
        for (const auto& [b, qb] : q2_modes) {
            CVec prod = qa.cwiseProduct(qb);
            auto it = out.find(a + b);
            if (it == out.end()) out[a + b] = prod;
            else it->second += prod;
        }
    return out;
}

static int width_of(const std::map<int, CVec>& modes) {
    int w = 0;
    for (const auto& [m, v] : modes)
        if (v.size() && v.cwiseAbs().maxCoeff() > 0.0) w = std::max(w, std::abs(m));
    return w;
}

int FactorizedPotential::q1_width() const { return width_of(q1_modes); }
int FactorizedPotential::q2_width() const { return width_of(q2_modes); }

bool FactorizedPotential::is_zero() const {
    for (const auto& [m, v] : q2_modes)
        if (v.size() && v.cwiseAbs().maxCoeff() > 0.0) return false;
    return true;
}

FactorizedPotential factorize(const FourierPotential& V, const SpatialGrid& grid, const FactorizeOptions& opt) {
    const double viol = reality_violation(V);
    double scale = 0.0;
    for (const auto& [m, v] : V.modes)
        if (v.size()) scale = std::max(scale, v.cwiseAbs().maxCoeff());
    if (viol > 1e-12 * std::max(1.0, scale))
        throw Error(ErrorKind::Domain, "factorize: potential is not real (V_{-m} != conj V_m)");

    FactorizedPotential F;
    F.source = V;
    F.regularizer_on = opt.regularizer_on;
    const int mv = V.max_mode();
    F.M_V = opt.M_V >= 0 ? opt.M_V : 2 * mv + 4;
    if (mv == 0 && opt.M_V < 0) F.M_V = 0;  // time-independent: roots are exact single modes
    int nt = opt.n_t;
    if (nt <= 0) {
        nt = 8;
        while (nt < 8 * (F.M_V + 1)) nt *= 2;
    }
    F.n_t = nt;
    const int N = grid.size();
    if (N != V.grid_size()) throw Error(ErrorKind::Validation, "factorize: grid/potential size mismatch");

    // pointwise samples in t
    RMat vt(nt, N), v1t(nt, N), v2t(nt, N), chi(nt, N), q1t(nt, N), q2t(nt, N);
    for (int s = 0; s < nt; ++s) {
        const double t = 2.0 * kPi * s / nt;
        CVec acc = CVec::Zero(N);
        for (const auto& [m, v] : V.modes) acc += std::exp(kI * double(m) * t) * v;
        for (int j = 0; j < N; ++j) {
            const double val = acc[j].real();
            vt(s, j) = val;
            const double root = std::sqrt(std::abs(val));
            v1t(s, j) = root;
            v2t(s, j) = val < 0.0 ? -root : root;
        }
    }
    const double v1max = v1t.size() ? v1t.maxCoeff() : 0.0;
    for (int s = 0; s < nt; ++s)
        for (int j = 0; j < N; ++j) {
            const bool on = v1max > 0.0 && v1t(s, j) > opt.support_threshold * v1max;
            chi(s, j) = on ? 1.0 : 0.0;
            const double r = grid.radius(j);
            q1t(s, j) = v1t(s, j) + (opt.regularizer_on ? std::exp(-r * r) * (1.0 - chi(s, j)) : 0.0);
            q2t(s, j) = v2t(s, j) * chi(s, j);
        }
    F.support_mask = chi;

    auto modes_of = [&](const RMat& ft) {
        std::map<int, CVec> out;
        for (int m = -F.M_V; m <= F.M_V; ++m) {
            CVec c = CVec::Zero(N);
            for (int s = 0; s < nt; ++s) {
                const cplx e = std::exp(-kI * (2.0 * kPi * m * s / nt)) / double(nt);
                for (int j = 0; j < N; ++j) c[j] += e * ft(s, j);
            }
            out[m] = c;
        }
        return out;
    };
    F.v1_modes = modes_of(v1t);
    F.v2_modes = modes_of(v2t);
    F.q1_modes = modes_of(q1t);
    F.q2_modes = modes_of(q2t);

    // residuals: pointwise (exact roots) and after truncation
    double res_pt = 0.0, res_tr = 0.0;
    for (int s = 0; s < nt; ++s) {
        const double t = 2.0 * kPi * s / nt;
        CVec a = CVec::Zero(N), b = CVec::Zero(N);
        for (const auto& [m, c] : F.v1_modes) a += std::exp(kI * double(m) * t) * c;
        for (const auto& [m, c] : F.v2_modes) b += std::exp(kI * double(m) * t) * c;
        for (int j = 0; j < N; ++j) {
            const double v = vt(s, j);
            res_pt = std::max(res_pt, std::abs(v1t(s, j) * v2t(s, j) - v) / (1.0 + std::abs(v)));
            res_tr = std::max(res_tr, std::abs(a[j] * b[j] - v) / (1.0 + std::abs(v)));
        }
    }
    F.sample_residual = res_pt;
    F.truncation_residual = res_tr;
    if (res_tr > opt.warn_threshold) {
        std::ostringstream os;
        os << "factorize: Fourier truncation residual " << res_tr << " exceeds " << opt.warn_threshold
           << " at M_V = " << F.M_V;
        F.warning = os.str();
    }
    auto l3 = [&](const std::map<int, CVec>& modes) {
        std::vector<double> out;
        for (const auto& [m, c] : modes) {
            double acc = 0.0;
            for (int j = 0; j < N; ++j) acc += grid.weights[j] * std::pow(std::abs(c[j]), 3);
            out.push_back(std::cbrt(acc));
        }
        return out;
    };
    F.l3_norms_v1 = l3(F.v1_modes);
    F.l3_norms_v2 = l3(F.v2_modes);
    return F;
}

// ------------------------------------------------------------- channels ----

std::vector<int> ChannelSet::all() const {
    std::vector<int> out;
    for (int m = m_lo; m <= m_hi; ++m) out.push_back(m);
    return out;
}

double ChannelSet::kappa(int m) const {
    if (!(m < lambda)) throw Error(ErrorKind::Domain, "channel " + std::to_string(m) + " is closed");
    return std::sqrt(lambda - m);
}

ChannelSet channel_window(double lambda, int m_lo, int m_hi) {
    if (std::abs(lambda - std::round(lambda)) < 1e-9) {
        std::ostringstream os;
        os << "quasi-energy lambda = " << lambda << " lies at a threshold (integer); choose lambda not in Z";
        throw Error(ErrorKind::Validation, os.str());
    }
    if (m_hi < m_lo) throw Error(ErrorKind::Validation, "channel window is empty");
    ChannelSet c;
    c.lambda = lambda;
    c.m_lo = m_lo;
    c.m_hi = m_hi;
    c.M = std::max(std::abs(m_lo), std::abs(m_hi));
    c.n_floor = static_cast<int>(std::floor(lambda));
    for (int m = m_lo; m <= m_hi; ++m) (m < lambda ? c.open : c.closed).push_back(m);
    return c;
}

ChannelSet channel_set(double lambda, int M) {
    if (M < 1) throw Error(ErrorKind::Validation, "channel truncation M must be >= 1");
    ChannelSet c = channel_window(lambda, -M, M);
    c.M = M;
    return c;
}

} // namespace flq
