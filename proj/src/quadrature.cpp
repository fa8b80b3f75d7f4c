#include "floquet/quadrature.hpp"
#include "floquet/lebedev.hpp"

#include <algorithm>
#include <sstream>

namespace flq {

Rule1D gauss_legendre(int n, double a, double b) {
    if (n < 1) throw Error(ErrorKind::Validation, "gauss_legendre: n must be >= 1");
    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Tricomi initial guess
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) { p1 = x; p0 = 1.0; }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) { p1 = x; p0 = 1.0; }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    if (n == 1) { r.x[0] = 0.0; r.w[0] = 2.0; }
    const double h = 0.5 * (b - a), c = 0.5 * (b + a);
    for (int i = 0; i < n; ++i) {
        r.x[i] = c + h * r.x[i];
        r.w[i] *= h;
    }
    return r;
}

Rule1D composite_gauss(const std::vector<double>& breaks, int per_panel) {
    Rule1D out;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        if (!(breaks[p + 1] > breaks[p])) continue;
        Rule1D g = gauss_legendre(per_panel, breaks[p], breaks[p + 1]);
        out.x.insert(out.x.end(), g.x.begin(), g.x.end());
        out.w.insert(out.w.end(), g.w.begin(), g.w.end());
    }
    return out;
}

Rule1D periodic_trapezoid(int n) {
    Rule1D r;
    r.x.resize(n);
    r.w.assign(n, 2.0 * kPi / n);
    for (int i = 0; i < n; ++i) r.x[i] = 2.0 * kPi * i / n;
    return r;
}

std::vector<double> legendre_all(int lmax, double x) {
    std::vector<double> p(std::max(lmax, 0) + 1);
    p[0] = 1.0;
    if (lmax >= 1) p[1] = x;
    for (int l = 2; l <= lmax; ++l)
        p[l] = ((2.0 * l - 1.0) * x * p[l - 1] - (l - 1.0) * p[l - 2]) / l;
    return p;
}

Lagrange::Lagrange(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    const std::size_t n = nodes_.size();
    bw_.assign(n, 1.0);
    // scale-free product to avoid overflow for many nodes
    double span = nodes_.empty() ? 1.0 : (nodes_.back() - nodes_.front());
    if (span == 0.0) span = 1.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) bw_[j] *= 4.0 * (nodes_[j] - nodes_[k]) / span;
    for (auto& b : bw_) b = 1.0 / b;
}

void Lagrange::basis(double x, double* out) const {
    const std::size_t n = nodes_.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (x == nodes_[j]) {
            for (std::size_t k = 0; k < n; ++k) out[k] = (k == j) ? 1.0 : 0.0;
            return;
        }
    }
    double denom = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = bw_[j] / (x - nodes_[j]);
        denom += out[j];
    }
    for (std::size_t j = 0; j < n; ++j) out[j] /= denom;
}

const std::vector<int>& lebedev_degrees() {
    static const std::vector<int> degs = [] {
        std::vector<int> d;
        for (int i = 0; i < detail::kLebedevTableCount; ++i) d.push_back(detail::kLebedevTables[i].degree);
        return d;
    }();
    return degs;
}

static SphereRule from_table(const detail::LebedevTable& t) {
    SphereRule r;
    r.degree = t.degree;
    r.nodes.resize(t.npoints);
    r.weights.resize(t.npoints);
    for (int i = 0; i < t.npoints; ++i) {
        const double* row = t.data + 4 * i;
        Vec3 v(row[0], row[1], row[2]);
        r.nodes[i] = v / v.norm();
        r.weights[i] = row[3];
    }
    return r;
}

static std::string supported_list() {
    std::ostringstream os;
    for (int i = 0; i < detail::kLebedevTableCount; ++i) {
        if (i) os << ", ";
        os << detail::kLebedevTables[i].degree << " (" << detail::kLebedevTables[i].npoints << " nodes)";
    }
    return os.str();
}

SphereRule lebedev(int degree) {
    for (int i = 0; i < detail::kLebedevTableCount; ++i)
        if (detail::kLebedevTables[i].degree == degree) return from_table(detail::kLebedevTables[i]);
    throw Error(ErrorKind::Config,
                "unsupported angular order " + std::to_string(degree) + "; supported: " + supported_list());
}

SphereRule lebedev_by_points(int npoints) {
    for (int i = 0; i < detail::kLebedevTableCount; ++i)
        if (detail::kLebedevTables[i].npoints == npoints) return from_table(detail::kLebedevTables[i]);
    throw Error(ErrorKind::Config,
                "no spherical rule with " + std::to_string(npoints) + " nodes; supported: " + supported_list());
}

SphereRule product_sphere(int n_theta, int n_phi) {
    SphereRule r;
    Rule1D gt = gauss_legendre(n_theta);
    r.degree = std::min(2 * n_theta - 1, n_phi - 1);
    for (int i = 0; i < n_theta; ++i) {
        const double c = gt.x[i], s = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int j = 0; j < n_phi; ++j) {
            const double ph = 2.0 * kPi * j / n_phi;
            r.nodes.emplace_back(s * std::cos(ph), s * std::sin(ph), c);
            r.weights.push_back(gt.w[i] * 2.0 * kPi / n_phi);
        }
    }
    return r;
}

} // namespace flq
