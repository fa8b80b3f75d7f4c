// quadrature.hpp -- one-dimensional Gauss-Legendre rules, Lagrange interpolation
// on arbitrary nodes, Legendre polynomials and the spherical (Lebedev) rules.

#pragma once

#include "floquet/common.hpp"

#include <vector>

namespace flq {

struct Rule1D {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Legendre rule with n nodes on [a, b] (ascending nodes).
Rule1D gauss_legendre(int n, double a = -1.0, double b = 1.0);

// Composite Gauss-Legendre over the given breakpoints, `per_panel` nodes each.
Rule1D composite_gauss(const std::vector<double>& breaks, int per_panel);

// Trapezoidal rule on a full period [0, 2*pi): n equally spaced nodes.
Rule1D periodic_trapezoid(int n);

// Legendre polynomials P_0..P_lmax at x.
std::vector<double> legendre_all(int lmax, double x);

// Barycentric Lagrange interpolation on fixed nodes.
class Lagrange {
public:
    explicit Lagrange(std::vector<double> nodes);
    // Row vector of basis values L_b(x), b = 0..n-1.
    void basis(double x, double* out) const;
    const std::vector<double>& nodes() const { return nodes_; }

private:
    std::vector<double> nodes_;
    std::vector<double> bw_;  // barycentric weights
};

// Spherical rule: unit vectors and weights (sum 4*pi), exact for polynomials of
// total degree <= `degree`.
struct SphereRule {
    int degree = 0;
    std::vector<Vec3> nodes;
    std::vector<double> weights;
    int size() const { return static_cast<int>(nodes.size()); }
};

// Supported Lebedev degrees: 3,5,...,31.
const std::vector<int>& lebedev_degrees();
SphereRule lebedev(int degree);
// Lebedev rule with exactly `npoints` nodes (6, 14, 26, 38, 50, 74, 86, 110, ...).
SphereRule lebedev_by_points(int npoints);

// Product rule on the sphere: Gauss-Legendre in cos(theta) times trapezoid in phi.
SphereRule product_sphere(int n_theta, int n_phi);

} // namespace flq
