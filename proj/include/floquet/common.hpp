// common.hpp -- shared scalar/vector types, constants and the error type used
// across the floquet scattering library.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace flq {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Error categories map one-to-one onto CLI exit codes (see tools/floquet_cli.cpp).
enum class ErrorKind {
    Validation,   // bad user input: thresholds, admissibility, malformed config
    Config,       // missing files, unknown keys, unsupported orders
    Domain,       // mathematically undefined request (closed channel, non-real V)
    Numerical,    // tolerance not met (residuals, unitarity)
    Exceptional,  // near-singular system: exceptional parameter / eigenvalue proxy
    Sizing        // request exceeds the memory budget
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Boundary value selector for resolvents: Plus = R0(z + i0), Minus = R0(z - i0).
enum class Side { Plus, Minus };

inline double side_sign(Side s) { return s == Side::Plus ? 1.0 : -1.0; }

// Square root with the branch Im sqrt(z) >= 0 used throughout.
inline cplx sqrt_branch(cplx z) {
    cplx s = std::sqrt(z);
    if (s.imag() < 0.0 || (s.imag() == 0.0 && s.real() < 0.0 && z.imag() == 0.0 && z.real() < 0.0))
        s = -s;
    return s;
}

} // namespace flq
