// smatrix.hpp -- transition amplitudes T_{nm}(lambda; nu, nu'), assembly of
// the discretized scattering operator S(lambda), unitarity diagnostics and a
// lossless CSV format.

#pragma once

#include "floquet/channel_solver.hpp"
#include "floquet/common.hpp"
#include "floquet/domain.hpp"
#include "floquet/quadrature.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace flq {

// Amplitude blocks T_{n,m}(nu_i, nu'_j) over the nodes of `sphere` for the
// open channels. The unitary representation is
//   S~ = I - 2 pi i W^{1/2} T W^{1/2}   (WaveSign::Minus), W = quadrature weights,
// and for plus-waves I + 2 pi i W^{1/2} T W^{1/2} represents S^{-1}.
struct ScatteringMatrix {
    double lambda = 0.0;
    std::vector<int> open;
    SphereRule sphere;
    WaveSign sign = WaveSign::Minus;
    std::map<std::pair<int, int>, CMat> blocks;

    // metadata carried through files
    int M = 0;
    int m_lo = 0, m_hi = 0;
    std::string grid_hash;
    std::string potential;

    int n_dirs() const { return sphere.size(); }
    int dimension() const { return static_cast<int>(open.size()) * n_dirs(); }
    // Stacked T (open channels ascending, then directions).
    CMat t_matrix() const;
    // Weighted unitary representation (see above).
    CMat operator_matrix() const;
};

// T_{n,m}(lambda; nu, nu') for a solved distorted wave (m, nu' from the wave).
cplx amplitude(const FieldSolver& solver, const DistortedWave& wave, int n, const Vec3& nu);

// Solve every open incident channel/direction on the grid's sphere.
ScatteringMatrix assemble_S(const FieldSolver& solver);
ScatteringMatrix assemble_S(const FreeResolvent& R, const ChannelSet& channels, const FactorizedPotential& F,
                            WaveSign sign = WaveSign::Minus);

// First-order (Born) amplitude consistent with the grid discretization.
ScatteringMatrix born_S(const FreeResolvent& R, const ChannelSet& channels, const FactorizedPotential& F);

struct UnitarityDefect {
    double left = 0.0;   // ||S* S - I||_2
    double right = 0.0;  // ||S S* - I||_2
    double max() const { return std::max(left, right); }
};
UnitarityDefect unitarity_defect(const ScatteringMatrix& S);

// ||S~(minus) S~^{-1}(plus) - I||_2 : consistency of S^{-1} = I + 2 pi i T(+).
double inverse_formula_defect(const ScatteringMatrix& S_minus, const ScatteringMatrix& T_plus);

// Singular values of S~ - I, descending (decay expresses compactness).
RVec compact_profile(const ScatteringMatrix& S);

void write_smatrix_csv(const ScatteringMatrix& S, const std::string& path);
ScatteringMatrix read_smatrix_csv(const std::string& path);

} // namespace flq
