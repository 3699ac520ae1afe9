#pragma once

#include <vector>

#include "ncqm/noncomm.hpp"
#include "ncqm/radial.hpp"

namespace ncqm {

struct FixedPointOptions {
    double relaxation = 0.5;   ///< under-relaxation, halved on residual increase
    double tol = 1e-10;        ///< residual |xi_out - xi_in| / max(xi_in, 1)
    int max_iterations = 10000;
    int grid_points = 20000;
    SolveOptions solver{};
    bool record_history = false;
};

/// Converged state of the beta <-> wavefunction loop.
struct SelfConsistentResult {
    NoncommParams params;
    RadialSolution solution;
    int iterations = 0;
    double residual = 0.0;
    std::vector<double> residual_history;  ///< filled when record_history is set
};

/// Ground-state fixed point for an arbitrary central potential:
/// xi -> beta -> (l = 0, node-free) bound state -> <|dV/dx|> -> xi.
/// Throws NoBoundStateError beyond the critical coupling and
/// ConvergenceError when the iteration budget runs out.
SelfConsistentResult solve_self_consistent(const Potential& potential,
                                           const ParticlePair& pair, double omega,
                                           const FixedPointOptions& options = {});

struct CoulombFixedPoint {
    double xi = 0.0;
    double beta = 1.0;
    int iterations = 0;
};

/// Same loop for the Coulomb potential with the closed-form ground state:
/// xi = 4 (alpha Z)^3 / beta^4 with the exact beta(omega xi, mu/M).
CoulombFixedPoint coulomb_fixed_point(double omega, double alpha_z, double mass_ratio,
                                      const FixedPointOptions& options = {});

/// Argmax of h * beta(h, mass_ratio)^4; the solvability edge of the Coulomb
/// loop sits where 4 (alpha Z)^3 equals the maximum value. Independent of omega.
double tangency_parameter(double mass_ratio);

/// Exact coupling where the full-beta Coulomb loop ceases to have solutions.
double critical_coupling_full(double omega, double mass_ratio);

/// The same coupling located by bisecting between a converging and a failing
/// fixed point. Resolution is limited by slow convergence near tangency, so
/// this is a cross-check, not the production path.
double critical_coupling_probe(double omega, double mass_ratio,
                               double rel_width = 1e-6,
                               const FixedPointOptions& options = {});

struct OmegaCalibration {
    double ratio = 0.0;             ///< mu/M
    double omega = 0.0;
    double critical_alpha_z = 0.0;  ///< tangency coupling at the calibrated omega
    double min_mean_distance = 0.0; ///< <r> at criticality, units hbar/(mu c)
    double delta12 = 0.0;           ///< sqrt(1 - 2 ratio), same units
    double beta_at_critical = 0.0;
};

/// Chooses omega so that the least Coulomb ground-state mean distance (reached
/// at the critical coupling) equals the resolution limit delta12.
OmegaCalibration calibrate_omega(double ratio);

/// calibrate_omega sampled uniformly over [0, 1/4].
std::vector<OmegaCalibration> omega_curve(int samples);

/// 32 (1 - 2 ratio) / 729, the straight-line approximation of the curve.
double omega_approx(double ratio);

} // namespace ncqm
