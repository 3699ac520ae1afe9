#pragma once

#include <vector>

#include "ncqm/constants.hpp"
#include "ncqm/physical.hpp"

namespace ncqm {

/// Calibrated coupling constant in the heavy-nucleus limit (mu/M -> 0).
inline constexpr double kOmegaHeavyNucleus = 32.0 / 729.0;

/// Calibrated coupling constant for two identical particles (mu/M = 1/4).
inline constexpr double kOmegaEqualMasses = 0.0211547;

/// Smaller root of eta/(1+eta)^4 = 4 omega (alpha Z)^3 on [0, 1/3], bisected
/// to 1e-14. Throws NoBoundStateError when the right-hand side exceeds the
/// solvability bound 27/256.
double solve_eta0(double omega, double alpha_z);

/// Larger root of the same equation (eta > 1/3). Only used for figure data;
/// it is not a physical branch.
double solve_eta0_second(double omega, double alpha_z);

/// Coupling alpha*Z beyond which the ground state ceases to exist:
/// (27/(1024 omega))^(1/3).
double critical_coupling(double omega);

/// Bound-state energy in eV. eta0 is always taken from the ground state, so
/// the value is independent of l (which is still validated against n).
/// mu_ev = 0 selects the electron mass (infinite-nucleus convention).
double energy_level_ev(int z, int n, int l, double omega, const Constants& c = {},
                       double mu_ev = 0.0);

/// E(2s) - E(1s) in eV, both levels sharing the ground-state eta0.
double level_gap_1s2s_ev(int z, double omega, const Constants& c = {},
                         double mu_ev = 0.0);

/// Unmodified Schrodinger level, -(mu c^2/2)(alpha Z)^2/n^2, in eV.
double schrodinger_level_ev(int z, int n, const Constants& c = {},
                            double mu_ev = 0.0);

/// Ground-state mean interparticle distance
/// (3/2)(hbar/mu c)(1/alpha Z)(1+eta0)^-2 in cm.
double mean_distance_ground_cm(double alpha_z, double omega,
                               const ParticlePair& pair, const Constants& c = {});
double mean_distance_ground_cm(int z, double omega, const ParticlePair& pair,
                               const Constants& c = {});

/// Closed-form radial function chi_nl(r) of the rescaled Coulomb problem.
/// Lengths in Bohr radii a0 = hbar^2/(mu e^2); normalized so that
/// integral chi^2 dr = 1.
class RadialWavefunction {
public:
    /// Throws std::domain_error for invalid quantum numbers or beta <= 0.
    RadialWavefunction(int z, int n, int l, double beta);

    double operator()(double r_a0) const;

    double normalization() const { return norm_; }
    /// a0 beta^2/Z in a0 units.
    double effective_bohr() const { return beta_ * beta_ / z_; }
    int n() const { return n_; }
    int l() const { return l_; }
    int radial_nodes() const { return n_ - l_ - 1; }

private:
    int z_, n_, l_;
    double beta_;
    double scale_;  // a0 beta^2/Z
    double norm_;
    std::vector<double> series_;  // terminating confluent hypergeometric coefficients
};

/// Ground-state binding energies per unit mu c^2 (all negative).
double e_schrodinger(double alpha_z);
/// Defined for 0 < alpha_z <= 1.
double e_dirac(double alpha_z);
/// Defined for 0 < alpha_z <= 1/2.
double e_klein_gordon(double alpha_z);
/// This model: -(alpha Z)^2/2 (1+eta0)^2; defined up to the critical coupling.
double e_model(double alpha_z, double omega);

struct ComparisonCurves {
    double schrodinger;
    double dirac;
    double klein_gordon;
};

/// All three reference curves at once; alpha_z must lie in every domain,
/// i.e. 0 < alpha_z <= 1/2.
ComparisonCurves comparison_curves(double alpha_z);

} // namespace ncqm
