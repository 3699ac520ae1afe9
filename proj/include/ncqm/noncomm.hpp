#pragma once

#include <utility>

#include "ncqm/physical.hpp"

namespace ncqm {

/// Noncommutativity parameters attached to one quantum state.
/// eps12 couples particle 1's coordinate to particle 2's momentum, eps21 the
/// reverse; beta = 1 - eps12 - eps21 rescales the relative-motion kinetics.
struct NoncommParams {
    double omega = 0.0;
    double xi = 0.0;
    double eps12 = 0.0;
    double eps21 = 0.0;
    double beta = 1.0;
    double eta = 0.0;  ///< omega * xi
};

/// Coefficients C_ij of the conserved total angular momentum
/// L = sum_ij C_ij [r_i x p_j].
struct AngularCoefficients {
    double c11, c12, c21, c22;
};

/// eps12 = W2/(1+W2), eps21 = W1/(1+W1) with Wi = omega xi (m_other/M)^2,
/// plus beta and eta for the same state.
NoncommParams eps_from_xi(double omega, double xi, const ParticlePair& pair);

/// beta as a closed form in (omega xi, mu/M); identically equal to
/// 1 - eps12 - eps21 from eps_from_xi.
double beta_full(double omega, double xi, double mass_ratio);

/// Throws SingularAlgebraError when beta == 0.
AngularCoefficients angular_coefficients(const NoncommParams& p);

/// Coefficients of r_1 and r_2 in the free-motion vector R; they sum to 1.
/// Throws SingularAlgebraError when beta == 0.
std::pair<double, double> r_vector_coefficients(const NoncommParams& p,
                                                const ParticlePair& pair);

/// Applies the two-particle differential representation to every monomial of
/// total degree <= degree and verifies the full commutator table, including
/// the coordinate/total-momentum commutators. Returns the largest residual
/// (units of hbar = 1); throws IdentityViolationError above 1e-12.
double check_commutators(const NoncommParams& p, int degree);

/// Same check with the eps12 entry of particle 2's momentum operator shifted
/// by `perturbation`. Used as a negative control: a nonzero perturbation must
/// trip the identity check.
double check_commutators_perturbed(const NoncommParams& p, int degree,
                                   double perturbation);

} // namespace ncqm
