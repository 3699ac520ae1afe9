#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ncqm {

using Matrix = std::vector<std::vector<double>>;

/// N particles with a full noncommutativity matrix eps[i][k] (zero diagonal,
/// every row sum below 1 so each diagonal commutator stays positive).
struct NBodySystem {
    std::vector<double> masses;  ///< energy units
    Matrix eps;

    /// Validates shapes, positivity and row sums; throws std::invalid_argument.
    NBodySystem(std::vector<double> masses, Matrix eps);

    std::size_t size() const { return masses.size(); }

    static NBodySystem identical(std::size_t n, double mass, double eps_value);
};

/// Kinetic-energy coefficients: diagonal A_i (dimensionless) and symmetric
/// cross terms B_ik (1/mass).
struct KineticForm {
    std::vector<double> A;
    Matrix B;
};

/// A_i and B_ik from their closed forms.
KineticForm kinetic_coefficients(const NBodySystem& system);

/// The same operator as a symmetric matrix T with
/// H_kin = -(hbar^2/2) sum_jk T_jk (grad_j . grad_k), built by squaring the
/// momentum representation: T = W^T M^-1 W. Independent route from
/// kinetic_coefficients; T_jj = A_j/m_j and T_jk = B_jk.
Matrix kinetic_matrix(const NBodySystem& system);

/// The two extra mixing parameters of the generalized three-body Jacobi
/// transformation. Throws SingularTransformationError when the denominator
/// is numerically zero.
std::pair<double, double> jacobi_parameters_3body(const NBodySystem& system);

/// Rows of the generalized Jacobi transformation R = C r for N in {2, 3};
/// the last row carries the free-motion coordinate.
Matrix jacobi_matrix(const NBodySystem& system);

/// Same with caller-supplied mixing parameters (general N).
Matrix jacobi_matrix(const NBodySystem& system, const std::vector<double>& a_params);

/// Orthonormal Jacobi rows used for identical particles.
Matrix normed_jacobi_matrix(std::size_t n);

struct DecouplingReport {
    double max_cross_residual = 0.0;  ///< worst |T'_kN| for k < N
    double free_block = 0.0;          ///< T'_NN; 1/M when the motion separates
    Matrix transformed;               ///< full T' = C T C^T
};

/// Congruence-transforms the kinetic matrix and reports how well the mixed
/// derivatives (grad_Rk . grad_RN) vanish.
DecouplingReport transform_and_check_decoupling(const NBodySystem& system);
DecouplingReport transform_and_check_decoupling(const NBodySystem& system,
                                                const std::vector<double>& a_params);

/// hbar^2 (1 - N eps)^2 / (2 m) with hbar = 1; the common kinetic prefactor
/// of the relative coordinates for N identical particles.
/// Throws std::domain_error when N*eps >= 1.
double identical_particle_coefficient(int n, double eps, double mass);

/// eps = kappa / (1 + kappa).
double identical_eps_from_kappa(double kappa);

/// Applies the N-particle momentum representation to every monomial of total
/// degree <= degree and verifies the full commutator table, including
/// [r_i, P] = i hbar. Returns the worst residual; throws
/// IdentityViolationError above 1e-12.
double check_commutators_nbody(const NBodySystem& system, int degree);

} // namespace ncqm
