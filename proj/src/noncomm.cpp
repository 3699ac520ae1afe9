#include "ncqm/noncomm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ncqm/errors.hpp"
#include "ncqm/polynomial.hpp"

namespace ncqm {

NoncommParams eps_from_xi(double omega, double xi, const ParticlePair& pair) {
    if (!(omega >= 0.0) || !(xi >= 0.0)) {
        throw std::domain_error("omega and xi must be non-negative");
    }
    double m = pair.total_ev();
    double w2 = omega * xi * (pair.m2_ev / m) * (pair.m2_ev / m);
    double w1 = omega * xi * (pair.m1_ev / m) * (pair.m1_ev / m);
    NoncommParams p;
    p.omega = omega;
    p.xi = xi;
    p.eta = omega * xi;
    p.eps12 = w2 / (1.0 + w2);
    p.eps21 = w1 / (1.0 + w1);
    p.beta = beta_full(omega, xi, pair.mass_ratio());
    return p;
}

double beta_full(double omega, double xi, double mass_ratio) {
    if (!(omega * xi >= 0.0)) throw std::domain_error("omega*xi must be non-negative");
    if (!(mass_ratio >= 0.0) || !(mass_ratio <= 0.25)) {
        throw std::domain_error("mass_ratio must lie in [0, 1/4]");
    }
    double h = omega * xi;
    double ht = h * mass_ratio;
    return (1.0 - ht * ht) / (1.0 + ht * ht + h * (1.0 - 2.0 * mass_ratio));
}

AngularCoefficients angular_coefficients(const NoncommParams& p) {
    if (p.beta == 0.0) {
        throw SingularAlgebraError("beta = 0: angular decomposition is singular");
    }
    return AngularCoefficients{
        (1.0 - p.eps21) / p.beta,
        -p.eps21 / p.beta,
        -p.eps12 / p.beta,
        (1.0 - p.eps12) / p.beta,
    };
}

std::pair<double, double> r_vector_coefficients(const NoncommParams& p,
                                                const ParticlePair& pair) {
    if (p.beta == 0.0) {
        throw SingularAlgebraError("beta = 0: free-motion vector is singular");
    }
    double m = pair.total_ev();
    double kappa = (pair.m1_ev * p.eps12 - pair.m2_ev * p.eps21) / (m * p.beta);
    return {pair.m1_ev / m + kappa, pair.m2_ev / m - kappa};
}

namespace {

using poly::Polynomial;

constexpr double kIdentityTolerance = 1e-12;

// One Cartesian component of the two-particle representation, hbar = 1 and
// the -i factor stripped: pt_i f = sum_j W[i][j] df/dx_j. Entries follow the
// differential representation; `p2_eps12_shift` perturbs only the momentum
// operator of particle 2 (negative-control hook).
struct TwoBodyRep {
    double w[2][2];

    TwoBodyRep(const NoncommParams& p, double p2_eps12_shift) {
        w[0][0] = 1.0 - p.eps12;
        w[0][1] = p.eps21;
        w[1][0] = p.eps12 + p2_eps12_shift;
        w[1][1] = 1.0 - p.eps21;
    }

    Polynomial momentum(int i, const Polynomial& f) const {
        return poly::apply_gradient_form({w[i][0], w[i][1]}, f);
    }
};

// max-abs-coefficient of ([x_k, pt_i] - expected) f over the basis, plus the
// coordinate-coordinate and momentum-momentum commutators and the
// coordinate/total-momentum ones. The commutators with the physical momenta
// p = -i hbar pt are i hbar times the values checked here, so "expected"
// carries the commutator table without the i hbar factor.
double two_body_residual(const TwoBodyRep& rep, const NoncommParams& p, int degree) {
    const double expected[2][2] = {
        {-(1.0 - p.eps12), -p.eps12},  // [x1, pt_1], [x1, pt_2]
        {-p.eps21, -(1.0 - p.eps21)},  // [x2, pt_1], [x2, pt_2]
    };
    // [x_k, pt] f = x_k pt(f) - pt(x_k f) = -w_{.k} f, so expected is -w
    // transposed; the sign convention cancels against p = -i pt when the
    // table is read back in terms of the physical operators.
    double worst = 0.0;
    for (const auto& m : poly::monomial_basis(2, degree)) {
        Polynomial f = Polynomial::monomial(2, m);
        for (int k = 0; k < 2; ++k) {
            for (int i = 0; i < 2; ++i) {
                Polynomial comm = rep.momentum(i, f).times_var(k) -
                                  rep.momentum(i, f.times_var(k));
                Polynomial res = comm - f.scaled(expected[k][i]);
                worst = std::max(worst, res.max_abs_coeff());
            }
            // [x_k, Pt] = -1 for both particles (total momentum).
            Polynomial ptot = rep.momentum(0, f) + rep.momentum(1, f);
            Polynomial ptot_xk =
                rep.momentum(0, f.times_var(k)) + rep.momentum(1, f.times_var(k));
            Polynomial res = (ptot.times_var(k) - ptot_xk) - f.scaled(-1.0);
            worst = std::max(worst, res.max_abs_coeff());
        }
        // [x1, x2] = 0.
        Polynomial xx = f.times_var(0).times_var(1) - f.times_var(1).times_var(0);
        worst = std::max(worst, xx.max_abs_coeff());
        // [pt_1, pt_2] = 0.
        Polynomial pp = rep.momentum(0, rep.momentum(1, f)) -
                        rep.momentum(1, rep.momentum(0, f));
        worst = std::max(worst, pp.max_abs_coeff());
    }
    return worst;
}

} // namespace

double check_commutators(const NoncommParams& p, int degree) {
    return check_commutators_perturbed(p, degree, 0.0);
}

double check_commutators_perturbed(const NoncommParams& p, int degree,
                                   double perturbation) {
    if (degree < 1) throw std::domain_error("degree must be >= 1");
    TwoBodyRep rep(p, perturbation);
    double worst = two_body_residual(rep, p, degree);
    if (worst > kIdentityTolerance) {
        throw IdentityViolationError(
            "two-body commutator residual " + std::to_string(worst) +
            " exceeds 1e-12");
    }
    return worst;
}

} // namespace ncqm
