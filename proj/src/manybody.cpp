#include "ncqm/manybody.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ncqm/errors.hpp"
#include "ncqm/polynomial.hpp"

namespace ncqm {

namespace {

constexpr double kIdentityTolerance = 1e-12;

// W[i][j]: coefficient of d/dx_j in the (-i hbar stripped) momentum of
// particle i. Diagonal 1 - sum_s eps_is, off-diagonal eps_ji.
Matrix representation_matrix(const NBodySystem& s) {
    const std::size_t n = s.size();
    Matrix w(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) row_sum += s.eps[i][k];
        for (std::size_t j = 0; j < n; ++j) {
            w[i][j] = i == j ? 1.0 - row_sum : s.eps[j][i];
        }
    }
    return w;
}

} // namespace

NBodySystem::NBodySystem(std::vector<double> masses_in, Matrix eps_in)
    : masses(std::move(masses_in)), eps(std::move(eps_in)) {
    const std::size_t n = masses.size();
    if (n < 2) throw std::invalid_argument("need at least two particles");
    if (eps.size() != n) throw std::invalid_argument("eps must be N x N");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(masses[i] > 0.0)) throw std::invalid_argument("masses must be positive");
        if (eps[i].size() != n) throw std::invalid_argument("eps must be N x N");
        if (eps[i][i] != 0.0) throw std::invalid_argument("eps diagonal must be zero");
        double row = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (!(eps[i][k] >= 0.0)) {
                throw std::invalid_argument("eps entries must be non-negative");
            }
            row += eps[i][k];
        }
        if (!(row < 1.0)) {
            throw std::invalid_argument("eps row sums must stay below 1");
        }
    }
}

NBodySystem NBodySystem::identical(std::size_t n, double mass, double eps_value) {
    Matrix eps(n, std::vector<double>(n, eps_value));
    for (std::size_t i = 0; i < n; ++i) eps[i][i] = 0.0;
    return NBodySystem(std::vector<double>(n, mass), std::move(eps));
}

KineticForm kinetic_coefficients(const NBodySystem& s) {
    const std::size_t n = s.size();
    KineticForm form;
    form.A.assign(n, 0.0);
    form.B.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t k = 0; k < n; ++k) row += s.eps[i][k];
        double a = (1.0 - row) * (1.0 - row);
        for (std::size_t k = 0; k < n; ++k) {
            a += s.masses[i] / s.masses[k] * s.eps[i][k] * s.eps[i][k];
        }
        form.A[i] = a;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (i == k) continue;
            double b = s.eps[k][i] / s.masses[i] + s.eps[i][k] / s.masses[k];
            for (std::size_t l = 0; l < n; ++l) {
                b += s.eps[k][l] * s.eps[i][l] / s.masses[l] -
                     s.eps[k][i] * s.eps[i][l] / s.masses[i] -
                     s.eps[i][k] * s.eps[k][l] / s.masses[k];
            }
            form.B[i][k] = b;
        }
    }
    return form;
}

Matrix kinetic_matrix(const NBodySystem& s) {
    const std::size_t n = s.size();
    Matrix w = representation_matrix(s);
    Matrix t(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                t[j][k] += w[i][j] * w[i][k] / s.masses[i];
            }
        }
    }
    return t;
}

std::pair<double, double> jacobi_parameters_3body(const NBodySystem& s) {
    if (s.size() != 3) throw std::invalid_argument("three-body parameters need N = 3");
    const double m1 = s.masses[0], m2 = s.masses[1], m3 = s.masses[2];
    const double m = m1 + m2 + m3;
    const double e12 = s.eps[0][1], e13 = s.eps[0][2];
    const double e21 = s.eps[1][0], e23 = s.eps[1][2];
    const double e31 = s.eps[2][0], e32 = s.eps[2][1];

    const double d = (-1.0 + e21 + e23) * (-1.0 + e31 + e13) +
                     e32 * (-1.0 + e21 + e13) +
                     e12 * (-1.0 + e23 + e31 + e32);
    if (std::abs(d) < 1e-12) {
        throw SingularTransformationError("three-body transformation denominator "
                                          "is numerically zero");
    }
    const double a1 = m1 / (m * d) * (e13 * (1.0 - e21 - e23 - e32) +
                                      e12 * (1.0 - e23 - e31 - e32)) +
                      m2 / (m * d) * (e21 * (-1.0 + e31 + e32) + e23 * e31) +
                      m3 / (m * d) * (e31 * (-1.0 + e21 + e23) + e21 * e32);
    const double a2 = m2 / (m * d) * (e21 * (1.0 - e31 - e32 - e13) +
                                      e23 * (1.0 - e31 - e12 - e13)) +
                      m1 / (m * d) * (e13 * e32 + e12 * (-1.0 + e31 + e32)) +
                      m3 / (m * d) * (e32 * (-1.0 + e13 + e12) + e12 * e31);
    return {a1, a2};
}

Matrix jacobi_matrix(const NBodySystem& s, const std::vector<double>& a_params) {
    const std::size_t n = s.size();
    if (a_params.size() != n - 1) {
        throw std::invalid_argument("expected N-1 mixing parameters");
    }
    Matrix c(n, std::vector<double>(n, 0.0));
    double mass_prefix = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        mass_prefix += s.masses[k];
        for (std::size_t j = 0; j <= k; ++j) c[k][j] = s.masses[j] / mass_prefix;
        c[k][k + 1] = -1.0;
    }
    double total = mass_prefix + s.masses[n - 1];
    double a_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) c[n - 1][j] = s.masses[j] / total;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        c[n - 1][j] += a_params[j];
        a_sum += a_params[j];
    }
    c[n - 1][n - 1] -= a_sum;
    return c;
}

Matrix jacobi_matrix(const NBodySystem& s) {
    if (s.size() == 2) {
        // kappa from the two-body free-motion vector
        double beta = 1.0 - s.eps[0][1] - s.eps[1][0];
        if (std::abs(beta) < 1e-12) {
            throw SingularTransformationError("beta vanished in the two-body "
                                              "transformation");
        }
        double m = s.masses[0] + s.masses[1];
        double kappa = (s.masses[0] * s.eps[0][1] - s.masses[1] * s.eps[1][0]) /
                       (m * beta);
        return jacobi_matrix(s, {kappa});
    }
    if (s.size() == 3) {
        auto [a1, a2] = jacobi_parameters_3body(s);
        return jacobi_matrix(s, {a1, a2});
    }
    throw std::invalid_argument("built-in mixing parameters exist for N in {2, 3}; "
                                "supply them explicitly for larger systems");
}

Matrix normed_jacobi_matrix(std::size_t n) {
    if (n < 2) throw std::invalid_argument("need at least two particles");
    Matrix c(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 1; k < n; ++k) {
        double f = std::sqrt(static_cast<double>(k) / (k + 1.0));
        for (std::size_t s = 0; s < k; ++s) c[k - 1][s] = f / static_cast<double>(k);
        c[k - 1][k] = -f;
    }
    for (std::size_t s = 0; s < n; ++s) c[n - 1][s] = 1.0 / std::sqrt(static_cast<double>(n));
    return c;
}

namespace {

DecouplingReport decouple(const NBodySystem& s, const Matrix& c) {
    const std::size_t n = s.size();
    Matrix t = kinetic_matrix(s);
    Matrix ct(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) ct[i][j] += c[i][k] * t[k][j];
        }
    }
    Matrix tp(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) tp[i][j] += ct[i][k] * c[j][k];
        }
    }
    DecouplingReport report;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        report.max_cross_residual =
            std::max(report.max_cross_residual, std::abs(tp[k][n - 1]));
    }
    report.free_block = tp[n - 1][n - 1];
    report.transformed = std::move(tp);
    return report;
}

} // namespace

DecouplingReport transform_and_check_decoupling(const NBodySystem& s) {
    return decouple(s, jacobi_matrix(s));
}

DecouplingReport transform_and_check_decoupling(const NBodySystem& s,
                                                const std::vector<double>& a_params) {
    return decouple(s, jacobi_matrix(s, a_params));
}

double identical_particle_coefficient(int n, double eps, double mass) {
    if (n < 2) throw std::domain_error("need at least two particles");
    if (!(mass > 0.0)) throw std::domain_error("mass must be positive");
    if (!(eps >= 0.0) || !(n * eps < 1.0)) {
        throw std::domain_error("need 0 <= N*eps < 1; the kinetic term degenerates");
    }
    double u = 1.0 - n * eps;
    return u * u / (2.0 * mass);
}

double identical_eps_from_kappa(double kappa) {
    if (!(kappa >= 0.0)) throw std::domain_error("kappa must be non-negative");
    return kappa / (1.0 + kappa);
}

double check_commutators_nbody(const NBodySystem& s, int degree) {
    if (degree < 1) throw std::domain_error("degree must be >= 1");
    using poly::Polynomial;
    const std::size_t n = s.size();
    Matrix w = representation_matrix(s);

    auto momentum = [&](std::size_t i, const Polynomial& f) {
        return poly::apply_gradient_form(w[i], f);
    };

    std::vector<double> row_sum(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) row_sum[i] += s.eps[i][k];
    }

    double worst = 0.0;
    for (const auto& mono : poly::monomial_basis(n, degree)) {
        Polynomial f = Polynomial::monomial(n, mono);
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial xk_f = f.times_var(k);
            // [x_k, pt_i] f = -W_ik f <-> [x_k, p_i] = i hbar W_ik, which must
            // match eps_ki off-diagonal and 1 - sum_s eps_ks on the diagonal.
            for (std::size_t i = 0; i < n; ++i) {
                Polynomial comm = momentum(i, f).times_var(k) - momentum(i, xk_f);
                double expected = i == k ? -(1.0 - row_sum[k]) : -s.eps[k][i];
                Polynomial res = comm - f.scaled(expected);
                worst = std::max(worst, res.max_abs_coeff());
            }
            // total momentum: [x_k, Pt] = -1
            Polynomial ptot(n);
            Polynomial ptot_xk(n);
            for (std::size_t i = 0; i < n; ++i) {
                ptot = ptot + momentum(i, f);
                ptot_xk = ptot_xk + momentum(i, xk_f);
            }
            Polynomial res = (ptot.times_var(k) - ptot_xk) - f.scaled(-1.0);
            worst = std::max(worst, res.max_abs_coeff());
        }
        // momentum-momentum commutators vanish
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Polynomial pp = momentum(i, momentum(j, f)) -
                                momentum(j, momentum(i, f));
                worst = std::max(worst, pp.max_abs_coeff());
            }
        }
    }
    if (worst > kIdentityTolerance) {
        throw IdentityViolationError("N-body commutator residual " +
                                     std::to_string(worst) + " exceeds 1e-12");
    }
    return worst;
}

} // namespace ncqm
