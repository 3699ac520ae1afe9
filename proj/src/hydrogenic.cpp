#include "ncqm/hydrogenic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ncqm/errors.hpp"

namespace ncqm {

namespace {

constexpr double kSolvabilityMax = 27.0 / 256.0;  // max of eta/(1+eta)^4, at eta = 1/3
constexpr double kEtaCritical = 1.0 / 3.0;

double eta_curve(double eta) {
    double u = 1.0 + eta;
    return eta / (u * u * u * u);
}

double rhs_of(double omega, double alpha_z) {
    if (!(omega > 0.0)) throw std::domain_error("omega must be positive");
    if (!(alpha_z > 0.0)) throw std::domain_error("alpha_z must be positive");
    return 4.0 * omega * alpha_z * alpha_z * alpha_z;
}

void require_solvable(double rhs) {
    // Tiny relative slack so that couplings meant to sit exactly at the
    // critical point are not rejected by the last rounding of the cubing.
    if (rhs > kSolvabilityMax * (1.0 + 1e-12)) {
        throw NoBoundStateError("no ground state: 4 omega (alpha Z)^3 = " +
                                std::to_string(rhs) + " exceeds 27/256");
    }
}

double mu_or_electron(double mu_ev, const Constants& c) {
    return mu_ev > 0.0 ? mu_ev : c.electron_rest_energy_ev;
}

void check_quantum_numbers(int z, int n, int l) {
    if (z < 1) throw std::domain_error("Z must be a positive integer");
    if (n < 1) throw std::domain_error("n must be >= 1");
    if (l < 0 || l >= n) throw std::domain_error("l must satisfy 0 <= l <= n-1");
}

} // namespace

double solve_eta0(double omega, double alpha_z) {
    double rhs = rhs_of(omega, alpha_z);
    require_solvable(rhs);
    if (rhs >= kSolvabilityMax) return kEtaCritical;
    // eta_curve is strictly increasing on [0, 1/3].
    double lo = 0.0, hi = kEtaCritical;
    while (hi - lo > 1e-14) {
        double mid = 0.5 * (lo + hi);
        (eta_curve(mid) < rhs ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double solve_eta0_second(double omega, double alpha_z) {
    double rhs = rhs_of(omega, alpha_z);
    require_solvable(rhs);
    if (rhs >= kSolvabilityMax) return kEtaCritical;
    // Decreasing branch: bracket [1/3, hi] with eta_curve(hi) < rhs.
    double hi = 1.0;
    while (eta_curve(hi) >= rhs) hi *= 2.0;
    double lo = kEtaCritical;
    while (hi - lo > 1e-13 * hi) {
        double mid = 0.5 * (lo + hi);
        (eta_curve(mid) > rhs ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double critical_coupling(double omega) {
    if (!(omega > 0.0)) throw std::domain_error("omega must be positive");
    // extended precision so that exactly representable results round cleanly
    return static_cast<double>(
        std::cbrt(27.0L / (1024.0L * static_cast<long double>(omega))));
}

double energy_level_ev(int z, int n, int l, double omega, const Constants& c,
                       double mu_ev) {
    check_quantum_numbers(z, n, l);
    c.validate();
    double mu = mu_or_electron(mu_ev, c);
    double alpha_z = c.alpha * z;
    double scale = -0.5 * mu * alpha_z * alpha_z / (static_cast<double>(n) * n);
    if (omega == 0.0) return scale;
    double eta0 = solve_eta0(omega, alpha_z);
    return scale * (1.0 + eta0) * (1.0 + eta0);
}

double level_gap_1s2s_ev(int z, double omega, const Constants& c, double mu_ev) {
    return energy_level_ev(z, 2, 0, omega, c, mu_ev) -
           energy_level_ev(z, 1, 0, omega, c, mu_ev);
}

double schrodinger_level_ev(int z, int n, const Constants& c, double mu_ev) {
    return energy_level_ev(z, n, 0, 0.0, c, mu_ev);
}

double mean_distance_ground_cm(double alpha_z, double omega,
                               const ParticlePair& pair, const Constants& c) {
    if (!(alpha_z > 0.0)) throw std::domain_error("alpha_z must be positive");
    double eta0 = omega == 0.0 ? 0.0 : solve_eta0(omega, alpha_z);
    double lam = compton_length_cm(pair.reduced_ev(), c);
    double u = 1.0 + eta0;
    return 1.5 * lam / (alpha_z * u * u);
}

double mean_distance_ground_cm(int z, double omega, const ParticlePair& pair,
                               const Constants& c) {
    if (z < 1) throw std::domain_error("Z must be a positive integer");
    return mean_distance_ground_cm(c.alpha * z, omega, pair, c);
}

RadialWavefunction::RadialWavefunction(int z, int n, int l, double beta)
    : z_(z), n_(n), l_(l), beta_(beta) {
    check_quantum_numbers(z, n, l);
    if (!(beta > 0.0)) throw std::domain_error("beta must be positive");
    scale_ = beta * beta * n / z;  // n a0 beta^2/Z: scale of the radial argument
    // Terminating confluent hypergeometric F(-(n-l-1), 2l+2, t):
    // coefficient recurrence c_{k+1} = c_k (k - m)/((2l+2+k)(k+1)) with
    // m = n-l-1 (so the series is a polynomial of degree m).
    int m = n - l - 1;
    series_.assign(static_cast<std::size_t>(m) + 1, 0.0);
    series_[0] = 1.0;
    for (int k = 0; k < m; ++k) {
        series_[k + 1] = series_[k] * (static_cast<double>(k) - m) /
                         ((2.0 * l + 2.0 + k) * (k + 1.0));
    }
    // N_nl = (1/(2l+1)!) sqrt((n+l)!/(2n (n-l-1)!)) (2Z/(n a0 beta^2))^{l+3/2}
    double log_fact_2l1 = std::lgamma(2.0 * l + 2.0);
    double log_ratio = std::lgamma(n + l + 1.0) - std::lgamma(m + 1.0);
    double log_norm = -log_fact_2l1 + 0.5 * (log_ratio - std::log(2.0 * n)) +
                      (l + 1.5) * std::log(2.0 / scale_);
    norm_ = std::exp(log_norm);
}

double RadialWavefunction::operator()(double r_a0) const {
    if (r_a0 < 0.0) throw std::domain_error("r must be non-negative");
    double t = 2.0 * r_a0 / scale_;
    double f = 0.0;
    for (std::size_t k = series_.size(); k-- > 0;) f = f * t + series_[k];
    return norm_ * std::pow(r_a0, l_ + 1) * f * std::exp(-0.5 * t);
}

double e_schrodinger(double alpha_z) {
    if (!(alpha_z > 0.0)) throw std::domain_error("alpha_z must be positive");
    return -0.5 * alpha_z * alpha_z;
}

double e_dirac(double alpha_z) {
    if (!(alpha_z > 0.0) || alpha_z > 1.0) {
        throw std::domain_error("Dirac ground state needs 0 < alpha_z <= 1");
    }
    return std::sqrt(1.0 - alpha_z * alpha_z) - 1.0;
}

double e_klein_gordon(double alpha_z) {
    if (!(alpha_z > 0.0) || alpha_z > 0.5) {
        throw std::domain_error("Klein-Gordon ground state needs 0 < alpha_z <= 1/2");
    }
    double root = std::sqrt(0.25 - alpha_z * alpha_z);
    double denom = 0.5 + root;
    double w = alpha_z / denom;
    return 1.0 / std::sqrt(1.0 + w * w) - 1.0;
}

double e_model(double alpha_z, double omega) {
    double eta0 = omega == 0.0 ? 0.0 : solve_eta0(omega, alpha_z);
    double u = 1.0 + eta0;
    return -0.5 * alpha_z * alpha_z * u * u;
}

ComparisonCurves comparison_curves(double alpha_z) {
    return ComparisonCurves{e_schrodinger(alpha_z), e_dirac(alpha_z),
                            e_klein_gordon(alpha_z)};
}

} // namespace ncqm
