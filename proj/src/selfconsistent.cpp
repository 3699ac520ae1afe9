#include "ncqm/selfconsistent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ncqm/errors.hpp"

namespace ncqm {

namespace {

constexpr double kBetaFloor = 1e-9;

// Divergent iterates are recognized by omega*xi running past the point where
// beta turns negative (finite for mass_ratio > 0) or past a fixed large cap.
double h_fail(double mass_ratio) {
    if (mass_ratio > 1e-12) return std::min(0.999 / mass_ratio, 64.0);
    return 64.0;
}

struct DampedLoop {
    double gamma;
    double prev_residual = -1.0;

    explicit DampedLoop(double relaxation) : gamma(relaxation) {}

    double update(double xi_in, double xi_out) {
        double residual = std::abs(xi_out - xi_in) / std::max(xi_in, 1.0);
        if (prev_residual >= 0.0 && residual > prev_residual) {
            gamma = std::max(0.5 * gamma, 1.0 / 64.0);
        }
        prev_residual = residual;
        return xi_in + gamma * (xi_out - xi_in);
    }
};

} // namespace

SelfConsistentResult solve_self_consistent(const Potential& potential,
                                           const ParticlePair& pair, double omega,
                                           const FixedPointOptions& options) {
    if (!(omega >= 0.0)) throw std::domain_error("omega must be non-negative");
    const double ratio = pair.mass_ratio();
    const double mu = pair.reduced_ev();

    auto ground_state = [&](double beta) {
        RadialProblem problem = RadialProblem::standard(
            potential, 0, beta, mu, options.grid_points);
        return solve_bound_state(problem, 0, options.solver);
    };

    SelfConsistentResult result;
    if (omega == 0.0) {
        result.solution = ground_state(1.0);
        double xi = 2.0 * result.solution.mean_abs_dv;
        result.params = eps_from_xi(0.0, xi, pair);
        result.iterations = 1;
        result.residual = 0.0;
        return result;
    }

    double xi = 0.0;
    DampedLoop loop(options.relaxation);
    for (int it = 1; it <= options.max_iterations; ++it) {
        if (omega * xi > h_fail(ratio)) {
            throw NoBoundStateError("self-consistency diverged: coupling beyond "
                                    "the critical value");
        }
        double beta = beta_full(omega, xi, ratio);
        if (beta <= kBetaFloor) {
            throw NoBoundStateError("self-consistency drove beta to zero: "
                                    "coupling beyond the critical value");
        }
        RadialSolution sol = ground_state(beta);
        double xi_out = 2.0 * sol.mean_abs_dv;
        double residual = std::abs(xi_out - xi) / std::max(xi, 1.0);
        if (options.record_history) result.residual_history.push_back(residual);
        if (residual <= options.tol) {
            result.params = eps_from_xi(omega, xi, pair);
            result.solution = std::move(sol);
            result.iterations = it;
            result.residual = residual;
            return result;
        }
        xi = loop.update(xi, xi_out);
    }
    throw ConvergenceError("self-consistency did not settle within " +
                           std::to_string(options.max_iterations) + " iterations");
}

CoulombFixedPoint coulomb_fixed_point(double omega, double alpha_z, double mass_ratio,
                                      const FixedPointOptions& options) {
    if (!(omega >= 0.0)) throw std::domain_error("omega must be non-negative");
    if (!(alpha_z > 0.0)) throw std::domain_error("alpha_z must be positive");
    const double az3 = 4.0 * alpha_z * alpha_z * alpha_z;
    if (omega == 0.0) {
        return CoulombFixedPoint{az3, 1.0, 1};
    }
    double xi = 0.0;
    DampedLoop loop(options.relaxation);
    for (int it = 1; it <= options.max_iterations; ++it) {
        if (omega * xi > h_fail(mass_ratio)) {
            throw NoBoundStateError("Coulomb fixed point diverged: coupling "
                                    "beyond the critical value");
        }
        double beta = beta_full(omega, xi, mass_ratio);
        if (beta <= kBetaFloor) {
            throw NoBoundStateError("Coulomb fixed point drove beta to zero");
        }
        double xi_out = az3 / (beta * beta * beta * beta);
        double residual = std::abs(xi_out - xi) / std::max(xi, 1.0);
        if (residual <= options.tol) {
            return CoulombFixedPoint{xi, beta, it};
        }
        xi = loop.update(xi, xi_out);
    }
    throw ConvergenceError("Coulomb fixed point did not settle");
}

double tangency_parameter(double mass_ratio) {
    if (!(mass_ratio >= 0.0) || !(mass_ratio <= 0.25)) {
        throw std::domain_error("mass_ratio must lie in [0, 1/4]");
    }
    const double t = mass_ratio;
    // d/dh log(h beta^4) with beta = N/D.
    auto slope = [t](double h) {
        double n = 1.0 - h * h * t * t;
        double d = 1.0 + h * h * t * t + h * (1.0 - 2.0 * t);
        double np = -2.0 * h * t * t;
        double dp = 2.0 * h * t * t + (1.0 - 2.0 * t);
        return 1.0 / h + 4.0 * np / n - 4.0 * dp / d;
    };
    double hi = t > 1e-12 ? std::min(0.999999 / t, 64.0) : 64.0;
    double lo = 1e-12;
    if (!(slope(lo) > 0.0) || !(slope(hi) < 0.0)) {
        throw CalibrationError("tangency bracket failed");
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (slope(mid) > 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-15 * hi) break;
    }
    return 0.5 * (lo + hi);
}

double critical_coupling_full(double omega, double mass_ratio) {
    if (!(omega > 0.0)) throw std::domain_error("omega must be positive");
    double hs = tangency_parameter(mass_ratio);
    double bs = beta_full(1.0, hs, mass_ratio);  // beta depends on h = omega*xi only
    double gmax = hs * bs * bs * bs * bs;
    return std::cbrt(gmax / (4.0 * omega));
}

double critical_coupling_probe(double omega, double mass_ratio, double rel_width,
                               const FixedPointOptions& options) {
    FixedPointOptions probe = options;
    probe.tol = std::max(options.tol, 1e-11);

    auto converges = [&](double alpha_z) {
        try {
            coulomb_fixed_point(omega, alpha_z, mass_ratio, probe);
            return true;
        } catch (const NoBoundStateError&) {
            return false;
        } catch (const ConvergenceError&) {
            // Too close to tangency to classify cheaply; treat as failed.
            return false;
        }
    };

    double lo = 0.05;
    while (!converges(lo)) {
        lo *= 0.5;
        if (lo < 1e-6) throw CalibrationError("no converging coupling found");
    }
    double hi = lo * 2.0;
    while (converges(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 64.0) throw CalibrationError("no failing coupling found");
    }
    while (hi - lo > rel_width * lo) {
        double mid = 0.5 * (lo + hi);
        (converges(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

OmegaCalibration calibrate_omega(double ratio) {
    if (!(ratio >= 0.0) || !(ratio <= 0.25)) {
        throw std::domain_error("ratio must lie in [0, 1/4]");
    }
    const double hs = tangency_parameter(ratio);
    const double bs = beta_full(1.0, hs, ratio);
    const double gmax = hs * bs * bs * bs * bs;
    const double delta12 = std::sqrt(1.0 - 2.0 * ratio);

    // <r>_min(omega) = 1.5 beta*^2 / alpha_z_c(omega) grows like omega^(1/3),
    // so the calibration equation has exactly one root.
    auto min_distance = [&](double omega) {
        double azc = std::cbrt(gmax / (4.0 * omega));
        return 1.5 * bs * bs / azc;
    };

    double lo = 1e-6, hi = 10.0;
    if (!(min_distance(lo) < delta12) || !(min_distance(hi) > delta12)) {
        throw CalibrationError("omega bracket failed");
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (min_distance(mid) < delta12 ? lo : hi) = mid;
        if (hi - lo < 1e-14 * hi) break;
    }
    double omega = 0.5 * (lo + hi);

    OmegaCalibration cal;
    cal.ratio = ratio;
    cal.omega = omega;
    cal.critical_alpha_z = std::cbrt(gmax / (4.0 * omega));
    cal.min_mean_distance = min_distance(omega);
    cal.delta12 = delta12;
    cal.beta_at_critical = bs;
    return cal;
}

std::vector<OmegaCalibration> omega_curve(int samples) {
    if (samples < 2) throw std::domain_error("need at least 2 samples");
    std::vector<OmegaCalibration> curve;
    curve.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double ratio = 0.25 * i / (samples - 1);
        curve.push_back(calibrate_omega(ratio));
    }
    return curve;
}

double omega_approx(double ratio) {
    return 32.0 * (1.0 - 2.0 * ratio) / 729.0;
}

} // namespace ncqm
