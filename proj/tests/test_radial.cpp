#include <doctest.h>

#include <cmath>
#include <vector>

#include "ncqm/errors.hpp"
#include "ncqm/physical.hpp"
#include "ncqm/radial.hpp"

using namespace ncqm;

TEST_SUITE_BEGIN("radial");

namespace {

const Constants kC;

double coulomb_level(double coupling, int n, double beta) {
    return -coupling * coupling / (2.0 * n * n * beta * beta);
}

// Eigenvalues below zero of the finite-difference radial Hamiltonian,
// counted through the Sturm sequence of the tridiagonal matrix. Entirely
// independent of the Numerov path; used as the existence oracle.
int negative_eigenvalue_count(const Potential& pot, int l, double beta,
                              double r_max, int points) {
    double h = r_max / points;
    std::vector<double> diag(points), off(points - 1);
    double k = 0.5 * beta * beta / (h * h);
    for (int i = 0; i < points; ++i) {
        double x = h * (i + 1);
        diag[i] = 2.0 * k + pot.value(x) +
                  0.5 * beta * beta * l * (l + 1.0) / (x * x);
    }
    for (int i = 0; i + 1 < points; ++i) off[i] = -k;
    int count = 0;
    double d = diag[0];
    if (d < 0.0) ++count;
    for (int i = 1; i < points; ++i) {
        d = diag[i] - off[i - 1] * off[i - 1] / d;
        if (d < 0.0) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("coulomb levels match the closed form") {
    const double az = 0.5;
    for (double beta : {1.0, 0.9, 0.75}) {
        for (auto [n, l] : std::vector<std::pair<int, int>>{
                 {1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}) {
            RadialProblem prob = RadialProblem::standard(
                Potential::coulomb(az), l, beta, kC.electron_rest_energy_ev);
            RadialSolution sol = solve_bound_state(prob, n - l - 1);
            CHECK(sol.energy ==
                  doctest::Approx(coulomb_level(az, n, beta)).epsilon(1e-8));
            CHECK(sol.nodes == n - l - 1);
        }
    }
}

TEST_CASE("beta rescales the spectrum exactly") {
    const double az = 0.3;
    RadialProblem p1 = RadialProblem::standard(Potential::coulomb(az), 0, 1.0,
                                               kC.electron_rest_energy_ev);
    RadialProblem p2 = RadialProblem::standard(Potential::coulomb(az), 0, 0.9,
                                               kC.electron_rest_energy_ev);
    double e1 = solve_bound_state(p1, 0).energy;
    double e2 = solve_bound_state(p2, 0).energy;
    CHECK(e2 / e1 == doctest::Approx(1.0 / (0.9 * 0.9)).epsilon(1e-8));
}

TEST_CASE("eigenvalues increase with node count") {
    const double az = 0.6;
    double prev = -1e9;
    for (int nodes = 0; nodes <= 2; ++nodes) {
        RadialProblem prob = RadialProblem::standard(
            Potential::coulomb(az), 0, 1.0, kC.electron_rest_energy_ev);
        RadialSolution sol = solve_bound_state(prob, nodes);
        CHECK(sol.energy > prev);
        CHECK(sol.nodes == nodes);
        prev = sol.energy;
    }
}

TEST_CASE("normalization, decay and moments") {
    const double az = 0.4;
    RadialProblem prob = RadialProblem::standard(Potential::coulomb(az), 0, 1.0,
                                                 kC.electron_rest_energy_ev);
    RadialSolution sol = solve_bound_state(prob, 0);

    double h = sol.r[1] - sol.r[0];
    double norm = 0.0;
    for (std::size_t i = 0; i + 1 < sol.r.size(); ++i) {
        norm += 0.5 * h * (sol.chi[i] * sol.chi[i] + sol.chi[i + 1] * sol.chi[i + 1]);
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(sol.tail_fraction < 1e-10);
    CHECK(std::abs(sol.chi.front()) < 1e-2);

    double a_eff = 1.0 / az;  // effective Bohr radius, lambda units
    CHECK(sol.mean_r == doctest::Approx(1.5 * a_eff).epsilon(1e-8));
    CHECK(sol.mean_inv_r2 == doctest::Approx(2.0 / (a_eff * a_eff)).epsilon(1e-8));
}

TEST_CASE("virial relation for coulomb") {
    const double az = 0.45;
    RadialProblem prob = RadialProblem::standard(Potential::coulomb(az), 0, 1.0,
                                                 kC.electron_rest_energy_ev);
    RadialSolution sol = solve_bound_state(prob, 0);
    double h = sol.r[1] - sol.r[0];
    // <V> = -aZ <1/x>; near-origin head from the linear boundary behavior
    double body = 0.0;
    std::vector<double> w(sol.r.size());
    for (std::size_t i = 0; i < sol.r.size(); ++i) {
        w[i] = sol.chi[i] * sol.chi[i] / sol.r[i];
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        body += 0.5 * h * (w[i] + w[i + 1]);
    }
    double head = 0.5 * sol.chi.front() * sol.chi.front();
    double mean_v = -az * (body + head);
    CHECK(mean_v == doctest::Approx(2.0 * sol.energy).epsilon(1e-5));
}

TEST_CASE("grid refinement is already converged") {
    const double az = 0.5;
    double e_coarse =
        solve_bound_state(RadialProblem::standard(Potential::coulomb(az), 0, 1.0,
                                                  kC.electron_rest_energy_ev, 20000),
                          0)
            .energy;
    double e_fine =
        solve_bound_state(RadialProblem::standard(Potential::coulomb(az), 0, 1.0,
                                                  kC.electron_rest_energy_ev, 40000),
                          0)
            .energy;
    CHECK(std::abs(e_fine - e_coarse) < 1e-8 * std::abs(e_coarse));
}

TEST_CASE("weak short-range potentials do not bind") {
    Potential weak = Potential::yukawa(0.05, 0.5);
    CHECK(negative_eigenvalue_count(weak, 0, 1.0, 40.0, 4000) == 0);
    RadialProblem prob = RadialProblem::standard(weak, 0, 1.0,
                                                 kC.electron_rest_energy_ev, 20000);
    CHECK_THROWS_AS(solve_bound_state(prob, 0), NoBoundStateError);
}

TEST_CASE("strong yukawa binds and agrees with the matrix oracle") {
    Potential strong = Potential::yukawa(2.0, 5.0);
    CHECK(negative_eigenvalue_count(strong, 0, 1.0, 60.0, 12000) >= 1);
    RadialProblem prob = RadialProblem::standard(strong, 0, 1.0,
                                                 kC.electron_rest_energy_ev, 20000);
    RadialSolution sol = solve_bound_state(prob, 0);
    CHECK(sol.energy < 0.0);

    // crude eigenvalue from the dense grid by bisecting the Sturm count
    double lo = -10.0, hi = 0.0;
    auto count_below = [&](double e) {
        double h = 60.0 / 12000;
        double k = 0.5 / (h * h);
        int count = 0;
        double d = 0.0;
        for (int i = 0; i < 12000; ++i) {
            double x = h * (i + 1);
            double a = 2.0 * k + strong.value(x) - e;
            d = i == 0 ? a : a - k * k / d;
            if (d < 0.0) ++count;
        }
        return count;
    };
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (count_below(mid) >= 1 ? hi : lo) = mid;
    }
    CHECK(sol.energy == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-3));
}

TEST_CASE("hulthen levels match the closed form") {
    // l = 0 levels are exact: E_n = -(beta^2/2) ((2 g/beta^2 - n^2/a)/(2n))^2,
    // bound while 2 g a / beta^2 > n^2.
    auto exact = [](double g, double a, double beta, int n) {
        double t = (2.0 * g / (beta * beta) - n * n / a) / (2.0 * n);
        return -0.5 * beta * beta * t * t;
    };
    for (auto [g, a, beta, nodes] : std::vector<std::tuple<double, double, double, int>>{
             {0.5, 20.0, 1.0, 0}, {0.5, 20.0, 1.0, 1}, {1.0, 8.0, 0.8, 0}}) {
        RadialProblem prob = RadialProblem::standard(
            Potential::hulthen(g, a), 0, beta, kC.electron_rest_energy_ev, 40000);
        RadialSolution sol = solve_bound_state(prob, nodes);
        CHECK(sol.energy ==
              doctest::Approx(exact(g, a, beta, nodes + 1)).epsilon(1e-7));
    }
}

TEST_CASE("mean force") {
    SUBCASE("coulomb closed form and the hydrogen scale") {
        double az = kC.alpha;  // hydrogen
        ParticlePair pair(kC.mass("proton"), kC.mass("electron"));
        RadialProblem prob = RadialProblem::standard(Potential::coulomb(az), 0, 1.0,
                                                     pair.reduced_ev());
        RadialSolution sol = solve_bound_state(prob, 0);
        CHECK(sol.mean_abs_dv ==
              doctest::Approx(2.0 * az * az * az).epsilon(1e-8));
        CHECK(mean_abs_force_mev_cm(sol, pair.reduced_ev()) ==
              doctest::Approx(1.03e4).epsilon(0.01));
    }
    SUBCASE("linearity in the potential") {
        Potential pot = Potential::yukawa(2.0, 5.0);
        Potential scaled = Potential::yukawa(6.0, 5.0);
        RadialProblem prob =
            RadialProblem::standard(pot, 0, 1.0, kC.electron_rest_energy_ev, 20000);
        RadialSolution sol = solve_bound_state(prob, 0);
        double f1 = mean_abs_force(sol, pot, 0, 1.0);
        double f3 = mean_abs_force(sol, scaled, 0, 1.0);
        CHECK(f3 == doctest::Approx(3.0 * f1).epsilon(1e-9));
    }
}

TEST_CASE("problem validation") {
    RadialProblem bad = RadialProblem::standard(Potential::coulomb(0.5), 0, 1.0,
                                                kC.electron_rest_energy_ev, 500);
    CHECK_THROWS_AS(solve_bound_state(bad, 0), std::invalid_argument);
    CHECK_THROWS_AS(Potential::coulomb(-1.0), std::domain_error);
    CHECK_THROWS_AS(Potential::yukawa(1.0, 0.0), std::domain_error);
}

TEST_SUITE_END();
