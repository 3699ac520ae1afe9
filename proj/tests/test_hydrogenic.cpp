#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "ncqm/errors.hpp"
#include "ncqm/hydrogenic.hpp"

using namespace ncqm;

TEST_SUITE_BEGIN("hydrogenic");

namespace {

const Constants kC;

// composite Simpson over [a, b] with an even number of intervals
double integrate(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

} // namespace

TEST_CASE("eta0 roots") {
    const double omega = kOmegaHeavyNucleus;
    SUBCASE("critical point") {
        double eta = solve_eta0(omega, 27.0 / 32.0);
        CHECK(eta == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    }
    SUBCASE("tiny coupling") {
        double eta = solve_eta0(omega, 1e-4);
        CHECK(eta == doctest::Approx(4.0 * omega * 1e-12).epsilon(1e-6));
    }
    SUBCASE("hydrogen") {
        double eta = solve_eta0(omega, kC.alpha);
        CHECK(eta / (1.0 + eta) == doctest::Approx(6.8e-8).epsilon(0.02));
    }
    SUBCASE("beyond critical") {
        CHECK_THROWS_AS(solve_eta0(omega, kC.alpha * 120), NoBoundStateError);
    }
    SUBCASE("residual of the defining equation") {
        for (double az : {0.1, 0.4, 0.7, 0.84}) {
            double eta = solve_eta0(omega, az);
            double u = 1.0 + eta;
            CHECK(eta / (u * u * u * u) ==
                  doctest::Approx(4.0 * omega * az * az * az).epsilon(1e-10));
        }
    }
    SUBCASE("second root sits on the other branch") {
        double az = 0.5;
        double first = solve_eta0(omega, az);
        double second = solve_eta0_second(omega, az);
        CHECK(second > 1.0 / 3.0);
        CHECK(first < 1.0 / 3.0);
        double u = 1.0 + second;
        CHECK(second / (u * u * u * u) ==
              doctest::Approx(4.0 * omega * az * az * az).epsilon(1e-9));
    }
}

TEST_CASE("critical coupling") {
    CHECK(critical_coupling(kOmegaHeavyNucleus) == 27.0 / 32.0);
    CHECK(critical_coupling(kOmegaHeavyNucleus) / kC.alpha ==
          doctest::Approx(115.6).epsilon(1e-3));
    // cube-root scaling
    CHECK(critical_coupling(4.0 * 0.01) ==
          doctest::Approx(critical_coupling(0.01) * std::pow(4.0, -1.0 / 3.0))
              .epsilon(1e-14));

    SUBCASE("coincides with the onset of eta0 solvability") {
        double omega = kOmegaHeavyNucleus;
        double lo = 0.8, hi = 0.9;
        for (int i = 0; i < 60; ++i) {
            double mid = 0.5 * (lo + hi);
            try {
                solve_eta0(omega, mid);
                lo = mid;
            } catch (const NoBoundStateError&) {
                hi = mid;
            }
        }
        CHECK(0.5 * (lo + hi) == doctest::Approx(27.0 / 32.0).epsilon(1e-10));
    }
}

TEST_CASE("energy levels") {
    const double omega = kOmegaHeavyNucleus;
    SUBCASE("paper values") {
        CHECK(energy_level_ev(6, 1, 0, omega) == doctest::Approx(-489.8193).epsilon(1e-4));
        CHECK(energy_level_ev(92, 1, 0, omega) == doctest::Approx(-131726.0).epsilon(1e-4));
    }
    SUBCASE("schrodinger limit") {
        for (int z : {1, 10, 40}) {
            double az = kC.alpha * z;
            CHECK(energy_level_ev(z, 2, 1, 0.0) ==
                  doctest::Approx(-0.5 * kC.electron_rest_energy_ev * az * az / 4.0));
        }
        CHECK(schrodinger_level_ev(1, 1) == doctest::Approx(-13.6057).epsilon(1e-5));
    }
    SUBCASE("degeneracy in l and 1/n^2 scaling") {
        double e1 = energy_level_ev(30, 1, 0, omega);
        for (int n : {2, 3, 4}) {
            for (int l = 0; l < n; ++l) {
                CHECK(energy_level_ev(30, n, l, omega) ==
                      doctest::Approx(e1 / (n * n)).epsilon(1e-14));
            }
        }
    }
    SUBCASE("monotone in Z") {
        double prev_eta = 0.0, prev_e = 0.0;
        for (int z = 1; z <= 115; ++z) {
            double eta = solve_eta0(omega, kC.alpha * z);
            double e = energy_level_ev(z, 1, 0, omega);
            CHECK(eta > prev_eta);
            CHECK(e < prev_e);
            prev_eta = eta;
            prev_e = e;
        }
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(energy_level_ev(0, 1, 0, omega), std::domain_error);
        CHECK_THROWS_AS(energy_level_ev(1, 1, 1, omega), std::domain_error);
        CHECK_THROWS_AS(energy_level_ev(120, 1, 0, omega), NoBoundStateError);
    }
}

TEST_CASE("1s-2s gaps") {
    const double omega = kOmegaHeavyNucleus;
    CHECK(level_gap_1s2s_ev(6, omega) == doctest::Approx(367.3645).epsilon(1e-5));
    CHECK(level_gap_1s2s_ev(42, omega) == doctest::Approx(18186.58).epsilon(1e-5));
    CHECK(level_gap_1s2s_ev(1, 0.0) ==
          doctest::Approx(0.75 * 13.6057).epsilon(1e-4));
}

TEST_CASE("ground-state mean distance") {
    ParticlePair hydrogen(kC.mass("proton"), kC.mass("electron"));
    double lam = compton_length_cm(hydrogen.reduced_ev());
    SUBCASE("calibration point") {
        CHECK(mean_distance_ground_cm(27.0 / 32.0, kOmegaHeavyNucleus, hydrogen) ==
              doctest::Approx(lam).epsilon(1e-9));
    }
    SUBCASE("schrodinger value") {
        CHECK(mean_distance_ground_cm(1, 0.0, hydrogen) ==
              doctest::Approx(1.5 * lam / kC.alpha).epsilon(1e-12));
    }
    SUBCASE("hydrogen shift is the eta0 factor") {
        double eta = solve_eta0(kOmegaHeavyNucleus, kC.alpha);
        CHECK(mean_distance_ground_cm(1, kOmegaHeavyNucleus, hydrogen) ==
              doctest::Approx(1.5 * lam / kC.alpha / ((1 + eta) * (1 + eta)))
                  .epsilon(1e-12));
    }
}

TEST_CASE("closed-form radial functions") {
    SUBCASE("normalization by quadrature") {
        for (auto [z, n, l, beta] : std::vector<std::tuple<int, int, int, double>>{
                 {1, 1, 0, 1.0}, {1, 2, 0, 1.0}, {4, 2, 1, 0.9}, {2, 3, 2, 0.75},
                 {3, 3, 1, 0.8}}) {
            RadialWavefunction chi(z, n, l, beta);
            double span = 50.0 * n * n * beta * beta / z;
            double norm = integrate([&](double r) { return chi(r) * chi(r); }, 0.0,
                                    span, 40000);
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
    SUBCASE("node count and the n=2 node position") {
        RadialWavefunction chi(2, 2, 0, 0.9);
        double node = 2.0 * 0.9 * 0.9 / 2.0;  // 2 a0 beta^2 / Z
        CHECK(std::abs(chi(node)) < 1e-12);
        int sign_changes = 0;
        double prev = chi(1e-4);
        double span = 40.0 * 0.81;
        for (double r = 1e-3; r < span; r += span / 20000) {
            double cur = chi(r);
            if (prev != 0.0 && (prev > 0) != (cur > 0)) ++sign_changes;
            prev = cur;
        }
        CHECK(sign_changes == 1);
        CHECK(chi.radial_nodes() == 1);
    }
    SUBCASE("1s inverse-square moment") {
        int z = 3;
        double beta = 0.85;
        RadialWavefunction chi(z, 1, 0, beta);
        double a_eff = beta * beta / z;
        double moment = integrate(
            [&](double r) { return r == 0.0 ? 0.0 : chi(r) * chi(r) / (r * r); },
            1e-9, 60.0 * a_eff, 400000);
        CHECK(moment == doctest::Approx(2.0 / (a_eff * a_eff)).epsilon(1e-7));
    }
}

TEST_CASE("self-consistency closure through the wavefunction quadrature") {
    // xi from <|F|> = Z e^2 <1/r^2> on the rescaled 1s state must reproduce
    // eta0/omega: <1/r^2> in Bohr units enters as xi = 2 alpha^3 Z <1/r^2>.
    const double omega = kOmegaHeavyNucleus;
    for (int z : {1, 30, 80, 110}) {
        double az = kC.alpha * z;
        double eta0 = solve_eta0(omega, az);
        double beta = 1.0 / (1.0 + eta0);
        RadialWavefunction chi(z, 1, 0, beta);
        double a_eff = beta * beta / z;
        double moment = integrate(
            [&](double r) { return r == 0.0 ? 0.0 : chi(r) * chi(r) / (r * r); },
            1e-10 * a_eff, 60.0 * a_eff, 400000);
        double xi = 2.0 * kC.alpha * kC.alpha * kC.alpha * z * moment;
        CHECK(omega * xi == doctest::Approx(eta0).epsilon(1e-8));
    }
}

TEST_CASE("comparison curves") {
    SUBCASE("nonrelativistic limit") {
        double az = 1e-3;
        auto curves = comparison_curves(az);
        double nr = -0.5 * az * az;
        CHECK(curves.schrodinger == doctest::Approx(nr).epsilon(1e-12));
        CHECK(curves.dirac == doctest::Approx(nr).epsilon(1e-5));
        CHECK(curves.klein_gordon == doctest::Approx(nr).epsilon(1e-5));
        CHECK(e_model(az, kOmegaHeavyNucleus) == doctest::Approx(nr).epsilon(1e-6));
    }
    SUBCASE("domain edges") {
        CHECK(e_dirac(1.0) == doctest::Approx(-1.0));
        CHECK(e_klein_gordon(0.5) == doctest::Approx(1.0 / std::sqrt(2.0) - 1.0));
        CHECK_THROWS_AS(e_dirac(1.0 + 1e-12), std::domain_error);
        CHECK_THROWS_AS(e_klein_gordon(0.5 + 1e-12), std::domain_error);
        CHECK_THROWS_AS(e_schrodinger(0.0), std::domain_error);
    }
    SUBCASE("model sits between schrodinger and dirac") {
        for (int i = 1; i <= 200; ++i) {
            double az = 0.685 * i / 201.0;
            double model = e_model(az, kOmegaHeavyNucleus);
            CHECK(model <= e_schrodinger(az));
            CHECK(model >= e_dirac(az));
        }
    }
}

TEST_SUITE_END();
