#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ncqm/errors.hpp"
#include "ncqm/physical.hpp"

using namespace ncqm;

TEST_SUITE_BEGIN("physical");

TEST_CASE("pair bookkeeping") {
    Constants c;
    ParticlePair ep(c.mass("proton"), c.mass("electron"));
    CHECK(1.0 / ep.reduced_ev() ==
          doctest::Approx(1.0 / ep.m1_ev + 1.0 / ep.m2_ev).epsilon(1e-12));
    CHECK(ep.mass_ratio() > 0.0);
    CHECK(ep.mass_ratio() < 0.25);

    ParticlePair same(3.0, 3.0);
    CHECK(same.mass_ratio() == doctest::Approx(0.25).epsilon(1e-15));

    CHECK_THROWS_AS(ParticlePair(-1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(ParticlePair(1.0, 0.0), std::domain_error);
}

TEST_CASE("compton lengths") {
    Constants c;
    CHECK(compton_length_cm(c.mass("electron")) ==
          doctest::Approx(3.86e-11).epsilon(2e-3));
    CHECK(compton_length_cm(c.mass("proton")) ==
          doctest::Approx(2.10e-14).epsilon(2e-3));
    // exact 1/m scaling
    CHECK(compton_length_cm(2.0e6) == doctest::Approx(0.5 * compton_length_cm(1.0e6)));
    CHECK_THROWS_AS(compton_length_cm(0.0), std::domain_error);
}

TEST_CASE("distance resolution limit") {
    Constants c;
    ParticlePair ep(c.mass("proton"), c.mass("electron"));

    // quadrature form against the reduced-mass form
    double expect = std::hypot(compton_length_cm(ep.m1_ev), compton_length_cm(ep.m2_ev));
    CHECK(delta12_cm(ep) == doctest::Approx(expect).epsilon(1e-12));

    // heavy second particle: limit is the first particle's Compton length
    ParticlePair heavy(1.0e6, 1.0e16);
    CHECK(delta12_cm(heavy) ==
          doctest::Approx(compton_length_cm(1.0e6)).epsilon(1e-9));

    // equal masses: (hbar/mu c)/sqrt(2)
    ParticlePair same(2.0e6, 2.0e6);
    CHECK(delta12_cm(same) ==
          doctest::Approx(compton_length_cm(same.reduced_ev()) / std::sqrt(2.0))
              .epsilon(1e-12));
}

TEST_CASE("delta12 properties") {
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> mass(1e4, 1e12);
    for (int i = 0; i < 200; ++i) {
        double m1 = mass(rng), m2 = mass(rng);
        ParticlePair a(m1, m2), b(m2, m1);
        CHECK(delta12_cm(a) == doctest::Approx(delta12_cm(b)).epsilon(1e-13));
        CHECK(delta12_cm(a) <= compton_length_cm(a.reduced_ev()) * (1.0 + 1e-13));
    }
}

TEST_CASE("measurement recoil forces") {
    Constants c;
    double lam_e = compton_length_cm(c.mass("electron"));
    double lam_p = compton_length_cm(c.mass("proton"));
    CHECK(blow_force_coordinate_mev_cm(lam_e) == doctest::Approx(6.62e9).epsilon(1e-2));
    CHECK(blow_force_coordinate_mev_cm(lam_p) == doctest::Approx(2.24e16).epsilon(1e-2));

    // 1/dx^2 and dp^2 scalings
    CHECK(blow_force_coordinate_mev_cm(2.0 * lam_e) ==
          doctest::Approx(0.25 * blow_force_coordinate_mev_cm(lam_e)));
    CHECK(blow_force_momentum_mev_cm(2.0e5) ==
          doctest::Approx(4.0 * blow_force_momentum_mev_cm(1.0e5)));
    CHECK(blow_force_momentum_mev_cm(1e-8) < 1e-10);

    // dp = m_e c/2 closes the chain with dx = hbar/(m_e c)
    CHECK(blow_force_momentum_mev_cm(0.5 * c.mass("electron")) ==
          doctest::Approx(blow_force_coordinate_mev_cm(lam_e)).epsilon(1e-12));

    CHECK_THROWS_AS(blow_force_coordinate_mev_cm(0.0), std::domain_error);
    CHECK_THROWS_AS(blow_force_momentum_mev_cm(-1.0), std::domain_error);
}

TEST_CASE("force chain closes for any dx") {
    Constants c;
    std::mt19937 rng(5u);
    std::uniform_real_distribution<double> logdx(-14.0, -8.0);
    for (int i = 0; i < 100; ++i) {
        double dx = std::pow(10.0, logdx(rng));
        double f1 = blow_force_coordinate_mev_cm(dx);
        double dp_c = 0.5 * c.hbar_c_ev_cm() / dx;  // hbar/(2 dx) as dp*c in eV
        double f2 = blow_force_momentum_mev_cm(dp_c);
        CHECK(f1 * dx == doctest::Approx(f2 * dx).epsilon(1e-12));
    }
}

TEST_CASE("constants overrides") {
    std::istringstream in(
        "# comment\n"
        "alpha = 7.2973525376e-3\n"
        "mass.muon_ev = 105658374.5\n");
    Constants c = parse_constants(in);
    CHECK(c.alpha == doctest::Approx(7.2973525376e-3));
    CHECK(c.mass("muon") == doctest::Approx(105658374.5));
    CHECK_THROWS_AS(c.mass("tau"), std::out_of_range);

    std::istringstream bad("alpha = not_a_number\n");
    CHECK_THROWS_AS(parse_constants(bad), ParseError);
    std::istringstream bad2("alpha 0.01\n");
    CHECK_THROWS_AS(parse_constants(bad2), ParseError);
    std::istringstream bad3("alpha = 2.0\n");
    CHECK_THROWS_AS(parse_constants(bad3), std::invalid_argument);
}

TEST_SUITE_END();
