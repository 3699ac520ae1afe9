#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncqm/errors.hpp"
#include "ncqm/hydrogenic.hpp"
#include "ncqm/manybody.hpp"
#include "ncqm/noncomm.hpp"
#include "ncqm/physical.hpp"
#include "ncqm/report.hpp"
#include "ncqm/selfconsistent.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;

// Accepts plain decimals and exact fractions like 32/729.
double parse_number(const std::string& text) {
    auto slash = text.find('/');
    std::size_t pos = 0;
    if (slash == std::string::npos) {
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    double a = std::stod(num, &pos);
    if (pos != num.size()) throw std::invalid_argument(text);
    double b = std::stod(den, &pos);
    if (pos != den.size() || b == 0.0) throw std::invalid_argument(text);
    return a / b;
}

struct OutputTarget {
    std::string path;  // empty = stdout

    template <typename Fn>
    void emit(Fn&& fn) const {
        if (path.empty()) {
            fn(std::cout);
        } else {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open output file: " + path);
            fn(out);
        }
    }
};

void emit_table(const ncqm::DataTable& table, const std::string& format,
                const OutputTarget& target) {
    target.emit([&](std::ostream& out) {
        if (format == "json") {
            ncqm::write_json(out, table);
        } else {
            ncqm::write_csv(out, table);
        }
    });
}

ncqm::Constants resolve_constants(const std::string& config_path) {
    if (config_path.empty()) return {};
    return ncqm::load_constants(config_path);
}

int run_solve(const std::string& kind, double coupling, std::optional<int> z,
              double screening, double m1, double m2, double omega,
              const std::string& format, const OutputTarget& target,
              const ncqm::Constants& constants) {
    ncqm::ParticlePair pair(m1, m2);
    double g = coupling;
    if (z.has_value()) {
        if (kind != "coulomb") {
            throw CLI::ValidationError("--Z only applies to the coulomb potential");
        }
        g = constants.alpha * *z;
    }
    ncqm::Potential potential = [&] {
        if (kind == "coulomb") return ncqm::Potential::coulomb(g);
        if (kind == "yukawa") return ncqm::Potential::yukawa(g, screening);
        return ncqm::Potential::hulthen(g, screening);
    }();

    ordered_json payload;
    payload["potential"] = kind;
    payload["coupling"] = g;
    if (kind != "coulomb") payload["screening_lambda"] = screening;
    payload["omega"] = omega;
    payload["m1_ev"] = m1;
    payload["m2_ev"] = m2;
    payload["mass_ratio"] = pair.mass_ratio();

    try {
        ncqm::SelfConsistentResult res =
            ncqm::solve_self_consistent(potential, pair, omega);
        payload["status"] = "converged";
        payload["energy_ev"] = res.solution.energy_ev;
        payload["energy_muc2"] = res.solution.energy;
        payload["xi"] = res.params.xi;
        payload["beta"] = res.params.beta;
        payload["eps12"] = res.params.eps12;
        payload["eps21"] = res.params.eps21;
        payload["mean_r_lambda"] = res.solution.mean_r;
        payload["delta12_lambda"] = std::sqrt(1.0 - 2.0 * pair.mass_ratio());
        payload["iterations"] = res.iterations;
        payload["residual"] = res.residual;
    } catch (const ncqm::NoBoundStateError& e) {
        payload["status"] = "no_bound_state";
        payload["message"] = e.what();
    }

    target.emit([&](std::ostream& out) {
        if (format == "json") {
            out << payload.dump(2) << '\n';
        } else {
            out << "key,value\n";
            for (const auto& [key, value] : payload.items()) {
                out << key << ',';
                if (value.is_string()) {
                    out << value.get<std::string>();
                } else {
                    char buf[40];
                    std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
                    out << buf;
                }
                out << '\n';
            }
        }
    });
    return payload["status"] == "converged" ? kExitOk : kExitComputation;
}

int run_calibrate(double ratio, const std::string& format,
                  const OutputTarget& target) {
    ncqm::OmegaCalibration cal = ncqm::calibrate_omega(ratio);
    ncqm::DataTable t;
    t.name = "calibration";
    t.columns = {"mass_ratio", "omega", "critical_alpha_z",
                 "min_mean_distance_lambda", "delta12_lambda", "beta_at_critical"};
    t.rows.push_back({cal.ratio, cal.omega, cal.critical_alpha_z,
                      cal.min_mean_distance, cal.delta12, cal.beta_at_critical});
    emit_table(t, format, target);
    return kExitOk;
}

int run_nbody_check(int n, unsigned seed, int draws, const std::string& format,
                    const OutputTarget& target) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> mass_dist(0.2, 5.0);
    std::uniform_real_distribution<double> eps_dist(0.0, 0.15);

    double worst_cross = 0.0;
    double worst_com = 0.0;
    for (int trial = 0; trial < draws; ++trial) {
        std::vector<double> masses(n);
        for (auto& m : masses) m = mass_dist(rng);
        ncqm::Matrix eps(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                if (i != k) eps[i][k] = eps_dist(rng);
            }
        }
        ncqm::NBodySystem system(masses, eps);
        auto report = ncqm::transform_and_check_decoupling(system);
        worst_cross = std::max(worst_cross, report.max_cross_residual);
        double total = 0.0;
        for (double m : masses) total += m;
        worst_com = std::max(worst_com, std::abs(report.free_block - 1.0 / total));
    }

    ncqm::DataTable t;
    t.name = "nbody_decoupling";
    t.columns = {"n", "draws", "max_cross_residual", "max_free_block_error"};
    t.rows.push_back({static_cast<double>(n), static_cast<double>(draws),
                      worst_cross, worst_com});
    emit_table(t, format, target);
    return worst_cross < 1e-12 ? kExitOk : kExitComputation;
}

int run_selftest() {
    std::mt19937 rng(20240811u);
    std::uniform_real_distribution<double> eps_dist(0.0, 0.4);
    std::uniform_real_distribution<double> mass_dist(0.2, 5.0);

    int failures = 0;
    auto verdict = [&](const char* name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
        if (!ok) ++failures;
    };

    bool two_body_ok = true;
    double worst = 0.0;
    try {
        for (int i = 0; i < 100; ++i) {
            ncqm::ParticlePair pair(mass_dist(rng), mass_dist(rng));
            ncqm::NoncommParams p;
            p.eps12 = eps_dist(rng);
            p.eps21 = eps_dist(rng);
            p.beta = 1.0 - p.eps12 - p.eps21;
            worst = std::max(worst, ncqm::check_commutators(p, 3));
        }
    } catch (const ncqm::IdentityViolationError&) {
        two_body_ok = false;
    }
    verdict("two-body commutator table (100 draws, degree 3)",
            two_body_ok && worst < 1e-12);

    bool nbody_ok = true;
    try {
        for (int n = 2; n <= 4; ++n) {
            for (int i = 0; i < 20; ++i) {
                std::vector<double> masses(n);
                for (auto& m : masses) m = mass_dist(rng);
                ncqm::Matrix eps(n, std::vector<double>(n, 0.0));
                std::uniform_real_distribution<double> small(0.0, 0.9 / n);
                for (int a = 0; a < n; ++a) {
                    for (int b = 0; b < n; ++b) {
                        if (a != b) eps[a][b] = small(rng);
                    }
                }
                ncqm::check_commutators_nbody(ncqm::NBodySystem(masses, eps), 3);
            }
        }
    } catch (const ncqm::IdentityViolationError&) {
        nbody_ok = false;
    }
    verdict("N-body commutator and total-momentum table", nbody_ok);

    bool angular_ok = true;
    for (int i = 0; i < 100; ++i) {
        ncqm::NoncommParams p;
        p.eps12 = eps_dist(rng);
        p.eps21 = eps_dist(rng);
        p.beta = 1.0 - p.eps12 - p.eps21;
        auto cc = ncqm::angular_coefficients(p);
        double r1 = cc.c11 * (1.0 - p.eps12) + cc.c12 * p.eps12 - 1.0;
        double r2 = cc.c11 * p.eps21 + cc.c12 * (1.0 - p.eps21);
        double r3 = cc.c22 * (1.0 - p.eps21) + cc.c21 * p.eps21 - 1.0;
        double r4 = cc.c22 * p.eps12 + cc.c21 * (1.0 - p.eps12);
        angular_ok = angular_ok && std::abs(r1) < 1e-14 && std::abs(r2) < 1e-14 &&
                     std::abs(r3) < 1e-14 && std::abs(r4) < 1e-14;
    }
    verdict("angular-momentum coefficient reconstruction", angular_ok);

    bool negative_ok = false;
    try {
        ncqm::NoncommParams p;
        p.eps12 = 0.1;
        p.eps21 = 0.2;
        p.beta = 0.7;
        ncqm::check_commutators_perturbed(p, 2, 1e-6);
    } catch (const ncqm::IdentityViolationError&) {
        negative_ok = true;
    }
    verdict("corrupted representation is rejected", negative_ok);

    std::cout << (failures == 0 ? "selftest OK\n" : "selftest FAILED\n");
    return failures == 0 ? kExitOk : kExitComputation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-body quantum mechanics with noncommuting coordinates and "
                 "momenta of different particles: spectra, calibration, and "
                 "N-body kinetic algebra"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    std::string config_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--config", config_path, "constants override file");

    std::string omega_text = "32/729";
    std::string dataset_path = "data/experimental_levels.csv";

    auto* t1 = app.add_subcommand("table1", "ground-state energies against data");
    t1->add_option("--omega", omega_text, "coupling constant (fractions allowed)")
        ->capture_default_str();
    t1->add_option("--dataset", dataset_path, "experimental dataset")
        ->capture_default_str();

    auto* t2 = app.add_subcommand("table2", "1s-2s gaps against data");
    t2->add_option("--omega", omega_text, "coupling constant")->capture_default_str();
    t2->add_option("--dataset", dataset_path, "experimental dataset")
        ->capture_default_str();

    auto* fig = app.add_subcommand("fig", "numeric data behind the figures");
    std::string which = "fig2";
    int resolution = 200;
    fig->add_option("--which", which, "fig1|fig2|fig3|fig4")->required();
    fig->add_option("--resolution", resolution, "sample count")
        ->capture_default_str();
    fig->add_option("--omega", omega_text, "coupling constant")->capture_default_str();

    auto* solve = app.add_subcommand("solve", "self-consistent ground state");
    std::string potential_kind = "coulomb";
    double coupling = 0.0;
    std::optional<int> z_opt;
    double screening = 1.0;
    double m1 = 938272088.16, m2 = 510998.95;
    solve->add_option("--potential", potential_kind, "coulomb|yukawa|hulthen")
        ->check(CLI::IsMember({"coulomb", "yukawa", "hulthen"}))
        ->capture_default_str();
    solve->add_option("--coupling", coupling,
                      "dimensionless strength g/(hbar c); for coulomb this is alpha Z");
    solve->add_option("--Z", z_opt, "nuclear charge (coulomb only)");
    solve->add_option("--screening", screening, "screening length, units hbar/(mu c)")
        ->capture_default_str();
    solve->add_option("--m1", m1, "first mass, eV")->capture_default_str();
    solve->add_option("--m2", m2, "second mass, eV")->capture_default_str();
    solve->add_option("--omega", omega_text, "coupling constant")->capture_default_str();

    auto* calibrate = app.add_subcommand("calibrate", "fit omega to the resolution limit");
    double ratio = 0.0;
    calibrate->add_option("--ratio", ratio, "mu/M in [0, 0.25]")->required();

    auto* nbody = app.add_subcommand("nbody-check", "random-draw decoupling residuals");
    int nbody_n = 3;
    unsigned seed = 1u;
    int draws = 1000;
    nbody->add_option("--n", nbody_n, "particle count (2 or 3)")
        ->check(CLI::Range(2, 3))
        ->capture_default_str();
    nbody->add_option("--seed", seed, "random seed")->capture_default_str();
    nbody->add_option("--draws", draws, "number of draws")->capture_default_str();

    app.add_subcommand("selftest", "operator-identity suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        ncqm::Constants constants = resolve_constants(config_path);
        double omega = parse_number(omega_text);
        OutputTarget target{out_path};

        if (t1->parsed()) {
            auto dataset = ncqm::ingest_experimental(dataset_path);
            emit_table(ncqm::table1_data(omega, constants, dataset), format, target);
            return kExitOk;
        }
        if (t2->parsed()) {
            auto dataset = ncqm::ingest_experimental(dataset_path);
            emit_table(ncqm::table2_data(omega, constants, dataset), format, target);
            return kExitOk;
        }
        if (fig->parsed()) {
            auto table = ncqm::figure_data(ncqm::figure_from_string(which),
                                           resolution, omega, constants);
            emit_table(table, format, target);
            return kExitOk;
        }
        if (solve->parsed()) {
            if (!z_opt.has_value() && coupling <= 0.0) {
                std::cerr << "solve: provide --coupling > 0 or --Z\n";
                return kExitUsage;
            }
            return run_solve(potential_kind, coupling, z_opt, screening, m1, m2,
                             parse_number(omega_text), format, target, constants);
        }
        if (calibrate->parsed()) {
            return run_calibrate(ratio, format, target);
        }
        if (nbody->parsed()) {
            return run_nbody_check(nbody_n, seed, draws, format, target);
        }
        return run_selftest();
    } catch (const ncqm::NoBoundStateError& e) {
        std::cerr << "no bound state: " << e.what() << '\n';
        return kExitComputation;
    } catch (const ncqm::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    }
}
