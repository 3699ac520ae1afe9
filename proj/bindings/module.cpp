#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncqm/constants.hpp"
#include "ncqm/errors.hpp"
#include "ncqm/hydrogenic.hpp"
#include "ncqm/manybody.hpp"
#include "ncqm/noncomm.hpp"
#include "ncqm/physical.hpp"
#include "ncqm/radial.hpp"
#include "ncqm/report.hpp"
#include "ncqm/selfconsistent.hpp"

namespace py = pybind11;

namespace {

ncqm::Potential make_potential(const std::string& kind, double coupling,
                               double screening) {
    if (kind == "coulomb") return ncqm::Potential::coulomb(coupling);
    if (kind == "yukawa") return ncqm::Potential::yukawa(coupling, screening);
    if (kind == "hulthen") return ncqm::Potential::hulthen(coupling, screening);
    throw std::invalid_argument("potential must be coulomb, yukawa or hulthen");
}

} // namespace

PYBIND11_MODULE(_ncqm, m) {
    m.doc() = "Nonrelativistic two-body and N-body quantum mechanics with "
              "noncommuting coordinate and momentum operators of different "
              "particles.";

    py::register_exception<ncqm::NoBoundStateError>(m, "NoBoundStateError");
    py::register_exception<ncqm::ConvergenceError>(m, "ConvergenceError");

    py::class_<ncqm::Constants>(m, "Constants")
        .def(py::init<>())
        .def_readwrite("alpha", &ncqm::Constants::alpha)
        .def_readwrite("electron_rest_energy_ev",
                       &ncqm::Constants::electron_rest_energy_ev)
        .def_readwrite("hbar_c_mev_fm", &ncqm::Constants::hbar_c_mev_fm)
        .def_readwrite("mass_ev", &ncqm::Constants::mass_ev)
        .def("mass", &ncqm::Constants::mass)
        .def("validate", &ncqm::Constants::validate);

    m.def("load_constants",
          [](const std::string& path) { return ncqm::load_constants(path); },
          py::arg("path"));

    py::class_<ncqm::ParticlePair>(m, "ParticlePair")
        .def(py::init<double, double>(), py::arg("m1_ev"), py::arg("m2_ev"))
        .def_readonly("m1_ev", &ncqm::ParticlePair::m1_ev)
        .def_readonly("m2_ev", &ncqm::ParticlePair::m2_ev)
        .def("total_ev", &ncqm::ParticlePair::total_ev)
        .def("reduced_ev", &ncqm::ParticlePair::reduced_ev)
        .def("mass_ratio", &ncqm::ParticlePair::mass_ratio);

    m.def("compton_length_cm", &ncqm::compton_length_cm, py::arg("mass_ev"),
          py::arg("constants") = ncqm::Constants{});
    m.def("delta12_cm", &ncqm::delta12_cm, py::arg("pair"),
          py::arg("constants") = ncqm::Constants{});
    m.def("blow_force_coordinate_mev_cm", &ncqm::blow_force_coordinate_mev_cm,
          py::arg("dx_cm"), py::arg("constants") = ncqm::Constants{});
    m.def("blow_force_momentum_mev_cm", &ncqm::blow_force_momentum_mev_cm,
          py::arg("dp_c_ev"), py::arg("constants") = ncqm::Constants{});

    py::class_<ncqm::NoncommParams>(m, "NoncommParams")
        .def(py::init<>())
        .def_readwrite("omega", &ncqm::NoncommParams::omega)
        .def_readwrite("xi", &ncqm::NoncommParams::xi)
        .def_readwrite("eps12", &ncqm::NoncommParams::eps12)
        .def_readwrite("eps21", &ncqm::NoncommParams::eps21)
        .def_readwrite("beta", &ncqm::NoncommParams::beta)
        .def_readwrite("eta", &ncqm::NoncommParams::eta);

    m.def("eps_from_xi", &ncqm::eps_from_xi, py::arg("omega"), py::arg("xi"),
          py::arg("pair"));
    m.def("beta_full", &ncqm::beta_full, py::arg("omega"), py::arg("xi"),
          py::arg("mass_ratio"));
    m.def("check_commutators", &ncqm::check_commutators, py::arg("params"),
          py::arg("degree"));

    m.def("solve_eta0", &ncqm::solve_eta0, py::arg("omega"), py::arg("alpha_z"));
    m.def("solve_eta0_second", &ncqm::solve_eta0_second, py::arg("omega"),
          py::arg("alpha_z"));
    m.def("critical_coupling", &ncqm::critical_coupling, py::arg("omega"));
    m.def("energy_level_ev", &ncqm::energy_level_ev, py::arg("z"), py::arg("n"),
          py::arg("l"), py::arg("omega"), py::arg("constants") = ncqm::Constants{},
          py::arg("mu_ev") = 0.0);
    m.def("level_gap_1s2s_ev", &ncqm::level_gap_1s2s_ev, py::arg("z"),
          py::arg("omega"), py::arg("constants") = ncqm::Constants{},
          py::arg("mu_ev") = 0.0);
    m.def("schrodinger_level_ev", &ncqm::schrodinger_level_ev, py::arg("z"),
          py::arg("n"), py::arg("constants") = ncqm::Constants{},
          py::arg("mu_ev") = 0.0);
    m.def("mean_distance_ground_cm",
          py::overload_cast<double, double, const ncqm::ParticlePair&,
                            const ncqm::Constants&>(&ncqm::mean_distance_ground_cm),
          py::arg("alpha_z"), py::arg("omega"), py::arg("pair"),
          py::arg("constants") = ncqm::Constants{});
    m.def("e_schrodinger", &ncqm::e_schrodinger, py::arg("alpha_z"));
    m.def("e_dirac", &ncqm::e_dirac, py::arg("alpha_z"));
    m.def("e_klein_gordon", &ncqm::e_klein_gordon, py::arg("alpha_z"));
    m.def("e_model", &ncqm::e_model, py::arg("alpha_z"), py::arg("omega"));

    py::class_<ncqm::RadialWavefunction>(m, "RadialWavefunction")
        .def(py::init<int, int, int, double>(), py::arg("z"), py::arg("n"),
             py::arg("l"), py::arg("beta"))
        .def("__call__", &ncqm::RadialWavefunction::operator(), py::arg("r_a0"))
        .def_property_readonly("normalization",
                               &ncqm::RadialWavefunction::normalization)
        .def_property_readonly("effective_bohr",
                               &ncqm::RadialWavefunction::effective_bohr)
        .def_property_readonly("radial_nodes", &ncqm::RadialWavefunction::radial_nodes);

    py::class_<ncqm::RadialSolution>(m, "RadialSolution")
        .def_readonly("energy", &ncqm::RadialSolution::energy)
        .def_readonly("energy_ev", &ncqm::RadialSolution::energy_ev)
        .def_readonly("r", &ncqm::RadialSolution::r)
        .def_readonly("chi", &ncqm::RadialSolution::chi)
        .def_readonly("nodes", &ncqm::RadialSolution::nodes)
        .def_readonly("mean_r", &ncqm::RadialSolution::mean_r)
        .def_readonly("mean_inv_r2", &ncqm::RadialSolution::mean_inv_r2)
        .def_readonly("mean_abs_dv", &ncqm::RadialSolution::mean_abs_dv);

    m.def(
        "solve_bound_state",
        [](const std::string& potential, double coupling, double screening, int l,
           double beta, int nodes, double mu_c2_ev, int points) {
            ncqm::RadialProblem problem = ncqm::RadialProblem::standard(
                make_potential(potential, coupling, screening), l, beta, mu_c2_ev,
                points);
            return ncqm::solve_bound_state(problem, nodes);
        },
        py::arg("potential"), py::arg("coupling"), py::arg("screening") = 1.0,
        py::arg("l") = 0, py::arg("beta") = 1.0, py::arg("nodes") = 0,
        py::arg("mu_c2_ev") = 510998.95, py::arg("points") = 20000,
        "Bound state of the rescaled radial equation in reduced units "
        "(x in hbar/(mu c), E in mu c^2).");

    py::class_<ncqm::SelfConsistentResult>(m, "SelfConsistentResult")
        .def_readonly("params", &ncqm::SelfConsistentResult::params)
        .def_readonly("solution", &ncqm::SelfConsistentResult::solution)
        .def_readonly("iterations", &ncqm::SelfConsistentResult::iterations)
        .def_readonly("residual", &ncqm::SelfConsistentResult::residual);

    m.def(
        "solve_self_consistent",
        [](const std::string& potential, double coupling, double screening,
           double m1_ev, double m2_ev, double omega) {
            return ncqm::solve_self_consistent(
                make_potential(potential, coupling, screening),
                ncqm::ParticlePair(m1_ev, m2_ev), omega);
        },
        py::arg("potential"), py::arg("coupling"), py::arg("screening") = 1.0,
        py::arg("m1_ev") = 938272088.16, py::arg("m2_ev") = 510998.95,
        py::arg("omega") = 32.0 / 729.0);

    py::class_<ncqm::OmegaCalibration>(m, "OmegaCalibration")
        .def_readonly("ratio", &ncqm::OmegaCalibration::ratio)
        .def_readonly("omega", &ncqm::OmegaCalibration::omega)
        .def_readonly("critical_alpha_z", &ncqm::OmegaCalibration::critical_alpha_z)
        .def_readonly("min_mean_distance", &ncqm::OmegaCalibration::min_mean_distance)
        .def_readonly("delta12", &ncqm::OmegaCalibration::delta12)
        .def_readonly("beta_at_critical", &ncqm::OmegaCalibration::beta_at_critical);

    m.def("calibrate_omega", &ncqm::calibrate_omega, py::arg("ratio"));
    m.def("omega_curve", &ncqm::omega_curve, py::arg("samples"));
    m.def("omega_approx", &ncqm::omega_approx, py::arg("ratio"));
    m.def("critical_coupling_full", &ncqm::critical_coupling_full, py::arg("omega"),
          py::arg("mass_ratio"));

    py::class_<ncqm::NBodySystem>(m, "NBodySystem")
        .def(py::init<std::vector<double>, ncqm::Matrix>(), py::arg("masses"),
             py::arg("eps"))
        .def_static("identical", &ncqm::NBodySystem::identical, py::arg("n"),
                    py::arg("mass"), py::arg("eps"))
        .def_readonly("masses", &ncqm::NBodySystem::masses)
        .def_readonly("eps", &ncqm::NBodySystem::eps);

    m.def("kinetic_coefficients", [](const ncqm::NBodySystem& s) {
        auto form = ncqm::kinetic_coefficients(s);
        return py::make_tuple(form.A, form.B);
    });
    m.def("kinetic_matrix", &ncqm::kinetic_matrix);
    m.def("jacobi_parameters_3body", &ncqm::jacobi_parameters_3body);
    m.def("decoupling_residual", [](const ncqm::NBodySystem& s) {
        return ncqm::transform_and_check_decoupling(s).max_cross_residual;
    });
    m.def("identical_particle_coefficient", &ncqm::identical_particle_coefficient,
          py::arg("n"), py::arg("eps"), py::arg("mass"));
    m.def("identical_eps_from_kappa", &ncqm::identical_eps_from_kappa,
          py::arg("kappa"));
    m.def("check_commutators_nbody", &ncqm::check_commutators_nbody,
          py::arg("system"), py::arg("degree"));

    m.def(
        "table1",
        [](double omega, const std::string& dataset_path) {
            auto rows = ncqm::table1(omega, ncqm::Constants{},
                                     ncqm::ingest_experimental(dataset_path));
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["Z"] = r.z;
                d["E_ev"] = r.model_ev;
                d["E_exp_ev"] = r.experimental_ev;
                d["E_schrodinger_minus_exp_ev"] = r.diff_schrodinger;
                d["E_minus_exp_ev"] = r.diff_model;
                out.append(d);
            }
            return out;
        },
        py::arg("omega"), py::arg("dataset_path"));
    m.def(
        "table2",
        [](double omega, const std::string& dataset_path) {
            auto rows = ncqm::table2(omega, ncqm::Constants{},
                                     ncqm::ingest_experimental(dataset_path));
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["Z"] = r.z;
                d["gap_ev"] = r.model_ev;
                d["gap_exp_ev"] = r.experimental_ev;
                d["exp_minus_schrodinger_ev"] = r.diff_schrodinger;
                d["exp_minus_gap_ev"] = r.diff_model;
                out.append(d);
            }
            return out;
        },
        py::arg("omega"), py::arg("dataset_path"));

    m.attr("OMEGA_HEAVY_NUCLEUS") = ncqm::kOmegaHeavyNucleus;
    m.attr("OMEGA_EQUAL_MASSES") = ncqm::kOmegaEqualMasses;
}
