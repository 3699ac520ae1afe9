#pragma once

#include "ncqm/constants.hpp"

namespace ncqm {

/// Two interacting particles, identified by their rest energies in eV.
struct ParticlePair {
    double m1_ev;
    double m2_ev;

    /// Throws std::domain_error unless both masses are positive.
    ParticlePair(double m1, double m2);

    double total_ev() const { return m1_ev + m2_ev; }
    double reduced_ev() const { return m1_ev * m2_ev / (m1_ev + m2_ev); }

    /// mu/M, in (0, 1/4]; 1/4 exactly for equal masses.
    double mass_ratio() const { return reduced_ev() / total_ev(); }
};

/// hbar/(m c) in cm. Throws std::domain_error for non-positive mass.
double compton_length_cm(double mass_ev, const Constants& c = {});

/// Resolution limit on the interparticle distance,
/// sqrt((hbar/m1 c)^2 + (hbar/m2 c)^2) = (hbar/mu c) sqrt(1 - 2 mu/M), in cm.
double delta12_cm(const ParticlePair& pair, const Constants& c = {});

/// Recoil force from measuring a coordinate to accuracy dx: hbar c/(2 dx^2).
/// Returns MeV/cm; throws std::domain_error for non-positive dx.
double blow_force_coordinate_mev_cm(double dx_cm, const Constants& c = {});

/// Recoil force from measuring a momentum to accuracy dp: 2 c dp^2 / hbar.
/// dp is passed as dp*c in eV. Returns MeV/cm.
double blow_force_momentum_mev_cm(double dp_c_ev, const Constants& c = {});

} // namespace ncqm
