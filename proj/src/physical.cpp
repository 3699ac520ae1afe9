#include "ncqm/physical.hpp"

#include <cmath>
#include <stdexcept>

namespace ncqm {

ParticlePair::ParticlePair(double m1, double m2) : m1_ev(m1), m2_ev(m2) {
    if (!(m1 > 0.0) || !(m2 > 0.0)) {
        throw std::domain_error("particle masses must be positive");
    }
}

double compton_length_cm(double mass_ev, const Constants& c) {
    if (!(mass_ev > 0.0)) throw std::domain_error("mass must be positive");
    return c.hbar_c_ev_cm() / mass_ev;
}

double delta12_cm(const ParticlePair& pair, const Constants& c) {
    double lam = compton_length_cm(pair.reduced_ev(), c);
    return lam * std::sqrt(1.0 - 2.0 * pair.mass_ratio());
}

double blow_force_coordinate_mev_cm(double dx_cm, const Constants& c) {
    if (!(dx_cm > 0.0)) throw std::domain_error("dx must be positive");
    return c.hbar_c_mev_cm() / (2.0 * dx_cm * dx_cm);
}

double blow_force_momentum_mev_cm(double dp_c_ev, const Constants& c) {
    if (!(dp_c_ev > 0.0)) throw std::domain_error("dp must be positive");
    // 2 c dp^2/hbar = 2 (dp c)^2/(hbar c); eV^2 / (eV cm) -> MeV/cm.
    return 2.0 * dp_c_ev * dp_c_ev / c.hbar_c_ev_cm() * 1e-6;
}

} // namespace ncqm
