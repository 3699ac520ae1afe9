#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace ncqm {

/// Physical constants. Defaults are CODATA 2018 values; every entry can be
/// overridden from a key-value file so that table reproductions can be tuned
/// to a different constant vintage.
///
/// Unit conventions used throughout the library: masses and energies as rest
/// energies in eV, lengths in cm, forces in MeV/cm. Reduced-unit interfaces
/// (lengths in hbar/(mu c), energies in mu c^2) say so explicitly.
struct Constants {
    double alpha = 7.2973525693e-3;              ///< fine structure constant
    double electron_rest_energy_ev = 510998.95;  ///< m_e c^2
    double hbar_c_mev_fm = 197.3269804;          ///< hbar c

    /// Rest energies of named particles, eV.
    std::map<std::string, double> mass_ev = {
        {"electron", 510998.95},
        {"proton", 938272088.16},
    };

    double hbar_c_ev_cm() const { return hbar_c_mev_fm * 1e-7; }
    double hbar_c_mev_cm() const { return hbar_c_mev_fm * 1e-13; }

    /// Rest energy of a named particle; throws std::out_of_range if unknown.
    double mass(const std::string& name) const;

    /// Enforces positivity and alpha < 1; throws std::invalid_argument.
    void validate() const;
};

/// Reads `key = value` overrides on top of `base`. Recognized keys:
/// alpha, electron_rest_energy_ev, hbar_c_mev_fm, mass.<particle>_ev.
/// Lines starting with '#' (and blank lines) are ignored.
Constants parse_constants(std::istream& in, Constants base = {});

/// parse_constants() over the contents of a file; throws ParseError if the
/// file cannot be opened.
Constants load_constants(const std::string& path, Constants base = {});

} // namespace ncqm
