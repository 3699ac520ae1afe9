#include "ncqm/constants.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ncqm/errors.hpp"

namespace ncqm {

double Constants::mass(const std::string& name) const {
    auto it = mass_ev.find(name);
    if (it == mass_ev.end()) {
        throw std::out_of_range("unknown particle: " + name);
    }
    return it->second;
}

void Constants::validate() const {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    if (!(electron_rest_energy_ev > 0.0) || !(hbar_c_mev_fm > 0.0)) {
        throw std::invalid_argument("constants must be strictly positive");
    }
    for (const auto& [name, value] : mass_ev) {
        if (!(value > 0.0)) {
            throw std::invalid_argument("mass of '" + name + "' must be positive");
        }
    }
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, e - b + 1);
}

} // namespace

Constants parse_constants(std::istream& in, Constants base) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("constants line " + std::to_string(lineno) +
                             ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value_str = trim(line.substr(eq + 1));
        double value = 0.0;
        try {
            std::size_t pos = 0;
            value = std::stod(value_str, &pos);
            if (pos != value_str.size()) throw std::invalid_argument(value_str);
        } catch (const std::exception&) {
            throw ParseError("constants line " + std::to_string(lineno) +
                             ": bad numeric value '" + value_str + "'");
        }

        if (key == "alpha") {
            base.alpha = value;
        } else if (key == "electron_rest_energy_ev") {
            base.electron_rest_energy_ev = value;
        } else if (key == "hbar_c_mev_fm") {
            base.hbar_c_mev_fm = value;
        } else if (key.rfind("mass.", 0) == 0 && key.size() > 8 &&
                   key.substr(key.size() - 3) == "_ev") {
            std::string particle = key.substr(5, key.size() - 5 - 3);
            base.mass_ev[particle] = value;
        } else {
            throw ParseError("constants line " + std::to_string(lineno) +
                             ": unknown key '" + key + "'");
        }
    }
    base.validate();
    return base;
}

Constants load_constants(const std::string& path, Constants base) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open constants file: " + path);
    return parse_constants(in, std::move(base));
}

} // namespace ncqm
