#include "ncqm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ncqm/errors.hpp"
#include "ncqm/hydrogenic.hpp"
#include "ncqm/selfconsistent.hpp"

namespace ncqm {

std::string to_string(Quantity q) {
    return q == Quantity::GroundEnergy ? "ground_energy" : "gap_1s_2s";
}

Quantity quantity_from_string(const std::string& s) {
    if (s == "ground_energy") return Quantity::GroundEnergy;
    if (s == "gap_1s_2s") return Quantity::Gap1s2s;
    throw ParseError("unknown quantity '" + s + "'");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        auto b = f.find_first_not_of(" \t");
        auto e = f.find_last_not_of(" \t");
        f = b == std::string::npos ? std::string{} : f.substr(b, e - b + 1);
    }
    return fields;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::vector<ExperimentalRecord> ingest_experimental(std::istream& in,
                                                    const std::string& name) {
    std::vector<ExperimentalRecord> records;
    std::map<std::pair<int, int>, int> seen;  // (Z, quantity) -> line
    std::string line;
    int lineno = 0;
    bool header_done = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv_line(line);
        if (!header_done) {
            header_done = true;
            if (!fields.empty() && fields[0] == "Z") continue;  // header row
        }
        if (fields.size() != 4) {
            throw ParseError(name + ":" + std::to_string(lineno) +
                             ": expected 4 fields (Z,quantity,value_ev,source)");
        }
        ExperimentalRecord rec;
        try {
            rec.z = std::stoi(fields[0]);
            rec.quantity = quantity_from_string(fields[1]);
            rec.value_ev = std::stod(fields[2]);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError(name + ":" + std::to_string(lineno) +
                             ": malformed record");
        }
        rec.source = fields[3];
        if (rec.z < 1) {
            throw ParseError(name + ":" + std::to_string(lineno) + ": Z must be >= 1");
        }
        if (rec.quantity == Quantity::GroundEnergy && !(rec.value_ev < 0.0)) {
            throw ParseError(name + ":" + std::to_string(lineno) +
                             ": ground-state energies must be negative");
        }
        if (rec.quantity == Quantity::Gap1s2s && !(rec.value_ev > 0.0)) {
            throw ParseError(name + ":" + std::to_string(lineno) +
                             ": level gaps must be positive");
        }
        auto key = std::make_pair(rec.z, static_cast<int>(rec.quantity));
        auto [it, inserted] = seen.emplace(key, lineno);
        if (!inserted) {
            throw ParseError(name + ":" + std::to_string(lineno) + ": duplicate of line " +
                             std::to_string(it->second) + " (Z = " +
                             std::to_string(rec.z) + ", " + to_string(rec.quantity) + ")");
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<ExperimentalRecord> ingest_experimental(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dataset: " + path);
    return ingest_experimental(in, path);
}

namespace {

std::vector<ExperimentalRecord> select_sorted(const std::vector<ExperimentalRecord>& in,
                                              Quantity q) {
    std::vector<ExperimentalRecord> out;
    for (const auto& r : in) {
        if (r.quantity == q) out.push_back(r);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.z < b.z; });
    return out;
}

} // namespace

std::vector<ReportRow> table1(double omega, const Constants& c,
                              const std::vector<ExperimentalRecord>& dataset) {
    std::vector<ReportRow> rows;
    for (const auto& rec : select_sorted(dataset, Quantity::GroundEnergy)) {
        ReportRow row;
        row.z = rec.z;
        row.model_ev = energy_level_ev(rec.z, 1, 0, omega, c);
        row.schrodinger_ev = schrodinger_level_ev(rec.z, 1, c);
        row.experimental_ev = rec.value_ev;
        row.diff_schrodinger = row.schrodinger_ev - rec.value_ev;
        row.diff_model = row.model_ev - rec.value_ev;
        rows.push_back(row);
    }
    return rows;
}

std::vector<ReportRow> table2(double omega, const Constants& c,
                              const std::vector<ExperimentalRecord>& dataset) {
    std::vector<ReportRow> rows;
    for (const auto& rec : select_sorted(dataset, Quantity::Gap1s2s)) {
        ReportRow row;
        row.z = rec.z;
        row.model_ev = level_gap_1s2s_ev(rec.z, omega, c);
        row.schrodinger_ev =
            schrodinger_level_ev(rec.z, 2, c) - schrodinger_level_ev(rec.z, 1, c);
        row.experimental_ev = rec.value_ev;
        row.diff_schrodinger = rec.value_ev - row.schrodinger_ev;
        row.diff_model = rec.value_ev - row.model_ev;
        rows.push_back(row);
    }
    return rows;
}

DataTable table1_data(double omega, const Constants& c,
                      const std::vector<ExperimentalRecord>& dataset) {
    DataTable t;
    t.name = "table1";
    t.columns = {"Z", "E_ev", "E_exp_ev", "E_schrodinger_minus_exp_ev",
                 "E_minus_exp_ev"};
    for (const auto& row : table1(omega, c, dataset)) {
        t.rows.push_back({static_cast<double>(row.z), row.model_ev,
                          row.experimental_ev, row.diff_schrodinger, row.diff_model});
    }
    return t;
}

DataTable table2_data(double omega, const Constants& c,
                      const std::vector<ExperimentalRecord>& dataset) {
    DataTable t;
    t.name = "table2";
    t.columns = {"Z", "gap_ev", "gap_exp_ev", "exp_minus_schrodinger_ev",
                 "exp_minus_gap_ev"};
    for (const auto& row : table2(omega, c, dataset)) {
        t.rows.push_back({static_cast<double>(row.z), row.model_ev,
                          row.experimental_ev, row.diff_schrodinger, row.diff_model});
    }
    return t;
}

Figure figure_from_string(const std::string& s) {
    if (s == "fig1") return Figure::Fig1;
    if (s == "fig2") return Figure::Fig2;
    if (s == "fig3") return Figure::Fig3;
    if (s == "fig4") return Figure::Fig4;
    throw ParseError("unknown figure '" + s + "' (expected fig1..fig4)");
}

DataTable figure_data(Figure which, int resolution, double omega,
                      const Constants& c) {
    if (resolution < 16) throw std::domain_error("resolution must be >= 16");
    DataTable t;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    switch (which) {
        case Figure::Fig1: {
            t.name = "fig1";
            t.columns = {"eta", "eta_over_one_plus_eta_4", "cut_subcritical",
                         "cut_critical", "cut_supercritical"};
            const double cut = 27.0 / 256.0;
            for (int i = 0; i < resolution; ++i) {
                double eta = 1.5 * i / (resolution - 1);
                double u = 1.0 + eta;
                t.rows.push_back({eta, eta / (u * u * u * u), 0.5 * cut, cut,
                                  1.2 * cut});
            }
            break;
        }
        case Figure::Fig2: {
            t.name = "fig2";
            t.columns = {"alpha_z", "e_model_muc2", "e_schrodinger_muc2",
                         "e_dirac_muc2", "e_klein_gordon_muc2"};
            const double top = critical_coupling(omega);
            for (int i = 1; i <= resolution; ++i) {
                double az = top * i / resolution;
                double kg = az <= 0.5 ? e_klein_gordon(az) : nan;
                double dirac = az <= 1.0 ? e_dirac(az) : nan;
                t.rows.push_back({az, e_model(az, omega), e_schrodinger(az), dirac, kg});
            }
            break;
        }
        case Figure::Fig3: {
            t.name = "fig3";
            t.columns = {"alpha_z", "eps21"};
            const double top = critical_coupling(omega);
            for (int i = 1; i <= resolution; ++i) {
                double az = top * i / resolution;
                double eta0 = solve_eta0(omega, az);
                t.rows.push_back({az, eta0 / (1.0 + eta0)});
            }
            break;
        }
        case Figure::Fig4: {
            t.name = "fig4";
            t.columns = {"mass_ratio", "omega", "omega_approx"};
            for (const auto& cal : omega_curve(resolution)) {
                t.rows.push_back({cal.ratio, cal.omega, omega_approx(cal.ratio)});
            }
            break;
        }
    }
    (void)c;
    return t;
}

void write_csv(std::ostream& out, const DataTable& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_g17(row[i]);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const DataTable& table) {
    nlohmann::ordered_json j;
    j["name"] = table.name;
    j["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        auto jrow = nlohmann::ordered_json::array();
        for (double v : row) {
            if (std::isnan(v)) {
                jrow.push_back(nullptr);
            } else {
                jrow.push_back(v);
            }
        }
        rows.push_back(std::move(jrow));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
}

} // namespace ncqm
