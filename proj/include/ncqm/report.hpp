#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ncqm/constants.hpp"

namespace ncqm {

enum class Quantity { GroundEnergy, Gap1s2s };

std::string to_string(Quantity q);
Quantity quantity_from_string(const std::string& s);

/// One measured level, as shipped in the bundled dataset.
struct ExperimentalRecord {
    int z = 0;
    Quantity quantity = Quantity::GroundEnergy;
    double value_ev = 0.0;
    std::string source;
};

/// Parses the delimited dataset (header `Z,quantity,value_ev,source`).
/// Rejects duplicate (Z, quantity) pairs and sign violations, naming the line.
std::vector<ExperimentalRecord> ingest_experimental(std::istream& in,
                                                    const std::string& name = "<stream>");
std::vector<ExperimentalRecord> ingest_experimental(const std::string& path);

/// One row of a table reproduction. The difference columns follow each
/// table's printed convention: the ground-state table carries
/// E_S - E_EXP and E - E_EXP, the gap table carries D_EXP - D_S and D_EXP - D.
struct ReportRow {
    int z = 0;
    double model_ev = 0.0;
    double schrodinger_ev = 0.0;
    double experimental_ev = 0.0;
    double diff_schrodinger = 0.0;
    double diff_model = 0.0;
};

std::vector<ReportRow> table1(double omega, const Constants& c,
                              const std::vector<ExperimentalRecord>& dataset);
std::vector<ReportRow> table2(double omega, const Constants& c,
                              const std::vector<ExperimentalRecord>& dataset);

/// Column-labelled numbers; the common emission format for tables and figures.
struct DataTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

DataTable table1_data(double omega, const Constants& c,
                      const std::vector<ExperimentalRecord>& dataset);
DataTable table2_data(double omega, const Constants& c,
                      const std::vector<ExperimentalRecord>& dataset);

enum class Figure { Fig1, Fig2, Fig3, Fig4 };

Figure figure_from_string(const std::string& s);

/// Numeric data behind each figure:
///  fig1: the solvability curve eta/(1+eta)^4 with three horizontal cuts,
///  fig2: ground-state binding energy per mu c^2 of this model against the
///        Schrodinger, Dirac and Klein-Gordon closed forms over alpha Z,
///  fig3: eps21 versus alpha Z,
///  fig4: calibrated omega versus mu/M.
/// resolution is the sample count (>= 16).
DataTable figure_data(Figure which, int resolution, double omega,
                      const Constants& c = {});

/// 17-significant-digit CSV; numbers round-trip bit exactly.
void write_csv(std::ostream& out, const DataTable& table);
void write_json(std::ostream& out, const DataTable& table);

} // namespace ncqm
