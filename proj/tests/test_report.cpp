#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ncqm/errors.hpp"
#include "ncqm/report.hpp"

using namespace ncqm;

TEST_SUITE_BEGIN("report");

namespace {
const std::string kDataset = std::string(NCQM_DATA_DIR) + "/experimental_levels.csv";
const double kOmega = 32.0 / 729.0;
const Constants kC;
} // namespace

TEST_CASE("dataset ingestion") {
    auto records = ingest_experimental(kDataset);
    int ground = 0, gaps = 0;
    for (const auto& r : records) {
        (r.quantity == Quantity::GroundEnergy ? ground : gaps) += 1;
    }
    CHECK(ground == 8);
    CHECK(gaps == 7);

    SUBCASE("empty input is valid") {
        std::istringstream empty("Z,quantity,value_ev,source\n");
        CHECK(ingest_experimental(empty).empty());
        std::istringstream blank("");
        CHECK(ingest_experimental(blank).empty());
    }
    SUBCASE("duplicates are rejected with the line number") {
        std::istringstream dup(
            "Z,quantity,value_ev,source\n"
            "6,ground_energy,-489.9933,RR6\n"
            "6,ground_energy,-489.99,RR6\n");
        try {
            ingest_experimental(dup, "dup.csv");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("dup.csv:3") != std::string::npos);
        }
    }
    SUBCASE("sign violations are rejected") {
        std::istringstream bad(
            "Z,quantity,value_ev,source\n"
            "6,ground_energy,489.9933,RR6\n");
        CHECK_THROWS_AS(ingest_experimental(bad), ParseError);
        std::istringstream bad2(
            "Z,quantity,value_ev,source\n"
            "6,gap_1s_2s,-367.5,RR6\n");
        CHECK_THROWS_AS(ingest_experimental(bad2), ParseError);
    }
    SUBCASE("malformed rows are rejected") {
        std::istringstream bad("Z,quantity,value_ev\n1,ground_energy,-1.0\n");
        CHECK_THROWS_AS(ingest_experimental(bad), ParseError);
        std::istringstream bad2(
            "Z,quantity,value_ev,source\n1,unknown_thing,-1.0,x\n");
        CHECK_THROWS_AS(ingest_experimental(bad2), ParseError);
    }
}

TEST_CASE("table reproductions") {
    auto dataset = ingest_experimental(kDataset);
    SUBCASE("ground-state rows") {
        auto rows = table1(kOmega, kC, dataset);
        REQUIRE(rows.size() == 8);
        CHECK(rows[0].z == 6);
        CHECK(rows[0].diff_schrodinger == doctest::Approx(0.1884).epsilon(5e-3));
        auto z30 = rows[4];
        CHECK(z30.z == 30);
        CHECK(z30.model_ev == doctest::Approx(-12290.62).epsilon(1e-5));
        CHECK(z30.diff_model == doctest::Approx(98.31).epsilon(1e-3));
    }
    SUBCASE("gap rows") {
        auto rows = table2(kOmega, kC, dataset);
        REQUIRE(rows.size() == 7);
        CHECK(rows[2].z == 18);
        CHECK(rows[2].model_ev == doctest::Approx(3308.819).epsilon(1e-5));
        CHECK(rows[2].diff_model == doctest::Approx(9.519).epsilon(2e-3));
    }
}

TEST_CASE("csv round trip is bit exact") {
    auto dataset = ingest_experimental(kDataset);
    DataTable t = table1_data(kOmega, kC, dataset);
    std::ostringstream out;
    write_csv(out, t);

    // parse back and compare bit for bit
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);  // header
    std::size_t row = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string field;
        std::size_t col = 0;
        while (std::getline(fields, field, ',')) {
            double v = std::stod(field);
            CHECK(v == t.rows[row][col]);
            ++col;
        }
        CHECK(col == t.columns.size());
        ++row;
    }
    CHECK(row == t.rows.size());

    SUBCASE("deterministic output") {
        std::ostringstream again;
        write_csv(again, table1_data(kOmega, kC, dataset));
        CHECK(again.str() == out.str());
    }
}

TEST_CASE("figure data") {
    SUBCASE("fig1 solvability curve") {
        DataTable t = figure_data(Figure::Fig1, 64, kOmega);
        REQUIRE(t.rows.size() == 64);
        CHECK(t.rows[0][0] == 0.0);
        CHECK(t.rows[0][1] == 0.0);
        // the curve peaks at eta = 1/3 with value 27/256
        double peak = 0.0;
        for (const auto& r : t.rows) peak = std::max(peak, r[1]);
        CHECK(peak <= 27.0 / 256.0 + 1e-12);
        CHECK(t.rows[0][3] == doctest::Approx(27.0 / 256.0));
    }
    SUBCASE("fig2 curves coincide at small coupling and order correctly") {
        DataTable t = figure_data(Figure::Fig2, 200, kOmega);
        REQUIRE(t.rows.size() == 200);
        const auto& first = t.rows.front();
        CHECK(first[1] == doctest::Approx(first[2]).epsilon(1e-4));
        for (const auto& r : t.rows) {
            double az = r[0];
            if (az < 0.685) {
                CHECK(r[1] <= r[2]);           // model below schrodinger
                if (!std::isnan(r[3])) CHECK(r[1] >= r[3]);  // above dirac
            }
            if (az > 0.5) CHECK(std::isnan(r[4]));  // klein-gordon domain ends
        }
    }
    SUBCASE("fig3 hydrogen point") {
        DataTable t = figure_data(Figure::Fig3, 1024, kOmega);
        // nearest sample to alpha Z = alpha
        double best = 1e9, value = 0.0;
        for (const auto& r : t.rows) {
            if (std::abs(r[0] - kC.alpha) < best) {
                best = std::abs(r[0] - kC.alpha);
                value = r[1];
            }
        }
        // the curve is smooth at 1e-3 resolution; the endpoint value pins the
        // hydrogen scale in the dedicated unit tests
        CHECK(value == doctest::Approx(6.8e-8).epsilon(0.5));
    }
    SUBCASE("fig4 endpoints") {
        DataTable t = figure_data(Figure::Fig4, 16, kOmega);
        REQUIRE(t.rows.size() == 16);
        CHECK(t.rows.front()[1] == doctest::Approx(32.0 / 729.0).epsilon(1e-8));
        CHECK(t.rows.back()[1] == doctest::Approx(0.0211547).epsilon(1e-5));
        for (std::size_t i = 1; i < t.rows.size(); ++i) {
            CHECK(t.rows[i][1] < t.rows[i - 1][1]);
        }
    }
    SUBCASE("resolution validation") {
        CHECK_THROWS_AS(figure_data(Figure::Fig1, 8, kOmega), std::domain_error);
    }
}

TEST_CASE("json emission") {
    auto dataset = ingest_experimental(kDataset);
    DataTable t = table2_data(kOmega, kC, dataset);
    std::ostringstream out;
    write_json(out, t);
    CHECK(out.str().find("\"table2\"") != std::string::npos);
    CHECK(out.str().find("exp_minus_gap_ev") != std::string::npos);
}

TEST_SUITE_END();
