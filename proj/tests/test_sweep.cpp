// Copyright 2026 The pblockade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "pblockade/sweep.hpp"

using namespace pblockade;

namespace {

ModelParams reference_params(double delta, double delta_a) { return {delta, delta_a, 20.0, 0.1, 0.0005, 1.0, 1.0}; }

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("axis parsing") {
    const AxisSpec a = parse_axis("delta:-60:60:481");
    CHECK(a.name == Axis::Delta);
    CHECK(a.start == -60.0);
    CHECK(a.stop == 60.0);
    CHECK(a.steps == 481);
    const auto v = a.values();
    REQUIRE(v.size() == 481);
    CHECK(v.front() == -60.0);
    CHECK(v.back() == 60.0);
    CHECK(v[200] == doctest::Approx(-10.0));
    CHECK(parse_axis("delta-a:0:60:241").name == Axis::DeltaA);
    CHECK(parse_axis("U:0:0.001:3").name == Axis::U);

    CHECK_THROWS_AS(parse_axis("delta:-60:60"), Error);
    CHECK_THROWS_AS(parse_axis("omega:0:1:3"), Error);
    CHECK_THROWS_AS(parse_axis("delta:a:1:3"), Error);
    CHECK_THROWS_AS(parse_axis("delta:0:1:2.5"), Error);
}

TEST_CASE("engine parsing") {
    const Engines both = parse_engines("numeric,analytic");
    CHECK(both.numeric);
    CHECK(both.analytic);
    const Engines a = parse_engines("analytic");
    CHECK_FALSE(a.numeric);
    CHECK(a.analytic);
    CHECK_THROWS_AS(parse_engines("numeric,exact"), Error);
}

TEST_CASE("sweep spec validation") {
    SweepSpec spec{reference_params(0.0, 20.0), parse_axis("delta:-1:1:3"), std::nullopt, {}, {6}};
    CHECK_NOTHROW(spec.validate());
    spec.axis1.steps = 1;
    CHECK_THROWS_AS(spec.validate(), Error);
    spec.axis1 = parse_axis("delta:1:-1:3");
    CHECK_THROWS_AS(spec.validate(), Error);
    spec.axis1 = parse_axis("delta:-1:1:3");
    spec.axis2 = parse_axis("delta:0:1:2");
    CHECK_THROWS_AS(spec.validate(), Error);
    spec.axis2 = parse_axis("g:-1:1:2");
    CHECK_THROWS_AS(spec.validate(), Error);
    spec.axis2.reset();
    spec.engines = {false, false};
    CHECK_THROWS_AS(spec.validate(), Error);
}

TEST_CASE("number formatting") {
    CHECK(format_double(0.022) == "2.20000000e-02");
    CHECK(format_double(-40.0) == "-4.00000000e+01");
    CHECK(format_double(0.0) == "0.00000000e+00");
    CHECK(format_double(std::nan("")) == "nan");
    CHECK(format_double(1.0 / 3.0) == "3.33333333e-01");
}

TEST_CASE("1-D sweep rows and CSV") {
    const SweepSpec spec{reference_params(0.0, -20.0), parse_axis("delta:-21:-19:5"), std::nullopt, {}, {6}};
    const auto rows = run_sweep(spec, 1);
    REQUIRE(rows.size() == 5);
    CHECK(rows[2].axis_values == std::vector<double>{-20.0});
    CHECK(rows[2].g2_numeric == doctest::Approx(0.022).epsilon(0.15));
    CHECK(rows[2].g2_analytic == doctest::Approx(g2_weak_drive(reference_params(-20.0, -20.0))));
    CHECK(rows[2].cutoff_used == 6);
    CHECK(rows[2].status == PointStatus::Ok);

    std::ostringstream out;
    write_sweep_csv(out, spec, rows);
    const std::string csv = out.str();
    CHECK(csv.find('\r') == std::string::npos);
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "delta,g2_numeric,g2_analytic,n_a_numeric,n_a_analytic,cutoff_used,residual,status");
    CHECK(lines[3].rfind("-2.00000000e+01,", 0) == 0);
    CHECK(lines[3].substr(lines[3].size() - 3) == ",ok");
}

TEST_CASE("2-D sweep is axis2-major and deterministic") {
    SweepSpec spec{reference_params(0.0, 0.0), parse_axis("delta:-30:30:4"), parse_axis("delta_a:-20:20:3"), {}, {4}};
    const auto serial = run_sweep(spec, 1);
    const auto parallel = run_sweep(spec, 4);
    REQUIRE(serial.size() == 12);
    CHECK(serial[0].axis_values == std::vector<double>{-30.0, -20.0});
    CHECK(serial[1].axis_values == std::vector<double>{-10.0, -20.0});
    CHECK(serial[4].axis_values == std::vector<double>{-30.0, 0.0});

    std::ostringstream a, b;
    write_sweep_csv(a, spec, serial);
    write_sweep_csv(b, spec, parallel);
    CHECK(a.str() == b.str());
    CHECK(lines_of(a.str())[0].rfind("delta,delta_a,g2_numeric", 0) == 0);
}

TEST_CASE("engine selection leaves unused columns empty") {
    const SweepSpec spec{reference_params(0.0, 10.0), parse_axis("delta:1:2:2"), std::nullopt, {false, true}, {4}};
    const auto rows = run_sweep(spec, 1);
    CHECK(std::isnan(rows[0].g2_numeric));
    CHECK(std::isnan(rows[0].residual));
    CHECK(rows[0].cutoff_used == 0);
    CHECK_FALSE(std::isnan(rows[0].g2_analytic));
}

TEST_CASE("per-point solver failures are recorded and the run continues") {
    SweepSpec spec{{0.0, 0.0, 0.0, 0.1, 0.0, 1.0, 1.0}, parse_axis("E:0.1:3:2"), std::nullopt, {true, false}, {}};
    spec.cutoff.cutoff = 4;
    spec.cutoff.converge_tol = 1e-8;
    spec.cutoff.max_cutoff = 12;
    const auto rows = run_sweep(spec, 1);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].status == PointStatus::Ok);
    CHECK(rows[1].status == PointStatus::NoConverge);
    CHECK(std::isnan(rows[1].g2_numeric));
    std::ostringstream out;
    write_sweep_csv(out, spec, rows);
    CHECK(lines_of(out.str())[2].substr(lines_of(out.str())[2].size() - 12) == ",no_converge");
}

TEST_CASE("dark point reports an undefined g2") {
    const RecordRow row = evaluate_point({0.0, 0.0, 20.0, 0.0, 0.0, 1.0, 1.0}, {}, {4});
    CHECK(row.status == PointStatus::Ok);
    CHECK(row.n_a_numeric == 0.0);
    CHECK(std::isnan(row.g2_numeric));
    CHECK(std::isnan(row.g2_analytic));
}

TEST_CASE("model comparison") {
    const ModelParams base = reference_params(30.0, 0.0);
    const AxisSpec axis = parse_axis("delta_a:0:60:121");
    const auto rows = run_compare(base, axis, {6});
    REQUIRE(rows.size() == 121);

    // U = 0 column equals a direct sweep on the J-C parameters
    const SweepSpec jc{jc_limit(base), axis, std::nullopt, {true, false}, {6}};
    const auto jc_rows = run_sweep(jc, 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].g2_jc == jc_rows[i].g2_numeric);
        CHECK(rows[i].n_a_jc == jc_rows[i].n_a_numeric);
        CHECK(rows[i].status == PointStatus::Ok);
        // Photon number is U-blind except on the bunching peak near delta_a = 10,
        // where the pair population fed by U is a percent-level correction.
        const double tol = rows[i].g2_composite > 10.0 ? 0.03 : 0.01;
        CHECK(std::abs(rows[i].n_a_composite - rows[i].n_a_jc) / rows[i].n_a_jc < tol);
    }

    auto min_of = [&](double CompareRow::*col) {
        double m = INFINITY;
        for (const auto& r : rows) m = std::min(m, r.*col);
        return m;
    };
    CHECK(min_of(&CompareRow::g2_bimode) < min_of(&CompareRow::g2_jc));

    std::ostringstream out;
    write_compare_csv(out, axis, rows);
    CHECK(lines_of(out.str())[0] == "delta_a,g2_composite,g2_jc,g2_bimode,n_a_composite,n_a_jc,n_a_bimode,status");
}

TEST_CASE("stability tail of the delta_a = 20 cut") {
    const SweepSpec spec{reference_params(0.0, 20.0), parse_axis("delta:-60:-55:3"), std::nullopt, {}, {6}};
    const auto rows = run_sweep(spec, 1);
    const double far = rows[0].g2_numeric;
    const double near = rows[2].g2_numeric;
    // flat on the log scale the map is drawn on
    CHECK(std::abs(std::log10(far) - std::log10(near)) < 0.1);
    for (const auto& r : rows) CHECK(std::abs(r.g2_numeric - r.g2_analytic) / r.g2_numeric < 0.05);
}

TEST_CASE("roots CSV") {
    const ModelParams base = reference_params(30.0, 0.0);
    const auto roots = ucpb_roots(base, Detuning::DeltaA, {0.0, 60.0});
    std::ostringstream out;
    write_roots_csv(out, base, roots);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "kind,variable,value,residual_c2g,g2_weak_drive");
    CHECK(lines[1].rfind("CPB,delta_a,1.33333333e+01,", 0) == 0);
    CHECK(lines[2].rfind("UCPB,delta_a,3.73", 0) == 0);
}

TEST_CASE("gnuplot stub names the data file") {
    SweepSpec spec{reference_params(0.0, 20.0), parse_axis("delta:-60:60:481"), std::nullopt, {}, {}};
    CHECK(gnuplot_stub(spec, "cut.csv").find("'cut.csv'") != std::string::npos);
    spec.axis2 = parse_axis("delta_a:-60:60:241");
    CHECK(gnuplot_stub(spec, "map.csv").find("splot") != std::string::npos);
}
