// Copyright 2026 The gaa Authors.
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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include <nlohmann/json.hpp>

#include "gaa/errors.hpp"
#include "gaa/lab.hpp"
#include "gaa/searches.hpp"

using namespace gaa;
using std::numbers::pi;

TEST_CASE("median") {
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
    CHECK(std::isnan(median({})));
}

TEST_CASE("estimate_period") {
    std::vector<double> s;
    for (int i = 0; i < 200; ++i) {
        s.push_back(std::pow(std::sin(2 * pi * i / 17.3), 2));
    }
    const auto p = estimate_period(s);
    REQUIRE(p.has_value());
    CHECK(std::abs(*p - 17.3 / 2) < 0.05);
    const std::vector<double> flat(10, 1.0);
    CHECK_FALSE(estimate_period(flat).has_value());
}

TEST_CASE("sweep_iterations") {
    const auto r = sweep_iterations(search_wh(8, 200), 60);
    CHECK(r.experiment == "sweep");
    CHECK(r.rows.size() == 61);
    CHECK(r.columns == std::vector<std::string>{"m", "success_sim", "success_model", "abs_err"});
    CHECK(r.summary["max_abs_err"].get<double>() < 1e-12);
    CHECK(r.at(12, "m") == 12.0);
    const double period = r.summary["estimated_period"].get<double>();
    CHECK(std::abs(period - r.summary["predicted_period"].get<double>()) < 0.5);
}

TEST_CASE("sensitivity_study") {
    const std::vector<double> deltas{0.0, 0.05};
    const auto r = sensitivity_study(6, 45, deltas, 4, 11);
    CHECK(r.rows.size() == 8);
    const auto base = search_wh(6, 45);
    const double base_success = run(base, base.m_star()).success;
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(r.at(i, "delta") == 0.0);
        CHECK(std::abs(r.at(i, "success_consistent") - base_success) < 1e-12);
        CHECK(std::abs(r.at(i, "success_inconsistent") - base_success) < 1e-12);
        CHECK(r.at(i, "m_star") == static_cast<double>(base.m_star()));
    }
    const auto again = sensitivity_study(6, 45, deltas, 4, 11);
    CHECK(to_json(r) == to_json(again));
    const auto other = sensitivity_study(6, 45, deltas, 4, 12);
    CHECK(to_json(r) != to_json(other));
    CHECK(r.summary["by_delta"].size() == 2);
}

TEST_CASE("phase_study") {
    const std::vector<double> phis{pi, pi / 2};
    const auto r = phase_study(6, 9, phis, 100);
    CHECK(r.rows.size() == 2);
    CHECK(r.at(1, "first_m_half") >= r.at(0, "first_m_half"));

    // within the first period the best m is m*
    const auto base = search_wh(6, 9);
    const auto first = phase_study(6, 9, phis, 12);
    CHECK(first.at(0, "best_m") == static_cast<double>(base.m_star()));
    CHECK(std::abs(first.at(0, "best_success") - run(base, base.m_star()).success) < 1e-9);

    const std::vector<double> tiny{0.01};
    const auto never = phase_study(6, 9, tiny, 3);
    CHECK(std::isnan(never.at(0, "first_m_half")));
    CHECK(to_json(never).find("null") != std::string::npos);
    CHECK(to_tsv(never).find("NA") != std::string::npos);
}

TEST_CASE("conjugator_study") {
    const auto r = conjugator_study(5, 3, 17, 4, 40);
    CHECK(r.rows.size() == 41);
    CHECK(r.summary["max_abs_diff"].get<double>() <= 1e-10);
    const auto id = conjugator_study(5, 3, 17, 4, 40, true);
    const auto plain = search_from(5, 3, 17);
    CHECK(id.summary["m_star"].get<std::size_t>() == plain.m_star());
    CHECK(std::abs(id.at(plain.m_star(), "success_conjugated") -
                   run(plain, plain.m_star()).success) < 1e-12);
}

TEST_CASE("verify_suite") {
    const auto r = verify_suite(4, 6, 5, 100);
    CHECK(r.rows.size() == 6);
    CHECK(r.summary["pass"].get<bool>());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(r.at(i, "n") >= 2.0);
        CHECK(r.at(i, "n") <= 4.0);
        CHECK(r.at(i, "q_gamma_residual") <= expansion_tolerance);
        CHECK(r.at(i, "two_level_max_diff") <= two_level_tolerance);
    }
}

TEST_CASE("serialization") {
    ExperimentRecord r;
    r.experiment = "demo";
    r.params["n"] = 3;
    r.columns = {"m", "x"};
    r.add_row({0.0, 0.1});
    r.add_row({1.0, std::numeric_limits<double>::quiet_NaN()});
    CHECK_THROWS(r.add_row({1.0}));

    const auto j = nlohmann::ordered_json::parse(to_json(r));
    std::vector<std::string> keys;
    for (const auto &[k, v] : j.items()) {
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"experiment", "params", "meta", "series"});
    CHECK(j["meta"]["version"] == tool_version);
    CHECK_FALSE(j["meta"].contains("timestamp"));
    CHECK(j["series"][0]["m"].is_number_integer());
    CHECK(j["series"][0]["x"].get<double>() == 0.1);
    CHECK(j["series"][1]["x"].is_null());

    r.timestamp = "2026-01-01T00:00:00Z";
    r.single_result = true;
    r.rows.pop_back();
    const auto k = nlohmann::ordered_json::parse(to_json(r));
    CHECK(k["meta"]["timestamp"] == "2026-01-01T00:00:00Z");
    CHECK(k["result"]["x"].get<double>() == 0.1);

    CHECK(to_tsv(r) == "m\tx\n0\t0.10000000000000001\n");
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "NA");
}
