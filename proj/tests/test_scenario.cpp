// vlcris - indoor visible-light link simulator with a mirror-array reflector
// and a liquid-crystal receiver front end
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "test_support.hpp"
#include "vlcris/config.hpp"
#include "vlcris/csv.hpp"
#include "vlcris/scenario.hpp"

using namespace vlcris;
using vlcris_test::rel_close;

namespace
{

constexpr double half_pi = 1.5707963267948966;

std::vector<std::string> all_kind_names()
{
    return {"rate_p0",        "wall_baseline",     "ris_only_baseline",
            "lc_los_baseline", "noma_multiuser",   "ee_vs_k",
            "rate_vs_k",      "wavelength_sweep",  "convergence_trace",
            "oracle_grid"};
}

} // namespace

TEST_SUITE("scenario")
{
    TEST_CASE("scenario kinds round-trip through their names")
    {
        for (const std::string &name : all_kind_names())
            CHECK(to_string(scenario_kind_from_string(name)) == name);
        CHECK_THROWS_AS((void)scenario_kind_from_string("warp_drive"),
                        std::invalid_argument);
    }

    TEST_CASE("sweep values are inclusive linear grids")
    {
        sweep_spec one{"power", 2.0, 9.0, 1};
        CHECK(one.values() == std::vector<double>{2.0});

        sweep_spec p{"power", 1.0, 8.0, 8};
        std::vector<double> v = p.values();
        REQUIRE(v.size() == 8);
        for (int i = 0; i < 8; ++i)
            CHECK(v[static_cast<std::size_t>(i)] == doctest::Approx(1.0 + i).epsilon(1e-12));
        CHECK(v.front() == 1.0);
        CHECK(v.back() == 8.0);

        CHECK_THROWS_AS((void)(sweep_spec{"volume", 1.0, 2.0, 2}).values(),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)(sweep_spec{"power", 1.0, 2.0, 0}).values(),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)(sweep_spec{"power", 1.0 / 0.0, 2.0, 2}).values(),
                        std::invalid_argument);
    }

    TEST_CASE("per-kind defaults: sweep, indicator, output name")
    {
        scenario_config cfg;
        CHECK(cfg.effective_sweep().variable == "power");
        CHECK(cfg.effective_sweep().steps == 8);
        CHECK(cfg.effective_indicator() == indicator_mode::automatic);
        CHECK(cfg.effective_output_path() == "rate_p0.csv");

        cfg.kind = scenario_kind::ris_only_baseline;
        CHECK(cfg.effective_indicator() == indicator_mode::forced_zero);

        cfg.kind = scenario_kind::lc_los_baseline;
        CHECK(cfg.effective_indicator() == indicator_mode::forced_one);

        cfg.kind = scenario_kind::rate_vs_k;
        CHECK(cfg.effective_sweep().variable == "k_elements");
        CHECK(cfg.effective_sweep().start == 50.0);
        CHECK(cfg.effective_sweep().stop == 600.0);
        CHECK(cfg.effective_sweep().steps == 12);
        CHECK(cfg.effective_indicator() == indicator_mode::forced_zero);
        CHECK(cfg.effective_output_path() == "rate_vs_k.csv");

        cfg.kind = scenario_kind::wavelength_sweep;
        CHECK(cfg.effective_sweep().variable == "wavelength");
        CHECK(cfg.effective_sweep().steps == 2);
        CHECK(cfg.effective_indicator() == indicator_mode::automatic);

        cfg.kind = scenario_kind::convergence_trace;
        sweep_spec tr = cfg.effective_sweep();
        CHECK(tr.variable == "power");
        CHECK(tr.steps == 1);
        CHECK(tr.start == cfg.params.optical_power);
        CHECK(cfg.effective_indicator() == indicator_mode::forced_zero);

        // Explicit settings win over the per-kind defaults.
        cfg.kind = scenario_kind::rate_p0;
        cfg.sweep = sweep_spec{"power", 3.0, 3.0, 1};
        cfg.indicator = indicator_mode::forced_one;
        cfg.output_path = "custom.csv";
        CHECK(cfg.effective_sweep().steps == 1);
        CHECK(cfg.effective_indicator() == indicator_mode::forced_one);
        CHECK(cfg.effective_output_path() == "custom.csv");
    }

    TEST_CASE("configuration validation")
    {
        scenario_config cfg;
        CHECK_NOTHROW(cfg.validate());

        // k_elements sweeps must be able to re-tile the panel.
        cfg = scenario_config{};
        cfg.kind = scenario_kind::rate_vs_k;
        cfg.scn.mirrors.cols = 30;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

        cfg = scenario_config{};
        cfg.kind = scenario_kind::rate_vs_k;
        cfg.scn.mirrors.rows = 7; // 50 elements will not divide into 7 rows
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

        cfg = scenario_config{};
        cfg.kind = scenario_kind::rate_vs_k;
        cfg.sweep = sweep_spec{"k_elements", 50.5, 100.0, 2};
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

        // Multi-user experiments need one user per allocation slot.
        cfg = scenario_config{};
        cfg.kind = scenario_kind::noma_multiuser;
        cfg.noma.num_users = 4;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
        cfg.scn.users = default_noma_users(4);
        CHECK_NOTHROW(cfg.validate());

        cfg = scenario_config{};
        cfg.grid_points = std::vector<int>{41, 0, 21};
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }

    TEST_CASE("default multi-user placement walks the room diagonal")
    {
        std::vector<user_state> users = default_noma_users(4);
        REQUIRE(users.size() == 4);
        CHECK(users[0].device_pos.x == 1.0);
        CHECK(users[0].device_pos.y == 1.5);
        CHECK(users[3].device_pos.x == doctest::Approx(2.8).epsilon(1e-12));
        CHECK(users[3].device_pos.y == doctest::Approx(3.3).epsilon(1e-12));
        for (const user_state &u : users)
            CHECK(u.device_pos.z == 0.85);

        std::vector<user_state> solo = default_noma_users(1);
        CHECK(solo.size() == 1);
        CHECK(solo[0].device_pos.x == 1.0);

        CHECK_THROWS_AS((void)default_noma_users(0), std::invalid_argument);
    }

    TEST_CASE("search spaces per scenario kind")
    {
        scenario_config cfg;
        search_space sp = space_for(cfg);
        REQUIRE(sp.size() == 3);
        CHECK(sp.dims[0].name == "roll");
        CHECK(sp.dims[0].lower == -half_pi);
        CHECK(sp.dims[0].upper == half_pi);
        CHECK(sp.dims[1].name == "yaw");
        CHECK(sp.dims[2].name == "eta_c");
        CHECK(sp.dims[2].lower == cfg.params.eta_ordinary);
        CHECK(sp.dims[2].upper == cfg.params.eta_extraordinary);

        cfg.kind = scenario_kind::ris_only_baseline;
        CHECK(space_for(cfg).size() == 2);

        cfg.kind = scenario_kind::wall_baseline;
        sp = space_for(cfg);
        REQUIRE(sp.size() == 1);
        CHECK(sp.dims[0].name == "eta_c");

        cfg.kind = scenario_kind::lc_los_baseline;
        CHECK(space_for(cfg).size() == 1);

        cfg.kind = scenario_kind::noma_multiuser;
        cfg.noma.num_users = 4;
        sp = space_for(cfg);
        REQUIRE(sp.size() == 6);
        CHECK(sp.dims[2].name == "eta_c_1");
        CHECK(sp.dims[5].name == "eta_c_4");

        cfg = scenario_config{};
        cfg.kind = scenario_kind::convergence_trace;
        CHECK(space_for(cfg).size() == 3);
        cfg.variant = trace_variant::ris_only;
        CHECK(space_for(cfg).size() == 2);
    }

    TEST_CASE("objectives agree with direct channel evaluations")
    {
        scenario_config cfg;
        const scene &scn = cfg.scn;
        const system_params &params = cfg.params;
        std::vector<double> x = {0.1, -0.2, 1.62};

        SUBCASE("joint rate")
        {
            objective_fn f = objective_for(cfg, scn, params);
            scene s = scn;
            s.mirrors.roll = x[0];
            s.mirrors.yaw = x[1];
            double expect =
                achievable_rate(evaluate_channel(s, s.users[0], x[2], params), params);
            CHECK(f(x) == expect);
            CHECK(expect > 0.0);
        }

        SUBCASE("orientation-only variant drops the receiver cell")
        {
            cfg.kind = scenario_kind::ris_only_baseline;
            objective_fn f = objective_for(cfg, scn, params);
            scene s = scn;
            s.mirrors.roll = x[0];
            s.mirrors.yaw = x[1];
            channel_options opt;
            opt.indicator = indicator_mode::forced_zero;
            opt.lc_enabled = false;
            double expect = achievable_rate(
                evaluate_channel(s, s.users[0], params.eta_ordinary, params, opt), params);
            CHECK(f({x[0], x[1]}) == expect);
        }

        SUBCASE("direct-path-only variant drops the mirrors")
        {
            cfg.kind = scenario_kind::lc_los_baseline;
            objective_fn f = objective_for(cfg, scn, params);
            channel_options opt;
            opt.indicator = indicator_mode::forced_one;
            opt.nlos_enabled = false;
            double expect = achievable_rate(
                evaluate_channel(scn, scn.users[0], 1.62, params, opt), params);
            CHECK(f({1.62}) == expect);
        }

        SUBCASE("wall reflection variant")
        {
            cfg.kind = scenario_kind::wall_baseline;
            objective_fn f = objective_for(cfg, scn, params);
            channel_options opt;
            opt.paths = path_set::wall;
            double expect =
                wall_rate(evaluate_channel(scn, scn.users[0], 1.62, params, opt), params);
            CHECK(f({1.62}) == expect);
        }

        SUBCASE("energy efficiency divides by the consumed power")
        {
            cfg.kind = scenario_kind::ee_vs_k;
            objective_fn f = objective_for(cfg, scn, params);
            scene s = scn;
            s.mirrors.roll = x[0];
            s.mirrors.yaw = x[1];
            channel_options opt;
            opt.indicator = indicator_mode::forced_zero;
            double rate = achievable_rate(
                evaluate_channel(s, s.users[0], x[2], params, opt), params);
            CHECK(f(x) == energy_efficiency(rate, params, 300));
        }

        SUBCASE("multi-user sum rate sorts users by composite gain")
        {
            cfg.kind = scenario_kind::noma_multiuser;
            cfg.noma.num_users = 4;
            cfg.scn.users = default_noma_users(4);
            objective_fn f = objective_for(cfg, cfg.scn, params);
            std::vector<double> xn = {0.1, -0.2, 1.55, 1.6, 1.65, 1.7};

            scene s = cfg.scn;
            s.mirrors.roll = xn[0];
            s.mirrors.yaw = xn[1];
            std::vector<std::pair<double, double>> link;
            for (std::size_t u = 0; u < 4; ++u)
            {
                channel_state ch = evaluate_channel(s, s.users[u], xn[2 + u], params);
                link.emplace_back(ch.gain.h_total, ch.lc.amplification);
            }
            std::stable_sort(link.begin(), link.end(),
                             [](const auto &a, const auto &b) { return a.first < b.first; });
            std::vector<double> hs, amps;
            for (auto &[h, a] : link)
            {
                hs.push_back(h);
                amps.push_back(a);
            }
            CHECK(f(xn) == noma_sum_rate(hs, amps, cfg.noma, params));
        }
    }

    TEST_CASE("grid search scans row-major and keeps the first best point")
    {
        search_space space = {{{"x", 0.0, 1.0}, {"y", 0.0, 1.0}}};
        auto bowl = [](const std::vector<double> &v) {
            double dx = v[0] - 0.5;
            double dy = v[1] - 0.25;
            return -(dx * dx + dy * dy);
        };
        grid_result gr = oracle_grid_search(space, bowl, {5, 5});
        CHECK(gr.eval_count == 25);
        CHECK(gr.best_fitness == 0.0);
        CHECK(gr.best_position == std::vector<double>{0.5, 0.25});

        // Constant objective: ties resolve to the first grid point, which is
        // the lower corner because the last dimension advances fastest.
        auto flat = [](const std::vector<double> &) { return 7.0; };
        grid_result tie = oracle_grid_search(space, flat, {3, 3});
        CHECK(tie.best_fitness == 7.0);
        CHECK(tie.best_position == std::vector<double>{0.0, 0.0});

        // Single-point axes evaluate the lower bound.
        grid_result corner = oracle_grid_search(space, bowl, {1, 1});
        CHECK(corner.eval_count == 1);
        CHECK(corner.best_position == std::vector<double>{0.0, 0.0});

        // Failures are skipped but still counted.
        auto partial = [](const std::vector<double> &v) -> double {
            if (v[0] < 0.5)
                throw std::runtime_error("outage");
            return -v[0];
        };
        grid_result part = oracle_grid_search(space, partial, {5, 3});
        CHECK(part.eval_count == 15);
        CHECK(part.best_position[0] == 0.5);
        CHECK(part.best_fitness == -0.5);

        auto never = [](const std::vector<double> &) -> double {
            return std::numeric_limits<double>::quiet_NaN();
        };
        grid_result none = oracle_grid_search(space, never, {3, 3});
        CHECK(none.eval_count == 9);
        CHECK(std::isnan(none.best_fitness));
        CHECK(none.best_position == std::vector<double>{0.0, 0.0});

        search_space wide = {{{"a", 0, 1}, {"b", 0, 1}, {"c", 0, 1}, {"d", 0, 1},
                              {"e", 0, 1}}};
        CHECK_THROWS_AS((void)oracle_grid_search(wide, flat, {2, 2, 2, 2, 2}),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)oracle_grid_search(space, flat, {3}),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)oracle_grid_search(space, flat, {3, 0}),
                        std::invalid_argument);
    }

    TEST_CASE("scenario execution aggregates trials per sweep value")
    {
        scenario_config cfg;
        cfg.sweep = sweep_spec{"power", 2.0, 8.0, 2};
        cfg.optimizer.agents = 2;
        cfg.optimizer.iterations = 40;
        cfg.optimizer.seed = 1;
        cfg.monte_carlo.trials = 1;

        scenario_result res = run_scenario(cfg);
        REQUIRE(res.rows.size() == 2);
        CHECK(res.dim_names == std::vector<std::string>{"roll", "yaw", "eta_c"});
        for (const result_row &row : res.rows)
        {
            CHECK(row.eval_count == 2 * 41);
            CHECK(row.failed_trials == 0);
            CHECK(std::isfinite(row.objective_mean));
            CHECK(row.objective_min <= row.objective_mean);
            CHECK(row.objective_mean <= row.objective_max);
            REQUIRE(row.best_position.size() == 3);
            CHECK(row.best_position[0] >= -half_pi);
            CHECK(row.best_position[0] <= half_pi);
            CHECK(row.best_position[2] >= 1.5);
            CHECK(row.best_position[2] <= 1.7);
        }
        // Sixteen times the electrical signal power must not lower the
        // optimized rate.
        CHECK(res.rows[1].objective_mean > res.rows[0].objective_mean);

        // Bit-identical on a rerun.
        scenario_result again = run_scenario(cfg);
        CHECK(to_csv_string(again.to_table(cfg)) == to_csv_string(res.to_table(cfg)));

        // Trace capture records the first trial of the first sweep value.
        scenario_result traced = run_scenario(cfg, true);
        CHECK(traced.trace.size() == 41);
        CHECK(traced.trace.front().best_fitness <= traced.trace.back().best_fitness);
    }

    TEST_CASE("monte carlo resampling is deterministic per (sweep, trial)")
    {
        scenario_config cfg;
        cfg.sweep = sweep_spec{"power", 2.0, 2.0, 1};
        cfg.optimizer.agents = 2;
        cfg.optimizer.iterations = 5;
        cfg.monte_carlo.trials = 3;
        cfg.monte_carlo.seed = 17;
        cfg.monte_carlo.resample_orientation = true;
        cfg.monte_carlo.resample_blockers = true;
        cfg.monte_carlo.blocker_count = 2;

        scenario_result a = run_scenario(cfg);
        scenario_result b = run_scenario(cfg);
        REQUIRE(a.rows.size() == 1);
        CHECK(a.rows[0].eval_count == 3 * 2 * 6);
        CHECK(a.rows[0].los_blocked_fraction >= 0.0);
        CHECK(a.rows[0].los_blocked_fraction <= 1.0);
        CHECK(to_csv_string(a.to_table(cfg)) == to_csv_string(b.to_table(cfg)));

        // A different sampling seed must change the drawn scenes. The
        // objective spread across trials reflects that.
        cfg.monte_carlo.seed = 18;
        scenario_result c = run_scenario(cfg);
        CHECK(to_csv_string(c.to_table(cfg)) != to_csv_string(a.to_table(cfg)));
    }

    TEST_CASE("grid certification mirrors the optimizer problem")
    {
        scenario_config cfg;
        cfg.kind = scenario_kind::oracle_grid;
        cfg.grid_points = std::vector<int>{3, 3, 3};

        scenario_result res = run_oracle(cfg);
        CHECK(res.oracle);
        REQUIRE(res.rows.size() == 1);
        CHECK(res.rows[0].eval_count == 27);
        CHECK(res.rows[0].sweep_value == cfg.params.optical_power);

        grid_result manual = oracle_grid_search(
            space_for(cfg), objective_for(cfg, cfg.scn, cfg.params), {3, 3, 3});
        CHECK(res.rows[0].objective_mean == manual.best_fitness);
        CHECK(res.rows[0].best_position == manual.best_position);

        // run_scenario dispatches the oracle kind to the same path.
        scenario_result via_run = run_scenario(cfg);
        CHECK(via_run.oracle);
        CHECK(via_run.rows[0].objective_mean == res.rows[0].objective_mean);

        scenario_config bad = cfg;
        bad.grid_points = std::vector<int>{3, 3};
        CHECK_THROWS_AS((void)run_oracle(bad), std::invalid_argument);
    }

    TEST_CASE("result tables carry the documented schemas")
    {
        scenario_config cfg;
        cfg.sweep = sweep_spec{"power", 2.0, 2.0, 1};
        cfg.optimizer.agents = 2;
        cfg.optimizer.iterations = 3;
        scenario_result res = run_scenario(cfg);
        csv_table t = res.to_table(cfg);
        CHECK(t.columns ==
              std::vector<std::string>{"sweep_value", "objective_mean", "objective_min",
                                       "objective_max", "best_roll", "best_yaw",
                                       "best_eta_c", "los_blocked_fraction", "eval_count",
                                       "failed_trials"});
        REQUIRE(t.rows.size() == 1);
        CHECK(t.rows[0].size() == t.columns.size());
        CHECK(t.notes.empty());

        cfg.note = "two-agent shakeout";
        csv_table noted = res.to_table(cfg);
        REQUIRE(noted.notes.size() == 1);
        CHECK(noted.notes[0] == "two-agent shakeout");

        scenario_config ocfg;
        ocfg.kind = scenario_kind::oracle_grid;
        ocfg.grid_points = std::vector<int>{2, 2, 2};
        scenario_result ores = run_oracle(ocfg);
        csv_table ot = ores.to_table(ocfg);
        CHECK(ot.columns ==
              std::vector<std::string>{"sweep_value", "objective_best", "best_roll",
                                       "best_yaw", "best_eta_c", "eval_count"});

        // The wavelength comparison ships with a caveat about the gain model.
        scenario_config wcfg;
        wcfg.kind = scenario_kind::wavelength_sweep;
        scenario_result wres;
        wres.dim_names = {"roll", "yaw", "eta_c"};
        result_row row;
        row.best_position = {0.0, 0.0, 1.6};
        wres.rows.push_back(row);
        csv_table wt = wres.to_table(wcfg);
        REQUIRE(!wt.notes.empty());
        CHECK(wt.notes[0].find("wavelength") != std::string::npos);
    }

    TEST_CASE("convergence traces serialize as iteration tables")
    {
        std::vector<iteration_stat> trace = {{1.5, 0}, {2.5, 3}, {2.5, 0}};
        csv_table t = trace_table(trace);
        CHECK(t.columns ==
              std::vector<std::string>{"iteration", "best_fitness", "overshoot_steps"});
        REQUIRE(t.rows.size() == 3);
        CHECK(t.rows[0] == std::vector<double>{0.0, 1.5, 0.0});
        CHECK(t.rows[1] == std::vector<double>{1.0, 2.5, 3.0});

        scenario_config cfg;
        cfg.kind = scenario_kind::convergence_trace;
        cfg.optimizer.agents = 2;
        cfg.optimizer.iterations = 10;
        scenario_result res = run_scenario(cfg);
        REQUIRE(res.trace.size() == 11);
        csv_table ct = res.to_table(cfg);
        CHECK(ct.columns ==
              std::vector<std::string>{"iteration", "best_fitness", "overshoot_steps"});
        CHECK(ct.rows.size() == 11);
    }

    TEST_CASE("numeric formatting and csv round trip")
    {
        CHECK(format_double(0.1) == "0.1");
        CHECK(format_double(1.0) == "1");
        CHECK(format_double(1e9) == "1e+09");
        CHECK(format_double(-2.5) == "-2.5");
        CHECK(format_double(123456789.123) == "123456789");

        csv_table t;
        t.notes = {"determinism shakeout"};
        t.columns = {"a", "b"};
        t.rows = {{1.0, 0.5}, {2.0, 1e-9}};
        std::string s = to_csv_string(t);
        CHECK(s == "# determinism shakeout\na,b\n1,0.5\n2,1e-09\n");

        csv_table bad = t;
        bad.rows.push_back({3.0});
        CHECK_THROWS_AS((void)to_csv_string(bad), std::invalid_argument);

        std::string path = "csv_roundtrip_test.csv";
        write_csv(t, path);
        csv_table r = read_csv(path);
        CHECK(r.notes == t.notes);
        CHECK(r.columns == t.columns);
        CHECK(r.rows == t.rows);
        std::remove(path.c_str());

        CHECK_THROWS_AS((void)read_csv("does_not_exist_anywhere.csv"),
                        std::runtime_error);
        CHECK_THROWS_AS(write_csv(t, "no_such_dir/impossible.csv"), std::runtime_error);
    }

    TEST_CASE("configuration documents parse with strict key checking")
    {
        scenario_config blank = parse_config("");
        CHECK(blank.kind == scenario_kind::rate_p0);
        CHECK(blank.monte_carlo.trials == 1);
        CHECK(parse_config("{}").effective_output_path() == "rate_p0.csv");
        CHECK(parse_config("  \n\t ").optimizer.iterations == 400);

        scenario_config cfg = parse_config(R"({
            "scenario": "ris_only_baseline",
            "note": "orientation only",
            "output": "custom.csv",
            "params": {"optical_power": 4.0, "fov": 1.2,
                       "power": {"p_tia": 2.0}},
            "scene": {
                "ap_pos": [2.5, 2.5, 3.0],
                "users": [{"device_pos": [1.5, 2.0, 0.9], "azimuth": 0.25,
                           "polar": 0.5, "body_blocker": false}],
                "mirrors": {"rows": 5, "cols": 10, "element_side": 0.1},
                "blockers": [{"base_center": [4.0, 4.0, 0.0], "radius": 0.2,
                              "height": 1.5}]
            },
            "sweep": {"variable": "power", "start": 2.0, "stop": 4.0, "steps": 2},
            "monte_carlo": {"trials": 2, "seed": 9, "resample_orientation": true},
            "optimizer": {"agents": 3, "iterations": 7, "a": 1.5, "seed": 5},
            "indicator": "automatic",
            "variant": "ris_only"
        })");
        CHECK(cfg.kind == scenario_kind::ris_only_baseline);
        CHECK(cfg.note == "orientation only");
        CHECK(cfg.output_path == "custom.csv");
        CHECK(cfg.params.optical_power == 4.0);
        CHECK(cfg.params.fov == 1.2);
        CHECK(cfg.params.power.p_tia == 2.0);
        REQUIRE(cfg.scn.users.size() == 1);
        CHECK(cfg.scn.users[0].device_pos.x == 1.5);
        CHECK(cfg.scn.users[0].azimuth == 0.25);
        CHECK(cfg.scn.users[0].body_blocker == false);
        CHECK(cfg.scn.mirrors.rows == 5);
        CHECK(cfg.scn.mirrors.cols.value() == 10);
        REQUIRE(cfg.scn.blockers.size() == 1);
        CHECK(cfg.scn.blockers[0].radius == 0.2);
        REQUIRE(cfg.sweep.has_value());
        CHECK(cfg.sweep->stop == 4.0);
        CHECK(cfg.monte_carlo.trials == 2);
        CHECK(cfg.monte_carlo.resample_orientation);
        CHECK(cfg.optimizer.agents == 3);
        CHECK(cfg.optimizer.a == 1.5);
        CHECK(cfg.indicator.has_value());
        CHECK(*cfg.indicator == indicator_mode::automatic);
        CHECK(cfg.variant == trace_variant::ris_only);

        CHECK_THROWS_WITH_AS((void)parse_config(R"({"scenari": "rate_p0"})"),
                             doctest::Contains("scenari"), config_error);
        CHECK_THROWS_WITH_AS((void)parse_config(R"({"params": {"fovv": 1.0}})"),
                             doctest::Contains("params.fovv"), config_error);
        CHECK_THROWS_WITH_AS(
            (void)parse_config(R"({"scene": {"mirrors": {"tilt": 0.1}}})"),
            doctest::Contains("scene.mirrors.tilt"), config_error);
        CHECK_THROWS_AS((void)parse_config(R"({"params": {"optical_power": "two"}})"),
                        config_error);
        CHECK_THROWS_AS((void)parse_config("{not json"), config_error);

        // Physical invariants surface as configuration errors too.
        CHECK_THROWS_WITH_AS((void)parse_config(R"({"params": {"fov": 2.0}})"),
                             doctest::Contains("fov"), config_error);
        CHECK_THROWS_AS((void)parse_config(R"({"indicator": "sometimes"})"),
                        config_error);
        CHECK_THROWS_AS((void)parse_config(R"({"variant": "improved"})"), config_error);
        CHECK_THROWS_AS((void)parse_config(R"({"grid_points": 41})"), config_error);
    }

    TEST_CASE("multi-user configs place default users when none are given")
    {
        scenario_config cfg = parse_config(R"({
            "scenario": "noma_multiuser",
            "noma": {"zeta": 0.6, "num_users": 3}
        })");
        CHECK(cfg.scn.users.size() == 3);
        CHECK(cfg.scn.users[1].device_pos.x ==
              default_noma_users(3)[1].device_pos.x);

        // An explicit user list of the wrong size is rejected.
        CHECK_THROWS_AS((void)parse_config(R"({
            "scenario": "noma_multiuser",
            "noma": {"num_users": 3},
            "scene": {"users": [{"device_pos": [1.0, 1.0, 0.85]}]}
        })"),
                        config_error);
    }

    TEST_CASE("unreadable configuration files are configuration errors")
    {
        CHECK_THROWS_AS((void)load_config("missing_config_file.json"), config_error);
    }
}
