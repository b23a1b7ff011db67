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

#include "vlcris/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>

namespace vlcris
{

namespace
{

constexpr double half_pi = 1.5707963267948966;
constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

const char *kind_names[] = {
    "rate_p0",    "wall_baseline", "ris_only_baseline", "lc_los_baseline",
    "noma_multiuser", "ee_vs_k",   "rate_vs_k",         "wavelength_sweep",
    "convergence_trace", "oracle_grid",
};

// Default grid resolution: finer is unnecessary for angles, the receiver
// index axis is short.
int default_points_for(const std::string &dim_name)
{
    return dim_name.rfind("eta", 0) == 0 ? 21 : 41;
}

void apply_sweep_value(const std::string &variable, double value, scene &scn,
                       system_params &params)
{
    if (variable == "power")
    {
        params.optical_power = value;
    }
    else if (variable == "wavelength")
    {
        params.wavelength = value;
    }
    else if (variable == "k_elements")
    {
        scn.mirrors.k_elements = static_cast<int>(std::llround(value));
        scn.mirrors.cols.reset();
    }
    else
    {
        throw std::invalid_argument("sweep: unknown variable '" + variable + "'");
    }
}

} // namespace

std::string to_string(scenario_kind kind)
{
    return kind_names[static_cast<int>(kind)];
}

scenario_kind scenario_kind_from_string(const std::string &name)
{
    for (int i = 0; i < static_cast<int>(std::size(kind_names)); ++i)
        if (name == kind_names[i])
            return static_cast<scenario_kind>(i);
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::vector<double> sweep_spec::values() const
{
    validate();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    if (steps == 1)
    {
        out.push_back(start);
        return out;
    }
    for (int i = 0; i < steps; ++i)
        out.push_back(start + i * (stop - start) / (steps - 1));
    return out;
}

void sweep_spec::validate() const
{
    if (variable != "power" && variable != "k_elements" && variable != "wavelength")
        throw std::invalid_argument("sweep: variable must be power, k_elements or wavelength");
    if (steps < 1)
        throw std::invalid_argument("sweep: steps must be >= 1");
    if (!std::isfinite(start) || !std::isfinite(stop))
        throw std::invalid_argument("sweep: start and stop must be finite");
}

void monte_carlo_spec::validate() const
{
    if (trials < 1)
        throw std::invalid_argument("monte_carlo: trials must be >= 1");
    if (blocker_count < 0)
        throw std::invalid_argument("monte_carlo: blocker_count must be >= 0");
}

void optimizer_spec::validate() const
{
    if (agents < 1)
        throw std::invalid_argument("optimizer: agents must be >= 1");
    if (iterations < 1)
        throw std::invalid_argument("optimizer: iterations must be >= 1");
    if (!(a > 0.0))
        throw std::invalid_argument("optimizer: a must be > 0");
}

sweep_spec scenario_config::effective_sweep() const
{
    if (sweep)
        return *sweep;
    switch (kind)
    {
    case scenario_kind::rate_p0:
    case scenario_kind::wall_baseline:
    case scenario_kind::ris_only_baseline:
    case scenario_kind::lc_los_baseline:
    case scenario_kind::noma_multiuser:
        return {"power", 1.0, 8.0, 8};
    case scenario_kind::rate_vs_k:
    case scenario_kind::ee_vs_k:
        return {"k_elements", 50.0, 600.0, 12};
    case scenario_kind::wavelength_sweep:
        return {"wavelength", 510e-9, 670e-9, 2};
    case scenario_kind::convergence_trace:
    case scenario_kind::oracle_grid:
        return {"power", params.optical_power, params.optical_power, 1};
    }
    throw std::logic_error("effective_sweep: unhandled kind");
}

indicator_mode scenario_config::effective_indicator() const
{
    if (indicator)
        return *indicator;
    switch (kind)
    {
    case scenario_kind::ris_only_baseline:
    case scenario_kind::rate_vs_k:
    case scenario_kind::ee_vs_k:
    case scenario_kind::convergence_trace:
        // Reflected-path studies: the direct path is withheld so the mirror
        // contribution is measured on its own.
        return indicator_mode::forced_zero;
    case scenario_kind::lc_los_baseline:
        return indicator_mode::forced_one;
    default:
        return indicator_mode::automatic;
    }
}

std::string scenario_config::effective_output_path() const
{
    return output_path.empty() ? to_string(kind) + ".csv" : output_path;
}

void scenario_config::validate() const
{
    params.validate();
    scn.validate();
    monte_carlo.validate();
    optimizer.validate();
    (void)noma.power_ratios();

    sweep_spec sw = effective_sweep();
    sw.validate();
    if (sw.variable == "k_elements")
    {
        if (scn.mirrors.cols)
            throw std::invalid_argument(
                "sweep: k_elements sweep requires mirrors.cols to stay unset");
        for (double v : sw.values())
        {
            long long k = std::llround(v);
            if (std::abs(v - static_cast<double>(k)) > 1e-9 || k < 1)
                throw std::invalid_argument("sweep: k_elements values must be integers >= 1");
            if (k % scn.mirrors.rows != 0)
                throw std::invalid_argument(
                    "sweep: every k_elements value must divide evenly into mirrors.rows");
        }
    }
    if (kind == scenario_kind::noma_multiuser &&
        static_cast<int>(scn.users.size()) != noma.num_users)
        throw std::invalid_argument(
            "noma_multiuser: scene must define exactly noma.num_users users");
    if (grid_points)
        for (int p : *grid_points)
            if (p < 1)
                throw std::invalid_argument("grid_points: entries must be >= 1");
}

std::vector<user_state> default_noma_users(int num_users)
{
    if (num_users < 1)
        throw std::invalid_argument("default_noma_users: num_users must be >= 1");
    std::vector<user_state> users;
    users.reserve(static_cast<std::size_t>(num_users));
    for (int u = 0; u < num_users; ++u)
    {
        double f = num_users > 1 ? 1.8 * u / (num_users - 1) : 0.0;
        user_state us;
        us.device_pos = {1.0 + f, 1.5 + f, 0.85};
        users.push_back(us);
    }
    return users;
}

search_space space_for(const scenario_config &cfg)
{
    search_dim roll{"roll", -half_pi, half_pi};
    search_dim yaw{"yaw", -half_pi, half_pi};
    search_dim eta{"eta_c", cfg.params.eta_ordinary, cfg.params.eta_extraordinary};

    search_space space;
    switch (cfg.kind)
    {
    case scenario_kind::rate_p0:
    case scenario_kind::rate_vs_k:
    case scenario_kind::ee_vs_k:
    case scenario_kind::wavelength_sweep:
    case scenario_kind::oracle_grid:
        space.dims = {roll, yaw, eta};
        break;
    case scenario_kind::convergence_trace:
        if (cfg.variant == trace_variant::proposed)
            space.dims = {roll, yaw, eta};
        else
            space.dims = {roll, yaw};
        break;
    case scenario_kind::ris_only_baseline:
        space.dims = {roll, yaw};
        break;
    case scenario_kind::wall_baseline:
    case scenario_kind::lc_los_baseline:
        space.dims = {eta};
        break;
    case scenario_kind::noma_multiuser:
        space.dims = {roll, yaw};
        for (int u = 1; u <= cfg.noma.num_users; ++u)
        {
            search_dim per_user = eta;
            per_user.name = "eta_c_" + std::to_string(u);
            space.dims.push_back(per_user);
        }
        break;
    }
    return space;
}

objective_fn objective_for(const scenario_config &cfg, const scene &scn,
                           const system_params &params)
{
    scenario_kind kind = cfg.kind;
    if (kind == scenario_kind::convergence_trace)
        kind = cfg.variant == trace_variant::proposed ? scenario_kind::rate_p0
                                                      : scenario_kind::ris_only_baseline;
    if (kind == scenario_kind::oracle_grid)
        kind = scenario_kind::rate_p0;

    channel_options opt;
    opt.indicator = cfg.effective_indicator();
    noma_config noma = cfg.noma;

    switch (kind)
    {
    case scenario_kind::rate_p0:
    case scenario_kind::rate_vs_k:
    case scenario_kind::wavelength_sweep:
        return [opt, s = scn, p = params](const std::vector<double> &x) mutable {
            s.mirrors.roll = x[0];
            s.mirrors.yaw = x[1];
            return achievable_rate(evaluate_channel(s, s.users[0], x[2], p, opt), p);
        };
    case scenario_kind::ee_vs_k:
        return [opt, s = scn, p = params](const std::vector<double> &x) mutable {
            s.mirrors.roll = x[0];
            s.mirrors.yaw = x[1];
            double rate = achievable_rate(evaluate_channel(s, s.users[0], x[2], p, opt), p);
            return energy_efficiency(rate, p, s.mirrors.count());
        };
    case scenario_kind::ris_only_baseline:
        opt.lc_enabled = false;
        return [opt, s = scn, p = params](const std::vector<double> &x) mutable {
            s.mirrors.roll = x[0];
            s.mirrors.yaw = x[1];
            return achievable_rate(evaluate_channel(s, s.users[0], p.eta_ordinary, p, opt),
                                   p);
        };
    case scenario_kind::lc_los_baseline:
        opt.nlos_enabled = false;
        return [opt, s = scn, p = params](const std::vector<double> &x) mutable {
            return achievable_rate(evaluate_channel(s, s.users[0], x[0], p, opt), p);
        };
    case scenario_kind::wall_baseline:
        opt.paths = path_set::wall;
        return [opt, s = scn, p = params](const std::vector<double> &x) mutable {
            return wall_rate(evaluate_channel(s, s.users[0], x[0], p, opt), p);
        };
    case scenario_kind::noma_multiuser:
        return [opt, noma, s = scn, p = params](const std::vector<double> &x) mutable {
            s.mirrors.roll = x[0];
            s.mirrors.yaw = x[1];
            std::size_t u_count = s.users.size();
            std::vector<std::pair<double, double>> link(u_count);
            for (std::size_t u = 0; u < u_count; ++u)
            {
                channel_state ch = evaluate_channel(s, s.users[u], x[2 + u], p, opt);
                link[u] = {ch.gain.h_total, ch.lc.amplification};
            }
            std::stable_sort(link.begin(), link.end(),
                             [](const auto &a, const auto &b) { return a.first < b.first; });
            std::vector<double> hs(u_count), amps(u_count);
            for (std::size_t u = 0; u < u_count; ++u)
            {
                hs[u] = link[u].first;
                amps[u] = link[u].second;
            }
            return noma_sum_rate(hs, amps, noma, p);
        };
    default:
        throw std::logic_error("objective_for: unhandled kind");
    }
}

grid_result oracle_grid_search(const search_space &space, const objective_fn &objective,
                               const std::vector<int> &points_per_dim)
{
    space.validate();
    std::size_t v_count = space.size();
    if (v_count > 4)
        throw std::invalid_argument(
            "oracle_grid_search: refuses spaces with more than 4 dimensions");
    if (points_per_dim.size() != v_count)
        throw std::invalid_argument("oracle_grid_search: one point count per dimension");
    long long total = 1;
    for (int p : points_per_dim)
    {
        if (p < 1)
            throw std::invalid_argument("oracle_grid_search: point counts must be >= 1");
        total *= p;
    }

    grid_result result;
    result.best_fitness = -std::numeric_limits<double>::infinity();
    std::vector<double> coords(v_count);
    bool any_valid = false;
    for (long long idx = 0; idx < total; ++idx)
    {
        long long rem = idx;
        for (std::size_t v = v_count; v-- > 0;)
        {
            int pv = points_per_dim[v];
            int iv = static_cast<int>(rem % pv);
            rem /= pv;
            const search_dim &d = space.dims[v];
            coords[v] = pv == 1 ? d.lower
                                : d.lower + iv * (d.upper - d.lower) / (pv - 1);
        }
        ++result.eval_count;
        double f;
        try
        {
            f = objective(coords);
        }
        catch (...)
        {
            continue;
        }
        if (std::isnan(f))
            continue;
        if (f > result.best_fitness)
        {
            result.best_fitness = f;
            result.best_position = coords;
            any_valid = true;
        }
    }
    if (!any_valid)
    {
        result.best_fitness = nan_value;
        result.best_position.assign(v_count, 0.0);
        for (std::size_t v = 0; v < v_count; ++v)
            result.best_position[v] = space.dims[v].lower;
    }
    return result;
}

scenario_result run_oracle(const scenario_config &cfg)
{
    cfg.validate();
    sweep_spec sw = cfg.effective_sweep();
    double v0 = sw.values().front();
    scene scn = cfg.scn;
    system_params params = cfg.params;
    apply_sweep_value(sw.variable, v0, scn, params);
    scn.validate();

    search_space space = space_for(cfg);
    std::vector<int> points;
    if (cfg.grid_points)
    {
        points = *cfg.grid_points;
        if (points.size() != space.size())
            throw std::invalid_argument("grid_points: one entry per search dimension");
    }
    else
    {
        for (const search_dim &d : space.dims)
            points.push_back(default_points_for(d.name));
    }

    auto t0 = std::chrono::steady_clock::now();
    grid_result gr = oracle_grid_search(space, objective_for(cfg, scn, params), points);
    auto t1 = std::chrono::steady_clock::now();

    scenario_result res;
    res.oracle = true;
    for (const search_dim &d : space.dims)
        res.dim_names.push_back(d.name);

    result_row row;
    row.sweep_value = v0;
    row.objective_mean = gr.best_fitness;
    row.objective_min = gr.best_fitness;
    row.objective_max = gr.best_fitness;
    row.best_position = gr.best_position;
    row.eval_count = gr.eval_count;
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    int blocked = 0;
    for (const user_state &u : scn.users)
    {
        double h = los_gain(scn, u, params);
        blocked += los_indicator(scn, u, params, params.optical_power * h) == 0 ? 1 : 0;
    }
    row.los_blocked_fraction = static_cast<double>(blocked) / scn.users.size();
    res.rows.push_back(std::move(row));
    return res;
}

scenario_result run_scenario(const scenario_config &cfg, bool capture_trace)
{
    cfg.validate();
    if (cfg.kind == scenario_kind::oracle_grid)
        return run_oracle(cfg);

    sweep_spec sw = cfg.effective_sweep();
    std::vector<double> values = sw.values();
    search_space space = space_for(cfg);

    scenario_result res;
    for (const search_dim &d : space.dims)
        res.dim_names.push_back(d.name);

    bool want_trace = capture_trace || cfg.kind == scenario_kind::convergence_trace;

    for (std::size_t i = 0; i < values.size(); ++i)
    {
        scene scn_i = cfg.scn;
        system_params params_i = cfg.params;
        apply_sweep_value(sw.variable, values[i], scn_i, params_i);
        scn_i.validate();

        result_row row;
        row.sweep_value = values[i];
        std::vector<double> objs;
        double best_obj = -std::numeric_limits<double>::infinity();
        std::vector<double> best_pos;
        int blocked = 0;
        int blocked_den = 0;
        auto t0 = std::chrono::steady_clock::now();

        for (int j = 0; j < cfg.monte_carlo.trials; ++j)
        {
            scene scn_t = scn_i;
            if (cfg.monte_carlo.resample_orientation || cfg.monte_carlo.resample_blockers)
            {
                rng_stream srng(derive_seed(cfg.monte_carlo.seed,
                                            static_cast<std::uint64_t>(i),
                                            static_cast<std::uint64_t>(j)));
                if (cfg.monte_carlo.resample_orientation)
                {
                    for (user_state &u : scn_t.users)
                    {
                        auto [beta, alpha] = sample_orientation(srng);
                        u.azimuth = beta;
                        u.polar = alpha;
                    }
                }
                if (cfg.monte_carlo.resample_blockers)
                {
                    scn_t.blockers.clear();
                    for (int b = 0; b < cfg.monte_carlo.blocker_count; ++b)
                    {
                        double x = srng.uniform(0.0, scn_t.room.x);
                        double y = srng.uniform(0.0, scn_t.room.y);
                        scn_t.blockers.push_back({{x, y, 0.0}, 0.15, 1.65});
                    }
                }
            }

            // Diagnostic: availability of the direct path as the automatic
            // rule would decide it, independent of any forced indicator.
            for (const user_state &u : scn_t.users)
            {
                double h = los_gain(scn_t, u, params_i);
                blocked +=
                    los_indicator(scn_t, u, params_i, params_i.optical_power * h) == 0 ? 1
                                                                                       : 0;
                ++blocked_den;
            }

            sca_options so;
            so.agents = cfg.optimizer.agents;
            so.iterations = cfg.optimizer.iterations;
            so.a = cfg.optimizer.a;
            so.seed = derive_seed(cfg.optimizer.seed, static_cast<std::uint64_t>(i),
                                  static_cast<std::uint64_t>(j));
            sca_result sr;
            bool ok = true;
            try
            {
                sr = sca_run(space, objective_for(cfg, scn_t, params_i), so);
            }
            catch (const std::exception &)
            {
                ok = false;
            }
            if (ok && !std::isfinite(sr.best_fitness))
                ok = false;
            if (!ok)
            {
                ++row.failed_trials;
                continue;
            }
            if (want_trace && i == 0 && j == 0)
                res.trace = sr.trace;
            objs.push_back(sr.best_fitness);
            row.eval_count += sr.eval_count;
            if (sr.best_fitness > best_obj)
            {
                best_obj = sr.best_fitness;
                best_pos = sr.best_position;
            }
        }

        auto t1 = std::chrono::steady_clock::now();
        row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (objs.empty())
        {
            row.objective_mean = nan_value;
            row.objective_min = nan_value;
            row.objective_max = nan_value;
            row.best_position.assign(space.size(), nan_value);
        }
        else
        {
            double sum = 0.0;
            double mn = objs.front();
            double mx = objs.front();
            for (double o : objs)
            {
                sum += o;
                mn = std::min(mn, o);
                mx = std::max(mx, o);
            }
            row.objective_mean = sum / static_cast<double>(objs.size());
            row.objective_min = mn;
            row.objective_max = mx;
            row.best_position = best_pos;
        }
        row.los_blocked_fraction =
            blocked_den > 0 ? static_cast<double>(blocked) / blocked_den : 0.0;
        res.rows.push_back(std::move(row));
    }
    return res;
}

csv_table trace_table(const std::vector<iteration_stat> &trace)
{
    csv_table table;
    table.columns = {"iteration", "best_fitness", "overshoot_steps"};
    for (std::size_t t = 0; t < trace.size(); ++t)
        table.rows.push_back({static_cast<double>(t), trace[t].best_fitness,
                              static_cast<double>(trace[t].overshoot_steps)});
    return table;
}

csv_table scenario_result::to_table(const scenario_config &cfg) const
{
    csv_table table;
    if (cfg.kind == scenario_kind::wavelength_sweep)
        table.notes.push_back(
            "the modeled amplification coefficient scales inversely with wavelength, so "
            "the shorter wavelength meets or exceeds the longer one at matched settings; "
            "measured cells have been reported with the opposite ordering, which this "
            "gain model does not reproduce");
    if (!cfg.note.empty())
        table.notes.push_back(cfg.note);

    if (cfg.kind == scenario_kind::convergence_trace)
    {
        csv_table tr = trace_table(trace);
        tr.notes = table.notes;
        return tr;
    }

    table.columns.push_back("sweep_value");
    if (oracle)
    {
        table.columns.push_back("objective_best");
    }
    else
    {
        table.columns.push_back("objective_mean");
        table.columns.push_back("objective_min");
        table.columns.push_back("objective_max");
    }
    for (const std::string &name : dim_names)
        table.columns.push_back("best_" + name);
    if (!oracle)
        table.columns.push_back("los_blocked_fraction");
    table.columns.push_back("eval_count");
    if (!oracle)
        table.columns.push_back("failed_trials");

    for (const result_row &row : rows)
    {
        std::vector<double> cells;
        cells.push_back(row.sweep_value);
        cells.push_back(row.objective_mean);
        if (!oracle)
        {
            cells.push_back(row.objective_min);
            cells.push_back(row.objective_max);
        }
        for (std::size_t v = 0; v < dim_names.size(); ++v)
            cells.push_back(v < row.best_position.size() ? row.best_position[v]
                                                         : nan_value);
        if (!oracle)
            cells.push_back(row.los_blocked_fraction);
        cells.push_back(static_cast<double>(row.eval_count));
        if (!oracle)
            cells.push_back(static_cast<double>(row.failed_trials));
        table.rows.push_back(std::move(cells));
    }
    return table;
}

} // namespace vlcris
