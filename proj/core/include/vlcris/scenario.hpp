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

#ifndef vlcris_scenario_H
#define vlcris_scenario_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vlcris/channel.hpp"
#include "vlcris/csv.hpp"
#include "vlcris/objectives.hpp"
#include "vlcris/params.hpp"
#include "vlcris/scene.hpp"
#include "vlcris/sca.hpp"

namespace vlcris
{

enum class scenario_kind
{
    rate_p0,          // joint mirror-orientation + receiver-index rate maximization
    wall_baseline,    // passive wall reflection, receiver index only
    ris_only_baseline,// mirror orientation only, no receiver cell
    lc_los_baseline,  // receiver index only, LoS only, no mirrors
    noma_multiuser,   // shared mirror orientation + per-user receiver index
    ee_vs_k,          // energy efficiency swept over mirror count
    rate_vs_k,        // rate swept over mirror count
    wavelength_sweep, // rate at each wavelength
    convergence_trace,// single optimizer run, per-iteration trace output
    oracle_grid       // exhaustive grid search instead of the optimizer
};

std::string to_string(scenario_kind kind);
scenario_kind scenario_kind_from_string(const std::string &name);

// Inclusive linear sweep over one scalar: "power", "k_elements" or
// "wavelength". steps == 1 emits only `start`.
struct sweep_spec
{
    std::string variable;
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;

    std::vector<double> values() const;
    void validate() const;
};

struct monte_carlo_spec
{
    int trials = 1;
    std::uint64_t seed = 1;
    bool resample_orientation = false;
    bool resample_blockers = false;
    int blocker_count = 3;

    void validate() const;
};

struct optimizer_spec
{
    int agents = 2;
    int iterations = 400;
    double a = 2.0;
    std::uint64_t seed = 1;

    void validate() const;
};

// Which problem a convergence trace runs: the full joint problem or the
// orientation-only variant with no receiver cell.
enum class trace_variant
{
    proposed,
    ris_only
};

struct scenario_config
{
    scenario_kind kind = scenario_kind::rate_p0;
    system_params params;
    scene scn;
    std::optional<sweep_spec> sweep; // per-kind default applied when unset
    monte_carlo_spec monte_carlo;
    optimizer_spec optimizer;
    noma_config noma;
    std::optional<indicator_mode> indicator; // per-kind default when unset
    std::optional<std::vector<int>> grid_points; // oracle resolution per dim
    trace_variant variant = trace_variant::proposed;
    std::string output_path; // default "<kind>.csv"
    std::string note;        // extra comment line in the output

    sweep_spec effective_sweep() const;
    indicator_mode effective_indicator() const;
    std::string effective_output_path() const;
    void validate() const;
};

// Aggregated outcome for one sweep value. wall_ms is informational only and
// never serialized, keeping outputs byte-reproducible.
struct result_row
{
    double sweep_value = 0.0;
    double objective_mean = 0.0;
    double objective_min = 0.0;
    double objective_max = 0.0;
    std::vector<double> best_position; // from the best-objective trial
    double los_blocked_fraction = 0.0; // automatic indicator == 0 share
    long long eval_count = 0;          // summed over trials
    int failed_trials = 0;
    double wall_ms = 0.0;
};

struct scenario_result
{
    std::vector<std::string> dim_names; // flattened best_<name> column order
    std::vector<result_row> rows;
    // Trace of (sweep 0, trial 0), filled for convergence_trace and on demand.
    std::vector<iteration_stat> trace;
    bool oracle = false; // true when produced by a grid search

    csv_table to_table(const scenario_config &cfg) const;
};

// Per-iteration optimizer trace as a standalone table.
csv_table trace_table(const std::vector<iteration_stat> &trace);

// Users placed on the room diagonal for an n-user downlink experiment.
std::vector<user_state> default_noma_users(int num_users);

// Box search space the given scenario kind optimizes over.
search_space space_for(const scenario_config &cfg);

// Objective over that space for one concrete (scene, params) instance.
// Returns the scalar being maximized (bits/s, or bits/J for ee_vs_k).
objective_fn objective_for(const scenario_config &cfg, const scene &scn,
                           const system_params &params);

// Execute the configured experiment. Deterministic given the config.
scenario_result run_scenario(const scenario_config &cfg, bool capture_trace = false);

struct grid_result
{
    std::vector<double> best_position;
    double best_fitness = 0.0;
    long long eval_count = 0;
};

// Exhaustive scan over the Cartesian grid (row-major, last dimension
// fastest); first point wins ties. Refuses spaces with more than 4
// dimensions. points_per_dim entries of 1 evaluate the lower bound.
grid_result oracle_grid_search(const search_space &space, const objective_fn &objective,
                               const std::vector<int> &points_per_dim);

// Grid certification of the configured scenario at its first sweep value.
scenario_result run_oracle(const scenario_config &cfg);

} // namespace vlcris

#endif
