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

#ifndef vlcris_sca_H
#define vlcris_sca_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vlcris/rng.hpp"

namespace vlcris
{

struct search_dim
{
    std::string name;
    double lower = 0.0;
    double upper = 1.0;
};

struct search_space
{
    std::vector<search_dim> dims;

    std::size_t size() const { return dims.size(); }
    void validate() const; // lower < upper per dimension
};

using objective_fn = std::function<double(const std::vector<double> &)>;

struct sca_options
{
    int agents = 2;
    int iterations = 400;
    double a = 2.0;
    std::uint64_t seed = 1;
};

// Linear step-size decay a - t a / T from a (t = 0) to 0 (t = T).
double r1_schedule(double t, double a, double T);

struct iteration_stat
{
    double best_fitness = 0.0;
    // Coordinate updates this iteration whose multiplier |r1 sin r2| or
    // |r1 cos r2| exceeded 1 (steps able to overshoot the destination).
    int overshoot_steps = 0;
};

struct sca_state
{
    std::vector<std::vector<double>> agents; // N x V
    std::vector<double> fitness;             // NaN marks a failed evaluation
    std::vector<double> destination;
    double destination_fitness = 0.0; // -inf until a valid evaluation exists
    int t = 0;
    long long eval_count = 0;
    int last_overshoot_steps = 0;
};

// Uniform population over the box and first round of evaluations. Consumes
// n_agents * V uniforms, agent-major, dimension-minor.
sca_state sca_initialize(const search_space &space, const objective_fn &objective,
                         int n_agents, rng_stream &rng);

// One synchronous iteration: every coordinate of every agent draws fresh
// (r2, r3, r4) in that order, moves by the sine branch when r4 < 0.5 and the
// cosine branch otherwise, and is clamped into the box. A failed evaluation
// reverts the agent and marks its fitness NaN (still counted as one
// evaluation). The destination moves only on strict improvement, after all
// agents have moved.
void sca_iterate(sca_state &state, const search_space &space, const objective_fn &objective,
                 const sca_options &opts, rng_stream &rng);

struct sca_result
{
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::vector<iteration_stat> trace; // length iterations + 1, entry 0 = init
    long long eval_count = 0;          // exactly agents * (iterations + 1)
};

// Full run: initialize, then `iterations` update rounds. Deterministic given
// (space, options.seed); the objective must not consume from the run's RNG.
sca_result sca_run(const search_space &space, const objective_fn &objective,
                   const sca_options &opts);

} // namespace vlcris

#endif
