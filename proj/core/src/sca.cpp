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

#include "vlcris/sca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vlcris
{

namespace
{

constexpr double two_pi = 6.283185307179586;

// Evaluate, treating thrown exceptions and NaN results as failures.
bool try_evaluate(const objective_fn &objective, const std::vector<double> &x, double &out)
{
    try
    {
        double f = objective(x);
        if (std::isnan(f))
            return false;
        out = f;
        return true;
    }
    catch (...)
    {
        return false;
    }
}

void validate_options(const sca_options &opts)
{
    if (opts.agents < 1)
        throw std::invalid_argument("sca_options: agents must be >= 1");
    if (opts.iterations < 1)
        throw std::invalid_argument("sca_options: iterations must be >= 1");
    if (!(opts.a > 0.0))
        throw std::invalid_argument("sca_options: a must be > 0");
}

} // namespace

void search_space::validate() const
{
    if (dims.empty())
        throw std::invalid_argument("search_space: at least one dimension");
    for (const search_dim &d : dims)
        if (!(d.lower < d.upper))
            throw std::invalid_argument("search_space: lower < upper required for '" +
                                        d.name + "'");
}

double r1_schedule(double t, double a, double T)
{
    return a - t * a / T;
}

sca_state sca_initialize(const search_space &space, const objective_fn &objective,
                         int n_agents, rng_stream &rng)
{
    space.validate();
    if (n_agents < 1)
        throw std::invalid_argument("sca_initialize: n_agents must be >= 1");

    std::size_t v_count = space.size();
    sca_state state;
    state.agents.assign(static_cast<std::size_t>(n_agents), std::vector<double>(v_count));
    state.fitness.assign(static_cast<std::size_t>(n_agents),
                         std::numeric_limits<double>::quiet_NaN());
    for (auto &agent : state.agents)
        for (std::size_t v = 0; v < v_count; ++v)
            agent[v] = rng.uniform(space.dims[v].lower, space.dims[v].upper);

    for (std::size_t n = 0; n < state.agents.size(); ++n)
    {
        double f;
        if (try_evaluate(objective, state.agents[n], f))
            state.fitness[n] = f;
        ++state.eval_count;
    }

    state.destination = state.agents[0];
    state.destination_fitness = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < state.agents.size(); ++n)
    {
        if (!std::isnan(state.fitness[n]) && state.fitness[n] > state.destination_fitness)
        {
            state.destination = state.agents[n];
            state.destination_fitness = state.fitness[n];
        }
    }
    return state;
}

void sca_iterate(sca_state &state, const search_space &space, const objective_fn &objective,
                 const sca_options &opts, rng_stream &rng)
{
    validate_options(opts);
    std::size_t v_count = space.size();
    int t_next = state.t + 1;
    double r1 = r1_schedule(static_cast<double>(t_next), opts.a,
                            static_cast<double>(opts.iterations));
    int overshoot = 0;

    std::vector<double> previous(v_count);
    for (std::size_t n = 0; n < state.agents.size(); ++n)
    {
        std::vector<double> &pos = state.agents[n];
        previous = pos;
        for (std::size_t v = 0; v < v_count; ++v)
        {
            double r2 = rng.uniform() * two_pi;
            double r3 = rng.uniform() * 2.0;
            double r4 = rng.uniform();
            double trig = r4 < 0.5 ? std::sin(r2) : std::cos(r2);
            double step = r1 * trig * std::abs(r3 * state.destination[v] - pos[v]);
            pos[v] = std::clamp(pos[v] + step, space.dims[v].lower, space.dims[v].upper);
            if (std::abs(r1 * trig) > 1.0)
                ++overshoot;
        }
        double f;
        if (try_evaluate(objective, pos, f))
        {
            state.fitness[n] = f;
        }
        else
        {
            pos = previous;
            state.fitness[n] = std::numeric_limits<double>::quiet_NaN();
        }
        ++state.eval_count;
    }

    for (std::size_t n = 0; n < state.agents.size(); ++n)
    {
        if (!std::isnan(state.fitness[n]) && state.fitness[n] > state.destination_fitness)
        {
            state.destination = state.agents[n];
            state.destination_fitness = state.fitness[n];
        }
    }
    state.t = t_next;
    state.last_overshoot_steps = overshoot;
}

sca_result sca_run(const search_space &space, const objective_fn &objective,
                   const sca_options &opts)
{
    validate_options(opts);
    rng_stream rng(opts.seed);
    sca_state state = sca_initialize(space, objective, opts.agents, rng);

    sca_result result;
    result.trace.reserve(static_cast<std::size_t>(opts.iterations) + 1);
    result.trace.push_back({state.destination_fitness, 0});
    for (int t = 0; t < opts.iterations; ++t)
    {
        sca_iterate(state, space, objective, opts, rng);
        result.trace.push_back({state.destination_fitness, state.last_overshoot_steps});
    }
    result.best_position = state.destination;
    result.best_fitness = state.destination_fitness;
    result.eval_count = state.eval_count;
    return result;
}

} // namespace vlcris
