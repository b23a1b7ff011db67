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

#include <benchmark/benchmark.h>

#include "vlcris/channel.hpp"
#include "vlcris/lc_cell.hpp"

namespace
{

void bm_los_gain(benchmark::State &state)
{
    vlcris::scene scn = vlcris::scene::defaults();
    vlcris::system_params params;
    for (auto _ : state)
        benchmark::DoNotOptimize(vlcris::los_gain(scn, scn.users[0], params));
}
BENCHMARK(bm_los_gain);

void bm_transition_coefficient(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(vlcris::transition_coefficient(0.45, 1.6, 1.0));
}
BENCHMARK(bm_transition_coefficient);

void bm_evaluate_channel(benchmark::State &state)
{
    vlcris::scene scn = vlcris::scene::defaults();
    scn.mirrors.k_elements = static_cast<int>(state.range(0));
    scn.mirrors.roll = -0.2;
    scn.mirrors.yaw = -0.3;
    vlcris::system_params params;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            vlcris::evaluate_channel(scn, scn.users[0], 1.6, params));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_evaluate_channel)->Arg(50)->Arg(300)->Arg(600);

} // namespace

BENCHMARK_MAIN();
