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

#include "vlcris/scenario.hpp"

namespace
{

void bm_sca_joint_rate(benchmark::State &state)
{
    vlcris::scenario_config cfg;
    vlcris::search_space space = vlcris::space_for(cfg);
    vlcris::objective_fn objective =
        vlcris::objective_for(cfg, cfg.scn, cfg.params);
    vlcris::sca_options opts;
    opts.iterations = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(vlcris::sca_run(space, objective, opts));
}
BENCHMARK(bm_sca_joint_rate)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
