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

#ifndef vlcris_rng_H
#define vlcris_rng_H

#include <cstdint>
#include <random>

namespace vlcris
{

// Deterministic uniform stream. The double mapping is fixed to
// (x >> 11) * 2^-53 so that identical seeds give identical values on every
// platform, independent of std::uniform_real_distribution internals.
class rng_stream
{
  public:
    explicit rng_stream(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1).
    double uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi)
    {
        return lo + uniform() * (hi - lo);
    }

    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

// One splitmix64 step; advances state and returns the mixed output.
std::uint64_t splitmix64_next(std::uint64_t &state);

// Stable child seed for work unit (a, b) under a master seed. Used to give
// every (sweep index, trial index) pair an independent stream.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

} // namespace vlcris

#endif
