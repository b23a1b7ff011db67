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

#ifndef vlcris_objectives_H
#define vlcris_objectives_H

#include <vector>

#include "vlcris/channel.hpp"
#include "vlcris/params.hpp"

namespace vlcris
{

// Electrical signal power (p/q)^2 in watts.
double signal_power(const system_params &params);

// Lower-bound achievable rate in bits/s:
//   B log2(1 + (e / 2 pi) ((p/q) R_PD ampl h)^2 / (N_o B)).
double achievable_rate(double h_total, double amplification, const system_params &params);
double achievable_rate(const channel_state &ch, const system_params &params);

// Rate of the wall-reflection variant; identical formula applied to the
// composite wall-path gain assembled by evaluate_channel(paths == wall).
double wall_rate(const channel_state &ch, const system_params &params);

// Geometric power-ratio allocation across num_users NOMA users.
struct noma_config
{
    double zeta = 0.6; // in (0.5, 1]
    int num_users = 4;

    // c_u = zeta (1 - zeta)^(u-1) for u < U; the last ratio is the remainder
    // so the ratios sum to exactly 1. Strictly decreasing for zeta in (0.5, 1).
    std::vector<double> power_ratios() const;
};

// Sum rate across users ordered ascending by composite gain. Decoding user u
// sees interference from the later (stronger-channel) users' power ratios
// through its own channel gain; the last user is interference-free.
double noma_sum_rate(const std::vector<double> &h_totals,
                     const std::vector<double> &amplifications, const noma_config &cfg,
                     const system_params &params);

// Total consumed power: transmitter chain + k_elements mirror drivers +
// receiver chain, with p_signal = (p/q)^2.
double total_power(const power_model &pm, double p_signal, int k_elements);
double total_power(const system_params &params, int k_elements);

// Rate divided by total consumed power, in bits/J.
double energy_efficiency(double rate, const system_params &params, int k_elements);

} // namespace vlcris

#endif
