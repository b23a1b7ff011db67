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

#include "vlcris/objectives.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace vlcris
{

namespace
{

// e / (2 pi), the SNR prefactor of the capacity lower bound.
const double snr_prefactor = std::exp(1.0) / (2.0 * 3.141592653589793);

} // namespace

double signal_power(const system_params &params)
{
    double r = params.optical_power / params.elec_to_opt_ratio;
    return r * r;
}

double achievable_rate(double h_total, double amplification, const system_params &params)
{
    if (params.bandwidth <= 0.0)
        throw std::invalid_argument("achievable_rate: bandwidth must be > 0");
    if (params.noise_psd <= 0.0)
        throw std::invalid_argument("achievable_rate: noise_psd must be > 0");
    if (h_total < 0.0 || amplification < 0.0)
        throw std::invalid_argument("achievable_rate: gain terms must be >= 0");
    double x = params.optical_power / params.elec_to_opt_ratio * params.responsivity *
               amplification * h_total;
    double snr = snr_prefactor * x * x / (params.noise_psd * params.bandwidth);
    return params.bandwidth * std::log2(1.0 + snr);
}

double achievable_rate(const channel_state &ch, const system_params &params)
{
    return achievable_rate(ch.gain.h_total, ch.lc.amplification, params);
}

double wall_rate(const channel_state &ch, const system_params &params)
{
    return achievable_rate(ch.gain.h_total, ch.lc.amplification, params);
}

std::vector<double> noma_config::power_ratios() const
{
    if (num_users < 1)
        throw std::invalid_argument("noma_config: num_users must be >= 1");
    if (zeta <= 0.5 || zeta > 1.0)
        throw std::invalid_argument("noma_config: zeta must lie in (0.5, 1]");
    std::vector<double> cs;
    cs.reserve(static_cast<std::size_t>(num_users));
    double acc = 0.0;
    for (int u = 1; u < num_users; ++u)
    {
        double c = zeta * std::pow(1.0 - zeta, u - 1);
        cs.push_back(c);
        acc += c;
    }
    // Remainder keeps the allocation summing to exactly 1.
    cs.push_back(1.0 - acc);
    return cs;
}

double noma_sum_rate(const std::vector<double> &h_totals,
                     const std::vector<double> &amplifications, const noma_config &cfg,
                     const system_params &params)
{
    std::size_t u_count = static_cast<std::size_t>(cfg.num_users);
    if (h_totals.size() != u_count || amplifications.size() != u_count)
        throw std::invalid_argument("noma_sum_rate: one gain and one amplification per user");
    for (std::size_t u = 0; u + 1 < u_count; ++u)
        if (h_totals[u] > h_totals[u + 1])
            throw std::invalid_argument("noma_sum_rate: gains must be sorted ascending");
    if (params.bandwidth <= 0.0)
        throw std::invalid_argument("noma_sum_rate: bandwidth must be > 0");
    if (params.noise_psd <= 0.0)
        throw std::invalid_argument("noma_sum_rate: noise_psd must be > 0");

    std::vector<double> cs = cfg.power_ratios();
    double ps = signal_power(params);
    double noise = params.noise_psd * params.bandwidth;
    double total = 0.0;
    for (std::size_t u = 0; u < u_count; ++u)
    {
        if (h_totals[u] < 0.0 || amplifications[u] < 0.0)
            throw std::invalid_argument("noma_sum_rate: gain terms must be >= 0");
        double x = params.responsivity * amplifications[u] * h_totals[u];
        double a2 = x * x * ps;
        double denom = noise;
        if (u + 1 < u_count)
        {
            double tail = 0.0;
            for (std::size_t i = u + 1; i < u_count; ++i)
                tail += cs[i];
            denom = a2 * tail + noise;
        }
        double snr = snr_prefactor * a2 * cs[u] / denom;
        total += params.bandwidth * std::log2(1.0 + snr);
    }
    return total;
}

double total_power(const power_model &pm, double p_signal, int k_elements)
{
    if (k_elements < 0)
        throw std::invalid_argument("total_power: k_elements must be >= 0");
    if (p_signal < 0.0)
        throw std::invalid_argument("total_power: p_signal must be >= 0");
    double pt = p_signal + pm.p_dac + pm.p_filter + pm.p_pa + pm.p_driver + pm.p_t_circuit;
    double pr = pm.p_adc + pm.p_tia + pm.p_filter + pm.p_lc + pm.p_r_circuit;
    return pt + pm.p_mirror_unit * k_elements + pr;
}

double total_power(const system_params &params, int k_elements)
{
    return total_power(params.power, signal_power(params), k_elements);
}

double energy_efficiency(double rate, const system_params &params, int k_elements)
{
    if (rate < 0.0)
        throw std::invalid_argument("energy_efficiency: rate must be >= 0");
    double total = total_power(params, k_elements);
    if (total <= 0.0)
        throw std::domain_error("energy_efficiency: total power must be > 0");
    return rate / total;
}

} // namespace vlcris
