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

#ifndef vlcris_params_H
#define vlcris_params_H

#include <optional>

namespace vlcris
{

// Static component powers of the link power budget, all in watts.
struct power_model
{
    double p_dac = 0.175;
    double p_filter = 0.0025;
    double p_pa = 0.28;
    double p_driver = 2.758;
    double p_t_circuit = 3.25;
    double p_mirror_unit = 0.1; // per mirror element
    double p_adc = 0.095;
    double p_tia = 2.5;
    double p_lc = 0.32;
    double p_r_circuit = 0.0019;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Physical and electrical constants of the link, SI units and radians.
struct system_params
{
    double half_power_semiangle = 1.2217304763960306; // 70 deg
    double pd_area = 1e-4;                            // m^2
    double optical_filter_gain = 1.0;
    double concentrator_ref_index = 1.5;
    double fov = 1.4835298641951802; // 85 deg
    double reflectivity_wall = 0.8;
    double reflectivity_ris = 0.95;
    double eta_air = 1.0;
    double eta_extraordinary = 1.7;
    double eta_ordinary = 1.5;
    double v_threshold = 1.34;  // V
    double v_zero = 1.0;        // V
    double v_applied = 2200.0;  // V
    double lc_thickness = 0.75e-3;  // m
    double wavelength = 510e-9;     // m
    double electro_optic_coeff = 12e-12; // m/V
    // Field across the cell in V/m; defaults to v_applied / lc_thickness.
    std::optional<double> electric_field;
    double bandwidth = 200e6; // Hz
    double optical_power = 2.0; // W
    double elec_to_opt_ratio = 3.0;
    double responsivity = 0.53; // A/W
    double noise_psd = 1e-21;   // A^2/Hz
    double sensitivity_dbm = -35.0;
    double dc_bias = 0.0; // A; removed before detection, kept for completeness
    power_model power;

    double field_strength() const
    {
        return electric_field ? *electric_field : v_applied / lc_thickness;
    }

    // Receiver sensitivity converted from dBm to watts.
    double sensitivity_watts() const;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

} // namespace vlcris

#endif
