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

#include "vlcris/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vlcris
{

namespace
{

constexpr double half_pi = 1.5707963267948966;

void require(bool ok, const std::string &field, const std::string &constraint)
{
    if (!ok)
        throw std::invalid_argument(field + ": " + constraint);
}

} // namespace

void power_model::validate() const
{
    require(p_dac >= 0.0, "power.p_dac", "must be >= 0");
    require(p_filter >= 0.0, "power.p_filter", "must be >= 0");
    require(p_pa >= 0.0, "power.p_pa", "must be >= 0");
    require(p_driver >= 0.0, "power.p_driver", "must be >= 0");
    require(p_t_circuit >= 0.0, "power.p_t_circuit", "must be >= 0");
    require(p_mirror_unit >= 0.0, "power.p_mirror_unit", "must be >= 0");
    require(p_adc >= 0.0, "power.p_adc", "must be >= 0");
    require(p_tia >= 0.0, "power.p_tia", "must be >= 0");
    require(p_lc >= 0.0, "power.p_lc", "must be >= 0");
    require(p_r_circuit >= 0.0, "power.p_r_circuit", "must be >= 0");
}

double system_params::sensitivity_watts() const
{
    // dBm -> mW -> W
    return std::pow(10.0, sensitivity_dbm / 10.0) * 1e-3;
}

void system_params::validate() const
{
    require(half_power_semiangle > 0.0 && half_power_semiangle < half_pi,
            "half_power_semiangle", "must lie in (0, pi/2)");
    require(pd_area > 0.0, "pd_area", "must be > 0");
    require(optical_filter_gain > 0.0 && optical_filter_gain <= 1.0, "optical_filter_gain",
            "must lie in (0, 1]");
    require(concentrator_ref_index > 0.0, "concentrator_ref_index", "must be > 0");
    require(fov > 0.0 && fov <= half_pi, "fov", "must lie in (0, pi/2]");
    require(reflectivity_wall >= 0.0 && reflectivity_wall <= 1.0, "reflectivity_wall",
            "must lie in [0, 1]");
    require(reflectivity_ris >= 0.0 && reflectivity_ris <= 1.0, "reflectivity_ris",
            "must lie in [0, 1]");
    require(eta_air > 0.0, "eta_air", "must be > 0");
    require(eta_ordinary > 0.0, "eta_ordinary", "must be > 0");
    require(eta_extraordinary >= eta_ordinary, "eta_extraordinary",
            "must be >= eta_ordinary");
    require(v_threshold > 0.0, "v_threshold", "must be > 0");
    require(v_zero > 0.0, "v_zero", "must be > 0");
    require(v_applied > 0.0, "v_applied", "must be > 0");
    require(lc_thickness > 0.0, "lc_thickness", "must be > 0");
    require(wavelength > 0.0, "wavelength", "must be > 0");
    require(electro_optic_coeff > 0.0, "electro_optic_coeff", "must be > 0");
    if (electric_field)
        require(*electric_field >= 0.0, "electric_field", "must be >= 0");
    require(bandwidth > 0.0, "bandwidth", "must be > 0");
    require(optical_power > 0.0, "optical_power", "must be > 0");
    require(elec_to_opt_ratio >= 1.0, "elec_to_opt_ratio", "must be >= 1");
    require(responsivity > 0.0, "responsivity", "must be > 0");
    require(noise_psd > 0.0, "noise_psd", "must be > 0");
    require(std::isfinite(sensitivity_dbm), "sensitivity_dbm", "must be finite");
    require(dc_bias >= 0.0, "dc_bias", "must be >= 0");
    power.validate();
}

} // namespace vlcris
