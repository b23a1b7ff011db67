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

#include "vlcris/lc_cell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vlcris
{

namespace
{

constexpr double pi = 3.141592653589793;
constexpr double half_pi = 1.5707963267948966;

} // namespace

double tilt_from_voltage(double v_applied, double v_threshold, double v_zero)
{
    if (v_zero <= 0.0)
        throw std::invalid_argument("tilt_from_voltage: v_zero must be > 0");
    if (v_applied <= v_threshold)
        return 0.0;
    return half_pi - 2.0 * std::atan(std::exp(-(v_applied - v_threshold) / v_zero));
}

double voltage_from_tilt(double tilt, double v_threshold, double v_zero)
{
    if (v_zero <= 0.0)
        throw std::invalid_argument("voltage_from_tilt: v_zero must be > 0");
    if (tilt < 0.0 || tilt > half_pi)
        throw std::invalid_argument("voltage_from_tilt: tilt must lie in [0, pi/2]");
    if (tilt == 0.0)
        return v_threshold;
    // tan -> 0 as tilt -> pi/2, mapping the asymptote to +infinity.
    return v_threshold - v_zero * std::log(std::tan((half_pi - tilt) / 2.0));
}

double refractive_index_from_tilt(double tilt, double eta_e, double eta_o)
{
    if (eta_e <= 0.0 || eta_o <= 0.0)
        throw std::invalid_argument("refractive_index_from_tilt: indices must be > 0");
    if (eta_e < eta_o)
        throw std::invalid_argument("refractive_index_from_tilt: eta_e must be >= eta_o");
    if (tilt < 0.0 || tilt > half_pi)
        throw std::invalid_argument("refractive_index_from_tilt: tilt must lie in [0, pi/2]");
    double c = std::cos(tilt);
    double s = std::sin(tilt);
    return 1.0 / std::sqrt(c * c / (eta_e * eta_e) + s * s / (eta_o * eta_o));
}

double tilt_from_index(double eta_c, double eta_e, double eta_o)
{
    if (eta_e <= 0.0 || eta_o <= 0.0)
        throw std::invalid_argument("tilt_from_index: indices must be > 0");
    if (eta_c < eta_o || eta_c > eta_e)
        throw std::invalid_argument("tilt_from_index: eta_c outside [eta_o, eta_e]");
    if (eta_e == eta_o)
        return 0.0;
    double inv_c = 1.0 / (eta_c * eta_c);
    double inv_e = 1.0 / (eta_e * eta_e);
    double inv_o = 1.0 / (eta_o * eta_o);
    double s2 = std::clamp((inv_c - inv_e) / (inv_o - inv_e), 0.0, 1.0);
    return std::asin(std::sqrt(s2));
}

double refraction_angle(double xi, double eta_a, double eta_c)
{
    if (eta_c <= eta_a)
        throw std::invalid_argument("refraction_angle: requires eta_c > eta_a");
    if (xi < 0.0 || xi > half_pi)
        throw std::invalid_argument("refraction_angle: xi must lie in [0, pi/2]");
    return std::asin(eta_a / eta_c * std::sin(xi));
}

double reflectance_air_to_cell(double xi, double eta)
{
    if (eta < 1.0)
        throw std::invalid_argument("reflectance_air_to_cell: requires eta >= 1");
    if (xi < 0.0 || xi > half_pi)
        throw std::invalid_argument("reflectance_air_to_cell: xi must lie in [0, pi/2]");
    if (eta == 1.0)
        return 0.0;
    double c = std::cos(xi);
    double sin_xi = std::sin(xi);
    double rad = eta * eta - sin_xi * sin_xi;
    if (rad < 0.0)
        throw std::logic_error("reflectance_air_to_cell: negative radicand");
    double s = std::sqrt(rad);
    double e2 = eta * eta;
    double rp = (e2 * c - s) / (e2 * c + s);
    double rs = (c - s) / (c + s);
    return 0.5 * rp * rp + 0.5 * rs * rs;
}

double reflectance_cell_to_air(double theta, double eta1)
{
    if (eta1 <= 0.0 || eta1 > 1.0)
        throw std::invalid_argument("reflectance_cell_to_air: requires eta1 in (0, 1]");
    if (theta < 0.0 || theta > half_pi)
        throw std::invalid_argument("reflectance_cell_to_air: theta must lie in [0, pi/2]");
    if (eta1 == 1.0)
        return 0.0;
    double sin_th = std::sin(theta);
    if (sin_th > eta1)
        throw std::domain_error("reflectance_cell_to_air: total internal reflection");
    double c = std::cos(theta);
    double s = std::sqrt(std::max(0.0, eta1 * eta1 - sin_th * sin_th));
    double e2 = eta1 * eta1;
    double rp = (e2 * c - s) / (e2 * c + s);
    double rs = (c - s) / (c + s);
    return 0.5 * rp * rp + 0.5 * rs * rs;
}

double transition_coefficient(double xi_in, double eta_c, double eta_a)
{
    if (eta_a <= 0.0)
        throw std::invalid_argument("transition_coefficient: eta_a must be > 0");
    if (eta_c == eta_a)
        return 1.0; // index-matched, no interfaces
    double theta = refraction_angle(xi_in, eta_a, eta_c);
    double r_in = reflectance_air_to_cell(xi_in, eta_c / eta_a);
    double r_out = reflectance_cell_to_air(theta, eta_a / eta_c);
    return (1.0 - r_in) * (1.0 - r_out);
}

amplification amplification_gain(double eta_c, double wavelength, double xi_in,
                                 double electro_optic_coeff, double e_field,
                                 double thickness)
{
    if (wavelength <= 0.0)
        throw std::invalid_argument("amplification_gain: wavelength must be > 0");
    if (thickness <= 0.0)
        throw std::invalid_argument("amplification_gain: thickness must be > 0");
    if (eta_c <= 0.0 || electro_optic_coeff < 0.0 || e_field < 0.0)
        throw std::invalid_argument("amplification_gain: parameters out of range");
    if (xi_in < 0.0 || xi_in >= half_pi)
        throw std::domain_error("amplification_gain: grazing incidence");
    double c = std::cos(xi_in);
    if (c <= 0.0)
        throw std::domain_error("amplification_gain: grazing incidence");
    double gamma = 2.0 * pi * eta_c * eta_c * eta_c * electro_optic_coeff * e_field /
                   (wavelength * c);
    return {gamma, std::exp(gamma * thickness)};
}

lc_state lc_from_index(double eta_c, double xi_los, double xi_nlos, double xi_dominant,
                       const system_params &params)
{
    lc_state st;
    st.eta_c = eta_c;
    st.tilt = tilt_from_index(eta_c, params.eta_extraordinary, params.eta_ordinary);
    st.v_applied = voltage_from_tilt(st.tilt, params.v_threshold, params.v_zero);
    st.transition_los = transition_coefficient(xi_los, eta_c, params.eta_air);
    st.transition_nlos = transition_coefficient(xi_nlos, eta_c, params.eta_air);
    st.refraction_angle = (eta_c > params.eta_air)
                              ? refraction_angle(xi_dominant, params.eta_air, eta_c)
                              : xi_dominant;
    amplification amp =
        amplification_gain(eta_c, params.wavelength, xi_dominant,
                           params.electro_optic_coeff, params.field_strength(),
                           params.lc_thickness);
    st.gamma_coeff = amp.gamma_coeff;
    st.amplification = amp.factor;
    return st;
}

} // namespace vlcris
