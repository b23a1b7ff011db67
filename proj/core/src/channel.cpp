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

#include "vlcris/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vlcris
{

namespace
{

constexpr double pi = 3.141592653589793;
constexpr double two_pi = 6.283185307179586;

// Scene-constant quantities hoisted out of the per-element loops.
struct link_consts
{
    vec3 ap;
    vec3 dev;
    vec3 n_dev;
    double m;       // Lambertian order
    double cos_fov; // FoV cutoff as a cosine
    double g_conc;  // concentrator gain inside the FoV
    double t_filter;
    double area;
};

link_consts make_link_consts(const scene &scn, const user_state &user,
                             const system_params &params)
{
    link_consts lc;
    lc.ap = scn.ap_pos;
    lc.dev = user.device_pos;
    lc.n_dev = user.device_normal();
    lc.m = lambertian_index(params.half_power_semiangle);
    lc.cos_fov = std::cos(params.fov);
    double sf = std::sin(params.fov);
    lc.g_conc = params.concentrator_ref_index * params.concentrator_ref_index / (sf * sf);
    lc.t_filter = params.optical_filter_gain;
    lc.area = params.pd_area;
    return lc;
}

// Direct Lambertian gain plus the cosine of the device incidence angle
// (returned even when the gain clamps to zero, for angle bookkeeping).
double los_gain_impl(const link_consts &lc, double &cos_xi_out)
{
    double d = distance(lc.ap, lc.dev);
    if (d == 0.0)
        throw std::domain_error("los_gain: device coincides with the access point");
    vec3 to_src = unit_direction(lc.dev, lc.ap);
    double cos_xi = dot(to_src, lc.n_dev);
    cos_xi_out = cos_xi;
    double cos_phi = (lc.ap.z - lc.dev.z) / d; // AP normal (0, 0, -1)
    if (cos_xi <= 0.0 || cos_phi <= 0.0 || cos_xi < lc.cos_fov)
        return 0.0;
    return (lc.m + 1.0) * lc.area / (two_pi * d * d) * std::pow(cos_phi, lc.m) * cos_xi *
           lc.g_conc * lc.t_filter;
}

// Sign convention of the two element-side cosines. Mirror elements measure
// both along directions pointing at the element; wall patches measure both
// along directions pointing away from it.
enum class element_kind
{
    mirror,
    wall
};

// Gain through one reflecting element (mirror or wall patch). n_elem is the
// element normal, rho its reflectivity, d_area its physical area.
double element_gain_impl(const link_consts &lc, const vec3 &elem, const vec3 &n_elem,
                         double rho, double d_area, element_kind kind,
                         double &cos_xi_uk_out)
{
    double d_ka = distance(lc.ap, elem);
    double d_uk = distance(elem, lc.dev);
    if (d_ka == 0.0 || d_uk == 0.0)
        throw std::domain_error("element gain: coincident geometry");
    double cos_phi_ka = (lc.ap.z - elem.z) / d_ka; // AP emission, normal (0, 0, -1)
    double cos_xi_ka;  // arrival at the element
    double cos_phi_uk; // departure toward the device
    if (kind == element_kind::mirror)
    {
        cos_xi_ka = dot(unit_direction(lc.ap, elem), n_elem);
        cos_phi_uk = dot(unit_direction(lc.dev, elem), n_elem);
    }
    else
    {
        cos_xi_ka = dot(unit_direction(elem, lc.ap), n_elem);
        cos_phi_uk = dot(unit_direction(elem, lc.dev), n_elem);
    }
    double cos_xi_uk = dot(unit_direction(lc.dev, elem), lc.n_dev); // at the device
    cos_xi_uk_out = cos_xi_uk;
    if (cos_phi_ka <= 0.0 || cos_xi_ka <= 0.0 || cos_phi_uk <= 0.0 || cos_xi_uk <= 0.0 ||
        cos_xi_uk < lc.cos_fov)
        return 0.0;
    return rho * (lc.m + 1.0) * lc.area * d_area /
           (2.0 * pi * pi * d_ka * d_ka * d_uk * d_uk) * std::pow(cos_phi_ka, lc.m) *
           cos_xi_ka * cos_phi_uk * cos_xi_uk * lc.g_conc * lc.t_filter;
}

double clamped_acos(double c)
{
    return std::acos(std::clamp(c, -1.0, 1.0));
}

} // namespace

double lambertian_index(double phi_half)
{
    constexpr double half_pi = 1.5707963267948966;
    if (phi_half <= 0.0 || phi_half >= half_pi)
        throw std::domain_error("lambertian_index: phi_half must lie in (0, pi/2)");
    return -1.0 / std::log2(std::cos(phi_half));
}

double concentrator_gain(double f, double fov, double xi)
{
    constexpr double half_pi = 1.5707963267948966;
    if (fov <= 0.0 || fov > half_pi)
        throw std::invalid_argument("concentrator_gain: fov must lie in (0, pi/2]");
    if (xi < 0.0 || xi > fov)
        return 0.0;
    double sf = std::sin(fov);
    return f * f / (sf * sf);
}

double los_gain(const scene &scn, const user_state &user, const system_params &params)
{
    link_consts lc = make_link_consts(scn, user, params);
    double cos_xi = 0.0;
    return los_gain_impl(lc, cos_xi);
}

double mirror_nlos_gain(const scene &scn, const user_state &user, int k,
                        const system_params &params)
{
    link_consts lc = make_link_consts(scn, user, params);
    vec3 elem = scn.mirrors.element_center(k, scn.room);
    vec3 n = scn.mirrors.element_normal();
    double dA = scn.mirrors.element_side * scn.mirrors.element_side;
    double cos_xi = 0.0;
    return element_gain_impl(lc, elem, n, params.reflectivity_ris, dA,
                             element_kind::mirror, cos_xi);
}

double wall_patch_gain(const scene &scn, const user_state &user, const vec3 &patch_center,
                       const system_params &params)
{
    link_consts lc = make_link_consts(scn, user, params);
    vec3 n = {0.0, 1.0, 0.0};
    double dA = scn.wall.patch_side * scn.wall.patch_side;
    double cos_xi = 0.0;
    return element_gain_impl(lc, patch_center, n, params.reflectivity_wall, dA,
                             element_kind::wall, cos_xi);
}

channel_state evaluate_channel(const scene &scn, const user_state &user, double eta_c,
                               const system_params &params,
                               const channel_options &options)
{
    if (options.lc_enabled &&
        (eta_c < params.eta_ordinary || eta_c > params.eta_extraordinary))
        throw std::invalid_argument(
            "evaluate_channel: eta_c outside [eta_ordinary, eta_extraordinary]");

    link_consts lc = make_link_consts(scn, user, params);
    channel_state st;
    channel_gain &g = st.gain;

    double cos_xi_los = 0.0;
    g.h_los = los_gain_impl(lc, cos_xi_los);
    double xi_los = g.h_los > 0.0 ? clamped_acos(cos_xi_los) : 0.0;

    switch (options.indicator)
    {
    case indicator_mode::forced_zero:
        g.indicator = 0;
        break;
    case indicator_mode::forced_one:
        g.indicator = 1;
        break;
    case indicator_mode::automatic:
        g.indicator = los_indicator(scn, user, params, params.optical_power * g.h_los);
        break;
    }

    double h_reflected = 0.0;
    double xi_nlos = 0.0;
    if (options.nlos_enabled)
    {
        double best_gain = 0.0;
        double best_cos_xi = 1.0;
        if (options.paths == path_set::ris)
        {
            int count = scn.mirrors.count();
            vec3 n = scn.mirrors.element_normal();
            double dA = scn.mirrors.element_side * scn.mirrors.element_side;
            g.h_nlos_per_mirror.resize(static_cast<std::size_t>(count));
            for (int k = 0; k < count; ++k)
            {
                vec3 elem = scn.mirrors.element_center(k, scn.room);
                double cos_xi = 0.0;
                double h = element_gain_impl(lc, elem, n, params.reflectivity_ris, dA,
                                             element_kind::mirror, cos_xi);
                g.h_nlos_per_mirror[static_cast<std::size_t>(k)] = h;
                h_reflected += h;
                if (h > best_gain)
                {
                    best_gain = h;
                    best_cos_xi = cos_xi;
                }
            }
        }
        else
        {
            int count = scn.wall.count();
            vec3 n = {0.0, 1.0, 0.0};
            double dA = scn.wall.patch_side * scn.wall.patch_side;
            for (int k = 0; k < count; ++k)
            {
                vec3 patch = scn.wall.patch_center(k, scn.room);
                double cos_xi = 0.0;
                double h = element_gain_impl(lc, patch, n, params.reflectivity_wall, dA,
                                             element_kind::wall, cos_xi);
                g.h_wall += h;
                h_reflected += h;
                if (h > best_gain)
                {
                    best_gain = h;
                    best_cos_xi = cos_xi;
                }
            }
        }
        xi_nlos = best_gain > 0.0 ? clamped_acos(best_cos_xi) : 0.0;
    }

    if (options.lc_enabled)
    {
        g.psi_los = transition_coefficient(xi_los, eta_c, params.eta_air);
        g.psi_nlos = transition_coefficient(xi_nlos, eta_c, params.eta_air);
        double los_term = g.indicator * g.h_los * g.psi_los;
        double nlos_term = h_reflected * g.psi_nlos;
        double xi_dominant = los_term >= nlos_term ? xi_los : xi_nlos;
        st.lc = lc_from_index(eta_c, xi_los, xi_nlos, xi_dominant, params);
        g.h_total = los_term + nlos_term;
    }
    else
    {
        g.psi_los = 1.0;
        g.psi_nlos = 1.0;
        st.lc = lc_state{};
        st.lc.eta_c = eta_c;
        g.h_total = g.indicator * g.h_los + h_reflected;
    }
    return st;
}

} // namespace vlcris
