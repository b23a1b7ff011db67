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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "test_support.hpp"
#include "vlcris/channel.hpp"

using namespace vlcris;
using vlcris_test::deg;
using vlcris_test::rel_close;

namespace
{

// One mirror element centered at (0, 2.5, 1.5).
scene single_mirror_scene(double yaw, double roll)
{
    scene scn = scene::defaults();
    scn.mirrors.rows = 1;
    scn.mirrors.cols = 1;
    scn.mirrors.origin = vec3{0.0, 2.45, 1.45};
    scn.mirrors.yaw = yaw;
    scn.mirrors.roll = roll;
    return scn;
}

} // namespace

TEST_SUITE("channel")
{
    TEST_CASE("Lambertian order from the half-power semiangle")
    {
        CHECK(rel_close(lambertian_index(deg(70.0)), 0.646058770348734, 1e-12));
        CHECK(rel_close(lambertian_index(deg(60.0)), 1.0000000000000004, 1e-12));
        CHECK(rel_close(lambertian_index(deg(45.0)), 2.0000000000000004, 1e-12));

        CHECK_THROWS_AS((void)lambertian_index(0.0), std::domain_error);
        CHECK_THROWS_AS((void)lambertian_index(1.5707963267948966), std::domain_error);
        CHECK_THROWS_AS((void)lambertian_index(-0.3), std::domain_error);
    }

    TEST_CASE("concentrator gain inside and outside the field of view")
    {
        CHECK(rel_close(concentrator_gain(1.5, deg(85.0), deg(30.0)),
                        2.2672220990524927, 1e-12));
        CHECK(rel_close(concentrator_gain(1.2, deg(60.0), deg(10.0)),
                        1.9200000000000002, 1e-12));

        // Constant inside the FoV, zero beyond it, inclusive at the edge.
        double fov = deg(85.0);
        CHECK(concentrator_gain(1.5, fov, 0.0) == concentrator_gain(1.5, fov, fov));
        CHECK(concentrator_gain(1.5, fov, deg(86.0)) == 0.0);
        CHECK(concentrator_gain(1.5, fov, -0.1) == 0.0);

        CHECK_THROWS_AS((void)concentrator_gain(1.5, 0.0, 0.1), std::invalid_argument);
        CHECK_THROWS_AS((void)concentrator_gain(1.5, 1.6, 0.1), std::invalid_argument);
    }

    TEST_CASE("line-of-sight gain")
    {
        scene scn = scene::defaults();
        system_params params;

        scn.users[0].device_pos = {1.0, 2.0, 0.85};
        scn.users[0].azimuth = deg(30.0);
        scn.users[0].polar = deg(41.0);
        CHECK(rel_close(los_gain(scn, scn.users[0], params), 7.17101987846105e-06, 1e-12));

        scn.users[0].device_pos = {3.5, 3.5, 1.2};
        scn.users[0].azimuth = deg(-135.0);
        scn.users[0].polar = deg(25.0);
        CHECK(rel_close(los_gain(scn, scn.users[0], params), 9.450041858591589e-06,
                        1e-12));

        // Device back turned to the source.
        scn.users[0].device_pos = {1.0, 2.5, 0.85};
        scn.users[0].azimuth = 3.141592653589793;
        scn.users[0].polar = deg(89.0);
        CHECK(los_gain(scn, scn.users[0], params) == 0.0);

        // Incidence outside the field of view.
        scn.users[0].device_pos = {2.5, 2.5, 0.85};
        scn.users[0].azimuth = 0.0;
        scn.users[0].polar = deg(89.0);
        CHECK(los_gain(scn, scn.users[0], params) == 0.0);
    }

    TEST_CASE("single mirror element gain")
    {
        system_params params;

        // Element tilted away from the device: the departure cosine goes
        // negative and the contribution clamps to zero.
        scene away = single_mirror_scene(0.5, 0.2);
        away.users[0] = user_state{{2.0, 2.5, 0.85}, 0.0, 0.0, true};
        CHECK(mirror_nlos_gain(away, away.users[0], 0, params) == 0.0);

        // Mirrored orientation reflects toward the device.
        scene toward = single_mirror_scene(-0.5, -0.2);
        toward.users[0] = user_state{{2.0, 2.5, 0.85}, 0.0, 0.0, true};
        CHECK(rel_close(mirror_nlos_gain(toward, toward.users[0], 0, params),
                        1.8716888876545013e-10, 1e-12));

        CHECK_THROWS_AS((void)mirror_nlos_gain(toward, toward.users[0], 1, params),
                        std::invalid_argument);
    }

    TEST_CASE("single wall patch gain")
    {
        scene scn = scene::defaults();
        system_params params;

        scn.users[0] = user_state{{2.5, 2.0, 0.85}, deg(-90.0), deg(41.0), true};
        CHECK(rel_close(wall_patch_gain(scn, scn.users[0], {2.5, 0.0, 1.5}, params),
                        1.8308793568876319e-09, 1e-12));

        scn.users[0] = user_state{{2.2, 1.1, 0.85}, deg(-80.0), deg(35.0), true};
        CHECK(rel_close(wall_patch_gain(scn, scn.users[0], {1.8, 0.0, 1.1}, params),
                        3.406078061777693e-09, 1e-12));

        // Patch behind the device normal contributes nothing.
        scn.users[0] = user_state{{2.5, 2.0, 0.85}, deg(90.0), deg(41.0), true};
        CHECK(wall_patch_gain(scn, scn.users[0], {2.5, 0.0, 1.5}, params) == 0.0);
    }

    TEST_CASE("composite channel decomposes into its path gains")
    {
        scene scn = scene::defaults();
        system_params params;
        const double eta_c = 1.6;

        channel_state st = evaluate_channel(scn, scn.users[0], eta_c, params);
        const channel_gain &g = st.gain;

        CHECK(g.indicator == 1);
        CHECK(g.h_los == los_gain(scn, scn.users[0], params));
        CHECK(g.h_los > 0.0);
        REQUIRE(g.h_nlos_per_mirror.size() == 300);

        double h_reflected = 0.0;
        bool any_positive = false;
        for (int k = 0; k < 300; ++k)
        {
            CHECK(g.h_nlos_per_mirror[static_cast<std::size_t>(k)] ==
                  mirror_nlos_gain(scn, scn.users[0], k, params));
            h_reflected += g.h_nlos_per_mirror[static_cast<std::size_t>(k)];
            any_positive = any_positive ||
                           g.h_nlos_per_mirror[static_cast<std::size_t>(k)] > 0.0;
        }
        CHECK(any_positive);
        CHECK(rel_close(g.h_total, g.indicator * g.h_los * g.psi_los +
                                       h_reflected * g.psi_nlos,
                        1e-12));

        // Transition coefficients match the standalone model at the
        // geometric incidence angles.
        double cos_xi_los = cos_incidence_at_device(scn.ap_pos, scn.users[0]);
        CHECK(g.psi_los ==
              transition_coefficient(std::acos(cos_xi_los), eta_c, params.eta_air));
    }

    TEST_CASE("reflected-path transition uses the strongest element's angle")
    {
        scene scn = single_mirror_scene(-0.5, -0.2);
        scn.users[0] = user_state{{2.0, 2.5, 0.85}, 0.0, 0.0, true};
        system_params params;
        const double eta_c = 1.6;

        channel_state st = evaluate_channel(scn, scn.users[0], eta_c, params);
        REQUIRE(st.gain.h_nlos_per_mirror.size() == 1);
        REQUIRE(st.gain.h_nlos_per_mirror[0] > 0.0);

        vec3 elem = scn.mirrors.element_center(0, scn.room);
        double cos_xi = dot(unit_direction(scn.users[0].device_pos, elem),
                            scn.users[0].device_normal());
        CHECK(rel_close(st.gain.psi_nlos,
                        transition_coefficient(std::acos(cos_xi), eta_c, params.eta_air),
                        1e-12));
    }

    TEST_CASE("indicator modes")
    {
        scene scn = scene::defaults();
        system_params params;

        channel_state forced0 = evaluate_channel(scn, scn.users[0], 1.6, params,
                                                 {path_set::ris,
                                                  indicator_mode::forced_zero});
        CHECK(forced0.gain.indicator == 0);
        CHECK(forced0.gain.h_los > 0.0); // gain still reported, just not counted
        double reflected = 0.0;
        for (double h : forced0.gain.h_nlos_per_mirror)
            reflected += h;
        CHECK(rel_close(forced0.gain.h_total, reflected * forced0.gain.psi_nlos, 1e-12));

        // A blocker kills the automatic indicator but not the forced one.
        scene blocked = scn;
        blocked.blockers.push_back({{1.4, 2.5, 0.0}, 0.15, 1.65});
        channel_state autod = evaluate_channel(blocked, blocked.users[0], 1.6, params);
        CHECK(autod.gain.indicator == 0);
        channel_state forced1 = evaluate_channel(blocked, blocked.users[0], 1.6, params,
                                                 {path_set::ris,
                                                  indicator_mode::forced_one});
        CHECK(forced1.gain.indicator == 1);
        CHECK(forced1.gain.h_total > autod.gain.h_total);

        // The automatic indicator compares received power against the
        // sensitivity floor.
        scene weak = scn;
        system_params weak_params = params;
        weak_params.optical_power = 1e-3;
        channel_state under = evaluate_channel(weak, weak.users[0], 1.6, weak_params);
        CHECK(under.gain.indicator == 0);
        weak_params.sensitivity_dbm = -60.0;
        channel_state over = evaluate_channel(weak, weak.users[0], 1.6, weak_params);
        CHECK(over.gain.indicator == 1);
    }

    TEST_CASE("disabling the receiver cell pins every optical factor to one")
    {
        scene scn = scene::defaults();
        system_params params;
        channel_options opts;
        opts.lc_enabled = false;

        channel_state st = evaluate_channel(scn, scn.users[0], params.eta_ordinary, params,
                                            opts);
        CHECK(st.gain.psi_los == 1.0);
        CHECK(st.gain.psi_nlos == 1.0);
        CHECK(st.lc.amplification == 1.0);
        double reflected = 0.0;
        for (double h : st.gain.h_nlos_per_mirror)
            reflected += h;
        CHECK(rel_close(st.gain.h_total, st.gain.indicator * st.gain.h_los + reflected,
                        1e-12));

        // Out-of-band indices are accepted when the cell is absent.
        CHECK_NOTHROW((void)evaluate_channel(scn, scn.users[0], 0.0, params, opts));
    }

    TEST_CASE("disabling reflected paths leaves the pure line-of-sight term")
    {
        scene scn = scene::defaults();
        system_params params;
        channel_options opts;
        opts.nlos_enabled = false;

        channel_state st = evaluate_channel(scn, scn.users[0], 1.6, params, opts);
        CHECK(st.gain.h_nlos_per_mirror.empty());
        CHECK(st.gain.h_wall == 0.0);
        CHECK(rel_close(st.gain.h_total,
                        st.gain.indicator * st.gain.h_los * st.gain.psi_los, 1e-12));

        // With line of sight dominant, the cell refracts at the direct-path
        // incidence angle.
        double cos_xi_los = cos_incidence_at_device(scn.ap_pos, scn.users[0]);
        CHECK(rel_close(st.lc.refraction_angle,
                        refraction_angle(std::acos(cos_xi_los), params.eta_air, 1.6),
                        1e-12));
    }

    TEST_CASE("wall path family sums the patch grid")
    {
        scene scn = scene::defaults();
        scn.users[0] = user_state{{2.5, 2.0, 0.85}, deg(-90.0), deg(41.0), true};
        system_params params;
        channel_options opts;
        opts.paths = path_set::wall;
        opts.indicator = indicator_mode::forced_zero;

        channel_state st = evaluate_channel(scn, scn.users[0], 1.6, params, opts);
        CHECK(st.gain.h_nlos_per_mirror.empty());
        CHECK(st.gain.h_wall > 0.0);

        double total = 0.0;
        for (int k = 0; k < scn.wall.count(); ++k)
            total += wall_patch_gain(scn, scn.users[0], scn.wall.patch_center(k, scn.room),
                                     params);
        CHECK(st.gain.h_wall == total);
        CHECK(rel_close(st.gain.h_total, total * st.gain.psi_nlos, 1e-12));
    }

    TEST_CASE("controlled index must stay between the cell's limiting indices")
    {
        scene scn = scene::defaults();
        system_params params;
        CHECK_THROWS_AS((void)evaluate_channel(scn, scn.users[0], 1.45, params),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)evaluate_channel(scn, scn.users[0], 1.75, params),
                        std::invalid_argument);
        CHECK_NOTHROW((void)evaluate_channel(scn, scn.users[0], 1.5, params));
        CHECK_NOTHROW((void)evaluate_channel(scn, scn.users[0], 1.7, params));
    }

    TEST_CASE("amplification follows the stronger path family")
    {
        system_params params;
        const double eta_c = 1.7;

        // LoS blocked and one mirror active: the reflected family dominates,
        // so amplification is taken at the element's arrival angle.
        scene scn = single_mirror_scene(-0.5, -0.2);
        scn.users[0] = user_state{{2.0, 2.5, 0.85}, 0.0, 0.0, true};
        channel_options opts;
        opts.indicator = indicator_mode::forced_zero;
        channel_state st = evaluate_channel(scn, scn.users[0], eta_c, params, opts);

        vec3 elem = scn.mirrors.element_center(0, scn.room);
        double xi_k = std::acos(dot(unit_direction(scn.users[0].device_pos, elem),
                                    scn.users[0].device_normal()));
        amplification a = amplification_gain(eta_c, params.wavelength, xi_k,
                                             params.electro_optic_coeff,
                                             params.field_strength(), params.lc_thickness);
        CHECK(rel_close(st.lc.amplification, a.factor, 1e-12));

        // With the line of sight restored it dominates and the angle flips.
        channel_state st2 = evaluate_channel(scn, scn.users[0], eta_c, params);
        double xi_los = std::acos(cos_incidence_at_device(scn.ap_pos, scn.users[0]));
        amplification a2 = amplification_gain(eta_c, params.wavelength, xi_los,
                                              params.electro_optic_coeff,
                                              params.field_strength(),
                                              params.lc_thickness);
        CHECK(rel_close(st2.lc.amplification, a2.factor, 1e-12));
        CHECK(st2.gain.indicator == 1);
        CHECK(st2.gain.h_los * st2.gain.psi_los >
              st2.gain.h_nlos_per_mirror[0] * st2.gain.psi_nlos);
    }
}
