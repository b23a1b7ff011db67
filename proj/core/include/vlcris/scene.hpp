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

#ifndef vlcris_scene_H
#define vlcris_scene_H

#include <optional>
#include <utility>
#include <vector>

#include "vlcris/geometry.hpp"
#include "vlcris/params.hpp"
#include "vlcris/rng.hpp"

namespace vlcris
{

// Receiver device held by one user. The device normal is
// (cos(azimuth) sin(polar), sin(azimuth) sin(polar), cos(polar)).
struct user_state
{
    vec3 device_pos = {1.2242649177826925, 2.5, 0.85};
    double azimuth = 3.141592653589793;  // beta, [-pi, pi]
    double polar = 0.7155849933176751;   // alpha, [0, pi/2], 41 deg
    // When true, a default cylinder 0.36 m from the device along -x models
    // the user's own body.
    bool body_blocker = true;

    vec3 device_normal() const;
    cylinder_blocker body_cylinder() const;
    void validate() const;
};

// Mirror panel on the x = 0 wall. Element k (0-based, row-major, columns
// fastest) sits at (0, y0 + (col + 1/2) side, z0 + (row + 1/2) side) where
// (y0, z0) come from `origin` or from centering the panel on the wall.
// Either `cols` or `k_elements` may be given; when only `k_elements` is set,
// cols = k / rows must divide evenly.
struct mirror_array
{
    int rows = 10;
    std::optional<int> cols;
    std::optional<int> k_elements;
    double element_side = 0.1; // m
    std::optional<vec3> origin; // lower corner, x component must be 0
    double roll = 0.0; // omega
    double yaw = 0.0;  // gamma
    // Shared element normal (sin(yaw) cos(roll), cos(yaw) cos(roll), sin(roll)).
    vec3 element_normal() const;

    int resolved_cols() const;
    int count() const { return rows * resolved_cols(); }
    vec3 element_center(int k, const vec3 &room) const;
    void validate() const;
};

// Passive reflecting wall section on the y = 0 wall, discretized into a
// patch grid analogous to the mirror layout (rows along z, cols along x).
struct wall_panel
{
    int rows = 10;
    int cols = 30;
    double patch_side = 0.1; // m
    std::optional<vec3> origin; // lower corner, y component must be 0

    int count() const { return rows * cols; }
    vec3 patch_center(int k, const vec3 &room) const;
    void validate() const;
};

struct scene
{
    vec3 room = {5.0, 5.0, 3.0};
    vec3 ap_pos = {2.5, 2.5, 3.0};
    std::vector<user_state> users = {user_state{}};
    std::vector<cylinder_blocker> blockers;
    mirror_array mirrors;
    wall_panel wall;

    static scene defaults() { return scene{}; }

    // Configured blockers plus every user's body cylinder.
    std::vector<cylinder_blocker> all_blockers() const;

    // AP on the ceiling plane, users and blockers inside the room box,
    // at least one user. Throws std::invalid_argument.
    void validate() const;
};

// Cosine of the incidence angle at the device for a source at src_pos:
// unit(device -> source) dotted with the device normal. May be negative;
// throws std::domain_error when the source coincides with the device.
double cos_incidence_at_device(const vec3 &src_pos, const user_state &user);

// Cosine of the irradiance angle leaving a mirror element toward a user at
// user_pos: unit(user -> mirror) dotted with the element normal for
// (yaw, roll). May be negative; throws std::domain_error on zero distance.
double cos_irradiance_from_mirror(const vec3 &mirror_center, const vec3 &user_pos,
                                  double yaw, double roll);

// Random device orientation: azimuth uniform on [-pi, pi]; polar from a
// Laplace distribution (mean 41 deg, std 9 deg) truncated to [0, pi/2] by
// rejection. Draw order per call: one uniform for azimuth, then one uniform
// per rejection attempt for polar.
std::pair<double, double> sample_orientation(rng_stream &rng);

// LoS availability: 0 if any blocker cuts the AP-device segment, or the
// incidence angle exceeds the field of view, or received_power_los_w falls
// below the receiver sensitivity (strict), else 1.
int los_indicator(const scene &scn, const user_state &user, const system_params &params,
                  double received_power_los_w);

} // namespace vlcris

#endif
