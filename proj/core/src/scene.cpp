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

#include "vlcris/scene.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vlcris
{

namespace
{

constexpr double pi = 3.141592653589793;
constexpr double half_pi = 1.5707963267948966;

void require(bool ok, const std::string &field, const std::string &constraint)
{
    if (!ok)
        throw std::invalid_argument(field + ": " + constraint);
}

bool inside_box(const vec3 &p, const vec3 &room)
{
    return p.x >= 0.0 && p.x <= room.x && p.y >= 0.0 && p.y <= room.y && p.z >= 0.0 &&
           p.z <= room.z;
}

} // namespace

vec3 user_state::device_normal() const
{
    return {std::cos(azimuth) * std::sin(polar), std::sin(azimuth) * std::sin(polar),
            std::cos(polar)};
}

cylinder_blocker user_state::body_cylinder() const
{
    // Body 0.36 m from the device along -x, standing on the floor.
    return {{device_pos.x - 0.36, device_pos.y, 0.0}, 0.15, 1.65};
}

void user_state::validate() const
{
    require(azimuth >= -pi && azimuth <= pi, "user.azimuth", "must lie in [-pi, pi]");
    require(polar >= 0.0 && polar <= half_pi, "user.polar", "must lie in [0, pi/2]");
}

vec3 mirror_array::element_normal() const
{
    return {std::sin(yaw) * std::cos(roll), std::cos(yaw) * std::cos(roll), std::sin(roll)};
}

int mirror_array::resolved_cols() const
{
    if (cols)
        return *cols;
    if (k_elements)
    {
        if (rows <= 0 || *k_elements % rows != 0)
            throw std::invalid_argument(
                "mirrors.k_elements: must be divisible by rows when cols is unset");
        return *k_elements / rows;
    }
    return 30;
}

vec3 mirror_array::element_center(int k, const vec3 &room) const
{
    int nc = resolved_cols();
    if (k < 0 || k >= rows * nc)
        throw std::invalid_argument("mirrors: element index out of range");
    int row = k / nc;
    int col = k % nc;
    double y0, z0;
    if (origin)
    {
        y0 = origin->y;
        z0 = origin->z;
    }
    else
    {
        // Centered on the x = 0 wall. Centers of edge elements may fall past
        // the wall for very wide panels; such elements see grazing geometry
        // and contribute nothing.
        y0 = room.y / 2.0 - nc * element_side / 2.0;
        z0 = room.z / 2.0 - rows * element_side / 2.0;
    }
    return {0.0, y0 + (col + 0.5) * element_side, z0 + (row + 0.5) * element_side};
}

void mirror_array::validate() const
{
    require(rows >= 1, "mirrors.rows", "must be >= 1");
    require(element_side > 0.0, "mirrors.element_side", "must be > 0");
    if (cols)
        require(*cols >= 1, "mirrors.cols", "must be >= 1");
    if (k_elements)
    {
        require(*k_elements >= 1, "mirrors.k_elements", "must be >= 1");
        if (cols)
            require(rows * *cols == *k_elements, "mirrors.k_elements",
                    "must equal rows * cols");
        else
            require(*k_elements % rows == 0, "mirrors.k_elements",
                    "must be divisible by rows when cols is unset");
    }
    if (origin)
        require(origin->x == 0.0, "mirrors.origin", "must lie on the x = 0 wall");
    require(roll >= -half_pi && roll <= half_pi, "mirrors.roll", "must lie in [-pi/2, pi/2]");
    require(yaw >= -half_pi && yaw <= half_pi, "mirrors.yaw", "must lie in [-pi/2, pi/2]");
}

vec3 wall_panel::patch_center(int k, const vec3 &room) const
{
    if (k < 0 || k >= rows * cols)
        throw std::invalid_argument("wall: patch index out of range");
    int row = k / cols;
    int col = k % cols;
    double x0, z0;
    if (origin)
    {
        x0 = origin->x;
        z0 = origin->z;
    }
    else
    {
        x0 = room.x / 2.0 - cols * patch_side / 2.0;
        z0 = room.z / 2.0 - rows * patch_side / 2.0;
    }
    return {x0 + (col + 0.5) * patch_side, 0.0, z0 + (row + 0.5) * patch_side};
}

void wall_panel::validate() const
{
    require(rows >= 1, "wall.rows", "must be >= 1");
    require(cols >= 1, "wall.cols", "must be >= 1");
    require(patch_side > 0.0, "wall.patch_side", "must be > 0");
    if (origin)
        require(origin->y == 0.0, "wall.origin", "must lie on the y = 0 wall");
}

std::vector<cylinder_blocker> scene::all_blockers() const
{
    std::vector<cylinder_blocker> out = blockers;
    for (const auto &u : users)
        if (u.body_blocker)
            out.push_back(u.body_cylinder());
    return out;
}

void scene::validate() const
{
    require(room.x > 0.0 && room.y > 0.0 && room.z > 0.0, "room", "must have positive extent");
    require(ap_pos.z == room.z, "ap_pos", "must lie on the ceiling plane");
    require(inside_box(ap_pos, room), "ap_pos", "must lie inside the room box");
    require(!users.empty(), "users", "at least one user required");
    for (const auto &u : users)
    {
        u.validate();
        require(inside_box(u.device_pos, room), "user.device_pos",
                "must lie inside the room box");
    }
    for (const auto &b : blockers)
    {
        require(b.radius > 0.0, "blocker.radius", "must be > 0");
        require(b.height > 0.0, "blocker.height", "must be > 0");
        require(inside_box(b.base_center, room), "blocker.base_center",
                "must lie inside the room box");
    }
    mirrors.validate();
    wall.validate();
}

double cos_incidence_at_device(const vec3 &src_pos, const user_state &user)
{
    vec3 w = unit_direction(user.device_pos, src_pos);
    return dot(w, user.device_normal());
}

double cos_irradiance_from_mirror(const vec3 &mirror_center, const vec3 &user_pos,
                                  double yaw, double roll)
{
    vec3 w = unit_direction(user_pos, mirror_center);
    vec3 n = {std::sin(yaw) * std::cos(roll), std::cos(yaw) * std::cos(roll),
              std::sin(roll)};
    return dot(w, n);
}

std::pair<double, double> sample_orientation(rng_stream &rng)
{
    double beta = rng.uniform(-pi, pi);

    constexpr double mean = 0.7155849933176751;  // 41 deg
    constexpr double scale = 0.11107207345395914; // 9 deg std / sqrt(2)
    double alpha;
    do
    {
        double d = rng.uniform() - 0.5;
        double s = (d > 0.0) ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
        alpha = mean - scale * s * std::log(1.0 - 2.0 * std::abs(d));
    } while (!(alpha >= 0.0 && alpha <= half_pi));
    return {beta, alpha};
}

int los_indicator(const scene &scn, const user_state &user, const system_params &params,
                  double received_power_los_w)
{
    for (const auto &blk : scn.all_blockers())
        if (segment_intersects_cylinder(scn.ap_pos, user.device_pos, blk))
            return 0;
    if (cos_incidence_at_device(scn.ap_pos, user) < std::cos(params.fov))
        return 0;
    if (received_power_los_w < params.sensitivity_watts())
        return 0;
    return 1;
}

} // namespace vlcris
