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

#include "vlcris/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace vlcris
{

vec3 unit_direction(const vec3 &from, const vec3 &to)
{
    vec3 d = to - from;
    double len = norm(d);
    if (len == 0.0)
        throw std::domain_error("unit_direction: coincident points");
    return {d.x / len, d.y / len, d.z / len};
}

bool segment_intersects_cylinder(const vec3 &a, const vec3 &b, const cylinder_blocker &c)
{
    double z_lo = c.base_center.z;
    double z_hi = c.base_center.z + c.height;

    // Parameter interval of the segment inside the cylinder's z slab.
    double t0 = 0.0, t1 = 1.0;
    double dz = b.z - a.z;
    if (dz == 0.0)
    {
        if (a.z < z_lo || a.z > z_hi)
            return false;
    }
    else
    {
        double u0 = (z_lo - a.z) / dz;
        double u1 = (z_hi - a.z) / dz;
        if (u0 > u1)
            std::swap(u0, u1);
        t0 = std::max(t0, u0);
        t1 = std::min(t1, u1);
        if (t0 > t1)
            return false;
    }

    // Squared horizontal distance to the axis is a convex quadratic in t;
    // its minimum over [t0, t1] is at the clamped vertex.
    double dx = b.x - a.x;
    double dy = b.y - a.y;
    double ex = a.x - c.base_center.x;
    double ey = a.y - c.base_center.y;
    double qa = dx * dx + dy * dy;
    double qb = 2.0 * (dx * ex + dy * ey);
    double qc = ex * ex + ey * ey;

    double t_min = t0;
    if (qa > 0.0)
        t_min = std::clamp(-qb / (2.0 * qa), t0, t1);
    double d2 = (qa * t_min + qb) * t_min + qc;

    return d2 < c.radius * c.radius;
}

} // namespace vlcris
