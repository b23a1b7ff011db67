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

#ifndef vlcris_geometry_H
#define vlcris_geometry_H

#include <cmath>

namespace vlcris
{

struct vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline vec3 operator+(const vec3 &a, const vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline vec3 operator-(const vec3 &a, const vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline vec3 operator*(double s, const vec3 &a) { return {s * a.x, s * a.y, s * a.z}; }
inline vec3 operator*(const vec3 &a, double s) { return s * a; }

inline double dot(const vec3 &a, const vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const vec3 &a) { return std::sqrt(dot(a, a)); }
inline double distance(const vec3 &a, const vec3 &b) { return norm(a - b); }

// Unit vector from a to b; throws std::domain_error when a == b.
vec3 unit_direction(const vec3 &from, const vec3 &to);

// Upright circular cylinder used as an opaque obstruction.
// base_center is the center of the bottom disc; the axis is vertical.
struct cylinder_blocker
{
    vec3 base_center;
    double radius = 0.15;
    double height = 1.65;
};

// True iff the open segment (a,b) passes strictly within `radius` of the
// cylinder axis at a height inside [base, base + height]. Tangential contact
// and endpoints exactly on the surface do not count as blocking.
bool segment_intersects_cylinder(const vec3 &a, const vec3 &b, const cylinder_blocker &c);

} // namespace vlcris

#endif
