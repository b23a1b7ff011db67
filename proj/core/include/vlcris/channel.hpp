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

#ifndef vlcris_channel_H
#define vlcris_channel_H

#include <vector>

#include "vlcris/geometry.hpp"
#include "vlcris/lc_cell.hpp"
#include "vlcris/params.hpp"
#include "vlcris/scene.hpp"

namespace vlcris
{

// Lambertian order m = -1 / log2(cos(phi_half)); phi_half in (0, pi/2).
double lambertian_index(double phi_half);

// Optical concentrator gain f^2 / sin^2(fov) for 0 <= xi <= fov, else 0.
double concentrator_gain(double f, double fov, double xi);

// Line-of-sight Lambertian gain; 0 beyond the field of view or when either
// side faces away. Blockage is not applied here (see los_indicator).
double los_gain(const scene &scn, const user_state &user, const system_params &params);

// Gain contributed by mirror element k (0-based); 0 beyond the field of view
// or when any of the four cosines is non-positive.
double mirror_nlos_gain(const scene &scn, const user_state &user, int k,
                        const system_params &params);

// Gain contributed by one wall patch with the wall's fixed inward normal
// (0, 1, 0); clamping rules as for mirror elements.
double wall_patch_gain(const scene &scn, const user_state &user, const vec3 &patch_center,
                       const system_params &params);

// Which reflected-path family feeds the composite channel.
enum class path_set
{
    ris,
    wall
};

// How the LoS availability flag is produced.
enum class indicator_mode
{
    automatic,
    forced_zero,
    forced_one
};

struct channel_options
{
    path_set paths = path_set::ris;
    indicator_mode indicator = indicator_mode::automatic;
    // false models a receiver with no controllable cell: transitions and
    // amplification pinned to 1.
    bool lc_enabled = true;
    // false removes every reflected path (mirror or wall).
    bool nlos_enabled = true;
};

// Per-path decomposition of one composite channel evaluation.
struct channel_gain
{
    double h_los = 0.0;
    std::vector<double> h_nlos_per_mirror; // empty unless paths == ris
    double h_wall = 0.0;                   // patch-grid sum, paths == wall only
    double psi_los = 1.0;
    double psi_nlos = 1.0;
    int indicator = 0;
    double h_total = 0.0;
};

struct channel_state
{
    channel_gain gain;
    lc_state lc;
};

// Composite channel for one user at controlled index eta_c:
//   h_total = indicator * h_los * psi_los + (reflected sum) * psi_nlos.
// psi_nlos and the NLoS refraction angle use the strongest single reflected
// element; amplification uses the angle of the stronger path family, ties
// resolved toward LoS. eta_c must lie in [eta_ordinary, eta_extraordinary].
channel_state evaluate_channel(const scene &scn, const user_state &user, double eta_c,
                               const system_params &params,
                               const channel_options &options = {});

} // namespace vlcris

#endif
