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

#ifndef vlcris_lc_cell_H
#define vlcris_lc_cell_H

#include "vlcris/params.hpp"

namespace vlcris
{

// Director tilt in [0, pi/2) driven by the applied voltage. Zero at or below
// v_threshold, continuous there, strictly increasing above, asymptote pi/2.
double tilt_from_voltage(double v_applied, double v_threshold, double v_zero);

// Canonical voltage for a tilt in [0, pi/2]; tilt 0 maps to v_threshold and
// tilt pi/2 to the +infinity asymptote.
double voltage_from_tilt(double tilt, double v_threshold, double v_zero);

// Effective refractive index for a tilt in [0, pi/2]; continuous and monotone
// non-increasing from eta_e (tilt 0) to eta_o (tilt pi/2) when eta_e >= eta_o.
double refractive_index_from_tilt(double tilt, double eta_e, double eta_o);

// Inverse of refractive_index_from_tilt for eta_c in [eta_o, eta_e].
double tilt_from_index(double eta_c, double eta_e, double eta_o);

// Snell refraction into the cell; requires eta_c > eta_a (rare-to-dense).
double refraction_angle(double xi, double eta_a, double eta_c);

// Unpolarized Fresnel power reflectance entering the cell; eta = eta_c/eta_a >= 1.
double reflectance_air_to_cell(double xi, double eta);

// Unpolarized Fresnel power reflectance leaving the cell; eta1 = eta_a/eta_c
// in (0, 1]. Throws std::domain_error when sin(theta) > eta1 (total internal
// reflection, inconsistent input angle).
double reflectance_cell_to_air(double theta, double eta1);

// Fraction of incident power transmitted through both cell interfaces:
// (1 - R_in(xi)) (1 - R_out(theta(xi))). Exactly 1 when eta_c == eta_a.
double transition_coefficient(double xi_in, double eta_c, double eta_a);

struct amplification
{
    double gamma_coeff; // 1/m
    double factor;      // exp(gamma * thickness), >= 1 for gamma >= 0
};

// Exponential intensity gain inside the cell. Throws std::domain_error at
// grazing incidence (cos(xi) == 0).
amplification amplification_gain(double eta_c, double wavelength, double xi_in,
                                 double electro_optic_coeff, double e_field,
                                 double thickness);

// Snapshot of the receiver cell for one channel evaluation. The voltage and
// tilt are diagnostic inversions when the index is the controlled quantity.
struct lc_state
{
    double v_applied = 0.0;
    double tilt = 0.0;
    double eta_c = 0.0;
    double refraction_angle = 0.0; // at the dominant-path incidence angle
    double gamma_coeff = 0.0;
    double amplification = 1.0;
    double transition_nlos = 1.0;
    double transition_los = 1.0;
};

// Assemble an lc_state for a controlled index eta_c. xi_los and xi_nlos are
// the incidence angles of the two path families; xi_dominant selects the
// angle used for refraction and amplification.
lc_state lc_from_index(double eta_c, double xi_los, double xi_nlos, double xi_dominant,
                       const system_params &params);

} // namespace vlcris

#endif
