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

#include "vlcris/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

namespace vlcris
{

namespace
{

using nlohmann::json;

void check_keys(const json &j, const std::string &section,
                std::initializer_list<const char *> allowed)
{
    if (!j.is_object())
        throw config_error("config: '" + section + "' must be an object");
    for (const auto &item : j.items())
    {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](const char *k) { return item.key() == k; });
        if (!known)
            throw config_error("config: unknown key '" + section + item.key() + "'");
    }
}

double get_double(const json &j, const std::string &where)
{
    if (!j.is_number())
        throw config_error("config: '" + where + "' must be a number");
    return j.get<double>();
}

int get_int(const json &j, const std::string &where)
{
    if (!j.is_number_integer())
        throw config_error("config: '" + where + "' must be an integer");
    return j.get<int>();
}

std::uint64_t get_seed(const json &j, const std::string &where)
{
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                   j.get<long long>() < 0))
        throw config_error("config: '" + where + "' must be a non-negative integer");
    return j.get<std::uint64_t>();
}

bool get_bool(const json &j, const std::string &where)
{
    if (!j.is_boolean())
        throw config_error("config: '" + where + "' must be a boolean");
    return j.get<bool>();
}

std::string get_string(const json &j, const std::string &where)
{
    if (!j.is_string())
        throw config_error("config: '" + where + "' must be a string");
    return j.get<std::string>();
}

vec3 get_vec3(const json &j, const std::string &where)
{
    if (!j.is_array() || j.size() != 3)
        throw config_error("config: '" + where + "' must be an array of 3 numbers");
    return {get_double(j[0], where), get_double(j[1], where), get_double(j[2], where)};
}

void read_power(const json &j, power_model &pm)
{
    check_keys(j, "params.power.",
               {"p_dac", "p_filter", "p_pa", "p_driver", "p_t_circuit", "p_mirror_unit",
                "p_adc", "p_tia", "p_lc", "p_r_circuit"});
    if (j.contains("p_dac")) pm.p_dac = get_double(j["p_dac"], "params.power.p_dac");
    if (j.contains("p_filter")) pm.p_filter = get_double(j["p_filter"], "params.power.p_filter");
    if (j.contains("p_pa")) pm.p_pa = get_double(j["p_pa"], "params.power.p_pa");
    if (j.contains("p_driver")) pm.p_driver = get_double(j["p_driver"], "params.power.p_driver");
    if (j.contains("p_t_circuit"))
        pm.p_t_circuit = get_double(j["p_t_circuit"], "params.power.p_t_circuit");
    if (j.contains("p_mirror_unit"))
        pm.p_mirror_unit = get_double(j["p_mirror_unit"], "params.power.p_mirror_unit");
    if (j.contains("p_adc")) pm.p_adc = get_double(j["p_adc"], "params.power.p_adc");
    if (j.contains("p_tia")) pm.p_tia = get_double(j["p_tia"], "params.power.p_tia");
    if (j.contains("p_lc")) pm.p_lc = get_double(j["p_lc"], "params.power.p_lc");
    if (j.contains("p_r_circuit"))
        pm.p_r_circuit = get_double(j["p_r_circuit"], "params.power.p_r_circuit");
}

void read_params(const json &j, system_params &p)
{
    check_keys(j, "params.",
               {"half_power_semiangle", "pd_area", "optical_filter_gain",
                "concentrator_ref_index", "fov", "reflectivity_wall", "reflectivity_ris",
                "eta_air", "eta_extraordinary", "eta_ordinary", "v_threshold", "v_zero",
                "v_applied", "lc_thickness", "wavelength", "electro_optic_coeff",
                "electric_field", "bandwidth", "optical_power", "elec_to_opt_ratio",
                "responsivity", "noise_psd", "sensitivity_dbm", "dc_bias", "power"});
    auto num = [&](const char *key, double &field) {
        if (j.contains(key))
            field = get_double(j[key], std::string("params.") + key);
    };
    num("half_power_semiangle", p.half_power_semiangle);
    num("pd_area", p.pd_area);
    num("optical_filter_gain", p.optical_filter_gain);
    num("concentrator_ref_index", p.concentrator_ref_index);
    num("fov", p.fov);
    num("reflectivity_wall", p.reflectivity_wall);
    num("reflectivity_ris", p.reflectivity_ris);
    num("eta_air", p.eta_air);
    num("eta_extraordinary", p.eta_extraordinary);
    num("eta_ordinary", p.eta_ordinary);
    num("v_threshold", p.v_threshold);
    num("v_zero", p.v_zero);
    num("v_applied", p.v_applied);
    num("lc_thickness", p.lc_thickness);
    num("wavelength", p.wavelength);
    num("electro_optic_coeff", p.electro_optic_coeff);
    if (j.contains("electric_field"))
        p.electric_field = get_double(j["electric_field"], "params.electric_field");
    num("bandwidth", p.bandwidth);
    num("optical_power", p.optical_power);
    num("elec_to_opt_ratio", p.elec_to_opt_ratio);
    num("responsivity", p.responsivity);
    num("noise_psd", p.noise_psd);
    num("sensitivity_dbm", p.sensitivity_dbm);
    num("dc_bias", p.dc_bias);
    if (j.contains("power"))
        read_power(j["power"], p.power);
}

user_state read_user(const json &j, const std::string &section)
{
    check_keys(j, section, {"device_pos", "azimuth", "polar", "body_blocker"});
    user_state u;
    if (j.contains("device_pos"))
        u.device_pos = get_vec3(j["device_pos"], section + "device_pos");
    if (j.contains("azimuth"))
        u.azimuth = get_double(j["azimuth"], section + "azimuth");
    if (j.contains("polar"))
        u.polar = get_double(j["polar"], section + "polar");
    if (j.contains("body_blocker"))
        u.body_blocker = get_bool(j["body_blocker"], section + "body_blocker");
    return u;
}

cylinder_blocker read_blocker(const json &j, const std::string &section)
{
    check_keys(j, section, {"base_center", "radius", "height"});
    cylinder_blocker b;
    if (j.contains("base_center"))
        b.base_center = get_vec3(j["base_center"], section + "base_center");
    if (j.contains("radius"))
        b.radius = get_double(j["radius"], section + "radius");
    if (j.contains("height"))
        b.height = get_double(j["height"], section + "height");
    return b;
}

void read_mirrors(const json &j, mirror_array &m)
{
    check_keys(j, "scene.mirrors.",
               {"rows", "cols", "k_elements", "element_side", "origin", "roll", "yaw"});
    if (j.contains("rows")) m.rows = get_int(j["rows"], "scene.mirrors.rows");
    if (j.contains("cols")) m.cols = get_int(j["cols"], "scene.mirrors.cols");
    if (j.contains("k_elements"))
        m.k_elements = get_int(j["k_elements"], "scene.mirrors.k_elements");
    if (j.contains("element_side"))
        m.element_side = get_double(j["element_side"], "scene.mirrors.element_side");
    if (j.contains("origin")) m.origin = get_vec3(j["origin"], "scene.mirrors.origin");
    if (j.contains("roll")) m.roll = get_double(j["roll"], "scene.mirrors.roll");
    if (j.contains("yaw")) m.yaw = get_double(j["yaw"], "scene.mirrors.yaw");
}

void read_wall(const json &j, wall_panel &w)
{
    check_keys(j, "scene.wall.", {"rows", "cols", "patch_side", "origin"});
    if (j.contains("rows")) w.rows = get_int(j["rows"], "scene.wall.rows");
    if (j.contains("cols")) w.cols = get_int(j["cols"], "scene.wall.cols");
    if (j.contains("patch_side"))
        w.patch_side = get_double(j["patch_side"], "scene.wall.patch_side");
    if (j.contains("origin")) w.origin = get_vec3(j["origin"], "scene.wall.origin");
}

// Returns true when the document set the user list explicitly.
bool read_scene(const json &j, scene &s)
{
    check_keys(j, "scene.", {"room", "ap_pos", "users", "blockers", "mirrors", "wall"});
    if (j.contains("room")) s.room = get_vec3(j["room"], "scene.room");
    if (j.contains("ap_pos")) s.ap_pos = get_vec3(j["ap_pos"], "scene.ap_pos");
    bool users_explicit = false;
    if (j.contains("users"))
    {
        if (!j["users"].is_array())
            throw config_error("config: 'scene.users' must be an array");
        users_explicit = true;
        s.users.clear();
        for (const auto &ju : j["users"])
            s.users.push_back(read_user(ju, "scene.users[]."));
    }
    if (j.contains("blockers"))
    {
        if (!j["blockers"].is_array())
            throw config_error("config: 'scene.blockers' must be an array");
        s.blockers.clear();
        for (const auto &jb : j["blockers"])
            s.blockers.push_back(read_blocker(jb, "scene.blockers[]."));
    }
    if (j.contains("mirrors"))
        read_mirrors(j["mirrors"], s.mirrors);
    if (j.contains("wall"))
        read_wall(j["wall"], s.wall);
    return users_explicit;
}

void read_sweep(const json &j, sweep_spec &sw)
{
    check_keys(j, "sweep.", {"variable", "start", "stop", "steps"});
    if (!j.contains("variable"))
        throw config_error("config: 'sweep.variable' is required when sweep is given");
    sw.variable = get_string(j["variable"], "sweep.variable");
    if (j.contains("start")) sw.start = get_double(j["start"], "sweep.start");
    if (j.contains("stop")) sw.stop = get_double(j["stop"], "sweep.stop");
    else sw.stop = sw.start;
    if (j.contains("steps")) sw.steps = get_int(j["steps"], "sweep.steps");
}

void read_monte_carlo(const json &j, monte_carlo_spec &mc)
{
    check_keys(j, "monte_carlo.",
               {"trials", "seed", "resample_orientation", "resample_blockers",
                "blocker_count"});
    if (j.contains("trials")) mc.trials = get_int(j["trials"], "monte_carlo.trials");
    if (j.contains("seed")) mc.seed = get_seed(j["seed"], "monte_carlo.seed");
    if (j.contains("resample_orientation"))
        mc.resample_orientation =
            get_bool(j["resample_orientation"], "monte_carlo.resample_orientation");
    if (j.contains("resample_blockers"))
        mc.resample_blockers =
            get_bool(j["resample_blockers"], "monte_carlo.resample_blockers");
    if (j.contains("blocker_count"))
        mc.blocker_count = get_int(j["blocker_count"], "monte_carlo.blocker_count");
}

void read_optimizer(const json &j, optimizer_spec &opt)
{
    check_keys(j, "optimizer.", {"agents", "iterations", "a", "seed"});
    if (j.contains("agents")) opt.agents = get_int(j["agents"], "optimizer.agents");
    if (j.contains("iterations"))
        opt.iterations = get_int(j["iterations"], "optimizer.iterations");
    if (j.contains("a")) opt.a = get_double(j["a"], "optimizer.a");
    if (j.contains("seed")) opt.seed = get_seed(j["seed"], "optimizer.seed");
}

void read_noma(const json &j, noma_config &n)
{
    check_keys(j, "noma.", {"zeta", "num_users"});
    if (j.contains("zeta")) n.zeta = get_double(j["zeta"], "noma.zeta");
    if (j.contains("num_users")) n.num_users = get_int(j["num_users"], "noma.num_users");
}

indicator_mode indicator_from_string(const std::string &s)
{
    if (s == "automatic")
        return indicator_mode::automatic;
    if (s == "forced_zero")
        return indicator_mode::forced_zero;
    if (s == "forced_one")
        return indicator_mode::forced_one;
    throw config_error("config: 'indicator' must be automatic, forced_zero or forced_one");
}

trace_variant variant_from_string(const std::string &s)
{
    if (s == "proposed")
        return trace_variant::proposed;
    if (s == "ris_only")
        return trace_variant::ris_only;
    throw config_error("config: 'variant' must be proposed or ris_only");
}

bool is_blank(const std::string &text)
{
    return std::all_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

} // namespace

scenario_config parse_config(const std::string &json_text)
{
    scenario_config cfg;
    bool users_explicit = false;

    if (!is_blank(json_text))
    {
        json j;
        try
        {
            j = json::parse(json_text);
        }
        catch (const json::exception &e)
        {
            throw config_error(std::string("config: parse failure: ") + e.what());
        }

        check_keys(j, "",
                   {"scenario", "note", "output", "params", "scene", "sweep",
                    "monte_carlo", "optimizer", "noma", "indicator", "grid_points",
                    "variant"});
        try
        {
            if (j.contains("scenario"))
                cfg.kind = scenario_kind_from_string(get_string(j["scenario"], "scenario"));
            if (j.contains("note"))
                cfg.note = get_string(j["note"], "note");
            if (j.contains("output"))
                cfg.output_path = get_string(j["output"], "output");
            if (j.contains("params"))
                read_params(j["params"], cfg.params);
            if (j.contains("scene"))
                users_explicit = read_scene(j["scene"], cfg.scn);
            if (j.contains("sweep"))
            {
                sweep_spec sw;
                read_sweep(j["sweep"], sw);
                cfg.sweep = sw;
            }
            if (j.contains("monte_carlo"))
                read_monte_carlo(j["monte_carlo"], cfg.monte_carlo);
            if (j.contains("optimizer"))
                read_optimizer(j["optimizer"], cfg.optimizer);
            if (j.contains("noma"))
                read_noma(j["noma"], cfg.noma);
            if (j.contains("indicator"))
                cfg.indicator = indicator_from_string(get_string(j["indicator"], "indicator"));
            if (j.contains("variant"))
                cfg.variant = variant_from_string(get_string(j["variant"], "variant"));
            if (j.contains("grid_points"))
            {
                if (!j["grid_points"].is_array())
                    throw config_error("config: 'grid_points' must be an array of integers");
                std::vector<int> points;
                for (const auto &jp : j["grid_points"])
                    points.push_back(get_int(jp, "grid_points"));
                cfg.grid_points = points;
            }
        }
        catch (const config_error &)
        {
            throw;
        }
        catch (const std::invalid_argument &e)
        {
            throw config_error(std::string("config: ") + e.what());
        }
    }

    if (cfg.kind == scenario_kind::noma_multiuser && !users_explicit)
        cfg.scn.users = default_noma_users(cfg.noma.num_users);

    try
    {
        cfg.validate();
    }
    catch (const config_error &)
    {
        throw;
    }
    catch (const std::invalid_argument &e)
    {
        throw config_error(std::string("config: ") + e.what());
    }
    return cfg;
}

scenario_config load_config(const std::string &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw config_error("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

} // namespace vlcris
