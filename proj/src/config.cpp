// SPDX-License-Identifier: Apache-2.0
//
// ris-secrecy: spatial secrecy optimization for RIS-assisted MISO links
// Copyright (C) 2026 ris-secrecy developers
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

#include "rissec/config.hpp"

#include <fstream>
#include <set>

namespace rissec
{

namespace
{

using nlohmann::json;

void require_keys(const json &obj, const std::string &scope,
                  const std::set<std::string> &allowed)
{
    if (!obj.is_object())
        throw ConfigError(scope + ": expected a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError(scope.empty() ? it.key() + ": unknown key"
                                            : scope + "." + it.key() + ": unknown key");
}

double get_number(const json &obj, const std::string &scope, const std::string &key,
                  double fallback)
{
    if (!obj.contains(key))
        return fallback;
    const json &v = obj.at(key);
    if (!v.is_number())
        throw ConfigError(scope + key + ": expected a number");
    return v.get<double>();
}

int get_int(const json &obj, const std::string &scope, const std::string &key, int fallback)
{
    if (!obj.contains(key))
        return fallback;
    const json &v = obj.at(key);
    if (!v.is_number_integer())
        throw ConfigError(scope + key + ": expected an integer");
    return v.get<int>();
}

std::uint64_t get_u64(const json &obj, const std::string &scope, const std::string &key,
                      std::uint64_t fallback)
{
    if (!obj.contains(key))
        return fallback;
    const json &v = obj.at(key);
    if (!v.is_number_unsigned() && !v.is_number_integer())
        throw ConfigError(scope + key + ": expected a non-negative integer");
    if (v.is_number_integer() && v.get<long long>() < 0)
        throw ConfigError(scope + key + ": expected a non-negative integer");
    return v.get<std::uint64_t>();
}

bool get_bool(const json &obj, const std::string &scope, const std::string &key, bool fallback)
{
    if (!obj.contains(key))
        return fallback;
    const json &v = obj.at(key);
    if (!v.is_boolean())
        throw ConfigError(scope + key + ": expected a boolean");
    return v.get<bool>();
}

Position3D parse_position(const json &doc, const std::string &key, const Position3D &fallback)
{
    if (!doc.contains(key))
        return fallback;
    const json &v = doc.at(key);
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
        !v[2].is_number())
        throw ConfigError(key + ": expected [x, y, z] in meters");
    try
    {
        return Position3D(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(key + ": " + e.what());
    }
}

UpaGeometry parse_array(const json &doc, const std::string &key, const UpaGeometry &fallback)
{
    if (!doc.contains(key))
        return fallback;
    const json &v = doc.at(key);
    require_keys(v, key, {"n_vertical", "n_horizontal", "spacing_ratio"});
    try
    {
        return UpaGeometry(get_int(v, key + ".", "n_vertical", fallback.n_vertical),
                           get_int(v, key + ".", "n_horizontal", fallback.n_horizontal),
                           get_number(v, key + ".", "spacing_ratio", fallback.spacing_ratio));
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(key + ": " + e.what());
    }
}

PlanarArea parse_area(const json &doc, const std::string &key, const PlanarArea &fallback)
{
    if (!doc.contains(key))
        return fallback;
    const json &v = doc.at(key);
    require_keys(v, key, {"center_x", "center_y", "width", "length", "z"});
    try
    {
        return PlanarArea(get_number(v, key + ".", "center_x", fallback.center_x),
                          get_number(v, key + ".", "center_y", fallback.center_y),
                          get_number(v, key + ".", "width", fallback.width),
                          get_number(v, key + ".", "length", fallback.length),
                          get_number(v, key + ".", "z", fallback.z));
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(key + ": " + e.what());
    }
}

QuadratureGrid parse_grid(const json &doc, const std::string &key,
                          const QuadratureGrid &fallback)
{
    if (!doc.contains(key))
        return fallback;
    const json &v = doc.at(key);
    require_keys(v, key, {"nx", "ny"});
    try
    {
        return QuadratureGrid(get_int(v, key + ".", "nx", fallback.nx),
                              get_int(v, key + ".", "ny", fallback.ny));
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(key + ": " + e.what());
    }
}

std::vector<double> default_power_grid()
{
    std::vector<double> powers;
    for (double p = 20.0; p <= 40.0 + 1e-9; p += 2.5)
        powers.push_back(p);
    return powers;
}

json scheme_list_json(const std::vector<SchemeKind> &schemes)
{
    json arr = json::array();
    for (SchemeKind s : schemes)
        arr.push_back(to_string(s));
    return arr;
}

} // namespace

ScenarioConfig config_from_json(const json &doc)
{
    static const std::set<std::string> top_keys = {
        "bs_position",   "ris_position",       "bs_array",       "ris_array",
        "rx_area",       "eve_area",           "pathloss",       "rician_k",
        "bs_ris_rician_k", "noise_dbm",        "transmit_power_dbm", "power_grid_dbm",
        "quadrature_grid", "eval_grid",        "heatmap_cells",  "fading_draws",
        "ao",            "monte_carlo",        "schemes"};
    require_keys(doc, "", top_keys);

    ScenarioConfig cfg;
    Scenario &sc = cfg.scenario;

    sc.bs_position = parse_position(doc, "bs_position", sc.bs_position);
    sc.ris_position = parse_position(doc, "ris_position", sc.ris_position);
    sc.bs_array = parse_array(doc, "bs_array", sc.bs_array);
    sc.ris_array = parse_array(doc, "ris_array", sc.ris_array);
    sc.rx_area = parse_area(doc, "rx_area", sc.rx_area);
    sc.eve_area = parse_area(doc, "eve_area", sc.eve_area);

    double pl0_db = -30.0;
    double d0 = 1.0;
    double alpha = 2.2;
    if (doc.contains("pathloss"))
    {
        const json &v = doc.at("pathloss");
        require_keys(v, "pathloss", {"pl0_db", "reference_distance_m", "exponent"});
        pl0_db = get_number(v, "pathloss.", "pl0_db", pl0_db);
        d0 = get_number(v, "pathloss.", "reference_distance_m", d0);
        alpha = get_number(v, "pathloss.", "exponent", alpha);
    }
    try
    {
        sc.pathloss = PathlossModel(db_to_linear(pl0_db), d0, alpha);
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(std::string("pathloss: ") + e.what());
    }

    const double k_r = get_number(doc, "", "rician_k", 13.2);
    const double k_h = get_number(doc, "", "bs_ris_rician_k", k_r);
    try
    {
        sc.rician = RicianModel(k_r);
        sc.bs_ris_rician = RicianModel(k_h);
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(std::string("rician_k: ") + e.what());
    }

    const double noise_dbm = get_number(doc, "", "noise_dbm", -105.0);
    sc.noise_power_w = dbm_to_watt(noise_dbm);
    if (!(sc.noise_power_w > 0.0) || !std::isfinite(sc.noise_power_w))
        throw ConfigError("noise_dbm: resulting noise power must be positive and finite");

    cfg.transmit_power_dbm = get_number(doc, "", "transmit_power_dbm", 35.0);
    if (!std::isfinite(dbm_to_watt(cfg.transmit_power_dbm)) ||
        !(dbm_to_watt(cfg.transmit_power_dbm) > 0.0))
        throw ConfigError("transmit_power_dbm: resulting power must be positive and finite");

    if (doc.contains("power_grid_dbm"))
    {
        const json &v = doc.at("power_grid_dbm");
        if (!v.is_array() || v.empty())
            throw ConfigError("power_grid_dbm: expected a non-empty array of dBm values");
        for (const json &p : v)
        {
            if (!p.is_number())
                throw ConfigError("power_grid_dbm: expected a non-empty array of dBm values");
            cfg.power_grid_dbm.push_back(p.get<double>());
        }
    }
    else
    {
        cfg.power_grid_dbm = default_power_grid();
    }

    cfg.eval.j_grid = parse_grid(doc, "quadrature_grid", QuadratureGrid(64, 64));
    cfg.eval.eval_grid = parse_grid(doc, "eval_grid", QuadratureGrid(48, 30));
    cfg.heatmap_cells = parse_grid(doc, "heatmap_cells", QuadratureGrid(48, 30));
    cfg.eval.fading_draws = get_int(doc, "", "fading_draws", 8);
    if (cfg.eval.fading_draws < 1)
        throw ConfigError("fading_draws: must be >= 1");

    if (doc.contains("ao"))
    {
        const json &v = doc.at("ao");
        require_keys(v, "ao",
                     {"epsilon", "max_outer", "max_inner_mm", "random_init", "init_seed"});
        cfg.ao.epsilon = get_number(v, "ao.", "epsilon", 1e-5);
        cfg.ao.max_outer = get_int(v, "ao.", "max_outer", 200);
        cfg.ao.max_inner_mm = get_int(v, "ao.", "max_inner_mm", 100);
        cfg.ao.random_init = get_bool(v, "ao.", "random_init", false);
        cfg.ao.init_seed = get_u64(v, "ao.", "init_seed", 0);
    }
    if (!(cfg.ao.epsilon > 0.0))
        throw ConfigError("ao.epsilon: must be > 0");
    if (cfg.ao.max_outer < 1 || cfg.ao.max_inner_mm < 1)
        throw ConfigError("ao.max_outer/max_inner_mm: must be >= 1");

    if (doc.contains("monte_carlo"))
    {
        const json &v = doc.at("monte_carlo");
        require_keys(v, "monte_carlo", {"n_trials", "base_seed"});
        const int trials = get_int(v, "monte_carlo.", "n_trials", 100);
        if (trials < 1)
            throw ConfigError("monte_carlo.n_trials: must be >= 1");
        cfg.mc = MonteCarloConfig(trials, get_u64(v, "monte_carlo.", "base_seed", 1));
    }

    if (doc.contains("schemes"))
    {
        const json &v = doc.at("schemes");
        if (!v.is_array() || v.empty())
            throw ConfigError("schemes: expected a non-empty array of scheme names");
        for (const json &s : v)
        {
            if (!s.is_string())
                throw ConfigError("schemes: expected scheme names as strings");
            cfg.schemes.push_back(scheme_from_string(s.get<std::string>()));
        }
    }
    else
    {
        cfg.schemes = {SchemeKind::Proposed, SchemeKind::RxOnly, SchemeKind::Random};
    }

    if (!areas_disjoint(sc.rx_area, sc.eve_area))
        throw ConfigError("rx_area/eve_area: areas must be disjoint");

    // Echo the complete external-form document so a run report alone
    // reproduces the run.
    cfg.resolved = json{
        {"bs_position", {sc.bs_position.x, sc.bs_position.y, sc.bs_position.z}},
        {"ris_position", {sc.ris_position.x, sc.ris_position.y, sc.ris_position.z}},
        {"bs_array",
         {{"n_vertical", sc.bs_array.n_vertical},
          {"n_horizontal", sc.bs_array.n_horizontal},
          {"spacing_ratio", sc.bs_array.spacing_ratio}}},
        {"ris_array",
         {{"n_vertical", sc.ris_array.n_vertical},
          {"n_horizontal", sc.ris_array.n_horizontal},
          {"spacing_ratio", sc.ris_array.spacing_ratio}}},
        {"rx_area",
         {{"center_x", sc.rx_area.center_x},
          {"center_y", sc.rx_area.center_y},
          {"width", sc.rx_area.width},
          {"length", sc.rx_area.length},
          {"z", sc.rx_area.z}}},
        {"eve_area",
         {{"center_x", sc.eve_area.center_x},
          {"center_y", sc.eve_area.center_y},
          {"width", sc.eve_area.width},
          {"length", sc.eve_area.length},
          {"z", sc.eve_area.z}}},
        {"pathloss",
         {{"pl0_db", pl0_db}, {"reference_distance_m", d0}, {"exponent", alpha}}},
        {"rician_k", k_r},
        {"bs_ris_rician_k", k_h},
        {"noise_dbm", noise_dbm},
        {"transmit_power_dbm", cfg.transmit_power_dbm},
        {"power_grid_dbm", cfg.power_grid_dbm},
        {"quadrature_grid", {{"nx", cfg.eval.j_grid.nx}, {"ny", cfg.eval.j_grid.ny}}},
        {"eval_grid", {{"nx", cfg.eval.eval_grid.nx}, {"ny", cfg.eval.eval_grid.ny}}},
        {"heatmap_cells", {{"nx", cfg.heatmap_cells.nx}, {"ny", cfg.heatmap_cells.ny}}},
        {"fading_draws", cfg.eval.fading_draws},
        {"ao",
         {{"epsilon", cfg.ao.epsilon},
          {"max_outer", cfg.ao.max_outer},
          {"max_inner_mm", cfg.ao.max_inner_mm},
          {"random_init", cfg.ao.random_init},
          {"init_seed", cfg.ao.init_seed}}},
        {"monte_carlo", {{"n_trials", cfg.mc.n_trials}, {"base_seed", cfg.mc.base_seed}}},
        {"schemes", scheme_list_json(cfg.schemes)},
    };
    return cfg;
}

ScenarioConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config file not readable: " + path);
    json doc;
    try
    {
        doc = json::parse(in);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return config_from_json(doc);
}

ScenarioConfig default_config() { return config_from_json(nlohmann::json::object()); }

} // namespace rissec
