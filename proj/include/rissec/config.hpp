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

#ifndef RISSEC_CONFIG_HPP
#define RISSEC_CONFIG_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "rissec/evaluation.hpp"

namespace rissec
{

// Fully resolved experiment configuration. Every key in the JSON document
// is optional; omitted keys take the documented defaults. dB/dBm values are
// converted to linear scale at ingestion, and `resolved` echoes the complete
// external-form document (defaults materialized) so a run can be reproduced
// from its report alone.
struct ScenarioConfig
{
    Scenario scenario;
    double transmit_power_dbm = 35.0;
    std::vector<double> power_grid_dbm; // default 20..40 dBm in 2.5 dBm steps
    EvalSettings eval;
    QuadratureGrid heatmap_cells{48, 30};
    AOConfig ao;
    MonteCarloConfig mc;
    std::vector<SchemeKind> schemes; // default all three

    double transmit_power_w() const { return dbm_to_watt(transmit_power_dbm); }

    nlohmann::json resolved;
};

// Parses and validates a config document; errors name the offending key and
// raise ConfigError.
ScenarioConfig config_from_json(const nlohmann::json &doc);
ScenarioConfig load_config(const std::string &path);
ScenarioConfig default_config();

} // namespace rissec

#endif
