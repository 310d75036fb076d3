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

#ifndef RISSEC_CLI_HPP
#define RISSEC_CLI_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace rissec
{

// Reproducibility record written next to every result set.
struct RunReport
{
    std::string command;
    nlohmann::json resolved_config;
    double wall_seconds = 0.0;
    std::vector<std::string> output_files;
    nlohmann::json convergence;
};

void write_report(const std::string &out_dir, const RunReport &report);

// Small-scale oracle suite (grids, raw-loop re-evaluations, hand formulas);
// prints one line per check and returns 0 when all pass.
int run_selftest();

// Entry point behind the ris-secrecy binary. Subcommands: optimize,
// sweep-power, heatmap, selftest. Returns 0 on success, 2 on configuration
// or usage errors, 3 on numerical or I/O failures.
int run_command(int argc, const char *const *argv);

} // namespace rissec

#endif
