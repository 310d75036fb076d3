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

#include "rissec/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "rissec/config.hpp"

namespace rissec
{

namespace
{

namespace fs = std::filesystem;
using nlohmann::json;

// Tracks which result files have been written so an I/O failure can report
// the partial output set.
struct OutputSet
{
    std::string dir;
    std::vector<std::string> files;

    std::string path(const std::string &name) const { return (fs::path(dir) / name).string(); }

    void wrote(const std::string &name) { files.push_back(path(name)); }

    int report_io_failure(const std::exception &e) const
    {
        std::cerr << "I/O failure: " << e.what() << "\n";
        std::cerr << "partial outputs (" << files.size() << " file(s)):\n";
        for (const std::string &f : files)
            std::cerr << "  " << f << "\n";
        return 3;
    }
};

struct CommonOptions
{
    std::string config_path;
    std::string out_dir = "results";
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::string scheme;
};

ScenarioConfig resolve_config(const CommonOptions &opts)
{
    ScenarioConfig cfg =
        opts.config_path.empty() ? default_config() : load_config(opts.config_path);
    if (opts.seed || opts.trials)
    {
        json doc = cfg.resolved;
        if (opts.seed)
            doc["monte_carlo"]["base_seed"] = *opts.seed;
        if (opts.trials)
        {
            if (*opts.trials < 1)
                throw ConfigError("--trials: must be >= 1");
            doc["monte_carlo"]["n_trials"] = *opts.trials;
        }
        cfg = config_from_json(doc);
    }
    return cfg;
}

json vector_json(const arma::cx_vec &v)
{
    json re = json::array();
    json im = json::array();
    for (arma::uword i = 0; i < v.n_elem; ++i)
    {
        re.push_back(v(i).real());
        im.push_back(v(i).imag());
    }
    return json{{"re", re}, {"im", im}};
}

arma::cx_mat draw_bs_ris(const Scenario &sc, std::uint64_t base_seed, int trial)
{
    // Same keying as the evaluation module (tag 1 = BS-RIS draws).
    RngStream rng = RngStream(base_seed).substream(1).substream(trial);
    return sample_bs_ris(sc.bs_array, sc.ris_array, sc.bs_position, sc.ris_position,
                         sc.pathloss, sc.bs_ris_rician, rng);
}

json convergence_json(const ConvergenceSummary &sum)
{
    return json{{"ao_runs", sum.ao_runs},
                {"converged_runs", sum.converged_runs},
                {"max_outer_iterations", sum.max_outer_iterations},
                {"max_eigen_residual", sum.max_eigen_residual}};
}

int cmd_optimize(const CommonOptions &opts)
{
    const auto start = std::chrono::steady_clock::now();
    ScenarioConfig cfg = resolve_config(opts);
    const Scenario &sc = cfg.scenario;

    CorrelationMatrix j_rx =
        compute_correlation(sc.rx_area, cfg.eval.j_grid, sc.ris_position, sc.ris_array,
                            sc.pathloss, sc.rician);
    CorrelationMatrix j_e =
        compute_correlation(sc.eve_area, cfg.eval.j_grid, sc.ris_position, sc.ris_array,
                            sc.pathloss, sc.rician);

    SystemMatrices sys;
    sys.h = draw_bs_ris(sc, cfg.mc.base_seed, 0);
    sys.j_rx = j_rx;
    sys.j_e = j_e;
    sys.noise_power = sc.noise_power_w;
    sys.s_rx = sc.rx_area.measure();
    sys.s_e = sc.eve_area.measure();
    sys.transmit_power = cfg.transmit_power_w();

    AOResult result = alternating_optimize(sys, cfg.ao);

    OutputSet out{opts.out_dir, {}};
    try
    {
        fs::create_directories(out.dir);

        json solution{{"objective_bpshz", result.trace.objective_per_iteration.back()},
                      {"iterations", result.trace.iterations_used},
                      {"converged", result.trace.converged},
                      {"max_eigen_residual", result.trace.max_eigen_residual},
                      {"precoder", vector_json(result.v.v)},
                      {"phases", vector_json(result.phi.phi)}};
        {
            std::ofstream f(out.path("solution.json"));
            f << solution.dump(2) << "\n";
            if (!f)
                throw std::runtime_error("cannot write " + out.path("solution.json"));
        }
        out.wrote("solution.json");

        save_trace_csv(out.path("ao_trace.csv"), result.trace);
        out.wrote("ao_trace.csv");
        save_correlation_csv(out.path("j_rx.csv"), j_rx, sc.rx_area, cfg.eval.j_grid);
        out.wrote("j_rx.csv");
        save_correlation_csv(out.path("j_eve.csv"), j_e, sc.eve_area, cfg.eval.j_grid);
        out.wrote("j_eve.csv");

        ConvergenceSummary sum;
        sum.absorb(result.trace);
        RunReport report{"optimize", cfg.resolved,
                         std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                       start)
                             .count(),
                         out.files, convergence_json(sum)};
        write_report(out.dir, report);
    }
    catch (const std::runtime_error &e)
    {
        return out.report_io_failure(e);
    }
    std::cout << "optimize: objective "
              << format_sig9(result.trace.objective_per_iteration.back()) << " bps/Hz after "
              << result.trace.iterations_used << " outer iterations ("
              << (result.trace.converged ? "converged" : "max_outer reached") << ")\n";
    return 0;
}

int cmd_sweep_power(const CommonOptions &opts)
{
    const auto start = std::chrono::steady_clock::now();
    ScenarioConfig cfg = resolve_config(opts);

    std::vector<SchemeKind> schemes = cfg.schemes;
    if (!opts.scheme.empty())
        schemes = {scheme_from_string(opts.scheme)};

    PowerSweepResult result = power_sweep(cfg.scenario, schemes, cfg.power_grid_dbm, cfg.mc,
                                          cfg.eval, cfg.ao);

    OutputSet out{opts.out_dir, {}};
    try
    {
        fs::create_directories(out.dir);
        write_power_sweep_csv(out.path("power_sweep.csv"), result);
        out.wrote("power_sweep.csv");

        RunReport report{"sweep-power", cfg.resolved,
                         std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                       start)
                             .count(),
                         out.files, convergence_json(result.convergence)};
        write_report(out.dir, report);
    }
    catch (const std::runtime_error &e)
    {
        return out.report_io_failure(e);
    }
    std::cout << "sweep-power: " << result.rows.size() << " rows over "
              << cfg.power_grid_dbm.size() << " power levels written to "
              << out.path("power_sweep.csv") << "\n";
    return 0;
}

// Heatmap scheme argument: a single scheme name emits its rate maps; the
// form "<optimized>-vs-<baseline>" emits per-area gain maps.
int cmd_heatmap(const CommonOptions &opts)
{
    const auto start = std::chrono::steady_clock::now();
    ScenarioConfig cfg = resolve_config(opts);

    std::string arg = opts.scheme.empty() ? "rx-only-vs-random" : opts.scheme;
    std::optional<SchemeKind> optimized;
    std::optional<SchemeKind> baseline;
    const std::string sep = "-vs-";
    if (auto pos = arg.find(sep); pos != std::string::npos)
    {
        optimized = scheme_from_string(arg.substr(0, pos));
        baseline = scheme_from_string(arg.substr(pos + sep.size()));
    }
    else
    {
        optimized = scheme_from_string(arg);
    }

    ConvergenceSummary convergence;
    AreaRateMaps maps = rate_heatmap(*optimized, cfg.scenario, cfg.transmit_power_w(), cfg.mc,
                                     cfg.heatmap_cells, cfg.eval, cfg.ao, &convergence);

    OutputSet out{opts.out_dir, {}};
    try
    {
        fs::create_directories(out.dir);
        if (baseline)
        {
            AreaRateMaps base = rate_heatmap(*baseline, cfg.scenario, cfg.transmit_power_w(),
                                             cfg.mc, cfg.heatmap_cells, cfg.eval, cfg.ao,
                                             &convergence);
            write_rate_map_csv(out.path("gain_rx.csv"), gain_map(maps.rx, base.rx), true);
            out.wrote("gain_rx.csv");
            write_rate_map_csv(out.path("gain_eve.csv"), gain_map(maps.eve, base.eve), true);
            out.wrote("gain_eve.csv");
        }
        else
        {
            write_rate_map_csv(out.path("heatmap_rx.csv"), maps.rx, false);
            out.wrote("heatmap_rx.csv");
            write_rate_map_csv(out.path("heatmap_eve.csv"), maps.eve, false);
            out.wrote("heatmap_eve.csv");
        }

        RunReport report{"heatmap", cfg.resolved,
                         std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                       start)
                             .count(),
                         out.files, convergence_json(convergence)};
        write_report(out.dir, report);
    }
    catch (const std::runtime_error &e)
    {
        return out.report_io_failure(e);
    }
    std::cout << "heatmap: " << out.files.size() << " maps written to " << out.dir << "\n";
    return 0;
}

void add_common_options(CLI::App *sub, CommonOptions &opts, bool with_scheme)
{
    sub->add_option("--config", opts.config_path, "JSON scenario configuration");
    sub->add_option("--out", opts.out_dir, "output directory");
    sub->add_option("--seed", opts.seed, "override monte_carlo.base_seed");
    sub->add_option("--trials", opts.trials, "override monte_carlo.n_trials");
    if (with_scheme)
        sub->add_option("--scheme", opts.scheme,
                        "scheme name (heatmap also accepts <scheme>-vs-<scheme>)");
}

} // namespace

void write_report(const std::string &out_dir, const RunReport &report)
{
    json doc{{"command", report.command},
             {"config", report.resolved_config},
             {"wall_seconds", report.wall_seconds},
             {"outputs", report.output_files},
             {"convergence", report.convergence}};
    const std::string path = (fs::path(out_dir) / "report.json").string();
    std::ofstream f(path);
    f << doc.dump(2) << "\n";
    if (!f)
        throw std::runtime_error("cannot write " + path);
}

int run_command(int argc, const char *const *argv)
{
    CLI::App app{"RIS-assisted secure beamforming: spatial secrecy optimization and "
                 "evaluation"};
    app.require_subcommand(1);

    CommonOptions opt_optimize, opt_sweep, opt_heatmap;
    CLI::App *sub_optimize =
        app.add_subcommand("optimize", "single AO run; emits precoder, phases and trace");
    add_common_options(sub_optimize, opt_optimize, false);
    CLI::App *sub_sweep =
        app.add_subcommand("sweep-power", "per-scheme max spatial rates vs transmit power");
    add_common_options(sub_sweep, opt_sweep, true);
    CLI::App *sub_heatmap =
        app.add_subcommand("heatmap", "per-cell mean rate or gain maps over both areas");
    add_common_options(sub_heatmap, opt_heatmap, true);
    CLI::App *sub_selftest =
        app.add_subcommand("selftest", "run the small-scale oracle suite");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        if (sub_optimize->parsed())
            return cmd_optimize(opt_optimize);
        if (sub_sweep->parsed())
            return cmd_sweep_power(opt_sweep);
        if (sub_heatmap->parsed())
            return cmd_heatmap(opt_heatmap);
        if (sub_selftest->parsed())
            return run_selftest();
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

} // namespace rissec
