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

#include "rissec/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "rissec/common.hpp"
#include "rissec/parallel.hpp"

namespace rissec
{

namespace
{

// Stream tags keying the per-item RNG substreams; results must not depend on
// the worker count, only on (base_seed, tag, trial, item).
constexpr std::uint64_t tag_bs_ris = 1;
constexpr std::uint64_t tag_random_cfg = 2;
constexpr std::uint64_t tag_cell_fade = 3;
constexpr std::uint64_t tag_mc_position = 4;
constexpr std::uint64_t tag_mc_fade = 5;
constexpr std::uint64_t tag_area_avg = 6;

double axis_orientation(double area_center, double ris_coord)
{
    return area_center < ris_coord ? -1.0 : 1.0;
}

// Maps a stratified cell quantile to a point of the area. The offsets are
// oriented away from the RIS plane, so two areas mirrored about the RIS map
// the same (cell, quantile) to statistically identical positions; this is
// what couples the RX/Eve samples of the secrecy estimators.
Position3D stratified_point(const PlanarArea &area, const Position3D &ris,
                            const QuadratureGrid &grid, int cell, double u1, double u2)
{
    const int ix = cell % grid.nx;
    const int iy = cell / grid.nx;
    const double fx = (ix + u1) / grid.nx;
    const double fy = (iy + u2) / grid.ny;
    const double sx = axis_orientation(area.center_x, ris.x);
    const double sy = axis_orientation(area.center_y, ris.y);
    return Position3D(area.center_x + sx * (fx - 0.5) * area.width,
                      area.center_y + sy * (fy - 0.5) * area.length, area.z);
}

ChannelStatistics stats_at(const Scenario &sc, const Position3D &p)
{
    const double kappa = pathloss_gain(sc.pathloss, distance(sc.ris_position, p));
    arma::cx_vec los = steering_vector(sc.ris_array, departure_angles(sc.ris_position, p));
    return channel_statistics(kappa, sc.rician, los);
}

double rate_from_amplitude(std::complex<double> amp, double noise_power)
{
    return std::log2(1.0 + std::norm(amp) / noise_power);
}

// Fading-averaged rates for all configurations at one position, sharing the
// same NLOS draws across configurations.
void accumulate_rates(const ChannelStatistics &stats, const std::vector<arma::cx_vec> &w_cfgs,
                      double noise_power, int draws, RngStream &rng, double *mean_out)
{
    const arma::uword l = stats.mean.n_elem;
    const double s = std::sqrt(stats.covariance_scale);
    const size_t n_cfg = w_cfgs.size();
    std::vector<double> acc(n_cfg, 0.0);
    arma::cx_vec f(l);
    for (int d = 0; d < draws; ++d)
    {
        for (arma::uword i = 0; i < l; ++i)
            f(i) = stats.mean(i) + s * rng.complex_normal();
        for (size_t c = 0; c < n_cfg; ++c)
            acc[c] += rate_from_amplitude(arma::cdot(f, w_cfgs[c]), noise_power);
    }
    for (size_t c = 0; c < n_cfg; ++c)
        mean_out[c] = acc[c] / draws;
}

struct SecrecySums
{
    double clamped = 0.0;
    double rx = 0.0;
    double eve = 0.0;
};

SecrecySums secrecy_mc_sums(const Scenario &scenario, const arma::cx_mat &h_matrix,
                            const Precoder &v, const PhaseProfile &phi,
                            const MonteCarloConfig &mc, const QuadratureGrid &grid)
{
    scenario.validate();
    if (!areas_disjoint(scenario.rx_area, scenario.eve_area))
        throw std::invalid_argument("secrecy estimators require disjoint areas");

    const arma::cx_vec w_cfg = phi.phi % (h_matrix * v.v);
    const double noise = scenario.noise_power_w;
    const int cells = grid.nx * grid.ny;
    const RngStream root(mc.base_seed);

    std::vector<SecrecySums> per_trial(mc.n_trials);
    parallel_for(mc.n_trials, [&](int t) {
        SecrecySums sums;
        RngStream pos_root = root.substream(tag_mc_position).substream(t);
        RngStream fade_root = root.substream(tag_mc_fade).substream(t);
        for (int k = 0; k < cells; ++k)
        {
            RngStream pos_rng = pos_root.substream(k);
            const double u1 = pos_rng.uniform();
            const double u2 = pos_rng.uniform();
            const Position3D p_rx =
                stratified_point(scenario.rx_area, scenario.ris_position, grid, k, u1, u2);
            const Position3D p_e =
                stratified_point(scenario.eve_area, scenario.ris_position, grid, k, u1, u2);
            const ChannelStatistics st_rx = stats_at(scenario, p_rx);
            const ChannelStatistics st_e = stats_at(scenario, p_e);

            // Both links share one NLOS draw per sample (common random
            // numbers); marginals are unchanged.
            RngStream fade_rng = fade_root.substream(k);
            const arma::uword l = st_rx.mean.n_elem;
            const double s_rx = std::sqrt(st_rx.covariance_scale);
            const double s_e = std::sqrt(st_e.covariance_scale);
            std::complex<double> amp_rx = 0.0;
            std::complex<double> amp_e = 0.0;
            for (arma::uword i = 0; i < l; ++i)
            {
                const std::complex<double> w = fade_rng.complex_normal();
                amp_rx += std::conj(st_rx.mean(i) + s_rx * w) * w_cfg(i);
                amp_e += std::conj(st_e.mean(i) + s_e * w) * w_cfg(i);
            }
            const double r_rx = rate_from_amplitude(amp_rx, noise);
            const double r_e = rate_from_amplitude(amp_e, noise);
            sums.clamped += std::max(r_rx - r_e, 0.0);
            sums.rx += r_rx;
            sums.eve += r_e;
        }
        per_trial[t] = sums;
    });

    SecrecySums total;
    for (const SecrecySums &s : per_trial)
    {
        total.clamped += s.clamped;
        total.rx += s.rx;
        total.eve += s.eve;
    }
    const double n = static_cast<double>(mc.n_trials) * cells;
    total.clamped /= n;
    total.rx /= n;
    total.eve /= n;
    return total;
}

} // namespace

std::string to_string(SchemeKind s)
{
    switch (s)
    {
    case SchemeKind::Proposed:
        return "proposed";
    case SchemeKind::RxOnly:
        return "rx-only";
    case SchemeKind::Random:
        return "random";
    }
    return "unknown";
}

SchemeKind scheme_from_string(const std::string &name)
{
    if (name == "proposed")
        return SchemeKind::Proposed;
    if (name == "rx-only" || name == "rx_only" || name == "rxonly")
        return SchemeKind::RxOnly;
    if (name == "random")
        return SchemeKind::Random;
    throw ConfigError("schemes: unknown scheme '" + name +
                      "' (expected proposed, rx-only or random)");
}

MonteCarloConfig::MonteCarloConfig(int trials, std::uint64_t seed)
    : n_trials(trials), base_seed(seed)
{
    if (trials < 1)
        throw std::invalid_argument("MonteCarloConfig: n_trials must be >= 1");
}

void Scenario::validate() const
{
    if (!(noise_power_w > 0.0))
        throw std::invalid_argument("Scenario: noise power must be > 0");
    if (!areas_disjoint(rx_area, eve_area))
        throw std::invalid_argument("Scenario: areas must be disjoint");
}

void ConvergenceSummary::absorb(const AOTrace &trace)
{
    ++ao_runs;
    if (trace.converged)
        ++converged_runs;
    max_outer_iterations = std::max(max_outer_iterations, trace.iterations_used);
    max_eigen_residual = std::max(max_eigen_residual, trace.max_eigen_residual);
}

double link_rate(const arma::cx_vec &f, const PhaseProfile &phi, const arma::cx_mat &h,
                 const Precoder &v, double noise_power)
{
    const arma::cx_vec w = phi.phi % (h * v.v);
    return rate_from_amplitude(arma::cdot(f, w), noise_power);
}

double spatial_secrecy_mc(const Scenario &scenario, const arma::cx_mat &h_matrix,
                          const Precoder &v, const PhaseProfile &phi,
                          const MonteCarloConfig &mc, const QuadratureGrid &grid)
{
    return secrecy_mc_sums(scenario, h_matrix, v, phi, mc, grid).clamped;
}

double decomposed_secrecy(const Scenario &scenario, const arma::cx_mat &h_matrix,
                          const Precoder &v, const PhaseProfile &phi,
                          const MonteCarloConfig &mc, const QuadratureGrid &grid)
{
    SecrecySums sums = secrecy_mc_sums(scenario, h_matrix, v, phi, mc, grid);
    return sums.rx - sums.eve;
}

double area_average_rate(const Scenario &scenario, const PlanarArea &area,
                         const arma::cx_mat &h_matrix, const Precoder &v,
                         const PhaseProfile &phi, const MonteCarloConfig &mc,
                         const QuadratureGrid &grid, std::uint64_t stream_tag)
{
    const arma::cx_vec w_cfg = phi.phi % (h_matrix * v.v);
    const double noise = scenario.noise_power_w;
    const int cells = grid.nx * grid.ny;
    const RngStream root(mc.base_seed);

    std::vector<double> per_trial(mc.n_trials, 0.0);
    parallel_for(mc.n_trials, [&](int t) {
        RngStream trial_rng =
            root.substream(tag_area_avg + stream_tag).substream(t);
        double acc = 0.0;
        for (int k = 0; k < cells; ++k)
        {
            RngStream rng = trial_rng.substream(k);
            const double u1 = rng.uniform();
            const double u2 = rng.uniform();
            const Position3D p =
                stratified_point(area, scenario.ris_position, grid, k, u1, u2);
            const ChannelStatistics st = stats_at(scenario, p);
            arma::cx_vec f = sample_rician(st, rng);
            acc += rate_from_amplitude(arma::cdot(f, w_cfg), noise);
        }
        per_trial[t] = acc / cells;
    });

    double total = 0.0;
    for (double r : per_trial)
        total += r;
    return total / mc.n_trials;
}

namespace
{

// Cell-center channel statistics of an evaluation grid, computed once per
// area and reused by every trial, scheme and power level.
std::vector<ChannelStatistics> cell_statistics(const Scenario &sc, const PlanarArea &area,
                                               const QuadratureGrid &grid)
{
    std::vector<ChannelStatistics> stats(static_cast<size_t>(grid.nx) * grid.ny);
    parallel_for(grid.ny, [&](int iy) {
        const double y = area.min_y() + (iy + 0.5) * area.length / grid.ny;
        for (int ix = 0; ix < grid.nx; ++ix)
        {
            const double x = area.min_x() + (ix + 0.5) * area.width / grid.nx;
            stats[static_cast<size_t>(iy) * grid.nx + ix] =
                stats_at(sc, Position3D(x, y, area.z));
        }
    });
    return stats;
}

SystemMatrices build_system(const Scenario &sc, const arma::cx_mat &h,
                            const CorrelationMatrix &j_rx, const CorrelationMatrix &j_e,
                            double transmit_power_w)
{
    SystemMatrices sys;
    sys.h = h;
    sys.j_rx = j_rx;
    sys.j_e = j_e;
    sys.noise_power = sc.noise_power_w;
    sys.s_rx = sc.rx_area.measure();
    sys.s_e = sc.eve_area.measure();
    sys.transmit_power = transmit_power_w;
    return sys;
}

// Random baseline per trial: one direction and one phase draw, shared by all
// power levels of the trial so scaling the budget only scales the precoder.
std::pair<arma::cx_vec, arma::cx_vec> random_direction_and_phases(const Scenario &sc,
                                                                  RngStream rng)
{
    const int n = sc.bs_array.total_elements();
    const int l = sc.ris_array.total_elements();
    arma::cx_vec g(n);
    for (int i = 0; i < n; ++i)
        g(i) = rng.complex_normal();
    g /= arma::norm(g);
    arma::cx_vec phases(l);
    for (int i = 0; i < l; ++i)
        phases(i) = std::polar(1.0, 2.0 * pi * rng.uniform());
    return {std::move(g), std::move(phases)};
}

} // namespace

PowerSweepResult power_sweep(const Scenario &scenario, const std::vector<SchemeKind> &schemes,
                             const std::vector<double> &powers_dbm, const MonteCarloConfig &mc,
                             const EvalSettings &eval, const AOConfig &ao)
{
    scenario.validate();
    if (schemes.empty() || powers_dbm.empty())
        throw std::invalid_argument("power_sweep: schemes and powers must be non-empty");

    const CorrelationMatrix j_rx =
        compute_correlation(scenario.rx_area, eval.j_grid, scenario.ris_position,
                            scenario.ris_array, scenario.pathloss, scenario.rician);
    const CorrelationMatrix j_e =
        compute_correlation(scenario.eve_area, eval.j_grid, scenario.ris_position,
                            scenario.ris_array, scenario.pathloss, scenario.rician);

    const std::vector<ChannelStatistics> rx_stats =
        cell_statistics(scenario, scenario.rx_area, eval.eval_grid);
    const std::vector<ChannelStatistics> eve_stats =
        cell_statistics(scenario, scenario.eve_area, eval.eval_grid);

    const size_t n_cfg = powers_dbm.size() * schemes.size();
    const int cells = eval.eval_grid.nx * eval.eval_grid.ny;
    const RngStream root(mc.base_seed);

    struct TrialResult
    {
        std::vector<double> rx_max;
        std::vector<double> eve_max;
        std::vector<AOTrace> traces;
    };
    std::vector<TrialResult> trials(mc.n_trials);

    parallel_for(mc.n_trials, [&](int t) {
        RngStream h_rng = root.substream(tag_bs_ris).substream(t);
        const arma::cx_mat h =
            sample_bs_ris(scenario.bs_array, scenario.ris_array, scenario.bs_position,
                          scenario.ris_position, scenario.pathloss, scenario.bs_ris_rician,
                          h_rng);
        const auto [rand_dir, rand_phases] = random_direction_and_phases(
            scenario, root.substream(tag_random_cfg).substream(t));

        TrialResult &res = trials[t];
        std::vector<arma::cx_vec> w_cfgs(n_cfg);
        for (size_t pi = 0; pi < powers_dbm.size(); ++pi)
        {
            const double p_w = dbm_to_watt(powers_dbm[pi]);
            const SystemMatrices sys = build_system(scenario, h, j_rx, j_e, p_w);
            for (size_t si = 0; si < schemes.size(); ++si)
            {
                Precoder v;
                PhaseProfile phi;
                switch (schemes[si])
                {
                case SchemeKind::Proposed:
                {
                    AOResult r = alternating_optimize(sys, ao);
                    v = std::move(r.v);
                    phi = std::move(r.phi);
                    res.traces.push_back(std::move(r.trace));
                    break;
                }
                case SchemeKind::RxOnly:
                {
                    AOResult r = rx_only_optimize(sys, ao);
                    v = std::move(r.v);
                    phi = std::move(r.phi);
                    res.traces.push_back(std::move(r.trace));
                    break;
                }
                case SchemeKind::Random:
                    v.v = std::sqrt(p_w) * rand_dir;
                    phi.phi = rand_phases;
                    break;
                }
                w_cfgs[pi * schemes.size() + si] = phi.phi % (h * v.v);
            }
        }

        res.rx_max.assign(n_cfg, 0.0);
        res.eve_max.assign(n_cfg, 0.0);
        std::vector<double> means(n_cfg);
        for (int area_idx = 0; area_idx < 2; ++area_idx)
        {
            const auto &stats = area_idx == 0 ? rx_stats : eve_stats;
            std::vector<double> &maxima = area_idx == 0 ? res.rx_max : res.eve_max;
            std::fill(maxima.begin(), maxima.end(),
                      -std::numeric_limits<double>::infinity());
            RngStream fade_root = root.substream(tag_cell_fade).substream(t);
            for (int c = 0; c < cells; ++c)
            {
                RngStream rng = fade_root.substream(
                    static_cast<std::uint64_t>(area_idx) * 0x100000 + c);
                accumulate_rates(stats[c], w_cfgs, scenario.noise_power_w,
                                 eval.fading_draws, rng, means.data());
                for (size_t cfg = 0; cfg < n_cfg; ++cfg)
                    maxima[cfg] = std::max(maxima[cfg], means[cfg]);
            }
        }
    });

    PowerSweepResult result;
    result.powers_dbm = powers_dbm;
    for (size_t pi = 0; pi < powers_dbm.size(); ++pi)
        for (size_t si = 0; si < schemes.size(); ++si)
        {
            PowerSweepRow row;
            row.power_dbm = powers_dbm[pi];
            row.scheme = schemes[si];
            const size_t cfg = pi * schemes.size() + si;
            for (const TrialResult &tr : trials)
            {
                row.rx_max_rate += tr.rx_max[cfg];
                row.eve_max_rate += tr.eve_max[cfg];
            }
            row.rx_max_rate /= mc.n_trials;
            row.eve_max_rate /= mc.n_trials;
            result.rows.push_back(row);
        }
    for (const TrialResult &tr : trials)
        for (const AOTrace &trace : tr.traces)
            result.convergence.absorb(trace);
    return result;
}

AreaRateMaps rate_heatmap(SchemeKind scheme, const Scenario &scenario, double transmit_power_w,
                          const MonteCarloConfig &mc, const QuadratureGrid &cells,
                          const EvalSettings &eval, const AOConfig &ao,
                          ConvergenceSummary *convergence)
{
    scenario.validate();

    const CorrelationMatrix j_rx =
        compute_correlation(scenario.rx_area, eval.j_grid, scenario.ris_position,
                            scenario.ris_array, scenario.pathloss, scenario.rician);
    const CorrelationMatrix j_e =
        compute_correlation(scenario.eve_area, eval.j_grid, scenario.ris_position,
                            scenario.ris_array, scenario.pathloss, scenario.rician);

    const std::vector<ChannelStatistics> rx_stats =
        cell_statistics(scenario, scenario.rx_area, cells);
    const std::vector<ChannelStatistics> eve_stats =
        cell_statistics(scenario, scenario.eve_area, cells);

    const int n_cells = cells.nx * cells.ny;
    const RngStream root(mc.base_seed);

    struct TrialMaps
    {
        std::vector<double> rx;
        std::vector<double> eve;
        AOTrace trace;
        bool has_trace = false;
    };
    std::vector<TrialMaps> trials(mc.n_trials);

    parallel_for(mc.n_trials, [&](int t) {
        RngStream h_rng = root.substream(tag_bs_ris).substream(t);
        const arma::cx_mat h =
            sample_bs_ris(scenario.bs_array, scenario.ris_array, scenario.bs_position,
                          scenario.ris_position, scenario.pathloss, scenario.bs_ris_rician,
                          h_rng);
        const SystemMatrices sys = build_system(scenario, h, j_rx, j_e, transmit_power_w);

        Precoder v;
        PhaseProfile phi;
        TrialMaps &maps = trials[t];
        switch (scheme)
        {
        case SchemeKind::Proposed:
        {
            AOResult r = alternating_optimize(sys, ao);
            v = std::move(r.v);
            phi = std::move(r.phi);
            maps.trace = std::move(r.trace);
            maps.has_trace = true;
            break;
        }
        case SchemeKind::RxOnly:
        {
            AOResult r = rx_only_optimize(sys, ao);
            v = std::move(r.v);
            phi = std::move(r.phi);
            maps.trace = std::move(r.trace);
            maps.has_trace = true;
            break;
        }
        case SchemeKind::Random:
        {
            RngStream rng = root.substream(tag_random_cfg).substream(t);
            const auto [dir, phases] = random_direction_and_phases(scenario, rng);
            v.v = std::sqrt(transmit_power_w) * dir;
            phi.phi = phases;
            break;
        }
        }
        const std::vector<arma::cx_vec> w_cfgs = {phi.phi % (h * v.v)};

        maps.rx.resize(n_cells);
        maps.eve.resize(n_cells);
        RngStream fade_root = root.substream(tag_cell_fade).substream(t);
        for (int area_idx = 0; area_idx < 2; ++area_idx)
        {
            const auto &stats = area_idx == 0 ? rx_stats : eve_stats;
            std::vector<double> &out = area_idx == 0 ? maps.rx : maps.eve;
            for (int c = 0; c < n_cells; ++c)
            {
                RngStream rng = fade_root.substream(
                    static_cast<std::uint64_t>(area_idx) * 0x100000 + c);
                accumulate_rates(stats[c], w_cfgs, scenario.noise_power_w,
                                 eval.fading_draws, rng, &out[c]);
            }
        }
    });

    AreaRateMaps result;
    for (int area_idx = 0; area_idx < 2; ++area_idx)
    {
        RateMapGrid &map = area_idx == 0 ? result.rx : result.eve;
        map.area = area_idx == 0 ? scenario.rx_area : scenario.eve_area;
        map.nx = cells.nx;
        map.ny = cells.ny;
        map.values.assign(n_cells, 0.0);
        for (const TrialMaps &tm : trials)
        {
            const std::vector<double> &src = area_idx == 0 ? tm.rx : tm.eve;
            for (int c = 0; c < n_cells; ++c)
                map.values[c] += src[c];
        }
        for (int c = 0; c < n_cells; ++c)
            map.values[c] /= mc.n_trials;
    }
    if (convergence)
        for (const TrialMaps &tm : trials)
            if (tm.has_trace)
                convergence->absorb(tm.trace);
    return result;
}

RateMapGrid gain_map(const RateMapGrid &map_optimized, const RateMapGrid &map_baseline)
{
    if (map_optimized.nx != map_baseline.nx || map_optimized.ny != map_baseline.ny)
        throw std::invalid_argument("gain_map: grid dimensions do not match");

    RateMapGrid gain = map_optimized;
    for (size_t i = 0; i < gain.values.size(); ++i)
    {
        const double base = map_baseline.values[i];
        gain.values[i] = base == 0.0
                             ? std::numeric_limits<double>::quiet_NaN()
                             : 100.0 * (map_optimized.values[i] - base) / base;
    }
    return gain;
}

void write_power_sweep_csv(const std::string &path, const PowerSweepResult &result)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_power_sweep_csv: cannot open " + path);
    out << "power_dbm,scheme,rx_max_rate,eve_max_rate\n";
    for (const PowerSweepRow &row : result.rows)
        out << format_sig9(row.power_dbm) << "," << to_string(row.scheme) << ","
            << format_sig9(row.rx_max_rate) << "," << format_sig9(row.eve_max_rate) << "\n";
    if (!out)
        throw std::runtime_error("write_power_sweep_csv: write failed for " + path);
}

void write_rate_map_csv(const std::string &path, const RateMapGrid &map, bool is_gain)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_rate_map_csv: cannot open " + path);
    out << "x_m,y_m," << (is_gain ? "gain_percent" : "rate_bpshz") << "\n";
    for (int iy = 0; iy < map.ny; ++iy)
        for (int ix = 0; ix < map.nx; ++ix)
        {
            const double value = map.at(ix, iy);
            out << format_sig9(map.cell_x(ix)) << "," << format_sig9(map.cell_y(iy)) << ",";
            if (std::isnan(value))
                out << "NaN";
            else
                out << format_sig9(value);
            out << "\n";
        }
    if (!out)
        throw std::runtime_error("write_rate_map_csv: write failed for " + path);
}

} // namespace rissec
