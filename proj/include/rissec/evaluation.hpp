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

#ifndef RISSEC_EVALUATION_HPP
#define RISSEC_EVALUATION_HPP

#include <string>
#include <vector>

#include <armadillo>

#include "rissec/optimizer.hpp"

namespace rissec
{

enum class SchemeKind
{
    Proposed,
    RxOnly,
    Random,
};

std::string to_string(SchemeKind s);
SchemeKind scheme_from_string(const std::string &name); // throws ConfigError

struct MonteCarloConfig
{
    int n_trials = 100;
    std::uint64_t base_seed = 1;

    MonteCarloConfig() = default;
    MonteCarloConfig(int trials, std::uint64_t seed);
};

// Physical setup shared by all experiments: node placement, arrays, areas,
// propagation parameters and the noise floor (linear scale).
struct Scenario
{
    Position3D bs_position{0.0, 0.0, 7.5};
    Position3D ris_position{0.0, 50.0, 3.0};
    UpaGeometry bs_array{4, 4, 0.5};
    UpaGeometry ris_array{10, 15, 0.5};
    PlanarArea rx_area{-15.0, 30.0, 24.0, 15.0, 1.5};
    PlanarArea eve_area{15.0, 27.5, 24.0, 15.0, 1.5};
    PathlossModel pathloss{1e-3, 1.0, 2.2};
    RicianModel rician{13.2};        // RX / Eve links
    RicianModel bs_ris_rician{13.2}; // BS-RIS matrix
    double noise_power_w = 3.1622776601683796e-14;

    void validate() const; // also checks area disjointness
};

// Experiment resolution knobs.
struct EvalSettings
{
    QuadratureGrid j_grid{64, 64};   // correlation-matrix quadrature
    QuadratureGrid eval_grid{48, 30}; // rate-evaluation positions per area
    int fading_draws = 8;             // NLOS draws per position per trial
};

// Mean achievable rate per evaluation cell over one area.
struct RateMapGrid
{
    PlanarArea area;
    int nx = 0;
    int ny = 0;
    std::vector<double> values; // row-major, index iy * nx + ix

    double cell_x(int ix) const { return area.min_x() + (ix + 0.5) * area.width / nx; }
    double cell_y(int iy) const { return area.min_y() + (iy + 0.5) * area.length / ny; }
    double &at(int ix, int iy) { return values[static_cast<size_t>(iy) * nx + ix]; }
    double at(int ix, int iy) const { return values[static_cast<size_t>(iy) * nx + ix]; }
};

struct AreaRateMaps
{
    RateMapGrid rx;
    RateMapGrid eve;
};

// One scheme at one power level: maximum per-area rate, averaged over trials.
struct PowerSweepRow
{
    double power_dbm = 0.0;
    SchemeKind scheme = SchemeKind::Proposed;
    double rx_max_rate = 0.0;
    double eve_max_rate = 0.0;
};

// Per-trial convergence bookkeeping surfaced in the run report.
struct ConvergenceSummary
{
    int ao_runs = 0;
    int converged_runs = 0;
    int max_outer_iterations = 0;
    double max_eigen_residual = 0.0;

    void absorb(const AOTrace &trace);
};

struct PowerSweepResult
{
    std::vector<double> powers_dbm;
    std::vector<PowerSweepRow> rows; // ordered by power, then scheme
    ConvergenceSummary convergence;
};

// Single-link rate log2(1 + |f^H Phi H v|^2 / sigma^2), bps/Hz.
double link_rate(const arma::cx_vec &f, const PhaseProfile &phi, const arma::cx_mat &h,
                 const Precoder &v, double noise_power);

// Monte-Carlo estimate of the spatially averaged secrecy rate with the
// clamp [R_RX - R_E]^+ applied per sample. Positions are stratified over
// the grid cells of both areas and paired by common quantiles (oriented
// away from the RIS plane), and the two links share NLOS draws per sample,
// so statistically mirrored scenarios evaluate to exactly zero. Requires
// disjoint areas.
double spatial_secrecy_mc(const Scenario &scenario, const arma::cx_mat &h_matrix,
                          const Precoder &v, const PhaseProfile &phi,
                          const MonteCarloConfig &mc, const QuadratureGrid &grid);

// Disjoint-area decomposition: the two area-averaged expected rates are
// estimated separately and differenced without the clamp; may be negative.
double decomposed_secrecy(const Scenario &scenario, const arma::cx_mat &h_matrix,
                          const Precoder &v, const PhaseProfile &phi,
                          const MonteCarloConfig &mc, const QuadratureGrid &grid);

// Spatially averaged expected rate over a single area (uniform placement).
double area_average_rate(const Scenario &scenario, const PlanarArea &area,
                         const arma::cx_mat &h_matrix, const Precoder &v,
                         const PhaseProfile &phi, const MonteCarloConfig &mc,
                         const QuadratureGrid &grid, std::uint64_t stream_tag = 0);

// Transmit-power sweep. Per trial a fresh BS-RIS matrix is drawn and each
// scheme is re-optimized (or re-drawn) at every power level; the per-trial
// result per area is the maximum over evaluation-grid positions of the
// fading-averaged rate, and maxima are averaged over trials. Channel draws
// are keyed by (trial, area, cell) only, so all schemes and power levels
// see the same fading.
PowerSweepResult power_sweep(const Scenario &scenario, const std::vector<SchemeKind> &schemes,
                             const std::vector<double> &powers_dbm, const MonteCarloConfig &mc,
                             const EvalSettings &eval, const AOConfig &ao);

// Mean achievable rate at each cell center of both areas for one scheme's
// configuration held fixed across the area. The per-cell mean runs over
// trials (fresh H and re-optimized configuration each trial) and
// eval.fading_draws NLOS draws per trial.
AreaRateMaps rate_heatmap(SchemeKind scheme, const Scenario &scenario, double transmit_power_w,
                          const MonteCarloConfig &mc, const QuadratureGrid &cells,
                          const EvalSettings &eval, const AOConfig &ao,
                          ConvergenceSummary *convergence = nullptr);

// Per-cell relative gain 100 * (optimized - baseline) / baseline in percent.
// Cells with zero baseline rate map to NaN (emitted as an explicit "NaN"
// token in CSV). Throws std::invalid_argument on grid mismatch.
RateMapGrid gain_map(const RateMapGrid &map_optimized, const RateMapGrid &map_baseline);

// CSV emission, 9 significant digits throughout.
void write_power_sweep_csv(const std::string &path, const PowerSweepResult &result);
void write_rate_map_csv(const std::string &path, const RateMapGrid &map, bool is_gain);

} // namespace rissec

#endif
