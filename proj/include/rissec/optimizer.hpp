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

#ifndef RISSEC_OPTIMIZER_HPP
#define RISSEC_OPTIMIZER_HPP

#include <string>
#include <utility>
#include <vector>

#include <armadillo>

#include "rissec/rng.hpp"
#include "rissec/spatial.hpp"

namespace rissec
{

// Everything the joint design needs: the BS-RIS channel H (L x N), the two
// area correlation matrices, noise power, area measures and the transmit
// power budget. All values linear scale (Watts, m^2).
struct SystemMatrices
{
    arma::cx_mat h;
    CorrelationMatrix j_rx;
    CorrelationMatrix j_e;
    double noise_power = 1.0;
    double s_rx = 1.0;
    double s_e = 1.0;
    double transmit_power = 1.0;

    arma::uword n_ris() const { return h.n_rows; }
    arma::uword n_bs() const { return h.n_cols; }
    void validate() const;
};

// Transmit beamforming vector, constrained to the power ball
// ||v||^2 <= P_T; optimized precoders sit on the sphere ||v||^2 = P_T.
struct Precoder
{
    arma::cx_vec v;

    double power() const { return arma::dot(arma::abs(v), arma::abs(v)); }
};

// RIS reflection vector with unit-modulus entries.
struct PhaseProfile
{
    arma::cx_vec phi;

    static PhaseProfile ones(arma::uword l);
    static PhaseProfile random(arma::uword l, RngStream &rng);
    void validate() const; // |phi_l| = 1 within 1e-12
};

// Alternating-optimization settings. epsilon is the relative-change
// convergence threshold applied to the objective (outer loop) and to the
// quadratic ratio (inner MM loop).
struct AOConfig
{
    double epsilon = 1e-5;
    int max_outer = 200;
    int max_inner_mm = 100;
    std::uint64_t init_seed = 0;
    bool random_init = false; // default is the deterministic all-ones profile
};

// Per-outer-iteration record of an AO run. The objective sequence is
// non-decreasing by construction (exact precoder step + safeguarded MM).
struct AOTrace
{
    std::vector<double> objective_per_iteration; // bps/Hz, after each outer step
    std::vector<double> precoder_power;          // ||v||^2 per outer step
    std::vector<int> mm_inner_iters;             // accepted MM steps per outer step
    int iterations_used = 0;
    bool converged = false;
    double max_eigen_residual = 0.0; // worst generalized-eigen relative residual
};

struct AOResult
{
    Precoder v;
    PhaseProfile phi;
    AOTrace trace;
};

// Approximate spatial secrecy spectral efficiency in bps/Hz:
//   log2( (1 + v^H H^H Phi^H J_RX Phi H v / (sigma^2 S_RX))
//       / (1 + v^H H^H Phi^H J_E  Phi H v / (sigma^2 S_E )) )
double objective_rate(const Precoder &v, const PhaseProfile &phi, const SystemMatrices &sys);

// P_i = I_N + (P_T / (sigma^2 S_i)) H^H Phi^H J_i Phi H, Hermitian and >= I.
std::pair<arma::cx_mat, arma::cx_mat> precoder_matrices(const PhaseProfile &phi,
                                                        const SystemMatrices &sys);

// Optimal precoder for a fixed phase profile: sqrt(P_T) times the principal
// eigenvector of the pencil (P_RX, P_E), solved through a Cholesky
// factorization of P_E rather than an explicit inverse. The global phase is
// fixed so the largest-magnitude entry is real-positive. If residual_out is
// non-null it receives ||P_RX v - lambda P_E v|| / (||P_RX||_F ||v||).
Precoder optimize_precoder(const PhaseProfile &phi, const SystemMatrices &sys,
                           double *residual_out = nullptr);

// Q_i = (1/L) I_L + (1 / (sigma^2 S_i)) diag(Hv)^H J_i diag(Hv); for any
// unit-modulus phi, objective_rate equals log2(phi^H Q_RX phi / phi^H Q_E phi).
std::pair<arma::cx_mat, arma::cx_mat> phase_quadratics(const Precoder &v,
                                                       const SystemMatrices &sys);

// One minorize-maximize ascent step on the quadratic ratio: forms the
// surrogate direction
//   phi~ = Q_RX phi / (phi^H Q_E phi)
//        - (phi^H Q_RX phi / (phi^H Q_E phi)^2) (Q_E - tr(Q_E) I) phi
// and returns the element-wise phase alignment exp(j*angle(phi~)). Zero
// entries of phi~ keep the phase they had in phi_t.
PhaseProfile mm_step(const PhaseProfile &phi_t, const arma::cx_mat &q_rx,
                     const arma::cx_mat &q_e);

// Safeguarded inner MM loop: a step is accepted only if the quadratic ratio
// does not decrease; the loop stops on a rejected step, on relative ratio
// change below cfg.epsilon, or at cfg.max_inner_mm. The returned profile
// never has a lower ratio than phi_init. Optional outputs report the number
// of accepted steps and the accepted-ratio sequence.
PhaseProfile optimize_phases(const Precoder &v, const SystemMatrices &sys, const AOConfig &cfg,
                             const PhaseProfile &phi_init, int *inner_iters = nullptr,
                             std::vector<double> *ratio_trace = nullptr);

// Full alternating optimization: initializes the phase profile (all-ones by
// default, seeded random when cfg.random_init), then alternates the exact
// precoder update with the safeguarded MM phase update until the relative
// objective change drops below cfg.epsilon or max_outer is reached.
AOResult alternating_optimize(const SystemMatrices &sys, const AOConfig &cfg);

// Baseline ignoring the eavesdropper: identical AO structure with J_E
// replaced by the zero matrix (P_E = I, Q_E = (1/L) I).
AOResult rx_only_optimize(const SystemMatrices &sys, const AOConfig &cfg);

// Baseline with isotropic random precoding (uniform direction, full power)
// and i.i.d. uniform phases.
std::pair<Precoder, PhaseProfile> random_config(const SystemMatrices &sys, RngStream &rng);

// Trace dump: CSV with columns outer_iter, objective_bpshz, precoder_power,
// mm_inner_iters.
void save_trace_csv(const std::string &path, const AOTrace &trace);

} // namespace rissec

#endif
