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

#include "rissec/optimizer.hpp"

#include <cmath>
#include <fstream>

#include "rissec/common.hpp"

namespace rissec
{

namespace
{

// Phi H v as an L-vector without materializing diag(phi).
arma::cx_vec effective_channel(const PhaseProfile &phi, const SystemMatrices &sys,
                               const Precoder &v)
{
    return phi.phi % (sys.h * v.v);
}

// Real quadratic form w^H J w, clamped at zero to guard PSD rounding.
double quad_form(const arma::cx_vec &w, const arma::cx_mat &j)
{
    return std::max(std::real(arma::cdot(w, j * w)), 0.0);
}

double ratio_of_quadratics(const arma::cx_vec &phi, const arma::cx_mat &q_rx,
                           const arma::cx_mat &q_e)
{
    double num = std::real(arma::cdot(phi, q_rx * phi));
    double den = std::real(arma::cdot(phi, q_e * phi));
    return num / den;
}

// Surrogate direction of the MM step, given the cached products Q_RX phi and
// Q_E phi. Shared by mm_step and the inner loop so both produce identical
// floating-point results.
arma::cx_vec mm_surrogate_direction(const arma::cx_vec &p, const arma::cx_vec &qr_p,
                                    const arma::cx_vec &qe_p, double tr_qe)
{
    const double num = std::real(arma::cdot(p, qr_p));
    const double den = std::real(arma::cdot(p, qe_p));
    return qr_p / den - (num / (den * den)) * (qe_p - tr_qe * p);
}

arma::cx_vec align_phases(const arma::cx_vec &tilde, const arma::cx_vec &fallback)
{
    arma::cx_vec out(tilde.n_elem);
    for (arma::uword i = 0; i < tilde.n_elem; ++i)
    {
        const double mag = std::abs(tilde(i));
        // A vanishing surrogate entry leaves that element's phase untouched.
        out(i) = mag > 0.0 ? tilde(i) / mag : fallback(i);
    }
    return out;
}

} // namespace

void SystemMatrices::validate() const
{
    if (!(noise_power > 0.0))
        throw std::invalid_argument("SystemMatrices: noise_power must be > 0");
    if (!(transmit_power > 0.0))
        throw std::invalid_argument("SystemMatrices: transmit_power must be > 0");
    if (!(s_rx > 0.0) || !(s_e > 0.0))
        throw std::invalid_argument("SystemMatrices: area measures must be > 0");
    if (j_rx.size() != h.n_rows || j_e.size() != h.n_rows)
        throw std::invalid_argument("SystemMatrices: correlation size must match H rows");
}

PhaseProfile PhaseProfile::ones(arma::uword l)
{
    PhaseProfile p;
    p.phi = arma::cx_vec(l, arma::fill::ones);
    return p;
}

PhaseProfile PhaseProfile::random(arma::uword l, RngStream &rng)
{
    PhaseProfile p;
    p.phi.set_size(l);
    for (arma::uword i = 0; i < l; ++i)
        p.phi(i) = std::polar(1.0, 2.0 * pi * rng.uniform());
    return p;
}

void PhaseProfile::validate() const
{
    for (arma::uword i = 0; i < phi.n_elem; ++i)
        if (std::abs(std::abs(phi(i)) - 1.0) > 1e-12)
            throw NumericalError("PhaseProfile: entry " + std::to_string(i) +
                                 " is not unit modulus");
}

double objective_rate(const Precoder &v, const PhaseProfile &phi, const SystemMatrices &sys)
{
    arma::cx_vec w = effective_channel(phi, sys, v);
    double num = 1.0 + quad_form(w, sys.j_rx.matrix()) / (sys.noise_power * sys.s_rx);
    double den = 1.0 + quad_form(w, sys.j_e.matrix()) / (sys.noise_power * sys.s_e);
    return std::log2(num / den);
}

std::pair<arma::cx_mat, arma::cx_mat> precoder_matrices(const PhaseProfile &phi,
                                                        const SystemMatrices &sys)
{
    arma::cx_mat g = sys.h;
    g.each_col() %= phi.phi; // Phi H
    const arma::uword n = sys.n_bs();
    const arma::cx_mat eye = arma::eye<arma::cx_mat>(n, n);

    auto build = [&](const arma::cx_mat &j, double s_i) {
        arma::cx_mat m = g.t() * j * g;
        arma::cx_mat p = eye + (sys.transmit_power / (sys.noise_power * s_i)) * m;
        return arma::cx_mat((p + p.t()) / 2.0);
    };
    return {build(sys.j_rx.matrix(), sys.s_rx), build(sys.j_e.matrix(), sys.s_e)};
}

Precoder optimize_precoder(const PhaseProfile &phi, const SystemMatrices &sys,
                           double *residual_out)
{
    auto [p_rx, p_e] = precoder_matrices(phi, sys);

    // Hermitian-definite pencil (P_RX, P_E): factor P_E = R^H R and solve the
    // standard Hermitian problem for M = R^-H P_RX R^-1 instead of forming
    // P_E^-1 P_RX.
    arma::cx_mat r;
    if (!arma::chol(r, p_e))
        throw NumericalError("optimize_precoder: Cholesky of P_E failed (N=" +
                             std::to_string(sys.n_bs()) + ")");
    arma::cx_mat y = arma::solve(arma::trimatl(r.t()), p_rx);
    arma::cx_mat m = arma::solve(arma::trimatl(r.t()), y.t()).t();
    m = (m + m.t()) / 2.0;

    arma::vec eigval;
    arma::cx_mat eigvec;
    if (!arma::eig_sym(eigval, eigvec, m))
        throw NumericalError("optimize_precoder: Hermitian eigensolver failed (N=" +
                             std::to_string(sys.n_bs()) + ")");
    const double lambda_max = eigval(eigval.n_elem - 1);

    arma::cx_vec v = arma::solve(arma::trimatu(r), eigvec.col(eigvec.n_cols - 1));
    v *= std::sqrt(sys.transmit_power) / arma::norm(v);

    // Deterministic global phase: rotate the largest-magnitude entry onto the
    // positive real axis.
    arma::uword imax = arma::abs(v).index_max();
    if (std::abs(v(imax)) > 0.0)
        v *= std::conj(v(imax)) / std::abs(v(imax));

    double residual = arma::norm(p_rx * v - lambda_max * (p_e * v)) /
                      (arma::norm(p_rx, "fro") * arma::norm(v));
    if (residual_out)
        *residual_out = residual;
    if (!std::isfinite(residual) || residual > 1e-8)
        throw NumericalError("optimize_precoder: generalized-eigen residual " +
                             format_sig9(residual) + " exceeds 1e-8");

    return Precoder{std::move(v)};
}

std::pair<arma::cx_mat, arma::cx_mat> phase_quadratics(const Precoder &v,
                                                       const SystemMatrices &sys)
{
    const arma::uword l = sys.n_ris();
    arma::cx_vec vt = sys.h * v.v;
    // diag(vt)^H J diag(vt) applied element-wise: conj(vt_k) J_kl vt_l.
    arma::cx_mat outer = arma::conj(vt) * arma::strans(vt);
    const arma::cx_mat eye_l = arma::eye<arma::cx_mat>(l, l);

    auto build = [&](const arma::cx_mat &j, double s_i) {
        arma::cx_mat q = eye_l / static_cast<double>(l) +
                         (j % outer) / (sys.noise_power * s_i);
        return arma::cx_mat((q + q.t()) / 2.0);
    };
    return {build(sys.j_rx.matrix(), sys.s_rx), build(sys.j_e.matrix(), sys.s_e)};
}

PhaseProfile mm_step(const PhaseProfile &phi_t, const arma::cx_mat &q_rx,
                     const arma::cx_mat &q_e)
{
    const arma::cx_vec &p = phi_t.phi;
    arma::cx_vec tilde =
        mm_surrogate_direction(p, q_rx * p, q_e * p, arma::trace(q_e).real());
    return PhaseProfile{align_phases(tilde, p)};
}

PhaseProfile optimize_phases(const Precoder &v, const SystemMatrices &sys, const AOConfig &cfg,
                             const PhaseProfile &phi_init, int *inner_iters,
                             std::vector<double> *ratio_trace)
{
    auto [q_rx, q_e] = phase_quadratics(v, sys);
    const double tr_qe = arma::trace(q_e).real();

    PhaseProfile phi = phi_init;
    arma::cx_vec qr_p = q_rx * phi.phi;
    arma::cx_vec qe_p = q_e * phi.phi;
    double ratio = std::real(arma::cdot(phi.phi, qr_p)) / std::real(arma::cdot(phi.phi, qe_p));
    if (ratio_trace)
        ratio_trace->push_back(ratio);
    int accepted = 0;

    for (int t = 0; t < cfg.max_inner_mm; ++t)
    {
        arma::cx_vec tilde = mm_surrogate_direction(phi.phi, qr_p, qe_p, tr_qe);
        arma::cx_vec cand = align_phases(tilde, phi.phi);
        arma::cx_vec qr_c = q_rx * cand;
        arma::cx_vec qe_c = q_e * cand;
        double cand_ratio =
            std::real(arma::cdot(cand, qr_c)) / std::real(arma::cdot(cand, qe_c));
        // The printed minorizer can differ from the objective by
        // phi-independent terms, so ascent is enforced directly: reject any
        // step that lowers the ratio and stop there.
        if (cand_ratio < ratio - 1e-12 * std::max(1.0, std::abs(ratio)))
            break;
        double rel_change = std::abs(cand_ratio - ratio) / std::max(std::abs(ratio), 1e-12);
        phi.phi = std::move(cand);
        qr_p = std::move(qr_c);
        qe_p = std::move(qe_c);
        ratio = cand_ratio;
        ++accepted;
        if (ratio_trace)
            ratio_trace->push_back(ratio);
        if (rel_change < cfg.epsilon)
            break;
    }

    if (inner_iters)
        *inner_iters = accepted;
    return phi;
}

namespace
{

AOResult run_alternating(const SystemMatrices &sys, const AOConfig &cfg)
{
    sys.validate();

    AOResult result;
    if (cfg.random_init)
    {
        RngStream rng(cfg.init_seed);
        result.phi = PhaseProfile::random(sys.n_ris(), rng);
    }
    else
    {
        result.phi = PhaseProfile::ones(sys.n_ris());
    }

    double prev_objective = 0.0;
    for (int outer = 0; outer < cfg.max_outer; ++outer)
    {
        double residual = 0.0;
        try
        {
            result.v = optimize_precoder(result.phi, sys, &residual);
        }
        catch (const NumericalError &e)
        {
            throw NumericalError(std::string(e.what()) + " at outer iteration " +
                                 std::to_string(outer + 1));
        }
        result.trace.max_eigen_residual =
            std::max(result.trace.max_eigen_residual, residual);

        int inner = 0;
        result.phi = optimize_phases(result.v, sys, cfg, result.phi, &inner);

        const double objective = objective_rate(result.v, result.phi, sys);
        result.trace.objective_per_iteration.push_back(objective);
        result.trace.precoder_power.push_back(result.v.power());
        result.trace.mm_inner_iters.push_back(inner);
        result.trace.iterations_used = outer + 1;

        if (outer >= 1)
        {
            double rel = std::abs(objective - prev_objective) /
                         std::max(std::abs(prev_objective), 1e-12);
            if (rel < cfg.epsilon)
            {
                result.trace.converged = true;
                break;
            }
        }
        prev_objective = objective;
    }
    return result;
}

} // namespace

AOResult alternating_optimize(const SystemMatrices &sys, const AOConfig &cfg)
{
    return run_alternating(sys, cfg);
}

AOResult rx_only_optimize(const SystemMatrices &sys, const AOConfig &cfg)
{
    SystemMatrices rx_sys = sys;
    rx_sys.j_e = CorrelationMatrix::zero(sys.n_ris());
    return run_alternating(rx_sys, cfg);
}

std::pair<Precoder, PhaseProfile> random_config(const SystemMatrices &sys, RngStream &rng)
{
    const arma::uword n = sys.n_bs();
    arma::cx_vec g(n);
    for (arma::uword i = 0; i < n; ++i)
        g(i) = rng.complex_normal();
    Precoder v{std::sqrt(sys.transmit_power) * g / arma::norm(g)};

    PhaseProfile phi = PhaseProfile::random(sys.n_ris(), rng);
    return {std::move(v), std::move(phi)};
}

void save_trace_csv(const std::string &path, const AOTrace &trace)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("save_trace_csv: cannot open " + path);
    out << "outer_iter,objective_bpshz,precoder_power,mm_inner_iters\n";
    for (size_t i = 0; i < trace.objective_per_iteration.size(); ++i)
        out << (i + 1) << "," << format_sig9(trace.objective_per_iteration[i]) << ","
            << format_sig9(trace.precoder_power[i]) << "," << trace.mm_inner_iters[i] << "\n";
    if (!out)
        throw std::runtime_error("save_trace_csv: write failed for " + path);
}

} // namespace rissec
