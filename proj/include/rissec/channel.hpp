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

#ifndef RISSEC_CHANNEL_HPP
#define RISSEC_CHANNEL_HPP

#include <armadillo>

#include "rissec/geometry.hpp"
#include "rissec/rng.hpp"

namespace rissec
{

// Distance-power law: gain(d) = pl0 * (d / d0)^(-alpha), all linear scale.
struct PathlossModel
{
    double pl0 = 1e-3; // linear power gain at the reference distance
    double d0 = 1.0;   // reference distance, m
    double alpha = 2.2;

    PathlossModel() = default;
    PathlossModel(double pl0_, double d0_, double alpha_);
};

// Rician fading with K-factor = LOS power / NLOS power.
struct RicianModel
{
    double k_factor = 13.2;

    RicianModel() = default;
    explicit RicianModel(double k);
};

// Second-order statistics of a Rician link vector:
//   mean = sqrt(kappa) * sqrt(K/(1+K)) * los
//   covariance = covariance_scale * I,  covariance_scale = kappa / (1+K)
struct ChannelStatistics
{
    arma::cx_vec mean;
    double covariance_scale = 0.0;
};

// kappa = pl0 * (d/d0)^(-alpha). Throws std::domain_error for d <= 0.
double pathloss_gain(const PathlossModel &model, double d);

// Mean / covariance split of the Rician model for a unit-norm LOS vector.
// Total power satisfies ||mean||^2 + L * covariance_scale = kappa.
ChannelStatistics channel_statistics(double kappa, const RicianModel &rician,
                                     const arma::cx_vec &los);

// One channel draw: mean + sqrt(covariance_scale) * w, w ~ CN(0, I).
arma::cx_vec sample_rician(const ChannelStatistics &stats, RngStream &rng);

// BS-RIS channel matrix draw (L x N):
//   H = sqrt(kappa) * ( sqrt(K/(1+K)) * a_ris * a_bs^H + sqrt(1/(1+K)) * W )
// with unit-norm steering vectors at both ends and W i.i.d. CN(0,1).
// E ||H||_F^2 = kappa * (K + L*N) / (1 + K) for this normalization.
arma::cx_mat sample_bs_ris(const UpaGeometry &bs_geom, const UpaGeometry &ris_geom,
                           const Position3D &p_bs, const Position3D &p_ris,
                           const PathlossModel &model, const RicianModel &rician,
                           RngStream &rng);

} // namespace rissec

#endif
