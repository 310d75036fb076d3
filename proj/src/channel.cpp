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

#include "rissec/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace rissec
{

PathlossModel::PathlossModel(double pl0_, double d0_, double alpha_)
    : pl0(pl0_), d0(d0_), alpha(alpha_)
{
    if (!(pl0 > 0.0) || !(d0 > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("PathlossModel: pl0, d0 and alpha must be > 0");
}

RicianModel::RicianModel(double k) : k_factor(k)
{
    if (!(k >= 0.0) || !std::isfinite(k))
        throw std::invalid_argument("RicianModel: k_factor must be finite and >= 0");
}

double pathloss_gain(const PathlossModel &model, double d)
{
    if (!(d > 0.0))
        throw std::domain_error("pathloss_gain: distance must be > 0");
    return model.pl0 * std::pow(d / model.d0, -model.alpha);
}

ChannelStatistics channel_statistics(double kappa, const RicianModel &rician,
                                     const arma::cx_vec &los)
{
    const double k = rician.k_factor;
    ChannelStatistics stats;
    stats.mean = std::sqrt(kappa) * std::sqrt(k / (1.0 + k)) * los;
    stats.covariance_scale = kappa / (1.0 + k);
    return stats;
}

arma::cx_vec sample_rician(const ChannelStatistics &stats, RngStream &rng)
{
    const arma::uword l = stats.mean.n_elem;
    arma::cx_vec draw(l);
    const double s = std::sqrt(stats.covariance_scale);
    for (arma::uword i = 0; i < l; ++i)
        draw(i) = stats.mean(i) + s * rng.complex_normal();
    return draw;
}

arma::cx_mat sample_bs_ris(const UpaGeometry &bs_geom, const UpaGeometry &ris_geom,
                           const Position3D &p_bs, const Position3D &p_ris,
                           const PathlossModel &model, const RicianModel &rician,
                           RngStream &rng)
{
    const double kappa = pathloss_gain(model, distance(p_bs, p_ris));
    const double k = rician.k_factor;

    // Both arrays use the yz-parallel steering structure, each looking at
    // the other end of the link.
    arma::cx_vec a_ris = steering_vector(ris_geom, departure_angles(p_ris, p_bs));
    arma::cx_vec a_bs = steering_vector(bs_geom, departure_angles(p_bs, p_ris));

    const arma::uword l = a_ris.n_elem;
    const arma::uword n = a_bs.n_elem;
    arma::cx_mat h(l, n);
    const double los_scale = std::sqrt(kappa * k / (1.0 + k));
    const double nlos_scale = std::sqrt(kappa / (1.0 + k));
    // Column-major fill keeps the draw order deterministic.
    for (arma::uword col = 0; col < n; ++col)
        for (arma::uword row = 0; row < l; ++row)
            h(row, col) = los_scale * a_ris(row) * std::conj(a_bs(col)) +
                          nlos_scale * rng.complex_normal();
    return h;
}

} // namespace rissec
