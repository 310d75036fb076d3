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

#ifndef RISSEC_SPATIAL_HPP
#define RISSEC_SPATIAL_HPP

#include <string>

#include <armadillo>

#include "rissec/channel.hpp"
#include "rissec/geometry.hpp"

namespace rissec
{

// Midpoint-rule cell counts along x and y.
struct QuadratureGrid
{
    int nx = 64;
    int ny = 64;

    QuadratureGrid() = default;
    QuadratureGrid(int nx_, int ny_);
};

// Hermitian PSD L x L matrix integrating the channel second moment
// (covariance + mean outer product) over a placement area. Units are
// linear power gain times m^2.
class CorrelationMatrix
{
  public:
    CorrelationMatrix() = default;
    explicit CorrelationMatrix(arma::cx_mat m, bool check = true);

    // Zero substitute used by the RX-only scheme; skips the trace > 0 check.
    static CorrelationMatrix zero(arma::uword l);

    const arma::cx_mat &matrix() const { return m_; }
    arma::uword size() const { return m_.n_rows; }
    double trace_real() const { return arma::trace(m_).real(); }

    // Enforces Hermiticity (1e-12 relative), PSD (min eigenvalue >=
    // -1e-10 * trace) and positive trace; throws NumericalError otherwise.
    void validate() const;

  private:
    arma::cx_mat m_;
};

// Area measure |S| = width * length in m^2.
double area_measure(const PlanarArea &area);

// Midpoint quadrature of the channel second moment over the area:
//   J = sum over cell centers p of (M_f(p) + mean(p) mean(p)^H) * dA
// with dA = measure / (nx * ny). The result is Hermitian-symmetrized to
// remove accumulation rounding. Grid cells are processed in row chunks so
// the accumulation order is fixed regardless of worker count.
CorrelationMatrix compute_correlation(const PlanarArea &area, const QuadratureGrid &grid,
                                      const Position3D &p_ris, const UpaGeometry &ris_geom,
                                      const PathlossModel &model, const RicianModel &rician);

// CSV cache of a computed matrix: header lines carry L, the grid and a hash
// of the generating area; data rows are row-major with real/imag
// interleaved at full precision.
void save_correlation_csv(const std::string &path, const CorrelationMatrix &j,
                          const PlanarArea &area, const QuadratureGrid &grid);
CorrelationMatrix load_correlation_csv(const std::string &path);

} // namespace rissec

#endif
