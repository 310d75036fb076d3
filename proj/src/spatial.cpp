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

#include "rissec/spatial.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rissec/common.hpp"
#include "rissec/parallel.hpp"

namespace rissec
{

QuadratureGrid::QuadratureGrid(int nx_, int ny_) : nx(nx_), ny(ny_)
{
    if (nx < 1 || ny < 1)
        throw std::invalid_argument("QuadratureGrid: cell counts must be >= 1");
}

CorrelationMatrix::CorrelationMatrix(arma::cx_mat m, bool check) : m_(std::move(m))
{
    if (m_.n_rows != m_.n_cols)
        throw std::invalid_argument("CorrelationMatrix: matrix must be square");
    if (check)
        validate();
}

CorrelationMatrix CorrelationMatrix::zero(arma::uword l)
{
    CorrelationMatrix j;
    j.m_ = arma::cx_mat(l, l, arma::fill::zeros);
    return j;
}

void CorrelationMatrix::validate() const
{
    const double fro = arma::norm(m_, "fro");
    const double herm = arma::norm(m_ - m_.t(), "fro");
    if (herm > 1e-12 * fro)
        throw NumericalError("CorrelationMatrix: Hermiticity residual " + format_sig9(herm / fro));

    const double tr = trace_real();
    if (!(tr > 0.0))
        throw NumericalError("CorrelationMatrix: trace must be > 0, got " + format_sig9(tr));

    arma::vec eigval;
    if (!arma::eig_sym(eigval, m_))
        throw NumericalError("CorrelationMatrix: eigendecomposition failed");
    if (eigval.min() < -1e-10 * tr)
        throw NumericalError("CorrelationMatrix: min eigenvalue " + format_sig9(eigval.min()) +
                             " below PSD tolerance");
}

double area_measure(const PlanarArea &area) { return area.measure(); }

CorrelationMatrix compute_correlation(const PlanarArea &area, const QuadratureGrid &grid,
                                      const Position3D &p_ris, const UpaGeometry &ris_geom,
                                      const PathlossModel &model, const RicianModel &rician)
{
    const int nx = grid.nx;
    const int ny = grid.ny;
    const arma::uword l = static_cast<arma::uword>(ris_geom.total_elements());
    const double cell_w = area.width / nx;
    const double cell_l = area.length / ny;
    const double da = area.measure() / (static_cast<double>(nx) * ny);
    const double k = rician.k_factor;
    const double los_frac = k / (1.0 + k);
    const double nlos_frac = 1.0 / (1.0 + k);

    // One chunk per grid row: each worker forms a column block of weighted
    // LOS vectors and reduces it with a rank-k product; chunks are summed in
    // row order afterwards, so the result is independent of the worker count.
    std::vector<arma::cx_mat> partial(ny);
    std::vector<double> kappa_row_sum(ny, 0.0);
    parallel_for(ny, [&](int iy) {
        arma::cx_mat block(l, nx);
        double kappa_sum = 0.0;
        const double y = area.min_y() + (iy + 0.5) * cell_l;
        for (int ix = 0; ix < nx; ++ix)
        {
            const double x = area.min_x() + (ix + 0.5) * cell_w;
            const Position3D p(x, y, area.z);
            const double kappa = pathloss_gain(model, distance(p_ris, p));
            kappa_sum += kappa;
            const arma::cx_vec a = steering_vector(ris_geom, departure_angles(p_ris, p));
            block.col(ix) = std::sqrt(kappa * los_frac) * a;
        }
        partial[iy] = block * block.t();
        kappa_row_sum[iy] = kappa_sum;
    });

    arma::cx_mat j(l, l, arma::fill::zeros);
    double kappa_total = 0.0;
    for (int iy = 0; iy < ny; ++iy)
    {
        j += partial[iy];
        kappa_total += kappa_row_sum[iy];
    }
    j *= da;
    // Covariance part integrates to a multiple of the identity.
    j.diag() += da * kappa_total * nlos_frac;
    j = (j + j.t()) / 2.0;
    return CorrelationMatrix(std::move(j));
}

namespace
{

std::uint64_t fnv1a(const std::string &s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s)
    {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string area_hash(const PlanarArea &area)
{
    std::string key = format_exact(area.center_x) + "," + format_exact(area.center_y) + "," +
                      format_exact(area.width) + "," + format_exact(area.length) + "," +
                      format_exact(area.z);
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return buf;
}

} // namespace

void save_correlation_csv(const std::string &path, const CorrelationMatrix &j,
                          const PlanarArea &area, const QuadratureGrid &grid)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("save_correlation_csv: cannot open " + path);
    out << "# ris-secrecy correlation matrix v1\n";
    out << "# L," << j.size() << ",grid," << grid.nx << "x" << grid.ny << ",area_hash,"
        << area_hash(area) << "\n";
    const arma::cx_mat &m = j.matrix();
    for (arma::uword r = 0; r < m.n_rows; ++r)
    {
        for (arma::uword c = 0; c < m.n_cols; ++c)
        {
            if (c > 0)
                out << ",";
            out << format_exact(m(r, c).real()) << "," << format_exact(m(r, c).imag());
        }
        out << "\n";
    }
    if (!out)
        throw std::runtime_error("save_correlation_csv: write failed for " + path);
}

CorrelationMatrix load_correlation_csv(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_correlation_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ris-secrecy correlation matrix", 0) != 0)
        throw std::runtime_error("load_correlation_csv: bad magic line in " + path);
    if (!std::getline(in, line) || line.rfind("# L,", 0) != 0)
        throw std::runtime_error("load_correlation_csv: missing header in " + path);
    const arma::uword l = std::stoul(line.substr(4));

    arma::cx_mat m(l, l);
    for (arma::uword r = 0; r < l; ++r)
    {
        if (!std::getline(in, line))
            throw std::runtime_error("load_correlation_csv: truncated data in " + path);
        std::stringstream row(line);
        std::string tok;
        for (arma::uword c = 0; c < l; ++c)
        {
            if (!std::getline(row, tok, ','))
                throw std::runtime_error("load_correlation_csv: short row in " + path);
            double re = std::stod(tok);
            if (!std::getline(row, tok, ','))
                throw std::runtime_error("load_correlation_csv: short row in " + path);
            double im = std::stod(tok);
            m(r, c) = {re, im};
        }
    }
    return CorrelationMatrix(std::move(m));
}

} // namespace rissec
