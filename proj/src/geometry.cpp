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

#include "rissec/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace rissec
{

Position3D::Position3D(double x_, double y_, double z_) : x(x_), y(y_), z(z_)
{
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
        throw std::invalid_argument("Position3D: coordinates must be finite");
}

PlanarArea::PlanarArea(double cx, double cy, double w, double l, double z_)
    : center_x(cx), center_y(cy), width(w), length(l), z(z_)
{
    if (!std::isfinite(cx) || !std::isfinite(cy) || !std::isfinite(z_))
        throw std::invalid_argument("PlanarArea: center and height must be finite");
    if (!(w > 0.0) || !(l > 0.0))
        throw std::invalid_argument("PlanarArea: width and length must be > 0");
}

UpaGeometry::UpaGeometry(int nv, int nh, double ratio)
    : n_vertical(nv), n_horizontal(nh), spacing_ratio(ratio)
{
    if (nv < 1 || nh < 1)
        throw std::invalid_argument("UpaGeometry: element counts must be >= 1");
    if (!(ratio > 0.0) || !std::isfinite(ratio))
        throw std::invalid_argument("UpaGeometry: spacing_ratio must be > 0");
}

AnglePair::AnglePair(double el, double az) : elevation(el), azimuth(az)
{
    if (!std::isfinite(el) || !std::isfinite(az))
        throw std::invalid_argument("AnglePair: angles must be finite");
    if (el < 0.0 || el > pi)
        throw std::invalid_argument("AnglePair: elevation must lie in [0, pi]");
}

double distance(const Position3D &p, const Position3D &q)
{
    double dx = p.x - q.x;
    double dy = p.y - q.y;
    double dz = p.z - q.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

AnglePair departure_angles(const Position3D &p_array, const Position3D &p_node)
{
    double d = distance(p_array, p_node);
    if (d == 0.0)
        throw std::domain_error("departure_angles: coincident points have no direction");

    double c = (p_array.x - p_node.x) / d;
    c = std::clamp(c, -1.0, 1.0); // rounding can push |c| past 1 when dy = dz = 0
    double elevation = std::acos(c);
    double azimuth = std::atan2(p_array.y - p_node.y, p_array.z - p_node.z);
    return AnglePair(elevation, azimuth);
}

arma::cx_vec steering_vector(const UpaGeometry &geom, const AnglePair &angles)
{
    const int lh = geom.n_horizontal;
    const int total = geom.total_elements();
    const double scale = 1.0 / std::sqrt(static_cast<double>(total));
    const double se = std::sin(angles.elevation);
    const double u = se * std::cos(angles.azimuth); // vertical-index weight
    const double w = se * std::sin(angles.azimuth); // horizontal-index weight
    const double k = 2.0 * pi * geom.spacing_ratio;

    arma::cx_vec out(total);
    for (int idx = 0; idx < total; ++idx)
    {
        int m = idx / lh; // vertical index, 0-based
        int n = idx % lh; // horizontal index, 0-based
        double phase = k * (m * u + n * w);
        out(idx) = std::polar(scale, phase);
    }
    return out;
}

bool areas_disjoint(const PlanarArea &a, const PlanarArea &b)
{
    bool x_overlap = a.min_x() < b.max_x() && b.min_x() < a.max_x();
    bool y_overlap = a.min_y() < b.max_y() && b.min_y() < a.max_y();
    return !(x_overlap && y_overlap);
}

} // namespace rissec
