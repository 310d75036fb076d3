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

#ifndef RISSEC_GEOMETRY_HPP
#define RISSEC_GEOMETRY_HPP

#include <armadillo>

#include "rissec/common.hpp"

namespace rissec
{

// 3D node location in meters. Coordinates must be finite.
struct Position3D
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Position3D() = default;
    Position3D(double x_, double y_, double z_);
};

// Axis-aligned rectangular placement region on a horizontal plane.
// "width" is the extent along x, "length" the extent along y; all receiver
// positions inside the area share the common height z.
struct PlanarArea
{
    double center_x = 0.0;
    double center_y = 0.0;
    double width = 1.0;  // x extent, m
    double length = 1.0; // y extent, m
    double z = 0.0;      // receiver height, m

    PlanarArea() = default;
    PlanarArea(double cx, double cy, double w, double l, double z_);

    double measure() const { return width * length; }
    double min_x() const { return center_x - 0.5 * width; }
    double max_x() const { return center_x + 0.5 * width; }
    double min_y() const { return center_y - 0.5 * length; }
    double max_y() const { return center_y + 0.5 * length; }
};

// Uniform planar array: n_vertical x n_horizontal elements with spacing
// given as the ratio d / lambda_c (phases depend on the ratio only).
struct UpaGeometry
{
    int n_vertical = 1;
    int n_horizontal = 1;
    double spacing_ratio = 0.5;

    UpaGeometry() = default;
    UpaGeometry(int nv, int nh, double ratio);

    int total_elements() const { return n_vertical * n_horizontal; }
};

// Elevation / azimuth pair in radians; elevation lies in [0, pi].
struct AnglePair
{
    double elevation = 0.0;
    double azimuth = 0.0;

    AnglePair() = default;
    AnglePair(double el, double az);
};

// Euclidean distance between two nodes.
double distance(const Position3D &p, const Position3D &q);

// Angles of departure from an array located at p_array (deployed parallel to
// the yz plane) toward the node at p_node:
//   elevation = arccos((x_array - x_node) / D)
//   azimuth   = atan2(y_array - y_node, z_array - z_node)
// The azimuth uses a four-quadrant arctangent so receivers above the array
// height resolve to the correct sign. Throws std::domain_error on
// coincident points.
AnglePair departure_angles(const Position3D &p_array, const Position3D &p_node);

// UPA steering vector of length L = n_vertical * n_horizontal, entry l:
//   (1/sqrt(L)) * exp(j * 2*pi * spacing_ratio * xi_l)
//   xi_l = floor((l-1)/L_h) * sin(el) * cos(az)
//        + (l - floor((l-1)/L_h) * L_h - 1) * sin(el) * sin(az)
// Unit Euclidean norm by construction.
arma::cx_vec steering_vector(const UpaGeometry &geom, const AnglePair &angles);

// True when the open interiors of the two rectangles do not intersect
// (sharing an edge still counts as disjoint).
bool areas_disjoint(const PlanarArea &a, const PlanarArea &b);

} // namespace rissec

#endif
