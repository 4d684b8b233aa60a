// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>

#include "skeletal/wythoff.hpp"

namespace skeletal {

/// OFF text: vertices in ascending order, one record per stored face.
/// Records of infinite faces cover one zigzag run each and are open paths;
/// the closing segment an OFF viewer draws for them is not an edge of the
/// complex. Coordinates are multiplied by `scale` on output.
std::string to_off(const Complex& kx, std::int64_t scale = 1);

/// Wavefront OBJ text: `v` records for the vertices, 1-based `f` records for
/// finite faces, `l` polyline records for zigzag runs.
std::string to_obj(const Complex& kx, std::int64_t scale = 1);

/// Full geometry dump as JSON: region, counts, vertex coordinates, edges and
/// faces as vertex indices; infinite faces carry their period vector.
std::string to_json(const Complex& kx, std::int64_t scale = 1);

}  // namespace skeletal
