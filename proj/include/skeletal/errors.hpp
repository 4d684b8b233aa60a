// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace skeletal {

/// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SKELETAL_DEFINE_ERROR(NAME)                                        \
  struct NAME : Error {                                                    \
    explicit NAME(const std::string& what) : Error(#NAME ": " + what) {}   \
  }

SKELETAL_DEFINE_ERROR(CapExceeded);           // group closure outgrew its cap (infinite group?)
SKELETAL_DEFINE_ERROR(UnrecognizedGroup);     // finite group outside the supported taxonomy
SKELETAL_DEFINE_ERROR(NotEdgeStabilizer);     // generator moves an endpoint of the base edge
SKELETAL_DEFINE_ERROR(NonPlanarInfiniteFace); // face walk is neither a cycle nor a planar zigzag
SKELETAL_DEFINE_ERROR(BoundaryVertex);        // vertex too close to the region boundary to trust
SKELETAL_DEFINE_ERROR(BoundaryEdge);          // edge has no margin-protected endpoint
SKELETAL_DEFINE_ERROR(NotInG2);               // twist element lies outside the edge stabilizer
SKELETAL_DEFINE_ERROR(NotInvolution);         // rewritten generator fails to square to the identity
SKELETAL_DEFINE_ERROR(RegionMismatch);        // complexes built over different regions
SKELETAL_DEFINE_ERROR(UnknownId);             // no catalog entry under that name
SKELETAL_DEFINE_ERROR(InvalidRadius);         // region too small for the requested margin
SKELETAL_DEFINE_ERROR(InvalidGenerators);     // generator system violates its defining relations

#undef SKELETAL_DEFINE_ERROR

}  // namespace skeletal
