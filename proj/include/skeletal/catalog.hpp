// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skeletal/wythoff.hpp"

namespace skeletal {

enum class CatalogId {
  k1,
  k2,
  k3,
  k4,
  k5,
  k6,
  k7,
  k8,
  p664,
  p466,
  p646,
  skel434,
  skel_apeir_333,
  skel_apeir_334,
  skel_apeir_433,
  subgroup_h,
};

std::vector<CatalogId> all_catalog_ids();
std::string to_string(CatalogId id);
CatalogId parse_catalog_id(std::string_view text);  // throws UnknownId

// Finite regular polyhedron centred at the origin: string generators
// (s1, s2, s3) of its point group together with an initial vertex that is
// fixed by s2 and s3 and moved by s1.
struct PolyhedronSeed {
  std::string name;
  Vec3 initial_vertex;
  Isometry s1, s2, s3;
  void validate() const;  // throws InvalidGenerators
};

PolyhedronSeed tetrahedron_seed();  // {3,3}, initial vertex (1,-1,1)
PolyhedronSeed octahedron_seed();   // {3,4}, initial vertex (0,0,2)
PolyhedronSeed cube_seed();         // {4,3}, initial vertex (1,1,1)

// Rank-3 Petrie dual (s1 s3, s2, s3), same initial vertex; an involution.
PolyhedronSeed petrie_dual(const PolyhedronSeed& seed);

// Adjoin the point reflection in half the initial vertex: the resulting
// rank-4 system generates an apeirotope whose 2-skeleton this returns.
GeneratorSystem apeir_system(const PolyhedronSeed& seed);

GeneratorSystem generator_system(CatalogId id);

// Direct cubical-tessellation 2-skeleton: lattice points of the box, unit
// edges, unit squares.
Complex cubical_skeleton(const Box& box);

// skel-434 is produced by the direct constructor; everything else runs
// through the orbit builder.
Complex build_catalog(CatalogId id, const Box& box);

}  // namespace skeletal
