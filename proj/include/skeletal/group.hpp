// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "skeletal/geometry.hpp"

namespace skeletal {

/// A finite group of isometries: closed under composition, sorted, deduped.
struct FiniteGroup {
  std::vector<Isometry> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Isometry& a) const;
};

/// Default caps chosen for this library's groups: special groups are
/// subgroups of the full octahedral group (order 48); point and edge
/// stabilizers stay within twice that.
inline constexpr std::size_t kSpecialGroupCap = 48;
inline constexpr std::size_t kStabilizerCap = 96;

/// Close a generator list under composition. Throws CapExceeded once more
/// than `cap` elements appear, which is how infinite groups are detected.
FiniteGroup close(std::span<const Isometry> generators,
                  std::size_t cap = kStabilizerCap);

/// The group generated by the linear parts (image of the group under
/// "forget translations"); finite for crystallographic inputs.
FiniteGroup special_group(std::span<const Isometry> generators,
                          std::size_t cap = kSpecialGroupCap);

enum class GroupTag {
  cyclic,             // C_n
  dihedral,           // D_n (order 2n)
  rot_tetrahedral,    // [3,3]+
  full_tetrahedral,   // [3,3]
  pyritohedral,       // [3,3]*
  rot_octahedral,     // [3,4]+
  full_octahedral,    // [3,4]
  square_prismatic,   // [4,2], order 16
  reducible_other,
};

struct PointGroupName {
  GroupTag tag = GroupTag::cyclic;
  int n = 1;  // parameter for cyclic (order n) and dihedral (order 2n)

  bool operator==(const PointGroupName&) const = default;
  std::string str() const;
};

/// Identify a finite isometry group by an exact element census: order,
/// plane-reflection count, presence of a central-inversion-like element,
/// rotation periods, and an exact irreducibility test (the sum of squared
/// traces equals the order iff the 3-dim representation is irreducible).
/// Conjugation-invariant. Throws UnrecognizedGroup outside the taxonomy.
PointGroupName identify(const FiniteGroup& group);

struct EdgeStabilizerType {
  bool dihedral = false;  // otherwise cyclic
  int order = 1;

  bool operator==(const EdgeStabilizerType&) const = default;
};

/// Validate that every generator fixes both endpoints of the base edge
/// pointwise (NotEdgeStabilizer otherwise), then close and classify the
/// group as cyclic or dihedral with its order.
EdgeStabilizerType edge_stabilizer_type(std::span<const Isometry> generators,
                                        const Vec3& base_vertex,
                                        const Vec3& twin_vertex,
                                        std::size_t cap = kStabilizerCap);

/// Periods (> 1) of the proper rotations among the elements' linear parts.
std::set<int> rotation_period_audit(const FiniteGroup& group);

}  // namespace skeletal
