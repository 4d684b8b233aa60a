// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#include "skeletal/group.hpp"

#include <algorithm>
#include <deque>

#include "skeletal/errors.hpp"

namespace skeletal {

bool FiniteGroup::contains(const Isometry& a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

FiniteGroup close(std::span<const Isometry> generators, std::size_t cap) {
  for (const Isometry& g : generators)
    if (!g.rot.is_signed_permutation())
      throw Error("close: generator is not an integer isometry: " + to_string(g));

  std::set<Isometry> seen{Isometry::identity()};
  std::deque<Isometry> frontier{Isometry::identity()};
  while (!frontier.empty()) {
    Isometry e = frontier.front();
    frontier.pop_front();
    for (const Isometry& g : generators) {
      Isometry next = compose(e, g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure passed " + std::to_string(cap) +
                            " elements; the generated group is infinite or "
                            "larger than expected");
        frontier.push_back(next);
      }
    }
  }
  FiniteGroup out;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

FiniteGroup special_group(std::span<const Isometry> generators,
                          std::size_t cap) {
  std::vector<Isometry> linear;
  linear.reserve(generators.size());
  for (const Isometry& g : generators) linear.push_back(g.linear_part());
  return close(linear, cap);
}

std::string PointGroupName::str() const {
  switch (tag) {
    case GroupTag::cyclic: return "C_" + std::to_string(n);
    case GroupTag::dihedral: return "D_" + std::to_string(n);
    case GroupTag::rot_tetrahedral: return "[3,3]+";
    case GroupTag::full_tetrahedral: return "[3,3]";
    case GroupTag::pyritohedral: return "[3,3]*";
    case GroupTag::rot_octahedral: return "[3,4]+";
    case GroupTag::full_octahedral: return "[3,4]";
    case GroupTag::square_prismatic: return "[4,2]";
    case GroupTag::reducible_other: return "reducible-other";
  }
  return "?";
}

namespace {

struct Census {
  std::size_t order = 0;
  int plane_reflections = 0;
  bool has_central_inversion = false;
  bool proper_only = true;
  std::set<int> rotation_periods;  // periods > 1 of proper linear parts
  bool irreducible = false;        // of the 3-dim representation
};

Census take_census(const FiniteGroup& group) {
  Census c;
  c.order = group.order();
  long long trace_sq_sum = 0;
  for (const Isometry& e : group.elements) {
    const Mat3& m = e.rot;
    trace_sq_sum += static_cast<long long>(m.trace()) * m.trace();
    const auto kind = classify(e.linear_part());
    if (m.det() == 1) {
      if (kind.period > 1) c.rotation_periods.insert(kind.period);
    } else {
      c.proper_only = false;
      if (kind.kind == IsoKind::point_reflection) c.has_central_inversion = true;
      if (kind.kind == IsoKind::plane_reflection) ++c.plane_reflections;
    }
  }
  c.irreducible = trace_sq_sum == static_cast<long long>(c.order);
  return c;
}

}  // namespace

PointGroupName identify(const FiniteGroup& group) {
  if (group.order() == 0) throw UnrecognizedGroup("empty element list");
  if (group.order() == 1) return {GroupTag::cyclic, 1};

  const Census c = take_census(group);

  // Stabilizer-style groups: every element fixes a common line (or plane)
  // pointwise. Proper elements rotate about it; improper ones reflect in
  // planes through it.
  if (common_fixed_dim(group.elements) >= 1) {
    if (c.proper_only) return {GroupTag::cyclic, static_cast<int>(c.order)};
    return {GroupTag::dihedral, static_cast<int>(c.order / 2)};
  }

  if (c.irreducible) {
    if (c.order == 48) return {GroupTag::full_octahedral, 0};
    if (c.order == 24 && c.proper_only) return {GroupTag::rot_octahedral, 0};
    if (c.order == 24 && c.has_central_inversion && c.plane_reflections == 3)
      return {GroupTag::pyritohedral, 0};
    if (c.order == 24 && !c.has_central_inversion && c.plane_reflections == 6)
      return {GroupTag::full_tetrahedral, 0};
    if (c.order == 12 && c.proper_only) return {GroupTag::rot_tetrahedral, 0};
    throw UnrecognizedGroup("irreducible group of order " +
                            std::to_string(c.order) +
                            " matches no census in the taxonomy");
  }

  if (c.order == 16 && c.plane_reflections == 5 && c.has_central_inversion &&
      c.rotation_periods == std::set<int>{2, 4})
    return {GroupTag::square_prismatic, 0};

  return {GroupTag::reducible_other, 0};
}

EdgeStabilizerType edge_stabilizer_type(std::span<const Isometry> generators,
                                        const Vec3& base_vertex,
                                        const Vec3& twin_vertex,
                                        std::size_t cap) {
  for (const Isometry& g : generators) {
    if (g.apply(base_vertex) != base_vertex)
      throw NotEdgeStabilizer("generator " + to_string(g) +
                              " moves the base vertex " + to_string(base_vertex));
    if (g.apply(twin_vertex) != twin_vertex)
      throw NotEdgeStabilizer("generator " + to_string(g) +
                              " moves the twin vertex " + to_string(twin_vertex));
  }
  const FiniteGroup group = close(generators, cap);
  EdgeStabilizerType out;
  out.order = static_cast<int>(group.order());
  out.dihedral = std::any_of(group.elements.begin(), group.elements.end(),
                             [](const Isometry& e) { return e.rot.det() == -1; });
  return out;
}

std::set<int> rotation_period_audit(const FiniteGroup& group) {
  std::set<int> periods;
  for (const Isometry& e : group.elements)
    if (e.rot.det() == 1) {
      int p = e.rot.order();
      if (p > 1) periods.insert(p);
    }
  return periods;
}

}  // namespace skeletal
