// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "skeletal/geometry.hpp"

namespace skeletal {

/// Cubical region |p|_inf <= radius with a reliability margin: points within
/// |p|_inf <= radius - margin are "interior", far enough from the boundary
/// that every incident face is complete inside the box.
struct Box {
  int radius = 4;
  int margin = 4;

  constexpr auto operator<=>(const Box&) const = default;

  void validate() const;  // InvalidRadius unless radius >= margin >= 0
  bool contains(const Vec3& p) const { return p.norm_inf() <= radius; }
  bool interior(const Vec3& p) const { return p.norm_inf() <= radius - margin; }
};

/// Wythoff data for a regular polygonal complex: a base vertex, involutions
/// r0 (swaps base and twin vertex) and r1 (fixes the base vertex), and
/// generators g2 of the stabilizer of the base edge. Systems derived from a
/// rank-4 apeirotope carry the distinguished generators T0..T3 along so the
/// Petrie rewrite stays available.
struct GeneratorSystem {
  Vec3 base_vertex{};
  Isometry r0, r1;
  std::vector<Isometry> g2;
  std::optional<std::array<Isometry, 4>> rank4;

  Vec3 twin_vertex() const { return r0.apply(base_vertex); }
  void validate() const;  // InvalidGenerators / NotEdgeStabilizer
};

/// One face record. Finite faces store their full vertex cycle (canonical
/// inside a Complex: lexicographically least rotation of either direction).
/// Infinite faces are planar zigzags; a record stores one maximal in-box run
/// of the vertex path plus the period translation that maps the face onto
/// itself two steps along (stored with lexicographically positive sign).
struct Face {
  bool infinite = false;
  std::vector<Vec3> path;
  Vec3 period{};

  auto operator<=>(const Face&) const = default;
  std::size_t size() const { return path.size(); }
};

using Edge = std::pair<Vec3, Vec3>;
Edge make_edge(const Vec3& a, const Vec3& b);

/// Does the face use the segment e (as consecutive vertices)?
bool face_has_edge(const Face& f, const Edge& e);
/// The (previous, next) neighbour pairs of v along f.
std::vector<std::pair<Vec3, Vec3>> face_corners_at(const Face& f, const Vec3& v);

std::vector<Vec3> canonical_cycle(std::vector<Vec3> cycle);

struct Flag {
  Vec3 vertex;
  Edge edge;
  Face face;

  auto operator<=>(const Flag&) const = default;
};

/// A regular polygonal complex materialized inside a box. All containers are
/// ordered and canonical, so two equal complexes compare equal value-wise.
struct Complex {
  Box box;
  std::set<Vec3> vertices;
  std::set<Edge> edges;
  std::set<Face> faces;
  std::optional<Flag> base_flag;  // present when all three pieces lie in box
};

/// Walk the base face from the base vertex (v_{k+1} = r0(r1(v_k))).
/// Returns the full cycle in walk order for a finite face, or a zigzag stub
/// [v0, v1, v2] with its period translation for an infinite planar one.
/// Throws NonPlanarInfiniteFace for helical or degenerate walks.
Face base_face(const GeneratorSystem& gs, int max_steps = 64);

/// Materialize the complex inside the box: breadth-first search over flag
/// images of the base flag, explored in an expanded region so that nothing
/// reachable within the box is missed, then filtered. Faces are kept when
/// every vertex lies in the box; infinite faces contribute one record per
/// maximal in-box run of at least two vertices. Edges need both endpoints in
/// the box. Deterministic and independent of generator list order.
Complex build(const GeneratorSystem& gs, const Box& box);

/// Vertex and edge orbits of the system inside the box, computed without
/// consulting face structure; also serves systems whose faces the builder
/// cannot represent (helical walks). Agrees with build() on its vertex and
/// edge sets whenever build() succeeds.
std::pair<std::set<Vec3>, std::set<Edge>> vertex_edge_orbit(
    const GeneratorSystem& gs, const Box& box);

/// Restrict to a smaller concentric region by the same inclusion rules the
/// builder uses (so build(gs, small) == restrict_to(build(gs, large), small)).
Complex restrict_to(const Complex& kx, const Box& smaller);

/// Number of faces through an edge. The edge must have an interior endpoint
/// (BoundaryEdge otherwise): every face through such an edge is then complete
/// in the box and the count is exact.
int edge_valence(const Complex& kx, const Edge& e);

/// Multigraph on the neighbours of v: one edge {u, w} per face in which
/// u, v, w are consecutive. Exact for interior v (BoundaryVertex otherwise).
struct Multigraph {
  std::set<Vec3> nodes;
  std::map<Edge, int> edges;

  bool operator==(const Multigraph&) const = default;
};

Multigraph vertex_figure(const Complex& kx, const Vec3& v);

}  // namespace skeletal
