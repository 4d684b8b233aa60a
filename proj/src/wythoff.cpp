// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#include "skeletal/wythoff.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "skeletal/errors.hpp"

namespace skeletal {

void Box::validate() const {
  if (margin < 0 || radius < margin)
    throw InvalidRadius("need radius >= margin >= 0, got radius " +
                        std::to_string(radius) + " and margin " +
                        std::to_string(margin));
}

Edge make_edge(const Vec3& a, const Vec3& b) {
  if (a == b) throw Error("make_edge: degenerate edge at " + to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

void GeneratorSystem::validate() const {
  for (const Isometry* g : {&r0, &r1})
    if (!g->rot.is_signed_permutation())
      throw InvalidGenerators("generator is not an integer isometry: " +
                              to_string(*g));
  if (!r0.is_involution())
    throw InvalidGenerators("r0 must be an involution: " + to_string(r0));
  if (!r1.is_involution())
    throw InvalidGenerators("r1 must be an involution: " + to_string(r1));
  if (r1.apply(base_vertex) != base_vertex)
    throw InvalidGenerators("r1 must fix the base vertex " +
                            to_string(base_vertex) + ": " + to_string(r1));
  const Vec3 twin = twin_vertex();
  if (twin == base_vertex)
    throw InvalidGenerators("r0 must move the base vertex " +
                            to_string(base_vertex));
  for (const Isometry& g : g2) {
    if (!g.rot.is_signed_permutation())
      throw InvalidGenerators("generator is not an integer isometry: " +
                              to_string(g));
    if (g.apply(base_vertex) != base_vertex)
      throw NotEdgeStabilizer("g2 generator " + to_string(g) +
                              " moves the base vertex " + to_string(base_vertex));
    if (g.apply(twin) != twin)
      throw NotEdgeStabilizer("g2 generator " + to_string(g) +
                              " moves the twin vertex " + to_string(twin));
  }
}

bool face_has_edge(const Face& f, const Edge& e) {
  const auto& p = f.path;
  const std::size_t n = p.size();
  if (n < 2) return false;
  const std::size_t segments = f.infinite ? n - 1 : n;
  for (std::size_t i = 0; i < segments; ++i) {
    const Vec3& a = p[i];
    const Vec3& b = p[(i + 1) % n];
    if ((a == e.first && b == e.second) || (a == e.second && b == e.first))
      return true;
  }
  return false;
}

std::vector<std::pair<Vec3, Vec3>> face_corners_at(const Face& f, const Vec3& v) {
  std::vector<std::pair<Vec3, Vec3>> out;
  const auto& p = f.path;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] != v) continue;
    if (f.infinite) {
      // A run end has only one neighbour: no corner there. (Interior
      // vertices never sit at run ends when the margin covers edge reach.)
      if (i == 0 || i + 1 == n) continue;
      out.emplace_back(p[i - 1], p[i + 1]);
    } else {
      out.emplace_back(p[(i + n - 1) % n], p[(i + 1) % n]);
    }
  }
  return out;
}

std::vector<Vec3> canonical_cycle(std::vector<Vec3> cycle) {
  const std::size_t n = cycle.size();
  if (n < 2) return cycle;
  std::vector<Vec3> best = cycle;
  std::vector<Vec3> rev(cycle.rbegin(), cycle.rend());
  std::vector<Vec3> cand(n);
  for (const auto* src : {&cycle, &rev})
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t i = 0; i < n; ++i) cand[i] = (*src)[(s + i) % n];
      if (cand < best) best = cand;
    }
  return best;
}

namespace {

Isometry power(const Isometry& a, int k) {
  Isometry acc;
  for (int i = 0; i < k; ++i) acc = compose(acc, a);
  return acc;
}

Vec3 lex_positive(const Vec3& v) {
  const Vec3 zero{};
  return v < zero ? -v : v;
}

Face make_zigzag_record(std::vector<Vec3> path, const Vec3& period) {
  Face f;
  f.infinite = true;
  f.period = lex_positive(period);
  std::vector<Vec3> rev(path.rbegin(), path.rend());
  f.path = rev < path ? std::move(rev) : std::move(path);
  return f;
}

// Maximal consecutive in-box subruns with at least two vertices, as records.
std::vector<Face> clip_zigzag(const Face& run, int radius) {
  std::vector<Face> out;
  std::size_t i = 0;
  const auto& p = run.path;
  while (i < p.size()) {
    if (p[i].norm_inf() > radius) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < p.size() && p[j + 1].norm_inf() <= radius) ++j;
    if (j > i)
      out.push_back(make_zigzag_record({p.begin() + i, p.begin() + j + 1},
                                       run.period));
    i = j + 1;
  }
  return out;
}

}  // namespace

Face base_face(const GeneratorSystem& gs, int max_steps) {
  gs.validate();
  const Isometry tau = compose(gs.r1, gs.r0);
  const int lin_period = tau.rot.order();
  const Vec3 shift = power(tau, lin_period).tr;

  if (shift.is_zero()) {
    std::vector<Vec3> cycle;
    Vec3 v = gs.base_vertex;
    for (int k = 0; k < max_steps; ++k) {
      cycle.push_back(v);
      v = tau.apply(v);
      if (v == gs.base_vertex) break;
    }
    if (v != gs.base_vertex)
      throw NonPlanarInfiniteFace("face walk failed to close within " +
                                  std::to_string(max_steps) + " steps");
    if (cycle.size() < 3)
      throw InvalidGenerators("face walk closes after " +
                              std::to_string(cycle.size()) +
                              " steps: degenerate polygon");
    if (std::set<Vec3>(cycle.begin(), cycle.end()).size() != cycle.size())
      throw InvalidGenerators("face walk revisits a vertex before closing");
    Face f;
    f.path = std::move(cycle);
    return f;
  }

  if (lin_period > 2)
    throw NonPlanarInfiniteFace(
        "face walk is helical: rotates with period " +
        std::to_string(lin_period) + " while translating by " +
        to_string(shift));
  Face f;
  f.infinite = true;
  const Vec3 v0 = gs.base_vertex;
  const Vec3 v1 = tau.apply(v0);
  f.path = {v0, v1, tau.apply(v1)};
  if (lin_period == 1 || affine_rank(f.path) != 2)
    throw NonPlanarInfiniteFace(
        "face walk degenerates to a straight apeirogon along " +
        to_string(shift));
  f.period = shift;
  return f;
}

Complex build(const GeneratorSystem& gs, const Box& box) {
  box.validate();
  const Face bf = base_face(gs);  // also validates gs

  const Vec3 o = gs.base_vertex;
  const Vec3 twin = gs.twin_vertex();
  const Isometry tau = compose(gs.r1, gs.r0);

  // Exploration slack: base-face spread plus elbow room, so nothing in the
  // box is reachable only through flags far outside the expanded region.
  // (The restriction property test pins this down empirically.)
  i64 spread = 0;
  {
    std::vector<Vec3> probe = bf.path;
    if (bf.infinite) probe.push_back(bf.path[0] + bf.period);
    for (const Vec3& a : probe)
      for (const Vec3& b : probe) spread = std::max(spread, (a - b).norm_inf());
  }
  const int expanded = box.radius + static_cast<int>(spread) + 4;

  // For infinite faces, a window of the base face's doubly infinite vertex
  // path u_k, wide enough to cover any image meeting the expanded region.
  std::vector<Vec3> window;
  int offset = 0;
  if (bf.infinite) {
    const int reach = 4 * expanded + 8;
    offset = reach;
    window.assign(2 * reach + 1, {});
    window[offset] = o;
    const Isometry tau_inv = inverse(tau);
    Vec3 fwd = o, bwd = o;
    for (int k = 1; k <= reach; ++k) {
      fwd = tau.apply(fwd);
      bwd = tau_inv.apply(bwd);
      window[offset + k] = fwd;
      window[offset - k] = bwd;
    }
  }

  // Face record within |.| <= R for the face of g's flag; for zigzags this
  // is the maximal in-R run around the flag's own vertex (index 0).
  auto face_within = [&](const Isometry& g, int radius) -> Face {
    if (!bf.infinite) {
      std::vector<Vec3> cycle;
      cycle.reserve(bf.path.size());
      for (const Vec3& c : bf.path) cycle.push_back(g.apply(c));
      Face f;
      f.path = canonical_cycle(std::move(cycle));
      return f;
    }
    auto inside = [&](int k) {
      return k >= -offset && k + offset < static_cast<int>(window.size()) &&
             g.apply(window[k + offset]).norm_inf() <= radius;
    };
    int lo = 0, hi = 0;
    while (inside(lo - 1)) --lo;
    while (inside(hi + 1)) ++hi;
    std::vector<Vec3> path;
    path.reserve(hi - lo + 1);
    for (int k = lo; k <= hi; ++k) path.push_back(g.apply(window[k + offset]));
    return make_zigzag_record(std::move(path), g.rot.apply(bf.period));
  };

  // Flag adjacency letters; r0 and r1 steps stay on the same face, so the
  // face record only needs recomputing on edge-stabilizer steps.
  std::vector<std::pair<Isometry, bool>> letters = {{gs.r0, true},
                                                    {gs.r1, true}};
  {
    std::set<Isometry> side;
    for (const Isometry& s : gs.g2) {
      side.insert(s);
      side.insert(inverse(s));
    }
    for (const Isometry& s : side) letters.emplace_back(s, false);
  }

  std::map<Face, int> face_ids;
  std::vector<const Face*> face_by_id;
  auto face_id_of = [&](const Isometry& g) {
    Face f = face_within(g, expanded);
    auto [it, inserted] =
        face_ids.emplace(std::move(f), static_cast<int>(face_ids.size()));
    if (inserted) face_by_id.push_back(&it->first);
    return it->second;
  };

  // The walk explores group elements, not flags: systems with a nontrivial
  // flag stabilizer (point-reflection r0) hang two elements on each flag,
  // and their edge-stabilizer steps reach different neighbouring faces.
  struct Pending {
    Isometry g;
    int fid;
  };
  std::deque<Pending> work;
  std::set<Isometry> visited;

  auto try_push = [&](const Isometry& g, int fid) {
    if (visited.insert(g).second) work.push_back({g, fid});
  };

  try_push(Isometry::identity(), face_id_of(Isometry::identity()));
  while (!work.empty()) {
    Pending cur = std::move(work.front());
    work.pop_front();
    for (const auto& [s, same_face] : letters) {
      Isometry g = compose(s, cur.g);
      if (g.apply(o).norm_inf() > expanded) continue;
      try_push(g, same_face ? cur.fid : face_id_of(g));
    }
  }

  Complex out;
  out.box = box;
  for (const Isometry& g : visited) {
    const Vec3 v = g.apply(o);
    const Vec3 w = g.apply(twin);
    if (box.contains(v)) out.vertices.insert(v);
    if (box.contains(v) && box.contains(w)) out.edges.insert(make_edge(v, w));
  }
  for (const Face* f : face_by_id) {
    if (!f->infinite) {
      if (std::all_of(f->path.begin(), f->path.end(),
                      [&](const Vec3& v) { return box.contains(v); }))
        out.faces.insert(*f);
    } else {
      for (Face& piece : clip_zigzag(*f, box.radius))
        out.faces.insert(std::move(piece));
    }
  }

  if (box.contains(o) && box.contains(twin)) {
    std::optional<Face> bface;
    if (!bf.infinite) {
      Face f = face_within(Isometry::identity(), box.radius);
      if (std::all_of(f.path.begin(), f.path.end(),
                      [&](const Vec3& v) { return box.contains(v); }))
        bface = std::move(f);
    } else {
      // Run through the base vertex inside the main box: both endpoints of
      // the base edge are in the box, so it has at least two vertices.
      bface = face_within(Isometry::identity(), box.radius);
    }
    if (bface) out.base_flag = Flag{o, make_edge(o, twin), std::move(*bface)};
  }
  return out;
}

std::pair<std::set<Vec3>, std::set<Edge>> vertex_edge_orbit(
    const GeneratorSystem& gs, const Box& box) {
  box.validate();
  gs.validate();
  const Vec3 o = gs.base_vertex;
  const Vec3 twin = gs.twin_vertex();
  const int expanded = box.radius + 8;

  std::vector<Isometry> letters = {gs.r0, gs.r1};
  {
    std::set<Isometry> side;
    for (const Isometry& s : gs.g2) {
      side.insert(s);
      side.insert(inverse(s));
    }
    letters.insert(letters.end(), side.begin(), side.end());
  }

  std::set<Isometry> visited = {Isometry::identity()};
  std::deque<Isometry> work = {Isometry::identity()};
  while (!work.empty()) {
    Isometry cur = std::move(work.front());
    work.pop_front();
    for (const Isometry& s : letters) {
      Isometry g = compose(s, cur);
      if (g.apply(o).norm_inf() > expanded) continue;
      if (visited.insert(g).second) work.push_back(std::move(g));
    }
  }

  std::pair<std::set<Vec3>, std::set<Edge>> out;
  for (const Isometry& g : visited) {
    const Vec3 v = g.apply(o);
    const Vec3 w = g.apply(twin);
    if (box.contains(v)) out.first.insert(v);
    if (box.contains(v) && box.contains(w)) out.second.insert(make_edge(v, w));
  }
  return out;
}

Complex restrict_to(const Complex& kx, const Box& smaller) {
  smaller.validate();
  if (smaller.radius > kx.box.radius)
    throw RegionMismatch("cannot restrict a radius-" +
                         std::to_string(kx.box.radius) + " complex to radius " +
                         std::to_string(smaller.radius));
  Complex out;
  out.box = smaller;
  for (const Vec3& v : kx.vertices)
    if (smaller.contains(v)) out.vertices.insert(v);
  for (const Edge& e : kx.edges)
    if (smaller.contains(e.first) && smaller.contains(e.second))
      out.edges.insert(e);
  for (const Face& f : kx.faces) {
    if (!f.infinite) {
      if (std::all_of(f.path.begin(), f.path.end(),
                      [&](const Vec3& v) { return smaller.contains(v); }))
        out.faces.insert(f);
    } else {
      for (Face& piece : clip_zigzag(f, smaller.radius))
        out.faces.insert(std::move(piece));
    }
  }
  if (kx.base_flag) {
    const Flag& b = *kx.base_flag;
    if (smaller.contains(b.vertex) && smaller.contains(b.edge.first) &&
        smaller.contains(b.edge.second)) {
      if (!b.face.infinite) {
        if (std::all_of(b.face.path.begin(), b.face.path.end(),
                        [&](const Vec3& v) { return smaller.contains(v); }))
          out.base_flag = b;
      } else {
        // The subrun through the base vertex survives iff it keeps an edge.
        for (Face& piece : clip_zigzag(b.face, smaller.radius))
          if (std::find(piece.path.begin(), piece.path.end(), b.vertex) !=
              piece.path.end())
            out.base_flag = Flag{b.vertex, b.edge, std::move(piece)};
      }
    }
  }
  return out;
}

int edge_valence(const Complex& kx, const Edge& e) {
  if (!kx.edges.count(e))
    throw Error("edge_valence: not an edge of the complex: " +
                to_string(e.first) + "--" + to_string(e.second));
  if (!kx.box.interior(e.first) && !kx.box.interior(e.second))
    throw BoundaryEdge("edge " + to_string(e.first) + "--" +
                       to_string(e.second) +
                       " has no interior endpoint (radius " +
                       std::to_string(kx.box.radius) + ", margin " +
                       std::to_string(kx.box.margin) + ")");
  int n = 0;
  for (const Face& f : kx.faces) n += face_has_edge(f, e);
  return n;
}

Multigraph vertex_figure(const Complex& kx, const Vec3& v) {
  if (!kx.vertices.count(v))
    throw Error("vertex_figure: not a vertex of the complex: " + to_string(v));
  if (!kx.box.interior(v))
    throw BoundaryVertex("vertex " + to_string(v) +
                         " is not interior (radius " +
                         std::to_string(kx.box.radius) + ", margin " +
                         std::to_string(kx.box.margin) + ")");
  Multigraph mg;
  for (const Edge& e : kx.edges) {
    if (e.first == v) mg.nodes.insert(e.second);
    if (e.second == v) mg.nodes.insert(e.first);
  }
  for (const Face& f : kx.faces)
    for (const auto& [a, b] : face_corners_at(f, v)) ++mg.edges[make_edge(a, b)];
  return mg;
}

}  // namespace skeletal
