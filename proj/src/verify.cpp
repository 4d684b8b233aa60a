// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#include "skeletal/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include <json.hpp>

#include "skeletal/errors.hpp"

namespace skeletal {

namespace {

int mod2(i64 a) { return static_cast<int>(((a % 2) + 2) % 2); }

i64 sq_len(const Vec3& d) { return d.x * d.x + d.y * d.y + d.z * d.z; }

bool tag_contains(LatticeTag tag, const Vec3& p) {
  switch (tag) {
    case LatticeTag::z3:
      return true;
    case LatticeTag::fcc:
      return mod2(p.x + p.y + p.z) == 0;
    case LatticeTag::bcc:
      return mod2(p.x) == mod2(p.y) && mod2(p.y) == mod2(p.z);
    case LatticeTag::z3_minus_shifted_bcc:
      return !tag_contains(LatticeTag::bcc, p - Vec3{0, 0, 1});
    case LatticeTag::diamond: {
      auto in_2fcc = [](const Vec3& q) {
        return mod2(q.x) == 0 && mod2(q.y) == 0 && mod2(q.z) == 0 &&
               mod2((q.x + q.y + q.z) / 2) == 0;
      };
      return in_2fcc(p) || in_2fcc(p - Vec3{1, -1, 1});
    }
  }
  return false;
}

std::string tag_name(LatticeTag tag) {
  switch (tag) {
    case LatticeTag::z3: return "Z3";
    case LatticeTag::fcc: return "FCC";
    case LatticeTag::bcc: return "BCC";
    case LatticeTag::z3_minus_shifted_bcc: return "Z3-minus-shifted-BCC";
    case LatticeTag::diamond: return "diamond";
  }
  return "?";
}

}  // namespace

std::string to_string(const LatticeName& name) {
  std::string out = tag_name(name.tag);
  if (name.scale != 1) out = std::to_string(name.scale) + "*" + out;
  if (!name.shift.is_zero()) out = to_string(name.shift) + "+" + out;
  return out;
}

bool lattice_contains(const LatticeName& name, const Vec3& p) {
  Vec3 q = p - name.shift;
  if (name.scale != 1) {
    if (q.x % name.scale != 0 || q.y % name.scale != 0 ||
        q.z % name.scale != 0)
      return false;
    q = Vec3{q.x / name.scale, q.y / name.scale, q.z / name.scale};
  }
  return tag_contains(name.tag, q);
}

LatticeCheck lattice_test(const std::set<Vec3>& points,
                          const LatticeName& name, const Box& box) {
  LatticeCheck out;
  for (const Vec3& p : points)
    if (!box.contains(p)) {
      out.witness = p;
      out.detail = "point outside the box";
      return out;
    }
  i64 r = box.radius;
  int lattice_count = 0;
  for (i64 x = -r; x <= r; ++x)
    for (i64 y = -r; y <= r; ++y)
      for (i64 z = -r; z <= r; ++z) {
        Vec3 p{x, y, z};
        bool expect = lattice_contains(name, p);
        lattice_count += expect;
        if (expect == (points.count(p) > 0)) continue;
        out.witness = p;
        out.detail = expect ? "lattice point missing from the set"
                            : "set point outside the lattice";
        return out;
      }
  out.pass = true;
  out.detail = std::to_string(lattice_count) + " points of " +
               to_string(name) + " in the box";
  return out;
}

std::string to_string(const std::optional<FigureName>& name) {
  if (!name) return "unrecognized";
  std::string shape;
  switch (name->shape) {
    case FigureShape::tetrahedron: shape = "tetrahedron"; break;
    case FigureShape::square: shape = "square"; break;
    case FigureShape::cube: shape = "cube"; break;
    case FigureShape::octahedron: shape = "octahedron"; break;
    case FigureShape::cuboctahedron: shape = "cuboctahedron"; break;
  }
  return shape + (name->multiplicity == 1 ? "-simple" : "-double");
}

Multigraph reference_figure(FigureShape shape, int multiplicity) {
  Multigraph out;
  i64 adjacent_sq = 0;
  switch (shape) {
    case FigureShape::tetrahedron:
      out.nodes = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      adjacent_sq = 8;
      break;
    case FigureShape::square:
      out.nodes = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
      adjacent_sq = 2;
      break;
    case FigureShape::cube:
      for (i64 x : {-1, 1})
        for (i64 y : {-1, 1})
          for (i64 z : {-1, 1}) out.nodes.insert({x, y, z});
      adjacent_sq = 4;
      break;
    case FigureShape::octahedron:
      out.nodes = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                   {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      adjacent_sq = 2;
      break;
    case FigureShape::cuboctahedron:
      for (i64 a : {-1, 1})
        for (i64 b : {-1, 1}) {
          out.nodes.insert({a, b, 0});
          out.nodes.insert({a, 0, b});
          out.nodes.insert({0, a, b});
        }
      adjacent_sq = 2;
      break;
  }
  for (auto i = out.nodes.begin(); i != out.nodes.end(); ++i)
    for (auto j = std::next(i); j != out.nodes.end(); ++j)
      if (sq_len(*j - *i) == adjacent_sq)
        out.edges[make_edge(*i, *j)] = multiplicity;
  return out;
}

namespace {

// Node-indexed view of a multigraph for the backtracking matcher.
struct IndexedGraph {
  std::vector<Vec3> nodes;
  std::vector<std::vector<int>> mult;  // adjacency with multiplicities
  std::vector<std::vector<i64>> degree_key;

  explicit IndexedGraph(const Multigraph& g)
      : nodes(g.nodes.begin(), g.nodes.end()) {
    int n = static_cast<int>(nodes.size());
    mult.assign(n, std::vector<int>(n, 0));
    std::map<Vec3, int> index;
    for (int i = 0; i < n; ++i) index[nodes[i]] = i;
    for (const auto& [e, m] : g.edges) {
      int a = index.at(e.first), b = index.at(e.second);
      mult[a][b] = mult[b][a] = m;
    }
    // Sorted incident-multiplicity list: a permutation invariant per node.
    degree_key.assign(n, {});
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        if (mult[i][j] > 0) degree_key[i].push_back(mult[i][j]);
      std::sort(degree_key[i].begin(), degree_key[i].end());
    }
  }
};

bool extend_isomorphism(const IndexedGraph& a, const IndexedGraph& b,
                        std::vector<int>& image, std::vector<bool>& used,
                        std::size_t next) {
  if (next == a.nodes.size()) return true;
  for (int candidate = 0; candidate < static_cast<int>(b.nodes.size());
       ++candidate) {
    if (used[candidate]) continue;
    if (a.degree_key[next] != b.degree_key[candidate]) continue;
    bool consistent = true;
    for (std::size_t prev = 0; prev < next && consistent; ++prev)
      consistent = a.mult[next][prev] == b.mult[candidate][image[prev]];
    if (!consistent) continue;
    image[next] = candidate;
    used[candidate] = true;
    if (extend_isomorphism(a, b, image, used, next + 1)) return true;
    used[candidate] = false;
  }
  return false;
}

}  // namespace

bool multigraphs_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size())
    return false;
  IndexedGraph ia(a), ib(b);
  auto key_multiset = [](const IndexedGraph& g) {
    std::vector<std::vector<i64>> keys = g.degree_key;
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  if (key_multiset(ia) != key_multiset(ib)) return false;
  std::vector<int> image(ia.nodes.size(), -1);
  std::vector<bool> used(ib.nodes.size(), false);
  return extend_isomorphism(ia, ib, image, used, 0);
}

std::optional<FigureName> identify_vertex_figure(const Multigraph& g) {
  for (FigureShape shape :
       {FigureShape::tetrahedron, FigureShape::square, FigureShape::cube,
        FigureShape::octahedron, FigureShape::cuboctahedron})
    for (int multiplicity : {1, 2}) {
      FigureName name{shape, multiplicity};
      if (multigraphs_isomorphic(g, reference_figure(shape, multiplicity)))
        return name;
    }
  return std::nullopt;
}

FaceShape classify_face_shape(const Face& f) {
  FaceShape out;
  out.infinite = f.infinite;
  std::vector<i64> steps;
  if (f.infinite) {
    for (std::size_t i = 0; i + 1 < f.path.size(); ++i)
      steps.push_back(sq_len(f.path[i + 1] - f.path[i]));
    // The walk continues past the stored run: two steps ahead is a period
    // translate, so the next vertex is the second-to-last one shifted.
    if (f.path.size() >= 2)
      steps.push_back(
          sq_len(f.path[f.path.size() - 2] + f.period - f.path.back()));
    std::vector<Vec3> span = f.path;
    span.push_back(f.path.front() + f.period);
    out.planar = affine_rank(span) <= 2;
  } else {
    out.size = static_cast<int>(f.path.size());
    for (std::size_t i = 0; i < f.path.size(); ++i)
      steps.push_back(
          sq_len(f.path[(i + 1) % f.path.size()] - f.path[i]));
    out.planar = affine_rank(f.path) <= 2;
  }
  out.edge_sq = steps.empty() ? 0 : steps.front();
  out.regular_edges =
      std::all_of(steps.begin(), steps.end(),
                  [&](i64 s) { return s == out.edge_sq; });
  return out;
}

namespace {

void require_same_region(const Complex& a, const Complex& b) {
  if (a.box.radius != b.box.radius || a.box.margin != b.box.margin)
    throw RegionMismatch("boxes differ: radius " +
                         std::to_string(a.box.radius) + "/" +
                         std::to_string(b.box.radius) + ", margin " +
                         std::to_string(a.box.margin) + "/" +
                         std::to_string(b.box.margin));
}

std::string face_brief(const Face& f) {
  std::string out = f.infinite ? "zigzag [" : "cycle [";
  for (std::size_t i = 0; i < f.path.size(); ++i)
    out += (i ? " " : "") + to_string(f.path[i]);
  out += "]";
  if (f.infinite) out += " period " + to_string(f.period);
  return out;
}

std::string edge_brief(const Edge& e) {
  return to_string(e.first) + "-" + to_string(e.second);
}

// First element of (a minus b), if any, rendered through `show`.
template <typename Set, typename Show>
std::optional<std::string> first_missing(const Set& a, const Set& b,
                                         Show show, const char* kind,
                                         const char* where) {
  for (const auto& x : a)
    if (!b.count(x))
      return std::string(kind) + " " + show(x) + " " + where;
  return std::nullopt;
}

}  // namespace

EqualityCheck complexes_equal(const Complex& a, const Complex& b) {
  require_same_region(a, b);
  auto show_v = [](const Vec3& v) { return to_string(v); };
  auto show_e = [](const Edge& e) { return edge_brief(e); };
  auto show_f = [](const Face& f) { return face_brief(f); };
  for (auto witness :
       {first_missing(a.vertices, b.vertices, show_v, "vertex", "only in first"),
        first_missing(b.vertices, a.vertices, show_v, "vertex", "only in second"),
        first_missing(a.edges, b.edges, show_e, "edge", "only in first"),
        first_missing(b.edges, a.edges, show_e, "edge", "only in second"),
        first_missing(a.faces, b.faces, show_f, "face", "only in first"),
        first_missing(b.faces, a.faces, show_f, "face", "only in second")})
    if (witness) return {false, *witness};
  return {true, ""};
}

EqualityCheck is_subcomplex(const Complex& a, const Complex& b) {
  require_same_region(a, b);
  auto show_v = [](const Vec3& v) { return to_string(v); };
  auto show_e = [](const Edge& e) { return edge_brief(e); };
  auto show_f = [](const Face& f) { return face_brief(f); };
  for (auto witness :
       {first_missing(a.vertices, b.vertices, show_v, "vertex", "not in superset"),
        first_missing(a.edges, b.edges, show_e, "edge", "not in superset"),
        first_missing(a.faces, b.faces, show_f, "face", "not in superset")})
    if (witness) return {false, *witness};
  return {true, ""};
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["catalog_id"] = report.catalog_id;
  j["checks"] = nlohmann::ordered_json::array();
  int passed = 0;
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["details"] = c.details;
    jc["witnesses"] = c.witnesses;
    j["checks"].push_back(jc);
    passed += c.pass;
  }
  j["summary"] = {{"total", report.checks.size()},
                  {"passed", passed},
                  {"all_pass", report.all_pass()}};
  return j.dump(2);
}

namespace {

// Connectivity of a multigraph, multiplicities ignored. Empty graphs count
// as connected. On failure *unreached gets a node missed by the sweep.
bool graph_connected(const Multigraph& g, Vec3* unreached) {
  if (g.nodes.empty()) return true;
  std::map<Vec3, std::vector<Vec3>> adjacency;
  for (const auto& [e, m] : g.edges) {
    adjacency[e.first].push_back(e.second);
    adjacency[e.second].push_back(e.first);
  }
  std::set<Vec3> seen = {*g.nodes.begin()};
  std::deque<Vec3> work = {*g.nodes.begin()};
  while (!work.empty()) {
    Vec3 v = work.front();
    work.pop_front();
    for (const Vec3& w : adjacency[v])
      if (seen.insert(w).second) work.push_back(w);
  }
  for (const Vec3& v : g.nodes)
    if (!seen.count(v)) {
      if (unreached) *unreached = v;
      return false;
    }
  return true;
}

std::vector<Vec3> interior_vertices(const Complex& k) {
  std::vector<Vec3> out;
  for (const Vec3& v : k.vertices)
    if (k.box.interior(v)) out.push_back(v);
  return out;
}

// Edges with at least one margin-protected endpoint: the ones whose full
// face ring fits inside the box.
std::vector<Edge> checkable_edges(const Complex& k) {
  std::vector<Edge> out;
  for (const Edge& e : k.edges)
    if (k.box.interior(e.first) || k.box.interior(e.second)) out.push_back(e);
  return out;
}

}  // namespace

VerificationReport check_axioms(const Complex& k) {
  VerificationReport out;
  const std::vector<Vec3> interior = interior_vertices(k);

  {  // (a) connectivity of the interior edge graph
    CheckResult c{"edge-graph-connected", true, "", {}};
    Multigraph g;
    g.nodes.insert(interior.begin(), interior.end());
    for (const Edge& e : k.edges)
      if (g.nodes.count(e.first) && g.nodes.count(e.second))
        g.edges[e] = 1;
    Vec3 unreached{};
    if (!graph_connected(g, &unreached)) {
      c.pass = false;
      c.witnesses.push_back("vertex " + to_string(unreached) +
                            " unreachable from " +
                            to_string(*g.nodes.begin()));
    }
    c.details = std::to_string(g.nodes.size()) + " interior vertices, " +
                std::to_string(g.edges.size()) + " interior edges";
    out.checks.push_back(std::move(c));
  }

  {  // (b) connectivity of every interior vertex figure
    CheckResult c{"vertex-figures-connected", true, "", {}};
    for (const Vec3& v : interior) {
      Multigraph figure = vertex_figure(k, v);
      Vec3 unreached{};
      if (figure.nodes.empty()) {
        c.pass = false;
        c.witnesses.push_back("vertex " + to_string(v) + " has empty figure");
      } else if (!graph_connected(figure, &unreached)) {
        c.pass = false;
        c.witnesses.push_back("figure of " + to_string(v) +
                              " disconnected at node " + to_string(unreached));
      }
    }
    c.details = std::to_string(interior.size()) + " figures checked";
    out.checks.push_back(std::move(c));
  }

  {  // (c) one constant face count around every checkable edge
    CheckResult c{"edge-valence-constant", true, "", {}};
    const std::vector<Edge> edges = checkable_edges(k);
    int r = 0;
    for (const Edge& e : edges) {
      int valence = edge_valence(k, e);
      if (r == 0) r = valence;
      if (valence != r) {
        c.pass = false;
        c.witnesses.push_back("edge " + edge_brief(e) + " has " +
                              std::to_string(valence) + " faces, expected " +
                              std::to_string(r));
        break;
      }
    }
    if (c.pass && r > 0 && r < 2) {
      c.pass = false;
      c.witnesses.push_back("valence " + std::to_string(r) +
                            " is below the defining minimum of 2");
    }
    c.details = "r = " + std::to_string(r) + " over " +
                std::to_string(edges.size()) + " checkable edges";
    out.checks.push_back(std::move(c));
  }

  {  // (d) finiteness inside the box, reported as counts
    CheckResult c{"finite-counts", true, "", {}};
    c.details = std::to_string(k.vertices.size()) + " vertices, " +
                std::to_string(k.edges.size()) + " edges, " +
                std::to_string(k.faces.size()) + " faces";
    out.checks.push_back(std::move(c));
  }

  return out;
}

std::optional<CatalogExpectation> catalog_expectation(CatalogId id) {
  using LT = LatticeTag;
  auto figure = [](FigureShape s, int m) {
    return std::optional<FigureName>(FigureName{s, m});
  };
  switch (id) {
    case CatalogId::k1:
      return CatalogExpectation{4, 4, LatticeName{LT::fcc},
                                figure(FigureShape::cuboctahedron, 1)};
    case CatalogId::k2:
      return CatalogExpectation{4, 3, LatticeName{LT::bcc},
                                figure(FigureShape::cube, 1)};
    case CatalogId::k3:
      return CatalogExpectation{4, 6, LatticeName{LT::bcc},
                                figure(FigureShape::cube, 2)};
    case CatalogId::k4:
      return CatalogExpectation{6, 4, LatticeName{LT::z3},
                                figure(FigureShape::octahedron, 1)};
    case CatalogId::k5:
      return CatalogExpectation{6, 4, LatticeName{LT::z3_minus_shifted_bcc},
                                figure(FigureShape::square, 2)};
    case CatalogId::k6:
      return CatalogExpectation{6, 8, LatticeName{LT::z3},
                                figure(FigureShape::octahedron, 2)};
    case CatalogId::k7:
      return CatalogExpectation{6, 6, LatticeName{LT::diamond},
                                figure(FigureShape::tetrahedron, 2)};
    case CatalogId::k8:
      return CatalogExpectation{6, 4, LatticeName{LT::fcc},
                                figure(FigureShape::cuboctahedron, 1)};
    case CatalogId::p664:
      return CatalogExpectation{6, 2, std::nullopt, std::nullopt};
    case CatalogId::p466:
      return CatalogExpectation{4, 2, std::nullopt, std::nullopt};
    case CatalogId::p646:
      return CatalogExpectation{6, 2, std::nullopt, std::nullopt};
    case CatalogId::skel434:
      return CatalogExpectation{4, 4, LatticeName{LT::z3},
                                figure(FigureShape::octahedron, 1)};
    case CatalogId::skel_apeir_333:
      return CatalogExpectation{0, 0, LatticeName{LT::diamond}, std::nullopt};
    case CatalogId::skel_apeir_334:
      return CatalogExpectation{0, 0, LatticeName{LT::z3, 2}, std::nullopt};
    case CatalogId::skel_apeir_433:
      return CatalogExpectation{0, 0, LatticeName{LT::bcc}, std::nullopt};
    case CatalogId::subgroup_h:
      return CatalogExpectation{4, 4, LatticeName{LT::z3},
                                figure(FigureShape::octahedron, 1)};
  }
  return std::nullopt;
}

VerificationReport verify_catalog_entry(CatalogId id, const Box& box) {
  box.validate();
  const GeneratorSystem gs = generator_system(id);
  const Complex k = build_catalog(id, box);
  VerificationReport out = check_axioms(k);
  out.catalog_id = to_string(id);
  const std::optional<CatalogExpectation> expect = catalog_expectation(id);

  {  // face size and shape, on the base face and every stored record
    CheckResult c{"face-size", true, "", {}};
    const Face base = base_face(gs);
    const FaceShape shape = classify_face_shape(base);
    const int size = shape.infinite ? 0 : shape.size;
    if (expect && size != expect->face_size) {
      c.pass = false;
      c.witnesses.push_back("base face has size " + std::to_string(size) +
                            ", expected " + std::to_string(expect->face_size));
    }
    for (const Face& f : k.faces) {
      const FaceShape s = classify_face_shape(f);
      if (f.infinite != base.infinite ||
          (!f.infinite && s.size != shape.size) || !s.regular_edges ||
          s.edge_sq != shape.edge_sq) {
        c.pass = false;
        c.witnesses.push_back("stored " + face_brief(f) +
                              " does not match the base face");
        break;
      }
    }
    c.details = std::string(shape.infinite ? "zigzag" : shape.planar
                                                            ? "planar cycle"
                                                            : "skew cycle") +
                (shape.infinite ? "" : " of " + std::to_string(shape.size)) +
                ", edge sq length " + std::to_string(shape.edge_sq);
    out.checks.push_back(std::move(c));
  }

  if (expect && expect->valence > 0) {  // edge valence against the matrix
    CheckResult c{"edge-valence", true, "", {}};
    Edge base_edge = make_edge(gs.base_vertex, gs.twin_vertex());
    int r = edge_valence(k, base_edge);
    if (r != expect->valence) {
      c.pass = false;
      c.witnesses.push_back("edge " + edge_brief(base_edge) + " has " +
                            std::to_string(r) + " faces, expected " +
                            std::to_string(expect->valence));
    }
    c.details = "r = " + std::to_string(r);
    out.checks.push_back(std::move(c));
  }

  if (expect && expect->lattice) {  // vertex lattice over the whole box
    CheckResult c{"vertex-lattice", true, "", {}};
    LatticeCheck lat = lattice_test(k.vertices, *expect->lattice, box);
    c.pass = lat.pass;
    if (lat.witness)
      c.witnesses.push_back(to_string(*lat.witness) + ": " + lat.detail);
    c.details = to_string(*expect->lattice) +
                (lat.pass ? " (" + lat.detail + ")" : "");
    out.checks.push_back(std::move(c));
  }

  if (expect && expect->figure) {  // vertex figure at the base vertex
    CheckResult c{"vertex-figure", true, "", {}};
    std::optional<FigureName> got =
        identify_vertex_figure(vertex_figure(k, gs.base_vertex));
    if (got != expect->figure) {
      c.pass = false;
      c.witnesses.push_back("figure at " + to_string(gs.base_vertex) +
                            " identifies as " + to_string(got) +
                            ", expected " + to_string(expect->figure));
    }
    c.details = to_string(got);
    out.checks.push_back(std::move(c));
  }

  {  // single-or-double dichotomy of every interior figure
    CheckResult c{"figure-multiplicity-dichotomy", true, "", {}};
    for (const Vec3& v : interior_vertices(k)) {
      const Multigraph figure = vertex_figure(k, v);
      std::set<int> mults;
      for (const auto& [e, m] : figure.edges) mults.insert(m);
      if (mults.size() > 1 || (mults.size() == 1 &&
                               *mults.begin() != 1 && *mults.begin() != 2)) {
        c.pass = false;
        c.witnesses.push_back("figure of " + to_string(v) +
                              " mixes edge multiplicities");
        break;
      }
    }
    c.details = "all interior figures uniformly single or double";
    out.checks.push_back(std::move(c));
  }

  if (id == CatalogId::skel434) {  // planar faces force simple figures
    CheckResult c{"planar-faces-simple-figures", true, "", {}};
    for (const Face& f : k.faces)
      if (!classify_face_shape(f).planar) {
        c.pass = false;
        c.witnesses.push_back(face_brief(f) + " is not planar");
        break;
      }
    for (const Vec3& v : interior_vertices(k)) {
      for (const auto& [e, m] : vertex_figure(k, v).edges)
        if (m != 1) {
          c.pass = false;
          c.witnesses.push_back("figure of " + to_string(v) +
                                " has a multiple edge " + edge_brief(e));
          break;
        }
      if (!c.pass) break;
    }
    c.details = "planar faces and single-edge figures";
    out.checks.push_back(std::move(c));
  }

  if (id == CatalogId::k4 || id == CatalogId::k6) {
    // The edge set fills the full grid of unit segments.
    CheckResult c{"edges-fill-cubical-grid", true, "", {}};
    std::set<Edge> expected;
    i64 r = box.radius;
    for (i64 x = -r; x <= r; ++x)
      for (i64 y = -r; y <= r; ++y)
        for (i64 z = -r; z <= r; ++z)
          for (const Vec3& step :
               {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
            Vec3 p{x, y, z};
            if (box.contains(p + step))
              expected.insert(make_edge(p, p + step));
          }
    if (k.edges != expected) {
      c.pass = false;
      auto w1 = first_missing(expected, k.edges,
                              [](const Edge& e) { return edge_brief(e); },
                              "segment", "missing from the complex");
      auto w2 = first_missing(k.edges, expected,
                              [](const Edge& e) { return edge_brief(e); },
                              "edge", "not a unit segment");
      if (w1) c.witnesses.push_back(*w1);
      if (w2) c.witnesses.push_back(*w2);
    }
    c.details = std::to_string(expected.size()) + " unit segments";
    out.checks.push_back(std::move(c));
  }

  return out;
}

}  // namespace skeletal
