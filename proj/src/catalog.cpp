// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#include "skeletal/catalog.hpp"

#include <map>

#include "skeletal/errors.hpp"

namespace skeletal {

std::vector<CatalogId> all_catalog_ids() {
  return {CatalogId::k1,      CatalogId::k2,
          CatalogId::k3,      CatalogId::k4,
          CatalogId::k5,      CatalogId::k6,
          CatalogId::k7,      CatalogId::k8,
          CatalogId::p664,    CatalogId::p466,
          CatalogId::p646,    CatalogId::skel434,
          CatalogId::skel_apeir_333, CatalogId::skel_apeir_334,
          CatalogId::skel_apeir_433, CatalogId::subgroup_h};
}

std::string to_string(CatalogId id) {
  switch (id) {
    case CatalogId::k1: return "k1";
    case CatalogId::k2: return "k2";
    case CatalogId::k3: return "k3";
    case CatalogId::k4: return "k4";
    case CatalogId::k5: return "k5";
    case CatalogId::k6: return "k6";
    case CatalogId::k7: return "k7";
    case CatalogId::k8: return "k8";
    case CatalogId::p664: return "p-664";
    case CatalogId::p466: return "p-466";
    case CatalogId::p646: return "p-646";
    case CatalogId::skel434: return "skel-434";
    case CatalogId::skel_apeir_333: return "skel-apeir-333";
    case CatalogId::skel_apeir_334: return "skel-apeir-334";
    case CatalogId::skel_apeir_433: return "skel-apeir-433";
    case CatalogId::subgroup_h: return "subgroup-h";
  }
  throw UnknownId("unmapped catalog id");
}

CatalogId parse_catalog_id(std::string_view text) {
  for (CatalogId id : all_catalog_ids())
    if (to_string(id) == text) return id;
  throw UnknownId("no catalog entry named '" + std::string(text) + "'");
}

void PolyhedronSeed::validate() const {
  for (const Isometry* s : {&s1, &s2, &s3}) {
    if (!s->is_linear() || !s->rot.is_signed_permutation())
      throw InvalidGenerators("seed generator must fix the origin: " +
                              to_string(*s));
    if (!s->is_involution())
      throw InvalidGenerators("seed generator must be an involution: " +
                              to_string(*s));
  }
  if (s1.apply(initial_vertex) == initial_vertex)
    throw InvalidGenerators("s1 must move the initial vertex " +
                            to_string(initial_vertex));
  for (const Isometry* s : {&s2, &s3})
    if (s->apply(initial_vertex) != initial_vertex)
      throw InvalidGenerators("s2 and s3 must fix the initial vertex " +
                              to_string(initial_vertex));
}

PolyhedronSeed tetrahedron_seed() {
  PolyhedronSeed seed;
  seed.name = "{3,3}";
  seed.initial_vertex = {1, -1, 1};
  seed.s1 = iso("y,x,z");
  seed.s2 = iso("z,y,x");
  seed.s3 = iso("-y,-x,z");
  return seed;
}

PolyhedronSeed octahedron_seed() {
  PolyhedronSeed seed;
  seed.name = "{3,4}";
  seed.initial_vertex = {0, 0, 2};
  seed.s1 = iso("z,y,x");
  seed.s2 = iso("y,x,z");
  seed.s3 = iso("x,-y,z");
  return seed;
}

PolyhedronSeed cube_seed() {
  PolyhedronSeed seed;
  seed.name = "{4,3}";
  seed.initial_vertex = {1, 1, 1};
  seed.s1 = iso("x,y,-z");
  seed.s2 = iso("x,z,y");
  seed.s3 = iso("y,x,z");
  return seed;
}

PolyhedronSeed petrie_dual(const PolyhedronSeed& seed) {
  static const std::map<std::string, std::string> names = {
      {"{3,3}", "{4,3}_3"}, {"{4,3}_3", "{3,3}"}, {"{3,4}", "{6,4}_3"},
      {"{6,4}_3", "{3,4}"}, {"{4,3}", "{6,3}_4"}, {"{6,3}_4", "{4,3}"},
  };
  auto it = names.find(seed.name);
  if (it == names.end())
    throw UnknownId("no Petrie-dual name registered for '" + seed.name + "'");
  PolyhedronSeed dual = seed;
  dual.name = it->second;
  dual.s1 = compose(seed.s1, seed.s3);
  return dual;
}

GeneratorSystem apeir_system(const PolyhedronSeed& seed) {
  seed.validate();
  GeneratorSystem gs;
  gs.base_vertex = {0, 0, 0};
  gs.r0 = iso("-x,-y,-z", seed.initial_vertex);  // reflection in half the vertex
  gs.r1 = seed.s1;
  gs.g2 = {seed.s2, seed.s3};
  gs.rank4 = {{gs.r0, seed.s1, seed.s2, seed.s3}};
  return gs;
}

namespace {

GeneratorSystem cubical_tessellation_system() {
  GeneratorSystem gs;
  gs.base_vertex = {0, 0, 0};
  gs.r0 = iso("-x,y,z", {1, 0, 0});
  gs.r1 = iso("y,x,z");
  gs.g2 = {iso("x,z,y"), iso("x,y,-z")};
  gs.rank4 = {{gs.r0, gs.r1, gs.g2[0], gs.g2[1]}};
  return gs;
}

}  // namespace

GeneratorSystem generator_system(CatalogId id) {
  GeneratorSystem gs;
  gs.base_vertex = {0, 0, 0};
  switch (id) {
    case CatalogId::k1:
      gs.r0 = iso("-x,y,-z", {1, 0, 1});
      gs.r1 = iso("y,x,z");
      gs.g2 = {iso("z,y,x"), iso("x,-y,z")};
      return gs;
    case CatalogId::k2:
      gs.r0 = iso("y,x,-z", {1, -1, 1});
      gs.r1 = iso("x,-y,z");
      gs.g2 = {iso("-y,-z,x")};
      return gs;
    case CatalogId::k3:
      gs.r0 = iso("y,x,-z", {1, -1, 1});
      gs.r1 = iso("x,-y,z");
      gs.g2 = {iso("-y,-x,z"), iso("x,-z,-y")};
      return gs;
    case CatalogId::k4:
      gs.r0 = iso("-z,-y,-x", {0, 1, 0});
      gs.r1 = iso("y,x,z");
      gs.g2 = {iso("-z,y,-x"), iso("z,y,x")};
      return gs;
    case CatalogId::k5:
      gs.r0 = iso("-z,-y,-x", {0, 1, 0});
      gs.r1 = iso("y,x,z");
      gs.g2 = {iso("-x,y,z"), iso("x,y,-z")};
      return gs;
    case CatalogId::k6:
      gs.r0 = iso("-z,-y,-x", {0, 1, 0});
      gs.r1 = iso("y,x,z");
      gs.g2 = {iso("-z,y,-x"), iso("-x,y,z")};
      return gs;
    case CatalogId::k7:
      gs.r0 = iso("-z,-y,-x", {1, -1, 1});
      gs.r1 = iso("y,x,z");
      gs.g2 = {iso("-y,-x,z"), iso("x,-z,-y")};
      return gs;
    case CatalogId::k8:
      gs.r0 = iso("-z,-y,-x", {1, 0, 1});
      gs.r1 = iso("y,x,z");
      gs.g2 = {iso("x,-y,z"), iso("z,y,x")};
      return gs;
    case CatalogId::p664:
      gs.r0 = iso("-z,-y,-x", {1, 0, 1});
      gs.r1 = iso("y,x,z");
      gs.g2 = {iso("z,-y,x")};
      return gs;
    case CatalogId::p466:
      gs.r0 = iso("-x,y,-z", {1, 0, 1});
      gs.r1 = iso("y,x,z");
      gs.g2 = {iso("z,-y,x")};
      return gs;
    case CatalogId::p646:
      gs.r0 = iso("-z,-y,-x", {0, 1, 0});
      gs.r1 = iso("y,x,z");
      gs.g2 = {iso("-x,y,-z")};
      return gs;
    case CatalogId::skel434:
      return cubical_tessellation_system();
    case CatalogId::skel_apeir_333:
      return apeir_system(tetrahedron_seed());
    case CatalogId::skel_apeir_334:
      return apeir_system(octahedron_seed());
    case CatalogId::skel_apeir_433:
      return apeir_system(cube_seed());
    case CatalogId::subgroup_h: {
      const GeneratorSystem full = cubical_tessellation_system();
      const auto& t = *full.rank4;
      gs.r0 = compose(t[0], t[3]);
      gs.r1 = t[1];
      gs.g2 = {t[2], compose(compose(t[3], t[2]), t[3])};
      return gs;
    }
  }
  throw UnknownId("unmapped catalog id");
}

Complex cubical_skeleton(const Box& box) {
  box.validate();
  Complex out;
  out.box = box;
  const int r = box.radius;
  const Vec3 axis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (i64 x = -r; x <= r; ++x)
    for (i64 y = -r; y <= r; ++y)
      for (i64 z = -r; z <= r; ++z) {
        const Vec3 v{x, y, z};
        out.vertices.insert(v);
        for (int i = 0; i < 3; ++i) {
          if (box.contains(v + axis[i])) out.edges.insert(make_edge(v, v + axis[i]));
          for (int j = i + 1; j < 3; ++j)
            if (box.contains(v + axis[i] + axis[j])) {
              Face f;
              f.path = canonical_cycle(
                  {v, v + axis[i], v + axis[i] + axis[j], v + axis[j]});
              out.faces.insert(std::move(f));
            }
        }
      }
  if (r >= 1) {
    Face f;
    f.path = canonical_cycle({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
    out.base_flag =
        Flag{{0, 0, 0}, make_edge({0, 0, 0}, {1, 0, 0}), std::move(f)};
  }
  return out;
}

Complex build_catalog(CatalogId id, const Box& box) {
  if (id == CatalogId::skel434) return cubical_skeleton(box);
  return build(generator_system(id), box);
}

}  // namespace skeletal
