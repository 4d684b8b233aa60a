// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <utility>
#include <vector>

#include "skeletal/catalog.hpp"
#include "skeletal/errors.hpp"
#include "skeletal/ops.hpp"

using namespace skeletal;

namespace {

// Generator equality ignoring the rank-4 attachment (the rewrites drop it).
bool same_core(const GeneratorSystem& a, const GeneratorSystem& b) {
  return a.base_vertex == b.base_vertex && a.r0 == b.r0 && a.r1 == b.r1 &&
         a.g2 == b.g2;
}

bool same_geometry(const Complex& a, const Complex& b) {
  return a.vertices == b.vertices && a.edges == b.edges && a.faces == b.faces;
}

}  // namespace

TEST_CASE("mirror vectors of the catalog systems") {
  using MV = std::pair<int, int>;
  const std::vector<std::pair<CatalogId, MV>> expected = {
      {CatalogId::k1, {1, 2}},
      {CatalogId::k2, {1, 2}},
      {CatalogId::k3, {1, 2}},
      {CatalogId::k4, {1, 2}},
      {CatalogId::k5, {1, 2}},
      {CatalogId::k6, {1, 2}},
      {CatalogId::k7, {1, 2}},
      {CatalogId::k8, {1, 2}},
      {CatalogId::p664, {1, 2}},
      {CatalogId::p466, {1, 2}},
      {CatalogId::p646, {1, 2}},
      {CatalogId::skel434, {2, 2}},
      {CatalogId::skel_apeir_333, {0, 2}},
      {CatalogId::skel_apeir_334, {0, 2}},
      {CatalogId::skel_apeir_433, {0, 2}},
      {CatalogId::subgroup_h, {1, 2}},
  };
  CHECK(expected.size() == all_catalog_ids().size());
  for (const auto& [id, mv] : expected) {
    CAPTURE(to_string(id));
    CHECK(mirror_vector(generator_system(id)) == mv);
  }
}

TEST_CASE("mirror vector rejects non-involutory generators") {
  GeneratorSystem gs = generator_system(CatalogId::k1);
  gs.r0 = iso("y,z,x");
  CHECK_THROWS_AS(mirror_vector(gs), NotInvolution);
}

TEST_CASE("edge rewrite replaces the first generator exactly") {
  GeneratorSystem gs = generator_system(CatalogId::k1);
  GeneratorSystem out = lambda0(gs, iso("z,y,x"));
  CHECK(out.r0 == iso("-z,y,-x", {1, 0, 1}));
  CHECK(classify(out.r0).kind == IsoKind::plane_reflection);
  CHECK(mirror_vector(out) == std::pair{2, 2});
  CHECK(out.r1 == gs.r1);
  CHECK(out.g2 == gs.g2);
  CHECK(out.base_vertex == gs.base_vertex);
  CHECK(out.twin_vertex() == gs.twin_vertex());
  // The new mirror plane x + z = 1 contains the old rotation axis
  // (1/2, t, 1/2); checked on doubled coordinates to stay integral.
  for (int t : {0, 1, 2}) {
    Vec3 doubled{1, 2 * t, 1};
    CHECK(out.r0.rot.apply(doubled) + out.r0.tr + out.r0.tr == doubled);
  }
}

TEST_CASE("rewrites drop the rank-4 attachment") {
  GeneratorSystem gs = generator_system(CatalogId::skel434);
  REQUIRE(gs.rank4.has_value());
  CHECK(!lambda0(gs, iso("x,z,y")).rank4.has_value());
  CHECK(!lambda1(gs, Isometry::identity()).rank4.has_value());
}

TEST_CASE("rewrites reject elements outside the edge stabilizer") {
  GeneratorSystem gs = generator_system(CatalogId::k1);
  CHECK_THROWS_AS(lambda0(gs, iso("y,x,z")), NotInG2);
  CHECK_THROWS_AS(lambda1(gs, iso("y,x,z")), NotInG2);
}

TEST_CASE("rewrites reject non-involutory compositions") {
  CHECK_THROWS_AS(lambda0(generator_system(CatalogId::k6), iso("-x,y,z")),
                  NotInvolution);
  CHECK_THROWS_AS(lambda1(generator_system(CatalogId::k1), iso("x,-y,z")),
                  NotInvolution);
}

TEST_CASE("identity is always a valid rewrite and changes nothing") {
  for (CatalogId id : all_catalog_ids()) {
    CAPTURE(to_string(id));
    GeneratorSystem gs = generator_system(id);
    CHECK(same_core(lambda0(gs, Isometry::identity()), gs));
    CHECK(same_core(lambda1(gs, Isometry::identity()), gs));
  }
}

TEST_CASE("rewrites with involutory elements are involutory") {
  for (CatalogId id : all_catalog_ids()) {
    CAPTURE(to_string(id));
    GeneratorSystem gs = generator_system(id);
    for (const Isometry& R : lambda0_choices(gs))
      if (R.is_involution()) CHECK(same_core(lambda0(lambda0(gs, R), R), gs));
    for (const Isometry& R : lambda1_choices(gs))
      if (R.is_involution()) CHECK(same_core(lambda1(lambda1(gs, R), R), gs));
  }
}

TEST_CASE("successive edge rewrites walk the mirror classes") {
  GeneratorSystem gs = generator_system(CatalogId::k1);
  CHECK(mirror_vector(gs) == std::pair{1, 2});
  CHECK(base_face(gs).path.size() == 4);

  GeneratorSystem a = lambda0(gs, iso("z,y,x"));
  CHECK(classify(a.r0).kind == IsoKind::plane_reflection);
  CHECK(mirror_vector(a) == std::pair{2, 2});
  CHECK(base_face(a).path.size() == 3);

  GeneratorSystem b = lambda0(a, iso("z,-y,x"));
  CHECK(b.r0 == iso("-x,-y,-z", {1, 0, 1}));
  CHECK(classify(b.r0).kind == IsoKind::point_reflection);
  CHECK(mirror_vector(b) == std::pair{0, 2});
  CHECK(base_face(b).infinite);

  GeneratorSystem c = lambda0(b, iso("z,y,x"));
  GeneratorSystem k8 = generator_system(CatalogId::k8);
  CHECK(c.r0 == k8.r0);
  CHECK(c.r1 == k8.r1);
  CHECK(std::set<Isometry>(c.g2.begin(), c.g2.end()) ==
        std::set<Isometry>(k8.g2.begin(), k8.g2.end()));
  CHECK(classify(c.r0).kind == IsoKind::half_turn);
  CHECK(mirror_vector(c) == std::pair{1, 2});
  CHECK(base_face(c).path.size() == 6);

  // Same square-complex vertices and edges throughout, but the faces mutate
  // through triangles and zigzags into the hexagons of the last system.
  Box box{2, 2};
  Complex first = build(gs, box);
  Complex last = build(c, box);
  CHECK(first.vertices == last.vertices);
  CHECK(first.edges == last.edges);
  CHECK(first.faces != last.faces);
  CHECK(same_geometry(last, build(k8, box)));
}

TEST_CASE("rewrite choices for the hexagonal system with octagonal stabilizer") {
  GeneratorSystem gs = generator_system(CatalogId::k6);
  std::vector<Isometry> choices = lambda0_choices(gs);
  const std::set<Isometry> got(choices.begin(), choices.end());
  const std::set<Isometry> want = {Isometry::identity(), iso("z,y,-x"),
                                   iso("-x,y,-z"),       iso("-z,y,x"),
                                   iso("z,y,x"),         iso("-z,y,-x")};
  CHECK(got == want);
  CHECK(got.count(iso("-x,y,z")) == 0);
  CHECK(got.count(iso("x,y,-z")) == 0);
  CHECK(lambda1_choices(gs) ==
        std::vector{iso("x,y,-z"), Isometry::identity()});
}

TEST_CASE("one edge rewrite of the octagonal-stabilizer system matches the cubical skeleton") {
  GeneratorSystem gs = generator_system(CatalogId::k6);
  const Isometry star = iso("-z,y,-x");
  GeneratorSystem rewritten = lambda0(gs, star);
  CHECK(rewritten.r0 == iso("x,-y,z", {0, 1, 0}));
  CHECK(mirror_vector(rewritten) == std::pair{2, 2});

  Box box{2, 1};
  const Complex target = cubical_skeleton(box);
  std::set<Isometry> hits;
  for (const Isometry& R : lambda0_choices(gs))
    if (same_geometry(build(lambda0(gs, R), box), target)) hits.insert(R);
  // Two rewrites reach the skeleton; only star turns r0 into a face mirror.
  CHECK(hits == std::set<Isometry>{star, iso("-z,y,x")});
  CHECK(classify(lambda0(gs, iso("-z,y,x")).r0).kind == IsoKind::half_turn);
}

TEST_CASE("orbit enumerator matches the full builder") {
  Box box{2, 2};
  for (CatalogId id : {CatalogId::k1, CatalogId::k2, CatalogId::skel434,
                       CatalogId::skel_apeir_334}) {
    CAPTURE(to_string(id));
    auto [vs, es] = vertex_edge_orbit(generator_system(id), box);
    Complex c = build_catalog(id, box);
    CHECK(vs == c.vertices);
    CHECK(es == c.edges);
  }
}

TEST_CASE("every valid rewrite preserves vertices and edges in the box") {
  Box box{2, 1};
  for (CatalogId id : {CatalogId::k1, CatalogId::k6}) {
    CAPTURE(to_string(id));
    GeneratorSystem gs = generator_system(id);
    Complex base = build(gs, box);
    for (const Isometry& R : lambda0_choices(gs)) {
      CAPTURE(to_string(R));
      Complex c = build(lambda0(gs, R), box);
      CHECK(c.vertices == base.vertices);
      CHECK(c.edges == base.edges);
    }
  }
}

TEST_CASE("helical face rewrites still preserve vertices and edges") {
  struct Row {
    CatalogId id;
    const char* triplet;
  };
  const std::vector<Row> rows = {{CatalogId::k3, "z,y,x"},
                                 {CatalogId::k5, "x,y,-z"},
                                 {CatalogId::k6, "x,y,-z"},
                                 {CatalogId::k7, "-y,-x,z"}};
  Box box{2, 2};
  for (const Row& row : rows) {
    CAPTURE(to_string(row.id));
    GeneratorSystem gs = generator_system(row.id);
    GeneratorSystem rewritten = lambda1(gs, iso(row.triplet));
    // The rewritten face walk winds around an axis instead of closing or
    // zigzagging in a plane, so only the orbit enumerator can compare.
    CHECK_THROWS_AS(base_face(rewritten), NonPlanarInfiniteFace);
    CHECK(vertex_edge_orbit(rewritten, box) == vertex_edge_orbit(gs, box));
  }
}

TEST_CASE("petrie quadruple rewrite is an involution") {
  GeneratorSystem gs = apeir_system(octahedron_seed());
  REQUIRE(gs.rank4.has_value());
  CHECK(petrie(petrie(*gs.rank4)) == *gs.rank4);
}

TEST_CASE("petrie rewrite of an apeir system is the apeir of the dual seed") {
  for (const PolyhedronSeed& seed :
       {tetrahedron_seed(), octahedron_seed(), cube_seed()}) {
    CAPTURE(seed.name);
    GeneratorSystem a = petrie_system(apeir_system(seed));
    GeneratorSystem b = apeir_system(petrie_dual(seed));
    CHECK(same_core(a, b));
    CHECK(a.rank4 == b.rank4);
    CHECK(same_core(petrie_system(a), apeir_system(seed)));
  }
}

TEST_CASE("petrie rewrite fixes the apeirotope skeletons") {
  Box box{3, 3};
  for (CatalogId id : {CatalogId::skel_apeir_333, CatalogId::skel_apeir_334,
                       CatalogId::skel_apeir_433}) {
    CAPTURE(to_string(id));
    GeneratorSystem gs = generator_system(id);
    CHECK(same_geometry(build(petrie_system(gs), box), build(gs, box)));
  }
  CHECK(mirror_vector(petrie_system(generator_system(
            CatalogId::skel_apeir_334))) == std::pair{0, 1});
}

TEST_CASE("petrie rewrite of the tessellation system keeps its skeleton") {
  GeneratorSystem gs = generator_system(CatalogId::skel434);
  Box box{2, 1};
  CHECK(same_geometry(build(petrie_system(gs), box), cubical_skeleton(box)));
}

TEST_CASE("petrie rewrite needs the quadruple") {
  CHECK_THROWS_AS(petrie_system(generator_system(CatalogId::k1)),
                  InvalidGenerators);
}
