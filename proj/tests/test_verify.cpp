// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "skeletal/errors.hpp"
#include "skeletal/verify.hpp"

using namespace skeletal;

TEST_CASE("lattice membership predicates") {
  const LatticeName z3{LatticeTag::z3};
  const LatticeName fcc{LatticeTag::fcc};
  const LatticeName bcc{LatticeTag::bcc};
  const LatticeName holes{LatticeTag::z3_minus_shifted_bcc};
  const LatticeName dia{LatticeTag::diamond};

  CHECK(lattice_contains(z3, {7, -3, 0}));
  CHECK(lattice_contains(fcc, {1, 1, 0}));
  CHECK(lattice_contains(fcc, {2, 0, 0}));
  CHECK(!lattice_contains(fcc, {1, 0, 0}));
  CHECK(lattice_contains(bcc, {1, 1, 1}));
  CHECK(lattice_contains(bcc, {2, 0, 0}));
  CHECK(!lattice_contains(bcc, {1, 1, 0}));
  CHECK(lattice_contains(holes, {1, 0, 0}));
  CHECK(!lattice_contains(holes, {0, 0, 1}));
  CHECK(!lattice_contains(holes, {1, 1, 0}));
  CHECK(lattice_contains(holes, {1, 1, 1}));
  CHECK(lattice_contains(dia, {0, 0, 0}));
  CHECK(lattice_contains(dia, {1, -1, 1}));
  CHECK(lattice_contains(dia, {2, 2, 0}));
  CHECK(!lattice_contains(dia, {1, 1, 1}));
  CHECK(!lattice_contains(dia, {2, 0, 0}));

  const LatticeName doubled{LatticeTag::z3, 2};
  CHECK(lattice_contains(doubled, {2, -4, 0}));
  CHECK(!lattice_contains(doubled, {1, 0, 0}));
  const LatticeName shifted{LatticeTag::fcc, 1, {0, 0, 1}};
  CHECK(lattice_contains(shifted, {0, 0, 1}));
  CHECK(!lattice_contains(shifted, {0, 0, 2}));
  CHECK(to_string(doubled) == "2*Z3");
  CHECK(to_string(LatticeName{LatticeTag::diamond}) == "diamond");
}

TEST_CASE("lattice test demands exact equality inside the box") {
  Box box{2, 2};
  Complex k = build_catalog(CatalogId::k1, box);
  CHECK(lattice_test(k.vertices, {LatticeTag::fcc}, box).pass);
  CHECK(!lattice_test(k.vertices, {LatticeTag::bcc}, box).pass);

  std::set<Vec3> mutilated = k.vertices;
  mutilated.erase({1, 1, 0});
  LatticeCheck missing = lattice_test(mutilated, {LatticeTag::fcc}, box);
  CHECK(!missing.pass);
  CHECK(missing.witness == Vec3{1, 1, 0});

  std::set<Vec3> padded = k.vertices;
  padded.insert({1, 0, 0});
  LatticeCheck alien = lattice_test(padded, {LatticeTag::fcc}, box);
  CHECK(!alien.pass);
  CHECK(alien.witness == Vec3{1, 0, 0});

  CHECK(lattice_test({{0, 0, 0}}, {LatticeTag::fcc}, Box{0, 0}).pass);
}

TEST_CASE("reference figures have the classical counts") {
  struct Row {
    FigureShape shape;
    std::size_t nodes, edges;
  };
  for (const Row& row : std::vector<Row>{{FigureShape::tetrahedron, 4, 6},
                                         {FigureShape::square, 4, 4},
                                         {FigureShape::cube, 8, 12},
                                         {FigureShape::octahedron, 6, 12},
                                         {FigureShape::cuboctahedron, 12, 24}})
    for (int m : {1, 2}) {
      Multigraph g = reference_figure(row.shape, m);
      CHECK(g.nodes.size() == row.nodes);
      CHECK(g.edges.size() == row.edges);
      for (const auto& [e, mult] : g.edges) CHECK(mult == m);
    }
}

TEST_CASE("multigraph isomorphism is exact") {
  Multigraph octa = reference_figure(FigureShape::octahedron, 1);

  Multigraph relabeled;  // same shape on scaled, shuffled coordinates
  std::vector<Vec3> axis = {{0, 0, 2}, {0, 0, -2}, {2, 0, 0},
                            {-2, 0, 0}, {0, 2, 0}, {0, -2, 0}};
  relabeled.nodes.insert(axis.begin(), axis.end());
  for (std::size_t i = 0; i < axis.size(); ++i)
    for (std::size_t j = i + 1; j < axis.size(); ++j) {
      Vec3 d = axis[j] - axis[i];
      if (d.x * d.x + d.y * d.y + d.z * d.z == 8)
        relabeled.edges[make_edge(axis[i], axis[j])] = 1;
    }
  CHECK(multigraphs_isomorphic(octa, relabeled));
  CHECK(!multigraphs_isomorphic(octa, reference_figure(FigureShape::cube, 1)));
  CHECK(!multigraphs_isomorphic(octa,
                                reference_figure(FigureShape::octahedron, 2)));

  Multigraph path;  // 4 nodes in a row is not the 4-cycle
  path.nodes = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}};
  path.edges[make_edge({0, 0, 0}, {1, 0, 0})] = 1;
  path.edges[make_edge({1, 0, 0}, {2, 0, 0})] = 1;
  path.edges[make_edge({2, 0, 0}, {3, 0, 0})] = 1;
  CHECK(!multigraphs_isomorphic(path, reference_figure(FigureShape::square, 1)));
}

TEST_CASE("figure identification round-trips and rejects strangers") {
  for (FigureShape shape :
       {FigureShape::tetrahedron, FigureShape::square, FigureShape::cube,
        FigureShape::octahedron, FigureShape::cuboctahedron})
    for (int m : {1, 2}) {
      auto got = identify_vertex_figure(reference_figure(shape, m));
      REQUIRE(got.has_value());
      CHECK(*got == FigureName{shape, m});
    }

  Multigraph lonely;
  lonely.nodes = {{0, 0, 0}};
  CHECK(!identify_vertex_figure(lonely).has_value());
  CHECK(to_string(identify_vertex_figure(lonely)) == "unrecognized");

  Multigraph pentagon;
  std::vector<Vec3> ring = {
      {0, 0, 0}, {1, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 1, 0}};
  pentagon.nodes.insert(ring.begin(), ring.end());
  for (std::size_t i = 0; i < ring.size(); ++i)
    pentagon.edges[make_edge(ring[i], ring[(i + 1) % ring.size()])] = 1;
  CHECK(!identify_vertex_figure(pentagon).has_value());
}

TEST_CASE("figures of built complexes identify as the cataloged names") {
  Box box{3, 2};
  auto name_at_origin = [&](CatalogId id) {
    Complex k = build_catalog(id, box);
    return to_string(identify_vertex_figure(vertex_figure(k, {0, 0, 0})));
  };
  CHECK(name_at_origin(CatalogId::k2) == "cube-simple");
  CHECK(name_at_origin(CatalogId::k6) == "octahedron-double");
}

TEST_CASE("face shapes classify exactly") {
  FaceShape sq = classify_face_shape(base_face(generator_system(CatalogId::k1)));
  CHECK(!sq.infinite);
  CHECK(!sq.planar);
  CHECK(sq.size == 4);
  CHECK(sq.edge_sq == 2);
  CHECK(sq.regular_edges);

  FaceShape hex = classify_face_shape(base_face(generator_system(CatalogId::k8)));
  CHECK(!hex.planar);
  CHECK(hex.size == 6);
  CHECK(hex.edge_sq == 2);

  Complex grid = cubical_skeleton(Box{1, 0});
  REQUIRE(!grid.faces.empty());
  FaceShape unit = classify_face_shape(*grid.faces.begin());
  CHECK(unit.planar);
  CHECK(unit.size == 4);
  CHECK(unit.edge_sq == 1);

  FaceShape zig =
      classify_face_shape(base_face(generator_system(CatalogId::skel_apeir_334)));
  CHECK(zig.infinite);
  CHECK(zig.planar);
  CHECK(zig.size == 0);
  CHECK(zig.edge_sq == 4);
  CHECK(zig.regular_edges);
}

TEST_CASE("complex equality finds the first difference") {
  Box box{3, 3};
  Complex k2 = build_catalog(CatalogId::k2, box);
  Complex k3 = build_catalog(CatalogId::k3, box);

  CHECK(complexes_equal(k2, k2).pass);
  EqualityCheck diff = complexes_equal(k2, k3);
  CHECK(!diff.pass);
  CHECK(diff.witness.find("face") != std::string::npos);
  CHECK(diff.witness.find("only in second") != std::string::npos);

  CHECK_THROWS_AS(complexes_equal(k2, build_catalog(CatalogId::k2, Box{2, 2})),
                  RegionMismatch);
}

TEST_CASE("subcomplex containment is a one-way street") {
  Box box{3, 3};
  Complex k2 = build_catalog(CatalogId::k2, box);
  Complex k3 = build_catalog(CatalogId::k3, box);
  CHECK(is_subcomplex(k2, k3).pass);
  EqualityCheck back = is_subcomplex(k3, k2);
  CHECK(!back.pass);
  CHECK(!back.witness.empty());

  Complex p = build_catalog(CatalogId::p664, box);
  Complex k8 = build_catalog(CatalogId::k8, box);
  CHECK(is_subcomplex(p, k8).pass);
}

TEST_CASE("axiom checks pass on honest builds") {
  VerificationReport r3 = check_axioms(build_catalog(CatalogId::k3, Box{3, 2}));
  CHECK_MESSAGE(r3.all_pass(), report_to_json(r3));
  REQUIRE(r3.find("edge-valence-constant") != nullptr);
  CHECK(r3.find("edge-valence-constant")->details.find("r = 6") == 0);

  VerificationReport r5 = check_axioms(build_catalog(CatalogId::k5, Box{3, 2}));
  CHECK_MESSAGE(r5.all_pass(), report_to_json(r5));
  CHECK(r5.find("edge-valence-constant")->details.find("r = 4") == 0);
}

TEST_CASE("deleting a face trips the valence axiom with a witness") {
  Complex k = build_catalog(CatalogId::k1, Box{3, 2});
  // Pick a face on a checkable edge so the berth shows in the interior.
  const Face* victim = nullptr;
  for (const Face& f : k.faces)
    if (face_has_edge(f, make_edge({0, 0, 0}, {1, 0, 1}))) victim = &f;
  REQUIRE(victim != nullptr);
  Complex mutated = k;
  mutated.faces.erase(*victim);
  VerificationReport report = check_axioms(mutated);
  CHECK(!report.all_pass());
  const CheckResult* valence = report.find("edge-valence-constant");
  REQUIRE(valence != nullptr);
  CHECK(!valence->pass);
  CHECK(!valence->witnesses.empty());
}

TEST_CASE("reports serialize with stable keys") {
  VerificationReport report = check_axioms(build_catalog(CatalogId::k2, Box{2, 2}));
  report.catalog_id = "k2";
  nlohmann::json parsed = nlohmann::json::parse(report_to_json(report));
  CHECK(parsed["catalog_id"] == "k2");
  REQUIRE(parsed.contains("checks"));
  CHECK(parsed["checks"].is_array());
  CHECK(parsed["checks"].size() == report.checks.size());
  for (const auto& jc : parsed["checks"]) {
    CHECK(jc.contains("name"));
    CHECK(jc.contains("pass"));
    CHECK(jc.contains("witnesses"));
  }
  CHECK(parsed["summary"]["all_pass"] == report.all_pass());
}

TEST_CASE("the whole catalog verifies at radius 3") {
  for (CatalogId id : all_catalog_ids()) {
    CAPTURE(to_string(id));
    VerificationReport report = verify_catalog_entry(id, Box{3, 3});
    CHECK_MESSAGE(report.all_pass(), report_to_json(report));
  }
}

TEST_CASE("catalog expectations carry the published matrix") {
  auto row = [](CatalogId id) { return *catalog_expectation(id); };
  CHECK(row(CatalogId::k1).face_size == 4);
  CHECK(row(CatalogId::k1).valence == 4);
  CHECK(to_string(*row(CatalogId::k1).figure) == "cuboctahedron-simple");
  CHECK(row(CatalogId::k3).valence == 6);
  CHECK(to_string(*row(CatalogId::k3).figure) == "cube-double");
  CHECK(row(CatalogId::k5).lattice->tag == LatticeTag::z3_minus_shifted_bcc);
  CHECK(to_string(*row(CatalogId::k5).figure) == "square-double");
  CHECK(row(CatalogId::k6).valence == 8);
  CHECK(row(CatalogId::k7).lattice->tag == LatticeTag::diamond);
  CHECK(to_string(*row(CatalogId::k7).figure) == "tetrahedron-double");
  CHECK(row(CatalogId::k8).lattice->tag == LatticeTag::fcc);
  CHECK(row(CatalogId::skel_apeir_334).lattice->scale == 2);
}
