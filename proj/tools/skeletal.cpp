// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
//
// Command-line front end: `skeletal {list|build|verify|op} ...`.
// Exit codes: 0 success, 1 failed verification or rewrite, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skeletal/catalog.hpp"
#include "skeletal/errors.hpp"
#include "skeletal/mesh.hpp"
#include "skeletal/ops.hpp"
#include "skeletal/verify.hpp"
#include "skeletal/wythoff.hpp"

namespace skeletal {
namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// The margin never exceeds the radius, so small regions stay usable and the
// interior simply shrinks to the origin.
Box make_box(int radius, int margin) {
  Box box{radius, std::min(margin, radius)};
  box.validate();
  return box;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

std::string mesh_text(const Complex& kx, const std::string& format,
                      std::int64_t scale) {
  if (format == "off") return to_off(kx, scale);
  if (format == "obj") return to_obj(kx, scale);
  return to_json(kx, scale);
}

std::string mv_text(const GeneratorSystem& gs) {
  auto [a, b] = mirror_vector(gs);
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string face_text(const GeneratorSystem& gs) {
  try {
    FaceShape s = classify_face_shape(base_face(gs));
    std::string tail = ", squared edge length " + std::to_string(s.edge_sq);
    if (s.infinite) return "planar zigzag" + tail;
    return (s.planar ? "planar " : "skew ") + std::to_string(s.size) + "-gon" +
           tail;
  } catch (const NonPlanarInfiniteFace&) {
    return "helical (face walk leaves every plane)";
  }
}

int run_list() {
  for (CatalogId id : all_catalog_ids()) std::cout << to_string(id) << '\n';
  return kPass;
}

int run_build(const std::string& id_text, int radius, int margin,
              std::int64_t scale, const std::string& format,
              const std::string& out_path) {
  CatalogId id = parse_catalog_id(id_text);
  Box box = make_box(radius, margin);
  Complex kx = build_catalog(id, box);
  GeneratorSystem gs = generator_system(id);
  FaceShape shape = classify_face_shape(base_face(gs));

  nlohmann::ordered_json summary;
  summary["catalog_id"] = to_string(id);
  summary["region"] = {{"radius", box.radius}, {"margin", box.margin}};
  summary["counts"] = {{"vertices", kx.vertices.size()},
                       {"edges", kx.edges.size()},
                       {"faces", kx.faces.size()}};
  summary["face"] = {{"infinite", shape.infinite},
                     {"size", shape.size},
                     {"planar", shape.planar},
                     {"edge_sq", shape.edge_sq}};
  try {
    summary["edge_valence"] =
        edge_valence(kx, make_edge(gs.base_vertex, gs.twin_vertex()));
  } catch (const Error&) {
    summary["edge_valence"] = nullptr;  // base edge not trustable in this box
  }
  if (!out_path.empty()) {
    write_file(out_path, mesh_text(kx, format, scale));
    summary["format"] = format;
    summary["out"] = out_path;
  }
  std::cout << summary.dump(2) << '\n';
  return kPass;
}

int run_verify(const std::string& id_text, int radius, int margin,
               const std::string& out_path) {
  if (radius < 2)
    throw InvalidRadius("verification needs radius >= 2, got " +
                        std::to_string(radius));
  Box box = make_box(radius, margin);
  std::vector<CatalogId> ids;
  if (id_text == "all")
    ids = all_catalog_ids();
  else
    ids.push_back(parse_catalog_id(id_text));

  int passed = 0;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (CatalogId id : ids) {
    VerificationReport rep = verify_catalog_entry(id, box);
    for (const CheckResult& c : rep.checks) {
      std::cout << rep.catalog_id << ' ' << c.name << ": "
                << (c.pass ? "PASS" : "FAIL");
      if (!c.details.empty()) std::cout << " (" << c.details << ')';
      std::cout << '\n';
      for (const std::string& w : c.witnesses)
        std::cout << "  witness: " << w << '\n';
    }
    if (rep.all_pass()) ++passed;
    reports.push_back(nlohmann::ordered_json::parse(report_to_json(rep)));
  }
  std::cout << passed << '/' << ids.size() << " catalog entries pass\n";
  if (!out_path.empty()) write_file(out_path, reports.dump(2) + "\n");
  return passed == static_cast<int>(ids.size()) ? kPass : kFail;
}

int run_petrie(CatalogId id, const Box& box, const std::string& target_text) {
  GeneratorSystem gs = generator_system(id);
  std::cout << "mirror vector before: " << mv_text(gs) << '\n';
  GeneratorSystem rewritten = petrie_system(gs);
  std::cout << "mirror vector after: " << mv_text(rewritten) << '\n';
  std::cout << "face after: " << face_text(rewritten) << '\n';
  CatalogId target = target_text.empty() ? id : parse_catalog_id(target_text);
  EqualityCheck eq =
      complexes_equal(build(rewritten, box), build_catalog(target, box));
  std::cout << "rebuilt complex equals " << to_string(target) << ": "
            << (eq.pass ? "yes" : "no") << '\n';
  if (!eq.pass) std::cout << "  witness: " << eq.witness << '\n';
  return eq.pass ? kPass : kFail;
}

int run_lambda(bool is_l0, CatalogId id, const Box& box,
               std::optional<int> element, bool search,
               const std::string& target_text) {
  GeneratorSystem gs = generator_system(id);
  std::vector<Isometry> pool = edge_stabilizer_elements(gs);
  std::vector<Isometry> choices =
      is_l0 ? lambda0_choices(gs) : lambda1_choices(gs);
  std::cout << "mirror vector before: " << mv_text(gs) << '\n';
  std::cout << "face before: " << face_text(gs) << '\n';

  if (search) {
    CatalogId target = parse_catalog_id(target_text);
    Complex goal = build_catalog(target, box);
    int hits = 0;
    for (const Isometry& R : choices) {
      GeneratorSystem rewritten = is_l0 ? lambda0(gs, R) : lambda1(gs, R);
      try {
        if (complexes_equal(build(rewritten, box), goal).pass) {
          ++hits;
          std::cout << "match: R = " << to_string(R) << ", mirror vector "
                    << mv_text(rewritten) << '\n';
        }
      } catch (const NonPlanarInfiniteFace&) {
        // helical rewrite: no face records to compare against the target
      }
    }
    std::cout << hits << " of " << choices.size()
              << " admissible elements rebuild " << to_string(target) << '\n';
    return hits > 0 ? kPass : kFail;
  }

  if (!element) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      bool ok =
          std::binary_search(choices.begin(), choices.end(), pool[i]);
      std::cout << i << ": " << to_string(pool[i])
                << (ok ? "" : "  [not admissible]") << '\n';
    }
    std::cout << pool.size() << " elements in <G2>, " << choices.size()
              << " admissible\n";
    return kPass;
  }

  if (*element < 0 || *element >= static_cast<int>(pool.size())) {
    std::cerr << "error: --element " << *element << " out of range: <G2> has "
              << pool.size() << " elements\n";
    return kUsage;
  }
  const Isometry& R = pool[*element];
  std::cout << "element " << *element << ": " << to_string(R) << '\n';
  GeneratorSystem rewritten = is_l0 ? lambda0(gs, R) : lambda1(gs, R);
  std::cout << "mirror vector after: " << mv_text(rewritten) << '\n';
  std::cout << "face after: " << face_text(rewritten) << '\n';
  bool preserved =
      vertex_edge_orbit(gs, box) == vertex_edge_orbit(rewritten, box);
  std::cout << "vertex and edge orbits preserved: " << (preserved ? "yes" : "no")
            << '\n';
  bool ok = preserved;
  if (!target_text.empty()) {
    CatalogId target = parse_catalog_id(target_text);
    std::string verdict;
    try {
      EqualityCheck eq =
          complexes_equal(build(rewritten, box), build_catalog(target, box));
      verdict = eq.pass ? "yes" : "no (" + eq.witness + ")";
      ok = ok && eq.pass;
    } catch (const NonPlanarInfiniteFace&) {
      verdict = "no (rewritten faces are helical)";
      ok = false;
    }
    std::cout << "rebuilt complex equals " << to_string(target) << ": "
              << verdict << '\n';
  }
  return ok ? kPass : kFail;
}

}  // namespace
}  // namespace skeletal

int main(int argc, char** argv) {
  using namespace skeletal;

  CLI::App app{
      "exact construction and verification of regular polygonal complexes"};
  app.require_subcommand(1);

  std::string id_text, op_name, target, out_path, format = "off";
  int radius = 4;
  int margin = 4;
  std::int64_t scale = 1;
  std::optional<int> element;
  bool search = false;

  auto add_region = [&](CLI::App* cmd) {
    cmd->add_option("--radius", radius, "half-width of the cubical region")
        ->capture_default_str();
    cmd->add_option("--margin", margin, "trust margin, clamped to the radius")
        ->capture_default_str();
  };

  CLI::App* list_cmd = app.add_subcommand("list", "print the catalog ids");

  CLI::App* build_cmd =
      app.add_subcommand("build", "materialize a catalog entry");
  build_cmd->add_option("id", id_text, "catalog id")->required();
  add_region(build_cmd);
  build_cmd->add_option("--scale", scale, "multiply coordinates on export")
      ->capture_default_str();
  build_cmd->add_option("--format", format, "mesh file format")
      ->check(CLI::IsMember({"off", "obj", "json"}))
      ->capture_default_str();
  build_cmd->add_option("--out", out_path, "write the mesh to this file");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the verification matrix");
  verify_cmd->add_option("id", id_text, "catalog id, or 'all'")->required();
  add_region(verify_cmd);
  verify_cmd->add_option("--out", out_path, "write the JSON report here");

  CLI::App* op_cmd = app.add_subcommand("op", "apply a generator rewrite");
  op_cmd->add_option("name", op_name, "lambda0, lambda1, or petrie")
      ->required()
      ->check(CLI::IsMember({"lambda0", "lambda1", "petrie"}));
  op_cmd->add_option("id", id_text, "catalog id")->required();
  CLI::Option* element_opt = op_cmd->add_option(
      "--element", element, "index into the sorted closure of G2");
  CLI::Option* target_opt = op_cmd->add_option(
      "--target", target, "catalog id the rebuilt complex should equal");
  op_cmd->add_flag("--search", search,
                   "try every admissible element against --target")
      ->excludes(element_opt)
      ->needs(target_opt);
  add_region(op_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*list_cmd) return run_list();
    if (*build_cmd)
      return run_build(id_text, radius, margin, scale, format, out_path);
    if (*verify_cmd) return run_verify(id_text, radius, margin, out_path);
    CatalogId id = parse_catalog_id(id_text);
    Box box = make_box(radius, margin);
    if (op_name == "petrie") return run_petrie(id, box, target);
    return run_lambda(op_name == "lambda0", id, box, element, search, target);
  } catch (const UnknownId& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidRadius& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
