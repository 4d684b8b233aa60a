// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#include "skeletal/mesh.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace skeletal {

namespace {

std::map<Vec3, std::size_t> vertex_index(const Complex& kx) {
  std::map<Vec3, std::size_t> index;
  for (const Vec3& v : kx.vertices) index.emplace(v, index.size());
  return index;
}

}  // namespace

std::string to_off(const Complex& kx, std::int64_t scale) {
  std::map<Vec3, std::size_t> index = vertex_index(kx);
  std::ostringstream out;
  out << "OFF\n"
      << kx.vertices.size() << ' ' << kx.faces.size() << ' ' << kx.edges.size()
      << '\n';
  for (const Vec3& v : kx.vertices)
    out << v.x * scale << ' ' << v.y * scale << ' ' << v.z * scale << '\n';
  for (const Face& f : kx.faces) {
    out << f.path.size();
    for (const Vec3& v : f.path) out << ' ' << index.at(v);
    out << '\n';
  }
  return out.str();
}

std::string to_obj(const Complex& kx, std::int64_t scale) {
  std::map<Vec3, std::size_t> index = vertex_index(kx);
  std::ostringstream out;
  for (const Vec3& v : kx.vertices)
    out << "v " << v.x * scale << ' ' << v.y * scale << ' ' << v.z * scale
        << '\n';
  for (const Face& f : kx.faces) {
    out << (f.infinite ? 'l' : 'f');
    for (const Vec3& v : f.path) out << ' ' << index.at(v) + 1;
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Complex& kx, std::int64_t scale) {
  std::map<Vec3, std::size_t> index = vertex_index(kx);
  auto coords = [scale](const Vec3& v) {
    return nlohmann::ordered_json::array(
        {v.x * scale, v.y * scale, v.z * scale});
  };
  nlohmann::ordered_json doc;
  doc["region"] = {{"radius", kx.box.radius}, {"margin", kx.box.margin}};
  doc["scale"] = scale;
  doc["counts"] = {{"vertices", kx.vertices.size()},
                   {"edges", kx.edges.size()},
                   {"faces", kx.faces.size()}};
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const Vec3& v : kx.vertices) doc["vertices"].push_back(coords(v));
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : kx.edges)
    doc["edges"].push_back({index.at(e.first), index.at(e.second)});
  doc["faces"] = nlohmann::ordered_json::array();
  for (const Face& f : kx.faces) {
    nlohmann::ordered_json rec;
    rec["infinite"] = f.infinite;
    rec["vertices"] = nlohmann::ordered_json::array();
    for (const Vec3& v : f.path) rec["vertices"].push_back(index.at(v));
    if (f.infinite) rec["period"] = coords(f.period);
    doc["faces"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

}  // namespace skeletal
