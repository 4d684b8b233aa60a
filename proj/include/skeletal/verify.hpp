// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skeletal/catalog.hpp"
#include "skeletal/wythoff.hpp"

namespace skeletal {

// ---------------------------------------------------------------------------
// Lattices

enum class LatticeTag {
  z3,                    // all integer points
  fcc,                   // even coordinate sum
  bcc,                   // all coordinates congruent mod 2
  z3_minus_shifted_bcc,  // integer points outside (0,0,1) + bcc
  diamond,               // 2*fcc together with (1,-1,1) + 2*fcc
};

/// A named lattice, optionally rescaled and shifted: p belongs when
/// (p - shift) is divisible by scale and the quotient satisfies the tag.
struct LatticeName {
  LatticeTag tag = LatticeTag::z3;
  int scale = 1;
  Vec3 shift{};
};

std::string to_string(const LatticeName& name);
bool lattice_contains(const LatticeName& name, const Vec3& p);

struct LatticeCheck {
  bool pass = false;
  /// A point of the symmetric difference: in the set but not the lattice,
  /// or in the lattice's box portion but missing from the set.
  std::optional<Vec3> witness;
  std::string detail;
};

/// Pass iff `points` equals the lattice's intersection with the full box.
LatticeCheck lattice_test(const std::set<Vec3>& points,
                          const LatticeName& name, const Box& box);

// ---------------------------------------------------------------------------
// Vertex figures

enum class FigureShape { tetrahedron, square, cube, octahedron, cuboctahedron };

struct FigureName {
  FigureShape shape = FigureShape::tetrahedron;
  int multiplicity = 1;  // 1 = simple edge graph, 2 = double-edge graph

  auto operator<=>(const FigureName&) const = default;
};

/// "tetrahedron-simple", "cube-double", ...; "unrecognized" for nullopt.
std::string to_string(const std::optional<FigureName>& name);

/// Reference multigraph: the named polyhedron's edge graph on its standard
/// coordinates, every edge with the given multiplicity.
Multigraph reference_figure(FigureShape shape, int multiplicity);

/// Exact isomorphism of small multigraphs (backtracking; inputs stay tiny).
bool multigraphs_isomorphic(const Multigraph& a, const Multigraph& b);

/// Match against every reference shape and multiplicity 1 or 2; nullopt when
/// nothing fits.
std::optional<FigureName> identify_vertex_figure(const Multigraph& g);

// ---------------------------------------------------------------------------
// Faces

struct FaceShape {
  bool infinite = false;
  bool planar = false;
  int size = 0;      // vertex count of a finite cycle; 0 for infinite faces
  i64 edge_sq = 0;   // squared edge length (faces are equilateral)
  bool regular_edges = false;  // all edges share that squared length
};

FaceShape classify_face_shape(const Face& f);

// ---------------------------------------------------------------------------
// Complex comparison

struct EqualityCheck {
  bool pass = false;
  std::string witness;  // empty when pass
};

/// Set equality of vertices, edges, and canonical faces. RegionMismatch when
/// the boxes differ.
EqualityCheck complexes_equal(const Complex& a, const Complex& b);

/// Containment of a's vertex/edge/face sets in b's. RegionMismatch when the
/// boxes differ.
EqualityCheck is_subcomplex(const Complex& a, const Complex& b);

// ---------------------------------------------------------------------------
// Reports

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
  std::vector<std::string> witnesses;
};

struct VerificationReport {
  std::string catalog_id;  // empty for anonymous complexes
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
};

/// Render with stable keys: catalog_id, checks[] (name, pass, details,
/// witnesses[]), summary.
std::string report_to_json(const VerificationReport& report);

/// Definition checks over the trusted interior:
///   (a) connectivity of the interior edge graph,
///   (b) connectivity of every interior vertex figure,
///   (c) one constant face count over every checkable edge,
///   (d) finiteness (reported as counts).
/// Requires margin at least the face spread for (b) to see whole figures.
VerificationReport check_axioms(const Complex& k);

/// Expected row of the catalog matrix: face size, edge valence, vertex
/// lattice, and vertex-figure name, where known for the entry.
struct CatalogExpectation {
  int face_size = 0;  // 0 = infinite faces
  int valence = 0;
  std::optional<LatticeName> lattice;
  std::optional<FigureName> figure;
};

std::optional<CatalogExpectation> catalog_expectation(CatalogId id);

/// Build the entry and run: axioms, the expectation row (when known), the
/// edge-multiplicity dichotomy, and per-entry extras (planar faces force
/// simple figures; the two systems whose edges fill the cubical grid).
VerificationReport verify_catalog_entry(CatalogId id, const Box& box);

}  // namespace skeletal
