// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace skeletal {

using i64 = std::int64_t;

/// Integer point or displacement in E^3. All geometry in this library is done
/// on the integer lattice; half-integral data (reflection centres and the
/// like) is handled by doubling coordinates where it occurs.
struct Vec3 {
  i64 x = 0, y = 0, z = 0;

  constexpr auto operator<=>(const Vec3&) const = default;

  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  friend constexpr Vec3 operator*(i64 s, const Vec3& v) {
    return {s * v.x, s * v.y, s * v.z};
  }

  constexpr bool is_zero() const { return x == 0 && y == 0 && z == 0; }
  constexpr i64 norm_inf() const {
    i64 ax = x < 0 ? -x : x, ay = y < 0 ? -y : y, az = z < 0 ? -z : z;
    i64 m = ax > ay ? ax : ay;
    return m > az ? m : az;
  }
  constexpr i64 norm2() const { return x * x + y * y + z * z; }
  constexpr i64 operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

std::string to_string(const Vec3& v);

/// 3x3 integer matrix acting on row vectors from the right: image(p) = p * M.
/// The orthogonal ones are exactly the 48 signed permutation matrices.
struct Mat3 {
  // m[i][j] is the coefficient of input coordinate i in output coordinate j.
  std::array<std::array<int, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  constexpr auto operator<=>(const Mat3&) const = default;

  static constexpr Mat3 identity() { return {}; }

  Vec3 apply(const Vec3& p) const {
    return {p.x * m[0][0] + p.y * m[1][0] + p.z * m[2][0],
            p.x * m[0][1] + p.y * m[1][1] + p.z * m[2][1],
            p.x * m[0][2] + p.y * m[1][2] + p.z * m[2][2]};
  }

  // Row-vector composition: p * (A * B) == (p * A) * B.
  Mat3 operator*(const Mat3& other) const;

  Mat3 transposed() const;
  int det() const;
  int trace() const { return m[0][0] + m[1][1] + m[2][2]; }
  bool is_signed_permutation() const;
  bool is_identity() const { return *this == Mat3{}; }

  /// Multiplicative order; throws Error beyond 48 (cannot happen for signed
  /// permutations, which have order dividing 2, 3, 4 or 6... up to 6 actually,
  /// but the guard keeps misuse loud).
  int order() const;
};

/// Parse a coordinate triplet such as "z,-y,x" into the linear map sending
/// (x,y,z) to that image. Only signed single-letter terms are accepted;
/// translations are kept separate throughout this library.
Mat3 linear_map(std::string_view triplet);

/// Affine isometry of E^3 with integer data: x |-> x * rot + tr.
/// Composition is written left to right to match right-action products:
/// compose(a, b) applies a first, then b.
struct Isometry {
  Mat3 rot;
  Vec3 tr;

  constexpr auto operator<=>(const Isometry&) const = default;

  static Isometry identity() { return {}; }
  static Isometry translation(const Vec3& t) { return {Mat3::identity(), t}; }

  Vec3 apply(const Vec3& p) const { return rot.apply(p) + tr; }
  bool is_identity() const { return rot.is_identity() && tr.is_zero(); }
  bool is_involution() const;
  bool is_linear() const { return tr.is_zero(); }
  Isometry linear_part() const { return {rot, {}}; }
};

Isometry compose(const Isometry& a, const Isometry& b);  // a then b
Isometry inverse(const Isometry& a);
/// Move a's geometry by h: the result fixes h(X) wherever a fixes X.
Isometry conjugated(const Isometry& a, const Isometry& h);
/// Convenience constructor from a triplet plus translation.
Isometry iso(std::string_view triplet, const Vec3& tr = {});

std::string to_string(const Isometry& a);

/// Classification of an isometry by its fixed-point set.
enum class IsoKind {
  identity,
  translation,
  point_reflection,      // x |-> c - x
  half_turn,             // period-2 rotation about a line
  plane_reflection,
  rotation,              // period > 2, about a line
  rotatory_reflection,   // improper, period 4 or 6, one fixed point
  screw,
  glide,
};

std::string to_string(IsoKind k);

struct IsometryKind {
  IsoKind kind = IsoKind::identity;
  /// Affine dimension of the fixed-point set; -1 when it is empty.
  int mirror_dim = 3;
  /// Multiplicative order of the linear part.
  int period = 1;
  /// A fixed point in doubled coordinates, when one exists at half-integral
  /// position and the fixed set is a single point.
  std::optional<Vec3> fixed_point_doubled;
};

/// Exact classification. Requires an orthogonal (signed permutation) linear
/// part; fixed sets are solved over the rationals, so half-integral centres
/// and axes are handled exactly.
IsometryKind classify(const Isometry& a);

/// Affine dimension of the set of points fixed by every given isometry
/// (-1 when empty). Used for common-axis detection in group identification.
int common_fixed_dim(std::span<const Isometry> elements);

/// Affine rank of a point set (0 for a single point, 3 for full-dimensional);
/// -1 for an empty set. Exact, integer-only.
int affine_rank(std::span<const Vec3> points);

}  // namespace skeletal
