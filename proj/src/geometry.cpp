// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#include "skeletal/geometry.hpp"

#include <boost/rational.hpp>
#include <cstdlib>
#include <vector>

#include "skeletal/errors.hpp"

namespace skeletal {

std::string to_string(const Vec3& v) {
  return "(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
         std::to_string(v.z) + ")";
}

Mat3 Mat3::operator*(const Mat3& other) const {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += m[i][k] * other.m[k][j];
      out.m[i][j] = s;
    }
  return out;
}

Mat3 Mat3::transposed() const {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m[i][j] = m[j][i];
  return out;
}

int Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool Mat3::is_signed_permutation() const {
  for (int i = 0; i < 3; ++i) {
    int row_hits = 0, col_hits = 0;
    for (int j = 0; j < 3; ++j) {
      int r = m[i][j], c = m[j][i];
      if (r != 0 && r != 1 && r != -1) return false;
      row_hits += r != 0;
      col_hits += c != 0;
    }
    if (row_hits != 1 || col_hits != 1) return false;
  }
  return true;
}

int Mat3::order() const {
  Mat3 acc = *this;
  for (int k = 1; k <= 48; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * *this;
  }
  throw Error("order: matrix has order beyond 48: not orthogonal?");
}

Mat3 linear_map(std::string_view triplet) {
  Mat3 out;
  out.m = {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
  auto fail = [&](const std::string& why) -> Error {
    return Error("linear_map: " + why + " in '" + std::string(triplet) + "'");
  };
  int col = 0;
  int letters_in_token = 0;
  int sign = 1;
  for (char c : triplet) {
    switch (c) {
      case ' ':
      case '+':
        break;
      case '-':
        sign = -sign;
        break;
      case ',':
        if (letters_in_token != 1) throw fail("expected one signed letter per coordinate");
        if (col >= 2) throw fail("too many coordinates");
        ++col;
        letters_in_token = 0;
        sign = 1;
        break;
      case 'x':
      case 'y':
      case 'z':
        out.m[c - 'x'][col] = sign;
        ++letters_in_token;
        sign = 1;
        break;
      default:
        throw fail("unexpected character '" + std::string(1, c) + "'");
    }
  }
  if (col != 2 || letters_in_token != 1) throw fail("expected three signed letters");
  return out;
}

bool Isometry::is_involution() const {
  return !is_identity() && compose(*this, *this).is_identity();
}

Isometry compose(const Isometry& a, const Isometry& b) {
  // apply(compose(a, b), p) == b.apply(a.apply(p))
  return {a.rot * b.rot, b.rot.apply(a.tr) + b.tr};
}

Isometry inverse(const Isometry& a) {
  Mat3 rinv = a.rot.transposed();
  return {rinv, -rinv.apply(a.tr)};
}

Isometry conjugated(const Isometry& a, const Isometry& h) {
  return compose(compose(inverse(h), a), h);
}

Isometry iso(std::string_view triplet, const Vec3& tr) {
  return {linear_map(triplet), tr};
}

std::string to_string(const Isometry& a) {
  const char letters[3] = {'x', 'y', 'z'};
  std::string out = "[";
  for (int j = 0; j < 3; ++j) {
    std::string term;
    for (int i = 0; i < 3; ++i) {
      int c = a.rot.m[i][j];
      if (c == 0) continue;
      term += (c > 0 ? (term.empty() ? "" : "+") : "-");
      term += letters[i];
    }
    i64 t = a.tr[j];
    if (t != 0 || term.empty()) {
      if (t >= 0 && !term.empty()) term += '+';
      term += std::to_string(t);
    }
    out += term;
    if (j < 2) out += ", ";
  }
  return out + "]";
}

std::string to_string(IsoKind k) {
  switch (k) {
    case IsoKind::identity: return "identity";
    case IsoKind::translation: return "translation";
    case IsoKind::point_reflection: return "point-reflection";
    case IsoKind::half_turn: return "half-turn";
    case IsoKind::plane_reflection: return "plane-reflection";
    case IsoKind::rotation: return "rotation";
    case IsoKind::rotatory_reflection: return "rotatory-reflection";
    case IsoKind::screw: return "screw";
    case IsoKind::glide: return "glide";
  }
  return "?";
}

namespace {

using Rat = boost::rational<long long>;

struct AffineSolveResult {
  int rank = 0;
  bool consistent = true;
  std::array<Rat, 3> point{};  // one solution; meaningful iff consistent
};

// Solve the stacked fixed-point system p * (M_e - I) = -t_e over the
// rationals (one block of three equations per isometry).
AffineSolveResult solve_fixed_set(std::span<const Isometry> elems) {
  std::vector<std::array<Rat, 4>> rows;
  rows.reserve(3 * elems.size());
  for (const Isometry& e : elems) {
    for (int j = 0; j < 3; ++j) {
      std::array<Rat, 4> row{};
      for (int i = 0; i < 3; ++i)
        row[i] = Rat(e.rot.m[i][j] - (i == j ? 1 : 0));
      row[3] = Rat(-e.tr[j]);
      rows.push_back(row);
    }
  }

  AffineSolveResult out;
  std::array<int, 3> pivot_row{-1, -1, -1};
  for (int col = 0; col < 3; ++col) {
    int pr = -1;
    for (int r = out.rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != Rat(0)) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[out.rank], rows[pr]);
    Rat lead = rows[out.rank][col];
    for (auto& v : rows[out.rank]) v /= lead;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == out.rank) continue;
      Rat f = rows[r][col];
      if (f == Rat(0)) continue;
      for (int c = 0; c < 4; ++c) rows[r][c] -= f * rows[out.rank][c];
    }
    pivot_row[col] = out.rank;
    ++out.rank;
  }
  for (int r = out.rank; r < static_cast<int>(rows.size()); ++r)
    if (rows[r][3] != Rat(0)) {
      out.consistent = false;
      return out;
    }
  // Particular solution with all free variables at zero.
  for (int col = 0; col < 3; ++col)
    if (pivot_row[col] >= 0) out.point[col] = rows[pivot_row[col]][3];
  return out;
}

}  // namespace

IsometryKind classify(const Isometry& a) {
  if (!a.rot.is_signed_permutation())
    throw Error("classify: linear part is not an integer orthogonal matrix: " +
                to_string(a));
  IsometryKind k;
  k.period = a.rot.order();
  const auto fix = solve_fixed_set({&a, 1});
  k.mirror_dim = fix.consistent ? 3 - fix.rank : -1;
  if (fix.consistent && k.mirror_dim == 0) {
    Vec3 doubled;
    bool half_integral = true;
    i64* coords[3] = {&doubled.x, &doubled.y, &doubled.z};
    for (int i = 0; i < 3; ++i) {
      Rat q = fix.point[i] * 2;
      if (q.denominator() != 1) {
        half_integral = false;
        break;
      }
      *coords[i] = q.numerator();
    }
    if (half_integral) k.fixed_point_doubled = doubled;
  }

  Mat3 minus_identity;
  minus_identity.m = {{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}};

  if (a.rot.det() == 1) {
    if (k.period == 1)
      k.kind = a.tr.is_zero() ? IsoKind::identity : IsoKind::translation;
    else if (k.mirror_dim >= 0)
      k.kind = k.period == 2 ? IsoKind::half_turn : IsoKind::rotation;
    else
      k.kind = IsoKind::screw;
  } else {
    if (a.rot == minus_identity)
      k.kind = IsoKind::point_reflection;
    else if (k.period == 2)
      k.kind = k.mirror_dim >= 0 ? IsoKind::plane_reflection : IsoKind::glide;
    else
      k.kind = IsoKind::rotatory_reflection;
  }
  return k;
}

int common_fixed_dim(std::span<const Isometry> elements) {
  if (elements.empty()) return 3;
  const auto fix = solve_fixed_set(elements);
  return fix.consistent ? 3 - fix.rank : -1;
}

int affine_rank(std::span<const Vec3> points) {
  if (points.empty()) return -1;
  std::vector<std::array<Rat, 3>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vec3 d = points[i] - points[0];
    rows.push_back({Rat(d.x), Rat(d.y), Rat(d.z)});
  }
  int rank = 0;
  for (int col = 0; col < 3; ++col) {
    int pr = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != Rat(0)) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    Rat lead = rows[rank][col];
    for (auto& v : rows[rank]) v /= lead;
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      Rat f = rows[r][col];
      if (f == Rat(0)) continue;
      for (int c = 0; c < 3; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace skeletal
