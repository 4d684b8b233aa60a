// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#include "skeletal/ops.hpp"

#include <algorithm>

#include "skeletal/errors.hpp"
#include "skeletal/group.hpp"

namespace skeletal {

namespace {

// Common body of the two rewrites: replace `mirror` (r0 or r1) by mirror·R.
Isometry rewritten_mirror(const GeneratorSystem& gs, const Isometry& mirror,
                          const Isometry& R) {
  FiniteGroup g2 = close(gs.g2, kStabilizerCap);
  if (!g2.contains(R)) throw NotInG2("rewrite element lies outside <G2>");
  Isometry out = compose(mirror, R);
  if (!out.is_involution())
    throw NotInvolution("rewritten generator is not an involution");
  return out;
}

std::vector<Isometry> choices_for(const GeneratorSystem& gs,
                                  const Isometry& mirror) {
  FiniteGroup g2 = close(gs.g2, kStabilizerCap);
  std::vector<Isometry> out;
  for (const Isometry& R : g2.elements)
    if (compose(mirror, R).is_involution()) out.push_back(R);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GeneratorSystem lambda0(const GeneratorSystem& gs, const Isometry& R) {
  GeneratorSystem out = gs;
  out.r0 = rewritten_mirror(gs, gs.r0, R);
  out.rank4.reset();
  out.validate();
  return out;
}

GeneratorSystem lambda1(const GeneratorSystem& gs, const Isometry& R) {
  GeneratorSystem out = gs;
  out.r1 = rewritten_mirror(gs, gs.r1, R);
  out.rank4.reset();
  out.validate();
  return out;
}

std::vector<Isometry> lambda0_choices(const GeneratorSystem& gs) {
  return choices_for(gs, gs.r0);
}

std::vector<Isometry> lambda1_choices(const GeneratorSystem& gs) {
  return choices_for(gs, gs.r1);
}

std::vector<Isometry> edge_stabilizer_elements(const GeneratorSystem& gs) {
  FiniteGroup g2 = close(gs.g2, kStabilizerCap);
  std::vector<Isometry> out = g2.elements;
  std::sort(out.begin(), out.end());
  return out;
}

std::array<Isometry, 4> petrie(const std::array<Isometry, 4>& t) {
  return {t[0], compose(t[1], t[3]), t[2], t[3]};
}

GeneratorSystem petrie_system(const GeneratorSystem& gs) {
  if (!gs.rank4)
    throw InvalidGenerators("petrie rewrite needs the rank-4 quadruple");
  std::array<Isometry, 4> t = petrie(*gs.rank4);
  GeneratorSystem out;
  out.base_vertex = gs.base_vertex;
  out.r0 = t[0];
  out.r1 = t[1];
  out.g2 = {t[2], t[3]};
  out.rank4 = t;
  out.validate();
  return out;
}

std::pair<int, int> mirror_vector(const GeneratorSystem& gs) {
  if (!gs.r0.is_involution() || !gs.r1.is_involution())
    throw NotInvolution("mirror vector needs involutory generators");
  return {classify(gs.r0).mirror_dim, classify(gs.r1).mirror_dim};
}

}  // namespace skeletal
