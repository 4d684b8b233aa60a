// skeletal: exact construction and verification of regular polygonal
// complexes in euclidean 3-space.
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "skeletal/wythoff.hpp"

namespace skeletal {

/// Rewrite the edge generator: (r0, r1, g2) -> (r0·R, r1, g2), same base
/// vertex. R must lie in the closure of g2 (NotInG2) and r0·R must be an
/// involution (NotInvolution). The generated group, the base edge, and hence
/// the vertex and edge orbits are unchanged. Involutory for involutory R.
GeneratorSystem lambda0(const GeneratorSystem& gs, const Isometry& R);

/// Rewrite the face generator: (r0, r1, g2) -> (r0, r1·R, g2); same
/// preconditions, taken against r1.
GeneratorSystem lambda1(const GeneratorSystem& gs, const Isometry& R);

/// Every R in the closure of g2 passing the respective precondition, in
/// ascending isometry order.
std::vector<Isometry> lambda0_choices(const GeneratorSystem& gs);
std::vector<Isometry> lambda1_choices(const GeneratorSystem& gs);

/// The full closure of g2 (the pointwise base-edge stabilizer), in ascending
/// isometry order.
std::vector<Isometry> edge_stabilizer_elements(const GeneratorSystem& gs);

/// (T0, T1, T2, T3) -> (T0, T1·T3, T2, T3). An involution.
std::array<Isometry, 4> petrie(const std::array<Isometry, 4>& t);

/// Apply the rewrite to a system carrying its rank-4 quadruple and return
/// the induced 2-skeleton system (r0 = T0, r1 = T1·T3, g2 = {T2, T3}).
/// Throws InvalidGenerators when no quadruple is attached.
GeneratorSystem petrie_system(const GeneratorSystem& gs);

/// Fixed-set dimensions of (r0, r1). Throws NotInvolution when either
/// generator does not have period 2.
std::pair<int, int> mirror_vector(const GeneratorSystem& gs);

}  // namespace skeletal
