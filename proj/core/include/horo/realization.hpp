#pragma once

#include <array>

#include "horo/minkowski.hpp"

namespace horo {

// Unique points u_i on the rays r_i realizing lambda(u_j, u_k) = l_i.
// The 3x3 multiplicative system t_j t_k (-<r_j, r_k>) = l_i^2 has the
// closed-form solution t_i = sqrt(P_j P_k / P_i) with P_i = l_i^2 / m_i.
std::array<LightConePoint, 3> realize_triangle(const Vec3& r0, const Vec3& r1, const Vec3& r2,
                                               double l0, double l1, double l2);

// Unique v on L+ with lambda(v, u0) = l0, lambda(v, u1) = l1, on the side
// of span(u0, u1) opposite the witness w (side = sign of det[u0, u1, .]).
LightConePoint extend_across(const LightConePoint& u0, const LightConePoint& u1,
                             const LightConePoint& w, double l0, double l1);

// Lemma 3: horocyclic sector length 2 l_i / (l_j l_k) cut out at corner i
// of a decorated triangle with opposite lambda lengths (l0, l1, l2).
double sector_length(double l0, double l1, double l2, int i);

}  // namespace horo
