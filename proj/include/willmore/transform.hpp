#pragma once

#include "willmore/s3.hpp"
#include "willmore/surface.hpp"

namespace willmore {

/// Pushforward F_v(S) of a surface in S^3, with jets from the exact first and
/// second derivatives of the conformal dilation F_v.
ParametricSurface conformal_image(const ParametricSurface& S, const ConformalParam& v);

/// Stereographic preimage in S^3 of a surface in R^3 (exact jets).
ParametricSurface stereographic_lift(const ParametricSurface& S);

/// Stereographic image in R^3 of a surface in S^3 avoiding the pole.
ParametricSurface stereographic_project(const ParametricSurface& S);

/// Image of an R^3 surface (avoiding the origin) under x -> x/|x|^2.
ParametricSurface inverted(const ParametricSurface& S);

/// Image of a surface under a rigid rotation of the ambient space
/// (R in SO(4); R^3 surfaces use the upper-left 3x3 block).
ParametricSurface rotated(const ParametricSurface& S, const Mat4& R);

/// Deterministic random rotation in SO(4).
Mat4 random_rotation4(Rng& rng);

}  // namespace willmore
