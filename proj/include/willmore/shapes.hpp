#pragma once

#include "willmore/curves.hpp"
#include "willmore/s3.hpp"
#include "willmore/surface.hpp"

#include <string>
#include <vector>

namespace willmore {

/// Tube of radius r around a circle of radius R in the xy-plane (0 < r < R).
ParametricSurface tube_torus(double R, double r);

/// Product torus S^1(a) x S^1(sqrt(1-a^2)) in S^3 (0 < a < 1).
ParametricSurface product_torus(double a);

/// Clifford torus S^1(1/sqrt2) x S^1(1/sqrt2).
ParametricSurface clifford_torus();

/// Hopf torus: the preimage under the Hopf map of a closed curve on S^2,
/// parametrized by (constant-speed parameter along the curve, fiber angle).
/// The horizontal lift is integrated by fixed-step RK4 (step 2pi/4096) and
/// stored as a trigonometric interpolant, so jets are spectrally accurate.
ParametricSurface hopf_torus(const ClosedCurve& curve_on_s2);

/// Torus of revolution of a profile curve in the plane {z = 0, y > 0},
/// rotated about the x-axis.
ParametricSurface revolution_torus(const ClosedCurve& profile_h2);

/// Round sphere of radius rho centered at c in R^3 (pole-excluding chart).
ParametricSurface sphere_r3(const Vec3& center, double rho);

/// Geodesic sphere {<x, q> = cos r} in S^3. The optional frame axis g fixes
/// the chart pole direction (useful to keep chart poles away from a marked
/// point).
ParametricSurface geodesic_sphere(const PointS3& center, double radius,
                                  const Vec4* pole_axis = nullptr);

/// Equator S^3 cap {x4 = 0}, i.e. the great sphere centered at e4.
ParametricSurface equator_s3();

/// Normal graph over a torus-domain base: base + amplitude cos(m u) cos(n v) N
/// (geodesic normal graph in S^3). amplitude = 0 returns the base itself.
ParametricSurface perturbed(const ParametricSurface& base, double amplitude, int m, int n);

/// Tube of radius r around a closed space curve in R^3 (Frenet frame).
ParametricSurface tube_around_curve(const ClosedCurve& curve, double r);

/// r -> W(tube(R, r)) sampled at the given radii.
std::vector<std::pair<double, double>> tube_energy_profile(double R,
                                                           const std::vector<double>& radii,
                                                           const QuadratureGrid& q);

// --- ShapeSpec text form ---------------------------------------------------------

/// Builds a surface from the key-value text form, e.g.
///   kind=tube R=1.4142 r=1
///   kind=product a=0.6
///   kind=hopf curve=equator | curve=wavy height=0.4 amplitude=0.05 mode=3
///   kind=revolution h=2 r0=1 amplitude=0.05 mode=2   (circle when amplitude=0)
///   kind=sphere radius=1
///   kind=geodesic-sphere radius=0.7
///   kind=equator
///   kind=perturbed base=product a=0.70710678 amplitude=0.01 m=2 n=2
///   kind=trefoil-tube r=0.1
///   kind=lifted-tube R=2 r=1    (stereographic preimage in S^3)
ParametricSurface build_shape(const std::string& spec);

/// S^3 catalog used by the property suites.
std::vector<ParametricSurface> catalog_s3();
/// R^3 catalog used by the property suites.
std::vector<ParametricSurface> catalog_r3();

}  // namespace willmore
