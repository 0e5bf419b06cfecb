#pragma once

#include "willmore/fourier.hpp"
#include "willmore/types.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace willmore {

enum class CurveAmbient { R3, S2, H2 };

struct CurveJet {
    Vec3 p = Vec3::Zero();
    Vec3 d1 = Vec3::Zero();
    Vec3 d2 = Vec3::Zero();
};

/// Periodic parametrized curve on [0, 2pi), given by harmonic coefficient
/// lists per coordinate. Curves on S^2 are the radial normalization of the
/// raw harmonic curve (jets by the quotient rule); curves in the hyperbolic
/// upper half-plane use coordinates (x, y) with y > 0.
class ClosedCurve {
public:
    ClosedCurve(CurveAmbient ambient, std::array<FourierSeries, 3> coords);

    CurveAmbient ambient() const { return ambient_; }
    CurveJet jet(double t) const;
    Vec3 position(double t) const { return jet(t).p; }
    const std::array<FourierSeries, 3>& coords() const { return coords_; }

    /// Raw harmonic curve of an S^2 curve before normalization (third
    /// derivative needed by tube constructions).
    Vec3 raw_derivative(double t, int order) const;

    bool regular(double tol = 1e-8) const;
    double min_speed() const;

private:
    CurveAmbient ambient_;
    std::array<FourierSeries, 3> coords_;
};

// --- curve energies -------------------------------------------------------------

/// Total curvature int |k| ds of a closed curve in R^3 (adaptive Simpson).
/// >= 2 pi for every closed curve; > 4 pi for knotted ones.
double total_curvature(const ClosedCurve& curve, double abs_tol = 1e-10);

/// pi * int (1 + k^2) ds over a closed curve on S^2, with k the geodesic
/// curvature; equals the Willmore energy of the Hopf torus over the curve.
double elastic_energy_s2(const ClosedCurve& curve, double abs_tol = 1e-10);

/// int k_{-1}^2 ds over a closed curve in the hyperbolic upper half-plane,
/// with the geodesic curvature and arc length of the hyperbolic metric:
/// k_{-1} = y * k_euc + n_y (left euclidean normal), ds = |gamma'|/y dt.
/// (pi/2) times the result is the Willmore energy of the revolution torus
/// over the curve; the value is >= 4 pi for every regular closed curve.
double hyperbolic_bending(const ClosedCurve& curve, double abs_tol = 1e-10);

/// Geodesic curvature of an S^2 curve at parameter t.
double geodesic_curvature_s2(const ClosedCurve& curve, double t);

/// Hyperbolic geodesic curvature of an H^2 curve at parameter t.
double hyperbolic_curvature(const ClosedCurve& curve, double t);

/// Euclidean length (R^3 / S^2 chordal metric), or hyperbolic length for H2.
double curve_length(const ClosedCurve& curve, double abs_tol = 1e-10);

// --- text format -----------------------------------------------------------------

/// Parses the harmonic-coefficient text format:
///   ambient r3|s2|h2
///   coord <name> cos <a0> <a1> ...
///   coord <name> sin <b1> <b2> ...
/// Coordinate names: x y z (r3, s2) or x y (h2). Missing lines mean zero.
ClosedCurve parse_curve(std::istream& in);
ClosedCurve parse_curve_file(const std::string& path);
std::string serialize_curve(const ClosedCurve& curve);

// --- builtin curves ----------------------------------------------------------------

ClosedCurve circle_r3(double radius);
ClosedCurve ellipse_r3(double a, double b);
ClosedCurve trefoil_r3();
/// Latitude circle z = const on S^2 (height in (-1, 1)).
ClosedCurve latitude_s2(double height);
/// Latitude with a small harmonic wobble in height (still on S^2).
ClosedCurve wavy_latitude_s2(double height, double amplitude, int mode);
/// Equator of S^2.
ClosedCurve equator_s2();
/// Circle of euclidean center (0, h) and radius r in the upper half-plane.
ClosedCurve circle_h2(double h, double r);
/// Convex wobbled profile around (0, h): radius r(t) = r0 (1 + amp cos(mode t)).
ClosedCurve wobble_profile_h2(double h, double r0, double amplitude, int mode);

}  // namespace willmore
