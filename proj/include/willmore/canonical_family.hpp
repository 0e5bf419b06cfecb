#pragma once

#include "willmore/s3.hpp"
#include "willmore/surface.hpp"

#include <vector>

namespace willmore {

/// Parameter of the canonical family: conformal parameter v in B^4 and
/// offset distance t in [-pi, pi].
struct FamilyPoint {
    ConformalParam v;
    double t = 0.0;
    FamilyPoint() = default;
    FamilyPoint(ConformalParam v_, double t_) : v(v_), t(t_) {
        if (!(std::abs(t_) <= kPi)) throw InvalidInput("FamilyPoint: |t| must be <= pi");
    }
};

/// Area of the family member at (v, t): the offset-area bound applied to the
/// pushforward F_v(S).
double family_area(const ParametricSurface& S, const FamilyPoint& fp, const QuadratureGrid& q);

/// Areas of a whole offset slice {(v, t_k)} sharing one pushforward.
std::vector<double> family_slice(const ParametricSurface& S, const ConformalParam& v,
                                 const std::vector<double>& ts, const QuadratureGrid& q);

struct LandscapeResult {
    double sup = 0.0;
    FamilyPoint argmax;
    bool certificate = false;  // sup <= W(S) + 1e-6
    double willmore = 0.0;
    struct Row {
        Vec4 v;
        double t;
        double area;
    };
    std::vector<Row> rows;  // grid samples (for CSV export)
};

/// Area landscape of the canonical family over a grid on B^4 x [-pi, pi]
/// (v axes span [-vmax, vmax], points outside |v| <= vmax are skipped,
/// argmax tie-break is lexicographic in the grid order). With refine = true
/// the best grid point is polished by Nelder-Mead in (v, t); the reported sup
/// stays a lower bound for the true supremum.
LandscapeResult sup_area_landscape(const ParametricSurface& S, int v_points, int t_points,
                                   const QuadratureGrid& q, double vmax = 0.9,
                                   bool refine = false, int refine_budget = 300,
                                   bool keep_rows = false);

/// Area of the one-parameter sweepout slice Phi_1(t) = S^3 cap {x4 = 2t - 1}
/// for t in [0, 1] (closed form 4 pi (1 - (2t-1)^2)).
double sweepout_phi1(double t);

/// Same area computed by quadrature over the slice sphere (cross-check).
double sweepout_phi1_quadrature(double t, const QuadratureGrid& q);

struct LimitSphereProbe {
    RoundSphere sphere;
    double residual = 0.0;
    double distance_p = 0.0;        // distance of p to the fitted sphere
    double distance_surface = 0.0;  // min distance of the fitted sphere to S
    double center_alignment = 0.0;  // |<center, N(p)>|
};

/// Fits a round sphere to F_v(S) for v approaching the boundary point p of S
/// along the ray at angle theta from the radial direction (theta = 0 is the
/// radial path v = (1-delta) p, whose limit is the great sphere tangent to S
/// at p; tilted rays give smaller spheres tangent to S whose radius and
/// center depend on the angle).
LimitSphereProbe limit_sphere_probe(const ParametricSurface& S, double u_p, double v_p,
                                    double theta, double delta, int sample_grid = 64);

}  // namespace willmore
