#pragma once

#include "willmore/s3.hpp"
#include "willmore/surface.hpp"

#include <vector>

namespace willmore {

/// Relative deviation |W(F_v(S)) - W(S)| / W(S) with the pushforward taken
/// through the exact differential of F_v (conformal invariance certificate).
double check_invariance(const ParametricSurface& S, const ConformalParam& v,
                        const QuadratureGrid& q);

/// Flat conformal structure read off a conformally-flat parametrized torus:
/// the induced metric must be a varying multiple of one constant 2x2 matrix.
struct FlatStructure {
    double E, F, G;  // representative constant metric (scale irrelevant)
};
FlatStructure flat_structure(const ParametricSurface& S, const QuadratureGrid& q,
                             double tol = 1e-8);

struct BalanceResult {
    ConformalParam v0;
    Vec4 moments = Vec4::Zero();  // residual moments at v0
    int iterations = 0;
};

/// Finds v0 with int_S x_i o F_{v0} dmu_{g0} = 0 (i = 1..4) by damped Newton
/// with a finite-difference Jacobian. dmu_{g0} is the flat uniformized
/// measure, which in the conformally-flat coordinates of the accepted inputs
/// (product tori, Hopf tori, and their conformal images) is du dv up to a
/// constant. Non-flat parametrizations are rejected.
BalanceResult balance(const ParametricSurface& S, const QuadratureGrid& q,
                      double tol_factor = 1e-8, int max_iter = 200);

/// Area of F_v(S) computed as int lambda_v^2 dmu by adaptive quadrature
/// (resolves the concentration near the fixed point for |v| -> 1).
double conformal_area(const ParametricSurface& S, const ConformalParam& v,
                      double abs_tol = 1e-8);

struct ConformalVolumeResult {
    double value = 0.0;  // certified lower bound for sup_v area(F_v(S))
    ConformalParam argmax;
    int evaluations = 0;
};

/// Lower bound for the conformal volume sup_{|v|<1} area(F_v(S)): coarse grid
/// on {|v| <= 0.95} refined by Nelder-Mead, budget capped.
ConformalVolumeResult conformal_volume(const ParametricSurface& S, int grid_per_axis = 9,
                                       int budget = 4000, double abs_tol = 1e-8);

/// Flat-torus lattice normalized to generators (1,0) and (x,y) with
/// 0 <= x <= 1/2, y > 0, x^2 + y^2 >= 1.
struct Lattice {
    double x = 0.0;
    double y = 1.0;
    Lattice(double x_, double y_) : x(x_), y(y_) {
        if (!(x >= -1e-12 && x <= 0.5 + 1e-12 && y > 0.0 && x * x + y * y >= 1.0 - 1e-12))
            throw InvalidInput("Lattice: generators not normalized");
    }
    double area() const { return y; }
};

struct Lambda1Result {
    double lambda1 = 0.0;
    double lambda1_area = 0.0;
};

/// First nontrivial Laplace eigenvalue of the flat torus R^2/Gamma:
/// lambda1 = 4 pi^2 min_{xi in dual(Gamma), xi != 0} |xi|^2.
Lambda1Result lattice_lambda1(const Lattice& lattice);

/// Lattice of the conformal class of a flat torus in S^3.
Lattice conformal_class(const ParametricSurface& S, const QuadratureGrid& q);

struct LiYauResult {
    double lambda1_area = 0.0;
    double two_willmore = 0.0;
    bool holds = false;
    ConformalParam v0;  // balancing parameter that was applied
};

/// The eigenvalue bound for balanced flat tori:
/// lambda1 area(R^2/Gamma, g0) <= 2 W(S). Balances first, then evaluates
/// both sides.
LiYauResult li_yau_chain(const ParametricSurface& S, const QuadratureGrid& q);

/// Areas of F_{t p}(S) along an increasing sequence t in (0,1); for p on a
/// k-sheeted surface the limit is 4 pi k, off the surface it is 0. Multi-sheet
/// configurations pass several patches.
std::vector<double> kpoint_limit(const std::vector<ParametricSurface>& patches, const PointS3& p,
                                 const std::vector<double>& t_sequence, bool require_on_surface,
                                 double abs_tol = 1e-6);
std::vector<double> kpoint_limit(const ParametricSurface& S, const PointS3& p,
                                 const std::vector<double>& t_sequence, double abs_tol = 1e-6);

}  // namespace willmore
