#pragma once

#include "willmore/types.hpp"

#include <functional>
#include <vector>

namespace willmore {

/// Adaptive Simpson quadrature on [a, b] with an absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-10, int max_depth = 40);

/// Adaptive 2D cell-subdivision quadrature on [au,bu] x [av,bv]. Each cell is
/// estimated by a tensor Simpson rule and split while the refinement defect
/// exceeds its share of the tolerance.
double adaptive_quad_2d(const std::function<double(double, double)>& f, double au, double bu,
                        double av, double bv, double abs_tol = 1e-8, int max_depth = 24,
                        int min_depth = 0);

/// Golden-section maximization of a unimodal function on [a, b].
/// Returns (argmax, max).
std::pair<double, double> golden_section_max(const std::function<double(double)>& f, double a,
                                             double b, double x_tol = 1e-10, int max_iter = 200);

/// Nelder-Mead maximization with a fixed deterministic schedule.
struct NelderMeadResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int evaluations = 0;
};
NelderMeadResult nelder_mead_max(const std::function<double(const Eigen::VectorXd&)>& f,
                                 const Eigen::VectorXd& start, double step, int max_evals);

/// Reduce a torus lattice given by the ratio tau = (second generator as a
/// complex number, first normalized to 1) into the fundamental domain
/// 0 <= x <= 1/2, y > 0, x^2 + y^2 >= 1 (x is folded to |x|).
Vec2 reduce_lattice(std::complex<double> tau);

}  // namespace willmore
