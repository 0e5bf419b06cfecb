#pragma once

#include "willmore/surface.hpp"

#include <Eigen/Sparse>

#include <vector>

namespace willmore {

/// Spectrum of the second-variation (Jacobi) operator of area on a minimal
/// surface in S^3. Eigenvalues follow the quadratic-form convention
/// Q(f) = -int f L f = int |grad f|^2 - (|A|^2 + 2) f^2, so the index (number
/// of negative eigenvalues) counts area-decreasing directions; the functions
/// <N, e_i> have eigenvalue -2 in this convention.
struct JacobiSpectrum {
    std::vector<double> eigenvalues;  // ascending; dense solves carry all of them
    int index = 0;
    int nullity = 0;
    double tol = 0.0;          // half-width of the nullity band
    bool indeterminate = false;  // eigenvalues suspiciously close to the band edge
    int resolution = 0;
};

/// Spectrum on a minimal flat torus (periodic finite differences, dense solve
/// up to 64^2, shift-inverted block iteration above) or on a great sphere
/// (closed form l(l+1) - 2). Non-minimal surfaces (|H| > 1e-8 at any node)
/// are rejected.
JacobiSpectrum jacobi_spectrum(const ParametricSurface& S, int n, int max_eigenvalues = 40);

/// Number of negative eigenvalues, with the nullity band at 1e-3 |lambda_min|.
int morse_index(const ParametricSurface& S, int n);

/// Applies -L = -Delta - (|A|^2 + 2) to a grid function via spectral (FFT)
/// differentiation; used to certify eigenfunction residuals independent of
/// the finite-difference discretization. Grid layout: f[j * n + i] at
/// (u, v) = (2 pi i / n, 2 pi j / n); n must be a power of two.
std::vector<double> apply_jacobi_operator(const ParametricSurface& S, int n,
                                          const std::vector<double>& f);

/// Samples <N, e_axis> on the same grid layout.
std::vector<double> normal_component_grid(const ParametricSurface& S, int n, int axis);

/// Assembled finite-difference matrix of -L (exposed for tests).
Eigen::SparseMatrix<double> jacobi_matrix(const ParametricSurface& S, int n);

}  // namespace willmore
