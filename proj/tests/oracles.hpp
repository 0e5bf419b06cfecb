#pragma once

// Test-only closed forms and brute-force oracles. These stay independent of
// the library code paths they are used to check.

#include "willmore/types.hpp"

#include <cmath>
#include <vector>

namespace oracles {

inline constexpr double kPi = willmore::kPi;

/// W(tube(R, r)) = pi^2 R^2 / (r sqrt(R^2 - r^2)).
inline double tube_willmore(double R, double r) {
    return kPi * kPi * R * R / (r * std::sqrt(R * R - r * r));
}

/// Area of the product torus S^1(a) x S^1(b), b = sqrt(1 - a^2).
inline double product_area(double a) {
    const double b = std::sqrt(1.0 - a * a);
    return 4.0 * kPi * kPi * a * b;
}

/// Willmore energy of the product torus: pi^2 / (a b).
inline double product_willmore(double a) {
    const double b = std::sqrt(1.0 - a * a);
    return kPi * kPi / (a * b);
}

/// Mean curvature of the product torus: (b/a - a/b)/2.
inline double product_mean_curvature(double a) {
    const double b = std::sqrt(1.0 - a * a);
    return 0.5 * (b / a - a / b);
}

/// Offset area of the product torus with phase phi = acos(a): the offset at
/// distance t is the product torus of phase phi +- t while both Jacobian
/// factors stay positive, i.e. 2 pi^2 sin(2(phi + t)) for phi + t in
/// [0, pi/2] and zero outside.
inline double product_offset_area(double a, double t) {
    const double phi = std::acos(a);
    const double arg = phi + t;
    if (arg < 0.0 || arg > kPi / 2.0) return 0.0;
    return 2.0 * kPi * kPi * std::sin(2.0 * arg);
}

/// Offset of a geodesic sphere of radius r (outward orientation): the
/// geodesic sphere of radius r + t while r + t stays in (0, pi).
inline double sphere_offset_area(double r, double t) {
    const double arg = r + t;
    if (arg <= 0.0 || arg >= kPi) return 0.0;
    const double s = std::sin(arg);
    return 4.0 * kPi * s * s;
}

/// Hyperbolic bending energy of the circle with euclidean center (0, h) and
/// radius r in the upper half-plane: 2 pi h^2 / (r sqrt(h^2 - r^2)).
inline double circle_bending(double h, double r) {
    return 2.0 * kPi * h * h / (r * std::sqrt(h * h - r * r));
}

/// Elastic energy of the latitude at height z on S^2: 2 pi^2 / sqrt(1 - z^2).
inline double latitude_elastic(double z) { return 2.0 * kPi * kPi / std::sqrt(1.0 - z * z); }

/// Eigenvalues of the second-variation operator on the Clifford torus:
/// 2 (m^2 + n^2) - 4 over integer pairs, ascending with multiplicity.
inline std::vector<double> clifford_jacobi_eigenvalues(double max_value) {
    std::vector<double> out;
    const int bound = 16;
    for (int m = -bound; m <= bound; ++m)
        for (int n = -bound; n <= bound; ++n) {
            const double lam = 2.0 * (m * m + n * n) - 4.0;
            if (lam <= max_value) out.push_back(lam);
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Brute-force first dual-lattice norm over a large index box.
inline double lattice_min_dual_norm_sq(double x, double y) {
    double best = 1e300;
    for (int m = -8; m <= 8; ++m)
        for (int n = -40; n <= 40; ++n) {
            if (m == 0 && n == 0) continue;
            const double a = m;
            const double b = (n - m * x) / y;
            best = std::min(best, a * a + b * b);
        }
    return best;
}

/// Euler-Lagrange residual of the Willmore operator on tube(2,1): the closed
/// form Delta H + ((k1-k2)^2/2) H = 1/(2 + cos u)^3.
inline double tube21_el_residual(double u) {
    const double d = 2.0 + std::cos(u);
    return 1.0 / (d * d * d);
}

/// Sweepout slice area 4 pi (1 - (2t-1)^2).
inline double sweepout_area(double t) {
    const double h = 2.0 * t - 1.0;
    return 4.0 * kPi * (1.0 - h * h);
}

/// High-precision (long double) evaluation of the conformal dilation,
/// independent of the production implementation.
inline willmore::Vec4 conformal_long_double(const willmore::Vec4& v, const willmore::Vec4& x) {
    long double w[4], s = 0.0L, vn = 0.0L;
    for (int i = 0; i < 4; ++i) {
        w[i] = static_cast<long double>(x[i]) - static_cast<long double>(v[i]);
        s += w[i] * w[i];
        vn += static_cast<long double>(v[i]) * static_cast<long double>(v[i]);
    }
    const long double a = (1.0L - vn) / s;
    willmore::Vec4 out;
    for (int i = 0; i < 4; ++i)
        out[i] = static_cast<double>(a * w[i] - static_cast<long double>(v[i]));
    return out;
}

/// Distance of a point to the tube torus of radii (R, r) around the z-axis.
inline double tube_distance(const willmore::Vec3& p, double R, double r) {
    const double rho = std::hypot(p[0], p[1]);
    return std::abs(std::hypot(rho - R, p[2]) - r);
}

}  // namespace oracles
