#pragma once

#include "willmore/types.hpp"

#include <vector>

namespace willmore {

/// Point on the unit 3-sphere. Coordinates are renormalized on construction
/// so |x| = 1 holds to machine precision after every map application.
class PointS3 {
public:
    explicit PointS3(const Vec4& x) : x_(x) {
        const double n = x_.norm();
        if (!(n > 1e-12)) throw InvalidInput("PointS3: zero vector");
        x_ /= n;
    }
    const Vec4& coords() const { return x_; }
    double operator[](int i) const { return x_[i]; }

private:
    Vec4 x_;
};

/// Parameter of a conformal dilation of S^3: a point v in the open unit
/// 4-ball. Inputs with |v| >= 1 are rejected; inputs inside the ball but
/// closer than 1e-6 to the boundary are clamped to |v| = 1 - 1e-6 (the
/// boundary itself is approached only along sequences, never evaluated).
class ConformalParam {
public:
    static constexpr double kMaxNorm = 1.0 - 1e-6;

    ConformalParam() : v_(Vec4::Zero()) {}
    explicit ConformalParam(const Vec4& v) : v_(v) {
        const double n = v_.norm();
        if (n >= 1.0) throw InvalidInput("ConformalParam: |v| >= 1 is outside the conformal ball");
        if (n > kMaxNorm) v_ *= kMaxNorm / n;
    }
    const Vec4& v() const { return v_; }
    double norm() const { return v_.norm(); }

private:
    Vec4 v_;
};

/// Round 2-sphere in S^3, encoded as the hyperplane slice
/// { x : <x, center> = cos(geodesic_radius) }.
struct RoundSphere {
    PointS3 center;
    double geodesic_radius = kPi / 2;  // in (0, pi)
    int orientation = +1;

    RoundSphere(PointS3 c, double r, int orient = +1)
        : center(c), geodesic_radius(r), orientation(orient) {
        if (!(r > 0.0 && r < kPi)) throw InvalidInput("RoundSphere: radius outside (0, pi)");
    }

    double area() const {
        const double s = std::sin(geodesic_radius);
        return 4.0 * kPi * s * s;
    }

    /// Geodesic distance from x to the sphere.
    double distance(const Vec4& x) const {
        double c = center.coords().dot(x.normalized());
        c = std::clamp(c, -1.0, 1.0);
        return std::abs(std::acos(c) - geodesic_radius);
    }

    bool is_great(double tol = 1e-9) const { return std::abs(geodesic_radius - kPi / 2) < tol; }
};

// --- conformal dilations F_v ------------------------------------------------

/// F_v(x) = ((1-|v|^2)/|x-v|^2)(x-v) - v. Maps S^3 to S^3; F_0 = identity.
Vec4 apply_conformal(const ConformalParam& v, const Vec4& x);
PointS3 apply_conformal(const ConformalParam& v, const PointS3& x);

/// Exact differential of F_v at x applied to an ambient vector u.
Vec4 conformal_differential(const ConformalParam& v, const Vec4& x, const Vec4& u);

/// Exact second derivative of F_v at x applied to the pair (u1, u2).
Vec4 conformal_second_derivative(const ConformalParam& v, const Vec4& x, const Vec4& u1,
                                 const Vec4& u2);

/// Conformal factor of F_v at x: |dF_v[u]| = factor * |u| for every u.
double conformal_factor(const ConformalParam& v, const Vec4& x);

/// Solves F_v(x) = y by Newton iteration (used to certify bijectivity; the
/// closed-form candidate F_{-v}(y) seeds the solve but is not assumed exact).
PointS3 conformal_inverse(const ConformalParam& v, const PointS3& y, double tol = 1e-12,
                          int max_iter = 50);

// --- stereographic projection ------------------------------------------------

/// Projection from the pole (0,0,0,1): x -> (x1,x2,x3)/(1-x4).
/// Throws on the pole itself (singular projection).
Vec3 stereographic_to_r3(const PointS3& x);

/// Inverse projection: p -> (2p, |p|^2-1)/(1+|p|^2). Always lands on S^3.
PointS3 stereographic_to_s3(const Vec3& p);

// --- Hopf map -----------------------------------------------------------------

/// Hopf map S^3 -> S^2 with the convention
///   (z1, z2) -> (|z1|^2 - |z2|^2, 2 Re(z1 conj(z2)), 2 Im(z1 conj(z2))),
/// where z1 = x1 + i x2 and z2 = x3 + i x4. Constant on fibers
/// (e^{i t} z1, e^{i t} z2); the Clifford torus maps onto the equator
/// {h1 = 0}.
Vec3 hopf(const Vec4& x);
Vec3 hopf(const PointS3& x);

/// Differential of the Hopf map (the map is quadratic, so this is exact).
Vec3 hopf_differential(const Vec4& x, const Vec4& u);

/// Rotation of the fiber through angle t: (z1, z2) -> (e^{it} z1, e^{it} z2).
Vec4 hopf_fiber_rotate(const Vec4& x, double t);

// --- sphere fitting -----------------------------------------------------------

struct SphereFit {
    RoundSphere sphere;
    double residual = 0.0;  // RMS geodesic distance of the inputs to the sphere
};

/// Least-squares round sphere through a cloud of points on S^3: fits the
/// affine hyperplane <x,q> = c minimizing squared residuals and renormalizes
/// to (center, geodesic radius = arccos c). Requires >= 10 points with
/// genuine spread; clouds whose covariance is rank deficient (e.g. all on a
/// great circle) have no unique sphere and are rejected.
SphereFit fit_round_sphere(const std::vector<Vec4>& points);

}  // namespace willmore
