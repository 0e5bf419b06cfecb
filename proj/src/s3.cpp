#include "willmore/s3.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

namespace willmore {

Vec4 apply_conformal(const ConformalParam& v, const Vec4& x) {
    if (v.v().isZero()) return x;  // F_0 is the identity, exactly
    const Vec4 w = x - v.v();
    const double s = w.squaredNorm();
    if (s < 1e-24) throw InvalidInput("apply_conformal: x coincides with v");
    const double a = (1.0 - v.v().squaredNorm()) / s;
    return a * w - v.v();
}

PointS3 apply_conformal(const ConformalParam& v, const PointS3& x) {
    return PointS3(apply_conformal(v, x.coords()));
}

Vec4 conformal_differential(const ConformalParam& v, const Vec4& x, const Vec4& u) {
    if (v.v().isZero()) return u;
    const Vec4 w = x - v.v();
    const double s = w.squaredNorm();
    const double a = 1.0 - v.v().squaredNorm();
    return (a / s) * (u - (2.0 * w.dot(u) / s) * w);
}

Vec4 conformal_second_derivative(const ConformalParam& v, const Vec4& x, const Vec4& u1,
                                 const Vec4& u2) {
    // Second derivative of w -> w/|w|^2 scaled by (1-|v|^2):
    //   -2(<w,u2> u1 + <w,u1> u2 + <u1,u2> w)/s^2 + 8 <w,u1><w,u2> w / s^3
    if (v.v().isZero()) return Vec4::Zero();
    const Vec4 w = x - v.v();
    const double s = w.squaredNorm();
    const double a = 1.0 - v.v().squaredNorm();
    const double wu1 = w.dot(u1), wu2 = w.dot(u2), u12 = u1.dot(u2);
    return a * (-2.0 / (s * s) * (wu2 * u1 + wu1 * u2 + u12 * w) +
                8.0 * wu1 * wu2 / (s * s * s) * w);
}

double conformal_factor(const ConformalParam& v, const Vec4& x) {
    const double s = (x - v.v()).squaredNorm();
    return (1.0 - v.v().squaredNorm()) / s;
}

PointS3 conformal_inverse(const ConformalParam& v, const PointS3& y, double tol, int max_iter) {
    // Seed with F_{-v}(y), then Newton on F_v(x) - y = 0 in ambient R^4,
    // reprojecting to S^3 after each step.
    ConformalParam minus_v(-v.v());
    Vec4 x = apply_conformal(minus_v, y.coords()).normalized();
    for (int it = 0; it < max_iter; ++it) {
        const Vec4 r = apply_conformal(v, x) - y.coords();
        if (r.norm() < tol) return PointS3(x);
        Mat4 J;
        for (int j = 0; j < 4; ++j) J.col(j) = conformal_differential(v, x, Vec4::Unit(j));
        const Vec4 dx = J.partialPivLu().solve(r);
        x = (x - dx).normalized();
    }
    const Vec4 r = apply_conformal(v, x) - y.coords();
    if (r.norm() < tol) return PointS3(x);
    throw NoConvergence("conformal_inverse: Newton did not converge");
}

Vec3 stereographic_to_r3(const PointS3& x) {
    const double denom = 1.0 - x[3];
    if (std::abs(denom) < 1e-12)
        throw InvalidInput("stereographic_to_r3: singular projection at the pole (0,0,0,1)");
    return Vec3(x[0], x[1], x[2]) / denom;
}

PointS3 stereographic_to_s3(const Vec3& p) {
    const double q = p.squaredNorm();
    Vec4 x;
    x << 2.0 * p, q - 1.0;
    return PointS3(x / (1.0 + q));
}

Vec3 hopf(const Vec4& x) {
    const std::complex<double> z1(x[0], x[1]), z2(x[2], x[3]);
    const std::complex<double> c = z1 * std::conj(z2);
    return Vec3(std::norm(z1) - std::norm(z2), 2.0 * c.real(), 2.0 * c.imag());
}

Vec3 hopf(const PointS3& x) { return hopf(x.coords()); }

Vec3 hopf_differential(const Vec4& x, const Vec4& u) {
    const std::complex<double> z1(x[0], x[1]), z2(x[2], x[3]);
    const std::complex<double> w1(u[0], u[1]), w2(u[2], u[3]);
    const std::complex<double> c = w1 * std::conj(z2) + z1 * std::conj(w2);
    const double d1 = 2.0 * (x[0] * u[0] + x[1] * u[1]) - 2.0 * (x[2] * u[2] + x[3] * u[3]);
    return Vec3(d1, 2.0 * c.real(), 2.0 * c.imag());
}

Vec4 hopf_fiber_rotate(const Vec4& x, double t) {
    const double c = std::cos(t), s = std::sin(t);
    return Vec4(c * x[0] - s * x[1], s * x[0] + c * x[1], c * x[2] - s * x[3],
                s * x[2] + c * x[3]);
}

SphereFit fit_round_sphere(const std::vector<Vec4>& points) {
    if (points.size() < 10) throw InvalidInput("fit_round_sphere: need at least 10 points");
    Vec4 mean = Vec4::Zero();
    for (const auto& p : points) mean += p;
    mean /= static_cast<double>(points.size());

    double spread = 0.0;
    Mat4 cov = Mat4::Zero();
    for (const auto& p : points) {
        const Vec4 d = p - mean;
        spread = std::max(spread, d.norm());
        cov += d * d.transpose();
    }
    if (spread < 1e-9) throw InvalidInput("fit_round_sphere: points collapse to a single point");

    Eigen::SelfAdjointEigenSolver<Mat4> es(cov);
    const Vec4 evals = es.eigenvalues();  // ascending
    // Points on a circle span only a 2-plane: two vanishing directions, so
    // the normal q is not unique.
    if (evals[1] <= 1e-10 * std::max(evals[3], 1e-30))
        throw InvalidInput("fit_round_sphere: degenerate point cloud, no unique sphere");

    Vec4 q = es.eigenvectors().col(0);
    double c = q.dot(mean);
    if (c < 0.0) {  // canonical representative: geodesic radius <= pi/2
        q = -q;
        c = -c;
    }
    c = std::clamp(c, -1.0, 1.0);
    const double radius = std::acos(c);
    if (!(radius > 0.0 && radius < kPi))
        throw InvalidInput("fit_round_sphere: fitted radius degenerate");

    RoundSphere sphere(PointS3(q), radius);
    double ss = 0.0;
    for (const auto& p : points) {
        const double d = sphere.distance(p);
        ss += d * d;
    }
    return SphereFit{sphere, std::sqrt(ss / static_cast<double>(points.size()))};
}

}  // namespace willmore
