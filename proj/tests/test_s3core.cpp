#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "willmore/s3.hpp"
#include "willmore/shapes.hpp"
#include "willmore/surface.hpp"

#include <cmath>

using namespace willmore;

TEST_CASE("F_0 is the identity") {
    Rng rng(11);
    for (int k = 0; k < 20; ++k) {
        const Vec4 x = rng.unit4();
        CHECK((apply_conformal(ConformalParam(), x) - x).norm() < 1e-14);
    }
}

TEST_CASE("fixed points of F_v on the axis through v") {
    for (double s : {0.1, 0.5, 0.9, 0.999}) {
        const ConformalParam v(Vec4(s, 0, 0, 0));
        const Vec4 x(1, 0, 0, 0);
        CHECK((apply_conformal(v, x) - x).norm() < 1e-12);
        const Vec4 y(-1, 0, 0, 0);
        CHECK((apply_conformal(v, y) - y).norm() < 1e-12);
    }
}

TEST_CASE("F_v against a high-precision evaluation of the closed form") {
    const ConformalParam v(Vec4(0.5, 0, 0, 0));
    const Vec4 x(0, 1, 0, 0);
    const Vec4 got = apply_conformal(v, x);
    CHECK(std::abs(got.norm() - 1.0) < 1e-14);
    const Vec4 expected = oracles::conformal_long_double(v.v(), x);
    CHECK((got - expected).norm() < 1e-14);

    Rng rng(202);
    for (int k = 0; k < 50; ++k) {
        const Vec4 vv = rng.ball4(0.95);
        const Vec4 xx = rng.unit4();
        const Vec4 a = apply_conformal(ConformalParam(vv), xx);
        CHECK(std::abs(a.norm() - 1.0) < 1e-12);
        CHECK((a - oracles::conformal_long_double(vv, xx)).norm() < 1e-12);
    }
}

TEST_CASE("parameters outside the ball are rejected, near-boundary clamped") {
    CHECK_THROWS_AS(ConformalParam(Vec4(1.0, 0, 0, 0)), InvalidInput);
    CHECK_THROWS_AS(ConformalParam(Vec4(0.8, 0.8, 0, 0)), InvalidInput);
    const ConformalParam v(Vec4(1.0 - 1e-9, 0, 0, 0));
    CHECK(v.norm() == doctest::Approx(1.0 - 1e-6).epsilon(1e-9));
}

TEST_CASE("conformality certificate: dF scales all tangent products by one factor") {
    Rng rng(77);
    for (int k = 0; k < 40; ++k) {
        const Vec4 vv = rng.ball4(0.9);
        const ConformalParam v(vv);
        const Vec4 x = rng.unit4();
        // random tangent vectors at x
        Vec4 u1 = rng.normal4();
        u1 -= u1.dot(x) * x;
        Vec4 u2 = rng.normal4();
        u2 -= u2.dot(x) * x;
        const Vec4 du1 = conformal_differential(v, x, u1);
        const Vec4 du2 = conformal_differential(v, x, u2);
        const double lam2 = conformal_factor(v, x) * conformal_factor(v, x);
        CHECK(du1.dot(du1) == doctest::Approx(lam2 * u1.dot(u1)).epsilon(1e-6));
        CHECK(du2.dot(du2) == doctest::Approx(lam2 * u2.dot(u2)).epsilon(1e-6));
        CHECK(du1.dot(du2) == doctest::Approx(lam2 * u1.dot(u2)).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("differential and second derivative match finite differences") {
    Rng rng(5);
    const ConformalParam v(rng.ball4(0.7));
    const Vec4 x = rng.unit4();
    const Vec4 u = rng.normal4();
    const Vec4 w = rng.normal4();
    const double h = 1e-6;
    const Vec4 fd1 =
        (apply_conformal(v, x + h * u) - apply_conformal(v, x - h * u)) / (2.0 * h);
    CHECK((conformal_differential(v, x, u) - fd1).norm() < 1e-7);
    const Vec4 fd2 = (conformal_differential(v, x + h * w, u) -
                      conformal_differential(v, x - h * w, u)) /
                     (2.0 * h);
    CHECK((conformal_second_derivative(v, x, u, w) - fd2).norm() < 1e-6);
}

TEST_CASE("bijectivity via Newton inverse round trip") {
    Rng rng(31);
    for (int k = 0; k < 25; ++k) {
        const ConformalParam v(rng.ball4(0.9));
        const Vec4 x = rng.unit4();
        const PointS3 y(apply_conformal(v, x));
        const PointS3 back = conformal_inverse(v, y, 1e-12);
        CHECK((apply_conformal(v, back.coords()) - y.coords()).norm() < 1e-10);
        CHECK((back.coords() - x).norm() < 1e-9);
    }
}

TEST_CASE("stereographic projection basics") {
    CHECK((stereographic_to_r3(PointS3(Vec4(0, 0, 0, -1))) - Vec3::Zero()).norm() < 1e-15);
    CHECK_THROWS_AS(stereographic_to_r3(PointS3(Vec4(0, 0, 0, 1))), InvalidInput);

    Rng rng(404);
    for (int k = 0; k < 100; ++k) {
        Vec4 x = rng.unit4();
        if (std::abs(1.0 - x[3]) < 1e-3) continue;
        const PointS3 p(x);
        const PointS3 round_trip = stereographic_to_s3(stereographic_to_r3(p));
        CHECK((round_trip.coords() - p.coords()).norm() < 1e-12);
    }
    for (int k = 0; k < 50; ++k) {
        const Vec3 p(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
        CHECK((stereographic_to_r3(stereographic_to_s3(p)) - p).norm() < 1e-11);
    }
}

TEST_CASE("stereographic projection maps the Clifford torus onto the (sqrt2, 1) tube") {
    const auto clifford = clifford_torus();
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) {
            const Vec4 x = clifford.position(kTwoPi * i / 24.0, kTwoPi * j / 24.0);
            const Vec3 p = stereographic_to_r3(PointS3(x));
            CHECK(oracles::tube_distance(p, std::sqrt(2.0), 1.0) < 1e-10);
        }
}

TEST_CASE("hopf map: fiber invariance and unit image") {
    Rng rng(9);
    for (int k = 0; k < 50; ++k) {
        const Vec4 x = rng.unit4();
        const double theta = rng.uniform(0.0, kTwoPi);
        CHECK(std::abs(hopf(x).norm() - 1.0) < 1e-13);
        CHECK((hopf(hopf_fiber_rotate(x, theta)) - hopf(x)).norm() < 1e-12);
    }
}

TEST_CASE("hopf maps the Clifford torus onto the equator of S^2") {
    const auto clifford = clifford_torus();
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            const Vec3 h = hopf(clifford.position(kTwoPi * i / 16.0, kTwoPi * j / 16.0));
            CHECK(std::abs(h[0]) < 1e-12);  // equator {h1 = 0} in this convention
        }
}

TEST_CASE("hopf reference values under the documented convention") {
    // frozen regression values for the fixed convention
    CHECK((hopf(Vec4(1, 0, 0, 0)) - Vec3(1, 0, 0)).norm() < 1e-15);
    CHECK((hopf(Vec4(0, 1, 0, 0)) - Vec3(1, 0, 0)).norm() < 1e-15);  // equal, not antipodal
    CHECK((hopf(Vec4(0, 0, 1, 0)) - Vec3(-1, 0, 0)).norm() < 1e-15);
    CHECK((hopf(Vec4(1, 0, 1, 0)).normalized() - Vec3(0, 1, 0)).norm() < 1e-15);
}

TEST_CASE("fit_round_sphere: exact fits") {
    // great sphere {x4 = 0}
    std::vector<Vec4> pts;
    Rng rng(53);
    for (int k = 0; k < 60; ++k) {
        Vec4 x = rng.unit4();
        x[3] = 0.0;
        pts.push_back(x.normalized());
    }
    const SphereFit great = fit_round_sphere(pts);
    CHECK(great.sphere.geodesic_radius == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(great.residual < 1e-12);

    // sphere <x, q> = cos 0.3
    const Vec4 q = Vec4(0.3, -0.5, 0.8, 0.1).normalized();
    pts.clear();
    for (int k = 0; k < 60; ++k) {
        Vec4 t = rng.normal4();
        t -= t.dot(q) * q;
        t.normalize();
        pts.push_back(std::cos(0.3) * q + std::sin(0.3) * t);
    }
    const SphereFit small = fit_round_sphere(pts);
    CHECK(std::abs(small.sphere.geodesic_radius - 0.3) < 1e-10);
    CHECK(std::abs(std::abs(small.sphere.center.coords().dot(q)) - 1.0) < 1e-10);
    CHECK(small.residual < 1e-10);
}

TEST_CASE("fit_round_sphere: noisy samples recover the generating sphere") {
    Rng rng(99);
    const Vec4 q = Vec4(0.1, 0.2, -0.3, 0.9).normalized();
    const double r = 0.8;
    std::vector<Vec4> pts;
    for (int k = 0; k < 400; ++k) {
        Vec4 t = rng.normal4();
        t -= t.dot(q) * q;
        t.normalize();
        Vec4 x = std::cos(r) * q + std::sin(r) * t;
        x += 1e-4 * rng.normal4();
        pts.push_back(x.normalized());
    }
    const SphereFit fit = fit_round_sphere(pts);
    CHECK(fit.residual < 3e-4);
    CHECK(fit.residual > 1e-5);
    CHECK((fit.sphere.center.coords() - q).norm() < 1e-3);
    CHECK(std::abs(fit.sphere.geodesic_radius - r) < 1e-3);
}

TEST_CASE("fit_round_sphere: degenerate clouds rejected") {
    std::vector<Vec4> few(5, Vec4(1, 0, 0, 0));
    CHECK_THROWS_AS(fit_round_sphere(few), InvalidInput);

    std::vector<Vec4> point(20, Vec4(1, 0, 0, 0));
    CHECK_THROWS_AS(fit_round_sphere(point), InvalidInput);

    // points on a great circle lie on infinitely many spheres
    std::vector<Vec4> circle;
    for (int k = 0; k < 30; ++k) {
        const double t = kTwoPi * k / 30.0;
        circle.push_back(Vec4(std::cos(t), std::sin(t), 0, 0));
    }
    CHECK_THROWS_AS(fit_round_sphere(circle), InvalidInput);
}

TEST_CASE("round sphere area formula, cross-checked by quadrature") {
    for (double r : {0.3, kPi / 2, 2.1}) {
        const RoundSphere s(PointS3(Vec4(0, 0, 0, 1)), r);
        CHECK(s.area() == doctest::Approx(4.0 * kPi * std::sin(r) * std::sin(r)).epsilon(1e-14));
        const double quad = area(geodesic_sphere(s.center, r), QuadratureGrid(64));
        CHECK(std::abs(quad - s.area()) <= 1e-8);
    }
    CHECK_THROWS_AS(RoundSphere(PointS3(Vec4(1, 0, 0, 0)), 0.0), InvalidInput);
}
