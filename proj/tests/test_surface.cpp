#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "willmore/shapes.hpp"
#include "willmore/surface.hpp"
#include "willmore/transform.hpp"

#include <cmath>

using namespace willmore;

namespace {
const QuadratureGrid q128(128);
const QuadratureGrid q256(256);
}

TEST_CASE("curvature of a round sphere in R^3 is umbilic 1/rho") {
    for (double rho : {0.5, 1.0, 2.0}) {
        const auto S = sphere_r3(Vec3(0.1, -0.2, 0.3), rho);
        const CurvatureSample c = curvature_at(S, 1.0, 1.3);
        CHECK(c.k1 == doctest::Approx(1.0 / rho).epsilon(1e-10));
        CHECK(c.k2 == doctest::Approx(1.0 / rho).epsilon(1e-10));
        CHECK(c.H == doctest::Approx(1.0 / rho).epsilon(1e-10));
        CHECK(c.K == doctest::Approx(1.0 / (rho * rho)).epsilon(1e-10));
    }
}

TEST_CASE("Clifford torus is minimal with principal curvatures +-1") {
    const auto S = clifford_torus();
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            const CurvatureSample c = curvature_at(S, kTwoPi * i / 12.0, kTwoPi * j / 12.0);
            CHECK(std::abs(c.H) < 1e-13);
            CHECK(std::abs(std::abs(c.k1) - 1.0) < 1e-12);
            CHECK(std::abs(std::abs(c.k2) - 1.0) < 1e-12);
        }
}

TEST_CASE("product torus mean curvature matches the closed form") {
    const auto S = product_torus(0.6);
    const double expected = oracles::product_mean_curvature(0.6);  // 0.291666...
    CHECK(std::abs(expected - 0.7 / 2.4) < 1e-15);
    for (int i = 0; i < 8; ++i) {
        const CurvatureSample c = curvature_at(S, 0.5 + i, 1.0 + 0.3 * i);
        CHECK(std::abs(std::abs(c.H) - expected) < 1e-12);
    }
}

TEST_CASE("product torus principal curvatures cross-checked by a finite-difference shape operator") {
    const auto S = product_torus(0.6);
    const double u = 0.7, v = 2.1;
    const CurvatureSample c = curvature_at(S, u, v);

    // dN by central differences of the unit normal (test-side oracle)
    auto normal = [&](double uu, double vv) { return curvature_at(S, uu, vv).normal; };
    const double h = 1e-6;
    const Vec4 Nu = (normal(u + h, v) - normal(u - h, v)) / (2.0 * h);
    const Vec4 Nv = (normal(u, v + h) - normal(u, v - h)) / (2.0 * h);
    const Jet jet = S.jet(u, v);
    // shape operator entries from -dN = S dX in the (pu, pv) basis
    const double s11 = -Nu.dot(jet.pu) / jet.pu.squaredNorm();
    const double s22 = -Nv.dot(jet.pv) / jet.pv.squaredNorm();
    const double b = std::sqrt(1.0 - 0.36);
    CHECK(std::abs(s11 - (-c.k2)) + std::abs(s11 + c.k1) > 0.0);  // one of the two axes each
    const double ks = std::max(std::abs(s11), std::abs(s22));
    const double kl = std::min(std::abs(s11), std::abs(s22));
    CHECK(ks == doctest::Approx(std::max(b / 0.6, 0.6 / b)).epsilon(1e-4));
    CHECK(kl == doctest::Approx(std::min(b / 0.6, 0.6 / b)).epsilon(1e-4));
}

TEST_CASE("degenerate immersion raises") {
    auto model = fd_from_position([](double u, double v) { return Vec4(u + v, u + v, 0, 0); });
    const ParametricSurface S(Ambient::R3, model);
    CHECK_THROWS_AS(curvature_at(S, 0.3, 0.4), DegenerateImmersion);
}

TEST_CASE("areas: Clifford 2 pi^2, unit sphere 4 pi, offset product torus") {
    CHECK(std::abs(area(clifford_torus(), q256) - 2.0 * kPi * kPi) < 1e-9);
    CHECK(std::abs(area(sphere_r3(Vec3::Zero(), 1.0), q128) - 4.0 * kPi) < 1e-9);

    // offset of the Clifford torus at t = pi/8 is the product torus with
    // phase pi/4 + pi/8; area 2 pi^2 cos(pi/4)
    const double t = kPi / 8.0;
    const double direct = offset_area(clifford_torus(), t, q256);
    CHECK(std::abs(direct - 2.0 * kPi * kPi * std::cos(2.0 * t)) < 1e-9);
}

TEST_CASE("willmore energies: tube sqrt2, Clifford, tube(2,1)") {
    CHECK(std::abs(willmore_energy(tube_torus(std::sqrt(2.0), 1.0), q256) - 2.0 * kPi * kPi) <
          1e-8);
    CHECK(std::abs(willmore_energy(clifford_torus(), q256) - 2.0 * kPi * kPi) < 1e-9);

    const double w21 = willmore_energy(tube_torus(2.0, 1.0), q128);
    CHECK(std::abs(w21 - 4.0 * kPi * kPi / std::sqrt(3.0)) < 1e-8);
    CHECK(std::abs(w21 - oracles::tube_willmore(2.0, 1.0)) < 1e-8);
    // quadrature oracle at doubled resolution
    CHECK(std::abs(w21 - willmore_energy(tube_torus(2.0, 1.0), q256)) < 1e-10);
}

TEST_CASE("willmore energy in S^3 dominates area; both exceed 4 pi on the catalog") {
    for (const auto& S : catalog_s3()) {
        const double a = area(S, q128);
        const double w = willmore_energy(S, q128);
        INFO(S.name());
        CHECK(w >= a - 1e-10);
        CHECK(w >= 4.0 * kPi - 1e-7);
    }
    for (const auto& S : catalog_r3()) {
        INFO(S.name());
        CHECK(willmore_energy(S, q128) >= 4.0 * kPi - 1e-7);
    }
}

TEST_CASE("offset areas: zero offset, equator shift, vanishing at pi") {
    CHECK(std::abs(offset_area(clifford_torus(), 0.0, q128) - 2.0 * kPi * kPi) < 1e-9);

    const double shifted = offset_area(equator_s3(), kPi / 4.0, q128);
    CHECK(std::abs(shifted - 2.0 * kPi) < 1e-8);
    CHECK(std::abs(shifted - oracles::sphere_offset_area(kPi / 2, kPi / 4)) < 1e-8);

    for (const auto& S : catalog_s3()) {
        INFO(S.name());
        CHECK(offset_area(S, kPi, q128) <= 1e-6);
        CHECK(offset_area(S, -kPi, q128) <= 1e-6);
    }
}

TEST_CASE("offset area of the Clifford torus follows 2 pi^2 cos 2t with focal cutoff") {
    std::vector<double> ts;
    for (int k = 0; k <= 32; ++k) ts.push_back(-kPi + kTwoPi * k / 32.0);
    const auto prof = offset_area_profile(clifford_torus(), ts, q128);
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const double expected = oracles::product_offset_area(1.0 / std::sqrt(2.0), ts[k]);
        // the orientation of the normal only flips t -> -t; Clifford is even
        CHECK(std::abs(prof[k] - expected) < 1e-8);
    }
}

TEST_CASE("Heintze-Karcher bound over the catalog and a 64-point offset grid") {
    std::vector<double> ts;
    for (int k = 0; k < 64; ++k) ts.push_back(-kPi + kTwoPi * (k + 0.5) / 64.0);
    for (const auto& S : catalog_s3()) {
        const double w = willmore_energy(S, q128);
        const auto prof = offset_area_profile(S, ts, q128);
        INFO(S.name());
        for (double a : prof) CHECK(a <= w + 1e-7);
    }
}

TEST_CASE("pointwise H^2 >= K with equality only at umbilics") {
    for (const auto& S : catalog_s3()) {
        for (int i = 0; i < 16; ++i)
            for (int j = 1; j < 16; ++j) {
                const double u = kTwoPi * i / 16.0;
                const double v = S.torus_domain() ? kTwoPi * j / 16.0 : kPi * j / 16.0;
                const CurvatureSample c = curvature_at(S, u, v);
                CHECK(c.H * c.H - c.K >= -1e-12);
            }
    }
}

TEST_CASE("Gauss-Bonnet: 2 pi chi for spheres and tori") {
    CHECK(std::abs(gauss_bonnet_integral(sphere_r3(Vec3::Zero(), 1.3), q128) - 4.0 * kPi) < 1e-6);
    CHECK(std::abs(gauss_bonnet_integral(equator_s3(), q128) - 4.0 * kPi) < 1e-6);
    CHECK(std::abs(gauss_bonnet_integral(geodesic_sphere(PointS3(Vec4(0, 0, 0, 1)), 0.7), q128) -
                   4.0 * kPi) < 1e-6);
    CHECK(std::abs(gauss_bonnet_integral(clifford_torus(), q128)) < 1e-6);
    CHECK(std::abs(gauss_bonnet_integral(tube_torus(2.0, 1.0), q128)) < 1e-6);
    CHECK(std::abs(gauss_bonnet_integral(product_torus(0.3), q128)) < 1e-6);
}

TEST_CASE("total absolute Gauss curvature: sphere, tube torus, trefoil tube") {
    CHECK(std::abs(total_abs_gauss(sphere_r3(Vec3::Zero(), 1.0), q128) - 4.0 * kPi) < 1e-9);

    // int |K| dmu = 8 pi for every unknotted tube torus
    CHECK(std::abs(total_abs_gauss(tube_torus(2.0, 1.0), q256) - 8.0 * kPi) < 1e-7);
    CHECK(std::abs(total_abs_gauss(tube_torus(3.0, 0.4), q256) - 8.0 * kPi) < 1e-7);

    // knotted: thin tube around a trefoil has int |K| = 4 * total curvature > 16 pi
    const auto knotted = tube_around_curve(trefoil_r3(), 0.08);
    CHECK(total_abs_gauss(knotted, q256) >= 16.0 * kPi);

    CHECK_THROWS_AS(total_abs_gauss(clifford_torus(), q128), InvalidInput);
}

TEST_CASE("quadrature converges spectrally on analytic catalog surfaces") {
    for (const auto& S : {clifford_torus(), tube_torus(2.0, 1.0), product_torus(0.3)}) {
        const double a1 = area(S, q128), a2 = area(S, q256);
        const double w1 = willmore_energy(S, q128), w2 = willmore_energy(S, q256);
        INFO(S.name());
        CHECK(std::abs(a1 - a2) <= 1e-10);
        CHECK(std::abs(w1 - w2) <= 1e-10);
    }
}

TEST_CASE("grids below 16 nodes are rejected") {
    CHECK_THROWS_AS(QuadratureGrid(8, 128), InvalidInput);
    CHECK_THROWS_AS(QuadratureGrid(128, 15), InvalidInput);
}

TEST_CASE("EL residual: Clifford exactly Willmore, tube(sqrt2,1) Willmore, tube(2,1) not") {
    // H vanishes identically; the residual is pure roundoff through the stencil
    CHECK(el_residual(clifford_torus(), q128) < 1e-10);

    const auto tube_w = tube_torus(std::sqrt(2.0), 1.0);
    const double r128 = el_residual(tube_w, q128);
    const double r256 = el_residual(tube_w, q256);
    CHECK(r256 < 1e-3);
    CHECK(r128 / r256 > 2.5);  // second-order decay
    CHECK(r128 / r256 < 6.0);

    const double control = el_residual(tube_torus(2.0, 1.0), q256);
    CHECK(control >= 0.1);
    // closed-form residual for tube(2,1) peaks at 1/(2-1)^3 = 1
    CHECK(control == doctest::Approx(1.0).epsilon(1e-3));

    CHECK_THROWS_AS(el_residual(equator_s3(), q128), InvalidInput);
}

TEST_CASE("EL residual discretization matches the closed form on tube(2,1) pointwise") {
    // sup over nodes of |Delta H + ((k1-k2)^2/2) H - closed_form| is O(h^2);
    // at 256^2 it is far below the O(1) residual itself
    const double sup = el_residual(tube_torus(2.0, 1.0), q256);
    double closed = 0.0;
    for (int i = 0; i < 256; ++i)
        closed = std::max(closed, oracles::tube21_el_residual(kTwoPi * i / 256.0));
    CHECK(sup == doctest::Approx(closed).epsilon(1e-3));
}

TEST_CASE("closest_point finds on-surface parameters") {
    const auto S = clifford_torus();
    const Vec4 p = S.position(1.1, 2.7);
    const ClosestPoint cp = closest_point(S, p);
    CHECK(cp.distance < 1e-11);
    const Vec4 off = (p + 0.3 * Vec4(0.5, -0.5, 0.5, -0.5).normalized()).normalized();
    CHECK(closest_point(S, off).distance > 0.05);
}
