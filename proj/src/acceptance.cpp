#include "willmore/acceptance.hpp"

#include "willmore/canonical_family.hpp"
#include "willmore/conformal_lab.hpp"
#include "willmore/curves.hpp"
#include "willmore/numerics.hpp"
#include "willmore/shapes.hpp"
#include "willmore/spectral.hpp"
#include "willmore/transform.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

namespace willmore {

namespace {

constexpr double kTwoPiSq = 2.0 * kPi * kPi;

std::string num(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

ClosedCurve random_curve_r3(Rng& rng) {
    for (;;) {
        std::array<FourierSeries, 3> coords;
        for (int c = 0; c < 3; ++c) {
            std::vector<double> a(5, 0.0), b(5, 0.0);
            for (int k = 1; k <= 4; ++k) {
                const double decay = 1.0 / (k * k * k);
                a[k] = rng.uniform(-1.0, 1.0) * decay;
                b[k] = rng.uniform(-1.0, 1.0) * decay;
            }
            if (c < 2) (c == 0 ? a : b)[1] += 1.0;
            coords[c] = FourierSeries(a, b);
        }
        try {
            ClosedCurve curve(CurveAmbient::R3, std::move(coords));
            if (curve.min_speed() > 0.2) return curve;
        } catch (const InvalidInput&) {
        }
    }
}

ClosedCurve random_profile_h2(Rng& rng) {
    for (;;) {
        const double h = rng.uniform(1.5, 3.0);
        const double r0 = rng.uniform(0.4, 0.45 * h);
        const double amp = rng.uniform(0.0, 0.08);
        const int mode = 2 + static_cast<int>(rng.next_u64() % 3);
        try {
            return wobble_profile_h2(h, r0, amp, mode);
        } catch (const InvalidInput&) {
        }
    }
}

struct Check {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& msg) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += msg;
        }
    }
    void note(const std::string& msg) {
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

CriterionResult clifford_energy() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const double w = willmore_energy(product_torus(1.0 / std::sqrt(2.0)), QuadratureGrid(256));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(std::abs(w - kTwoPiSq) <= 1e-9, "|W - 2pi^2| = " + num(std::abs(w - kTwoPiSq)));
    c.require(seconds < 1.0, "runtime " + num(seconds) + " s");
    c.note("W = " + num(w) + ", " + num(seconds * 1e3) + " ms");
    return {1, "Clifford energy 2pi^2 at 256^2 within 1e-9, under 1 s", c.pass, c.detail};
}

CriterionResult tube_minimization() {
    Check c;
    const double R = std::sqrt(2.0);
    std::vector<double> radii;
    for (int k = 0; k <= 6000; ++k) radii.push_back(0.7 + 1e-4 * k);
    const auto prof = tube_energy_profile(R, radii, QuadratureGrid(64, 16));
    double best_r = 0.0, best_w = 1e300;
    for (const auto& [r, w] : prof)
        if (w < best_w) {
            best_w = w;
            best_r = r;
        }
    c.require(std::abs(best_r - 1.0) <= 1e-4 + 1e-12, "argmin r = " + num(best_r));
    c.require(std::abs(best_w - kTwoPiSq) <= 1e-7,
              "|min W - 2pi^2| = " + num(std::abs(best_w - kTwoPiSq)));
    c.note("argmin r = " + num(best_r) + ", min W = " + num(best_w));
    return {2, "tube profile over r-grid of step 1e-4: min at r = 1, W = 2pi^2", c.pass,
            c.detail};
}

CriterionResult stereographic_consistency() {
    Check c;
    const QuadratureGrid q(256);
    const double w_r3 = willmore_energy(tube_torus(std::sqrt(2.0), 1.0), q);
    const double w_s3 = willmore_energy(product_torus(1.0 / std::sqrt(2.0)), q);
    c.require(std::abs(w_r3 - w_s3) <= 1e-8, "|W_r3 - W_s3| = " + num(std::abs(w_r3 - w_s3)));
    c.note("W(tube) = " + num(w_r3) + ", W(Clifford) = " + num(w_s3));
    return {3, "W(tube(sqrt2,1)) equals W(Clifford) within 1e-8", c.pass, c.detail};
}

CriterionResult conformal_invariance() {
    Check c;
    const QuadratureGrid q(256);
    Rng rng(20240);
    const std::vector<ParametricSurface> shapes = {
        clifford_torus(), product_torus(0.6), stereographic_lift(tube_torus(2.0, 1.0))};
    double worst = 0.0;
    for (const auto& S : shapes)
        for (int k = 0; k < 20; ++k) {
            const ConformalParam v(rng.ball4(0.8));
            worst = std::max(worst, check_invariance(S, v, q));
        }
    c.require(worst <= 1e-6, "max deviation " + num(worst));
    c.note("max relative deviation " + num(worst));
    return {4, "conformal invariance over 20 seeded v for three shapes", c.pass, c.detail};
}

CriterionResult heintze_karcher() {
    Check c;
    const QuadratureGrid q(128);
    std::vector<double> ts(64);
    for (int k = 0; k < 64; ++k) ts[k] = -kPi + kTwoPi * (k + 0.5) / 64.0;
    double worst_gap = -1e300;
    for (const auto& S : catalog_s3()) {
        const double w = willmore_energy(S, q);
        for (double a : offset_area_profile(S, ts, q)) {
            worst_gap = std::max(worst_gap, a - w);
            if (a > w + 1e-7) {
                c.require(false, S.name() + ": offset " + num(a) + " > W " + num(w));
                break;
            }
        }
    }
    c.note("max(offset - W) = " + num(worst_gap));
    return {5, "offset areas below the Willmore energy across the catalog x 64 offsets",
            c.pass, c.detail};
}

CriterionResult property_a_landscape() {
    Check c;
    const QuadratureGrid q(64);
    const LandscapeResult land = sup_area_landscape(clifford_torus(), 9, 33, q);
    c.require(std::abs(land.sup - kTwoPiSq) <= 1e-9,
              "Clifford grid sup " + num(land.sup));
    c.require(land.argmax.v.norm() <= 1e-12 && std::abs(land.argmax.t) <= 1e-12,
              "argmax off the origin");
    c.require(land.certificate, "certificate failed");

    // v = 0 slice of product(0.6): max over t reaches 2pi^2
    const auto S = product_torus(0.6);
    const QuadratureGrid q128(128);
    auto f = [&](double t) { return family_area(S, FamilyPoint(ConformalParam(), t), q128); };
    double tbest = 0.0, fbest = -1.0;
    for (int k = 0; k <= 64; ++k) {
        const double t = -kPi + kTwoPi * k / 64.0;
        const double a = f(t);
        if (a > fbest) {
            fbest = a;
            tbest = t;
        }
    }
    const auto [tmax, fmax] = golden_section_max(f, tbest - 0.2, tbest + 0.2, 1e-9);
    c.require(std::abs(fmax - kTwoPiSq) <= 1e-7,
              "product(0.6) slice max " + num(fmax) + " at t = " + num(tmax));
    c.note("Clifford sup = " + num(land.sup) + ", slice max = " + num(fmax));
    return {6, "property (A): Clifford landscape sup at the origin; product slice max 2pi^2",
            c.pass, c.detail};
}

CriterionResult sweepout() {
    Check c;
    double best_t = -1.0, best_a = -1.0;
    for (int k = 0; k <= 100; ++k) {
        const double t = k / 100.0;
        const double a = sweepout_phi1(t);
        if (a > best_a) {
            best_a = a;
            best_t = t;
        }
    }
    c.require(best_t == 0.5, "max at t = " + num(best_t));
    c.require(std::abs(best_a - 4.0 * kPi) <= 1e-12, "max area " + num(best_a));
    const QuadratureGrid q(128);
    for (double t : {0.1, 0.25, 0.5, 0.77})
        c.require(std::abs(sweepout_phi1(t) - sweepout_phi1_quadrature(t, q)) <= 1e-12,
                  "quadrature mismatch at t = " + num(t));
    c.note("max area " + num(best_a) + " at t = " + num(best_t));
    return {7, "sweepout slices: maximum 4pi at t = 1/2, closed form vs quadrature", c.pass,
            c.detail};
}

CriterionResult urbano_indices() {
    Check c;
    const auto clifford = clifford_torus();
    const int i64 = morse_index(clifford, 64);
    const int i128 = morse_index(clifford, 128);
    c.require(i64 == 5 && i128 == 5,
              "Clifford index " + num(i64) + " / " + num(i128));
    const auto equator = equator_s3();
    c.require(morse_index(equator, 64) == 1 && morse_index(equator, 128) == 1,
              "equator index not 1");

    const JacobiSpectrum s = jacobi_spectrum(clifford, 128);
    const double expected[5] = {-4.0, -2.0, -2.0, -2.0, -2.0};
    for (int k = 0; k < 5; ++k)
        c.require(std::abs(s.eigenvalues[k] - expected[k]) <= 1e-2,
                  "eigenvalue " + num(s.eigenvalues[k]) + " vs " + num(expected[k]));

    double res_sup = 0.0;
    for (int axis = 0; axis < 4; ++axis) {
        const std::vector<double> f = normal_component_grid(clifford, 128, axis);
        const std::vector<double> Lf = apply_jacobi_operator(clifford, 128, f);
        for (std::size_t k = 0; k < f.size(); ++k)
            res_sup = std::max(res_sup, std::abs(Lf[k] + 2.0 * f[k]));
    }
    c.require(res_sup <= 1e-6, "eigenfunction residual " + num(res_sup));
    c.note("indices 5/5 and 1/1, lowest eigenvalues ok, residual " + num(res_sup));
    return {8, "Urbano: Clifford index 5, equator index 1, -2 eigenfunctions", c.pass, c.detail};
}

CriterionResult li_yau() {
    Check c;
    const QuadratureGrid q(128);
    const std::vector<ParametricSurface> tori = {
        clifford_torus(), product_torus(0.6), product_torus(0.3),
        hopf_torus(wavy_latitude_s2(0.3, 0.08, 3)).with_name("hopf(wavy)")};
    for (const auto& S : tori) {
        const LiYauResult r = li_yau_chain(S, q);
        c.require(r.holds, S.name() + ": chain fails (" + num(r.lambda1_area) + " vs " +
                               num(r.two_willmore) + ")");
        if (S.name() == "clifford")
            c.require(std::abs(r.lambda1_area - r.two_willmore) <= 1e-8,
                      "Clifford equality gap " + num(std::abs(r.lambda1_area - r.two_willmore)));
    }
    const double square = lattice_lambda1(Lattice(0.0, 1.0)).lambda1_area;
    c.require(square == 4.0 * kPi * kPi, "square lattice value " + num(square));
    c.note("all chains hold; square lattice exactly 4pi^2");
    return {9, "balanced flat tori satisfy lambda1 area <= 2W; Clifford equality", c.pass,
            c.detail};
}

CriterionResult kpoint_limits() {
    Check c;
    const auto clifford = clifford_torus();
    const PointS3 p(clifford.position(0.4, 1.9));
    const double on = kpoint_limit(clifford, p, {0.999}, 1e-6).back();
    c.require(std::abs(on - 4.0 * kPi) <= 0.02 * 4.0 * kPi, "on-surface area " + num(on));

    const Vec4 off_dir =
        (p.coords() + 0.3 * curvature_at(clifford, 0.4, 1.9).normal).normalized();
    const double off =
        kpoint_limit({clifford}, PointS3(off_dir), {0.999}, false, 1e-6).back();
    c.require(off <= 0.1, "off-surface area " + num(off));

    const Vec4 pole = Vec4::Unit(1);
    const auto s1 = geodesic_sphere(PointS3(Vec4(0, 0, 0, 1)), kPi / 2, &pole);
    const auto s2 = geodesic_sphere(PointS3(Vec4(0, 0, 1, 0)), kPi / 2, &pole);
    const double two =
        kpoint_limit({s1, s2}, PointS3(Vec4(1, 0, 0, 0)), {0.999}, true, 1e-6).back();
    c.require(std::abs(two - 8.0 * kPi) <= 0.02 * 8.0 * kPi, "two-sheet area " + num(two));
    c.note("on " + num(on) + ", off " + num(off) + ", two sheets " + num(two));
    return {10, "k-point limits: 4pi on the surface, 0 off it, 8pi for two sheets", c.pass,
            c.detail};
}

CriterionResult curve_identities() {
    Check c;
    Rng rng(1234);
    for (int k = 0; k < 50; ++k)
        if (total_curvature(random_curve_r3(rng)) < kTwoPi - 1e-8) {
            c.require(false, "Fenchel failure at sample " + num(k));
            break;
        }
    c.require(total_curvature(trefoil_r3()) > 4.0 * kPi, "trefoil below 4pi");

    const double eq = hyperbolic_bending(circle_h2(std::sqrt(2.0), 1.0));
    c.require(std::abs(eq - 4.0 * kPi) <= 1e-7, "profile bending " + num(eq));
    Rng rng2(4242);
    for (int k = 0; k < 50; ++k)
        if (hyperbolic_bending(random_profile_h2(rng2)) < 4.0 * kPi - 1e-6) {
            c.require(false, "bending bound failure at sample " + num(k));
            break;
        }

    Rng rng3(777);
    const QuadratureGrid q(128);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double z = rng3.uniform(-0.45, 0.45);
        const double amp = rng3.uniform(0.01, 0.10);
        const int mode = 2 + static_cast<int>(rng3.next_u64() % 3);
        const ClosedCurve curve = wavy_latitude_s2(z, amp, mode);
        const double lhs = elastic_energy_s2(curve);
        const double rhs = willmore_energy(hopf_torus(curve), q);
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    c.require(worst <= 1e-6, "Hopf identity worst relative gap " + num(worst));
    c.note("Hopf identity worst relative gap " + num(worst));
    return {11, "curve identities: Fenchel, Fary-Milnor, bending bound, Hopf formula", c.pass,
            c.detail};
}

CriterionResult el_residuals() {
    Check c;
    const auto willmore_tube = tube_torus(std::sqrt(2.0), 1.0);
    const double r256 = el_residual(willmore_tube, QuadratureGrid(256));
    const double r128 = el_residual(willmore_tube, QuadratureGrid(128));
    c.require(r256 <= 1e-3, "residual at 256^2 = " + num(r256));
    c.require(r128 / r256 > 2.5 && r128 / r256 < 6.0,
              "refinement ratio " + num(r128 / r256));
    const double control = el_residual(tube_torus(2.0, 1.0), QuadratureGrid(256));
    c.require(control >= 0.1, "control residual " + num(control));
    c.note("residuals " + num(r256) + " (ratio " + num(r128 / r256) + "), control " +
           num(control));
    return {12, "Euler-Lagrange residual: small for the Willmore tube, order 1 for tube(2,1)",
            c.pass, c.detail};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* log) {
    std::vector<CriterionResult> out;
    const auto run = [&](CriterionResult (*fn)()) {
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = fn();
        const double sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (log)
            (*log) << (r.pass ? "pass" : "FAIL") << "  [" << r.id << "] " << r.name << "  ("
                   << num(sec) << " s)\n";
        out.push_back(std::move(r));
    };
    run(clifford_energy);
    run(tube_minimization);
    run(stereographic_consistency);
    run(conformal_invariance);
    run(heintze_karcher);
    run(property_a_landscape);
    run(sweepout);
    run(urbano_indices);
    run(li_yau);
    run(kpoint_limits);
    run(curve_identities);
    run(el_residuals);
    return out;
}

}  // namespace willmore
