#include "willmore/canonical_family.hpp"

#include "willmore/numerics.hpp"
#include "willmore/shapes.hpp"
#include "willmore/transform.hpp"

#include <cmath>

namespace willmore {

double family_area(const ParametricSurface& S, const FamilyPoint& fp, const QuadratureGrid& q) {
    if (S.ambient() != Ambient::S3) throw InvalidInput("family_area: S^3 surfaces only");
    return offset_area(conformal_image(S, fp.v), fp.t, q);
}

std::vector<double> family_slice(const ParametricSurface& S, const ConformalParam& v,
                                 const std::vector<double>& ts, const QuadratureGrid& q) {
    return offset_area_profile(conformal_image(S, v), ts, q);
}

LandscapeResult sup_area_landscape(const ParametricSurface& S, int v_points, int t_points,
                                   const QuadratureGrid& q, double vmax, bool refine,
                                   int refine_budget, bool keep_rows) {
    if (v_points < 5 || t_points < 5)
        throw InvalidInput("sup_area_landscape: need at least 5 grid points per axis");

    std::vector<double> ts(t_points);
    for (int k = 0; k < t_points; ++k) ts[k] = -kPi + kTwoPi * k / (t_points - 1);

    LandscapeResult out;
    out.willmore = willmore_energy(S, q);
    out.sup = -1.0;

    auto axis = [&](int i) { return -vmax + 2.0 * vmax * i / (v_points - 1); };
    for (int i0 = 0; i0 < v_points; ++i0)
        for (int i1 = 0; i1 < v_points; ++i1)
            for (int i2 = 0; i2 < v_points; ++i2)
                for (int i3 = 0; i3 < v_points; ++i3) {
                    const Vec4 v(axis(i0), axis(i1), axis(i2), axis(i3));
                    if (v.norm() > vmax + 1e-12) continue;
                    const ConformalParam cp(v);
                    const std::vector<double> areas = family_slice(S, cp, ts, q);
                    for (int k = 0; k < t_points; ++k) {
                        if (keep_rows) out.rows.push_back({v, ts[k], areas[k]});
                        if (areas[k] > out.sup) {  // strict: lexicographic tie-break
                            out.sup = areas[k];
                            out.argmax = FamilyPoint(cp, ts[k]);
                        }
                    }
                }

    if (refine) {
        auto f = [&](const Eigen::VectorXd& x) {
            const Vec4 v(x[0], x[1], x[2], x[3]);
            if (v.norm() > ConformalParam::kMaxNorm || std::abs(x[4]) > kPi) return -1e30;
            return family_area(S, FamilyPoint(ConformalParam(v), x[4]), q);
        };
        Eigen::VectorXd start(5);
        start << out.argmax.v.v(), out.argmax.t;
        const NelderMeadResult nm = nelder_mead_max(f, start, 0.05, refine_budget);
        if (nm.value > out.sup) {
            out.sup = nm.value;
            out.argmax =
                FamilyPoint(ConformalParam(Vec4(nm.x[0], nm.x[1], nm.x[2], nm.x[3])), nm.x[4]);
        }
    }

    out.certificate = out.sup <= out.willmore + 1e-6;
    return out;
}

double sweepout_phi1(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("sweepout_phi1: t in [0,1]");
    const double h = 2.0 * t - 1.0;
    return 4.0 * kPi * (1.0 - h * h);
}

double sweepout_phi1_quadrature(double t, const QuadratureGrid& q) {
    const double h = 2.0 * t - 1.0;
    if (std::abs(h) >= 1.0 - 1e-12) return 0.0;  // point slices
    const double radius = std::acos(h);
    return area(geodesic_sphere(PointS3(Vec4(0, 0, 0, 1)), radius), q);
}

LimitSphereProbe limit_sphere_probe(const ParametricSurface& S, double u_p, double v_p,
                                    double theta, double delta, int sample_grid) {
    if (S.ambient() != Ambient::S3) throw InvalidInput("limit_sphere_probe: S^3 surfaces only");
    if (!(delta > 1e-4 - 1e-12 && delta < 1e-2 + 1e-12))
        throw InvalidInput("limit_sphere_probe: delta outside (1e-4, 1e-2)");

    const CurvatureSample c = curvature_at(S, u_p, v_p);
    const Vec4 p = S.position(u_p, v_p);
    const Vec4 w = c.normal;  // unit vector transverse to S at p

    // v approaches p at angle theta from the radial direction; theta = 0 is
    // the radial path v = (1 - delta) p.
    const ConformalParam v((1.0 - delta * std::cos(theta)) * p - delta * std::sin(theta) * w);

    // Near the boundary the parametrization of F_v(S) degenerates: all of S
    // except a delta-neighborhood of p lands near the antipode. Log-polar
    // parameter samples around (u_p, v_p) spread the image over the whole
    // limit sphere.
    const int n_r = std::max(sample_grid / 2, 24);
    const int n_a = std::max(sample_grid / 2, 24);
    const double rho_min = delta / 20.0, rho_max = kPi / 2.0;
    std::vector<Vec4> samples;
    samples.reserve(static_cast<std::size_t>(n_r) * n_a);
    for (int k = 0; k < n_r; ++k) {
        const double rho =
            rho_min * std::pow(rho_max / rho_min, static_cast<double>(k) / (n_r - 1));
        for (int j = 0; j < n_a; ++j) {
            const double ang = kTwoPi * j / n_a;
            const double uu = u_p + rho * std::cos(ang);
            double vv = v_p + rho * std::sin(ang);
            if (!S.torus_domain())
                vv = std::clamp(vv, S.chart()->eps, kPi - S.chart()->eps);
            samples.push_back(apply_conformal(v, S.position(uu, vv)));
        }
    }

    const SphereFit fit = fit_round_sphere(samples);
    LimitSphereProbe out{fit.sphere, fit.residual, 0.0, 0.0, 0.0};
    out.distance_p = fit.sphere.distance(p);
    out.center_alignment = std::abs(fit.sphere.center.coords().dot(w));
    double dmin = 1e300;
    const double w_lo = S.torus_domain() ? 0.0 : S.chart()->eps;
    const double w_hi = S.torus_domain() ? kTwoPi : kPi - S.chart()->eps;
    for (int i = 0; i < 96; ++i)
        for (int j = 0; j < 96; ++j) {
            const double uu = kTwoPi * i / 96.0;
            const double vv = w_lo + (w_hi - w_lo) * (j + 0.5) / 96.0;
            dmin = std::min(dmin, fit.sphere.distance(S.position(uu, vv)));
        }
    out.distance_surface = dmin;
    return out;
}

}  // namespace willmore
