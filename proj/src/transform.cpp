#include "willmore/transform.hpp"

#include <Eigen/QR>

#include <utility>

namespace willmore {

namespace {

// Pushforward of a 2-jet through a map given by its value, differential and
// second derivative at a point.
template <class Map>
Jet push_jet(const Jet& in, const Map& map) {
    Jet out;
    out.p = map.value(in.p);
    out.pu = map.d1(in.p, in.pu);
    out.pv = map.d1(in.p, in.pv);
    out.puu = map.d2(in.p, in.pu, in.pu) + map.d1(in.p, in.puu);
    out.puv = map.d2(in.p, in.pu, in.pv) + map.d1(in.p, in.puv);
    out.pvv = map.d2(in.p, in.pv, in.pv) + map.d1(in.p, in.pvv);
    return out;
}

struct ConformalMap {
    ConformalParam v;
    Vec4 value(const Vec4& x) const { return apply_conformal(v, x); }
    Vec4 d1(const Vec4& x, const Vec4& u) const { return conformal_differential(v, x, u); }
    Vec4 d2(const Vec4& x, const Vec4& u1, const Vec4& u2) const {
        return conformal_second_derivative(v, x, u1, u2);
    }
};

// x -> x/|x|^2 acting on the first `dim` components.
struct SphereInversion {
    int dim = 3;
    Vec4 value(const Vec4& x) const { return x / x.squaredNorm(); }
    Vec4 d1(const Vec4& x, const Vec4& u) const {
        const double s = x.squaredNorm();
        return u / s - (2.0 * x.dot(u) / (s * s)) * x;
    }
    Vec4 d2(const Vec4& x, const Vec4& u1, const Vec4& u2) const {
        const double s = x.squaredNorm();
        const double xu1 = x.dot(u1), xu2 = x.dot(u2), u12 = u1.dot(u2);
        return -2.0 / (s * s) * (xu2 * u1 + xu1 * u2 + u12 * x) +
               8.0 * xu1 * xu2 / (s * s * s) * x;
    }
};

// p -> (2p, |p|^2 - 1)/(1 + |p|^2), R^3 -> S^3.
struct StereographicLiftMap {
    Vec4 value(const Vec4& x) const {
        const double q = x.squaredNorm();
        Vec4 y;
        y << 2.0 * x.head<3>(), q - 1.0;
        return y / (1.0 + q);
    }
    Vec4 d1(const Vec4& x, const Vec4& u) const {
        const double D = 1.0 + x.squaredNorm();
        const double xu = x.dot(u);
        Vec4 y;
        y << (2.0 / D) * u.head<3>() - (4.0 * xu / (D * D)) * x.head<3>(), 4.0 * xu / (D * D);
        return y;
    }
    Vec4 d2(const Vec4& x, const Vec4& u1, const Vec4& u2) const {
        const double D = 1.0 + x.squaredNorm();
        const double xu1 = x.dot(u1), xu2 = x.dot(u2), u12 = u1.dot(u2);
        Vec4 y;
        y.head<3>() = -(4.0 * xu2 / (D * D)) * u1.head<3>() - (4.0 * xu1 / (D * D)) * u2.head<3>() -
                      (4.0 * u12 / (D * D)) * x.head<3>() +
                      (16.0 * xu1 * xu2 / (D * D * D)) * x.head<3>();
        y[3] = 4.0 * u12 / (D * D) - 16.0 * xu1 * xu2 / (D * D * D);
        return y;
    }
};

// x -> (x1, x2, x3)/(1 - x4), S^3 minus the pole -> R^3.
struct StereographicProjectMap {
    Vec4 value(const Vec4& x) const {
        const double d = 1.0 - x[3];
        Vec4 y;
        y << x.head<3>() / d, 0.0;
        return y;
    }
    Vec4 d1(const Vec4& x, const Vec4& u) const {
        const double d = 1.0 - x[3];
        Vec4 y;
        y << u.head<3>() / d + (u[3] / (d * d)) * x.head<3>(), 0.0;
        return y;
    }
    Vec4 d2(const Vec4& x, const Vec4& u1, const Vec4& u2) const {
        const double d = 1.0 - x[3];
        Vec4 y;
        y.head<3>() = (u1[3] / (d * d)) * u2.head<3>() + (u2[3] / (d * d)) * u1.head<3>() +
                      (2.0 * u1[3] * u2[3] / (d * d * d)) * x.head<3>();
        y[3] = 0.0;
        return y;
    }
};

template <class Map>
struct PushforwardModel final : SurfaceModel {
    std::shared_ptr<const SurfaceModel> base;
    Map map;
    PushforwardModel(std::shared_ptr<const SurfaceModel> b, Map m)
        : base(std::move(b)), map(std::move(m)) {}
    Jet jet(double u, double v) const override { return push_jet(base->jet(u, v), map); }
};

struct RotatedModel final : SurfaceModel {
    std::shared_ptr<const SurfaceModel> base;
    Mat4 R;
    RotatedModel(std::shared_ptr<const SurfaceModel> b, const Mat4& rot)
        : base(std::move(b)), R(rot) {}
    Jet jet(double u, double v) const override {
        const Jet in = base->jet(u, v);
        Jet out;
        out.p = R * in.p;
        out.pu = R * in.pu;
        out.pv = R * in.pv;
        out.puu = R * in.puu;
        out.puv = R * in.puv;
        out.pvv = R * in.pvv;
        return out;
    }
};

// Non-isometric pushforwards distort the excluded polar caps of chart
// domains, so the analytic cap constant no longer applies; the chart is kept
// with cap_area = 0 and integrals over pushforward spheres go through the
// adaptive conformal-area path instead.
std::optional<SphereChart> pushed_chart(const std::optional<SphereChart>& chart) {
    if (!chart) return std::nullopt;
    return SphereChart{chart->eps, 0.0};
}

}  // namespace

ParametricSurface conformal_image(const ParametricSurface& S, const ConformalParam& v) {
    if (S.ambient() != Ambient::S3) throw InvalidInput("conformal_image: S^3 surfaces only");
    auto model = std::make_shared<PushforwardModel<ConformalMap>>(S.model(), ConformalMap{v});
    return ParametricSurface(Ambient::S3, model, pushed_chart(S.chart()), S.orientation(),
                             S.name().empty() ? "" : S.name() + "|F_v");
}

ParametricSurface stereographic_lift(const ParametricSurface& S) {
    if (S.ambient() != Ambient::R3) throw InvalidInput("stereographic_lift: R^3 surfaces only");
    auto model =
        std::make_shared<PushforwardModel<StereographicLiftMap>>(S.model(), StereographicLiftMap{});
    return ParametricSurface(Ambient::S3, model, pushed_chart(S.chart()), S.orientation(),
                             S.name().empty() ? "" : "lifted " + S.name());
}

ParametricSurface stereographic_project(const ParametricSurface& S) {
    if (S.ambient() != Ambient::S3) throw InvalidInput("stereographic_project: S^3 surfaces only");
    auto model = std::make_shared<PushforwardModel<StereographicProjectMap>>(
        S.model(), StereographicProjectMap{});
    return ParametricSurface(Ambient::R3, model, pushed_chart(S.chart()), S.orientation(),
                             S.name().empty() ? "" : "projected " + S.name());
}

ParametricSurface inverted(const ParametricSurface& S) {
    if (S.ambient() != Ambient::R3) throw InvalidInput("inverted: R^3 surfaces only");
    auto model = std::make_shared<PushforwardModel<SphereInversion>>(S.model(), SphereInversion{});
    return ParametricSurface(Ambient::R3, model, pushed_chart(S.chart()), S.orientation(),
                             S.name().empty() ? "" : "inverted " + S.name());
}

ParametricSurface rotated(const ParametricSurface& S, const Mat4& R) {
    if (S.ambient() == Ambient::R3 &&
        (R.row(3).head<3>().norm() > 1e-14 || R.col(3).head<3>().norm() > 1e-14 ||
         std::abs(R(3, 3) - 1.0) > 1e-14))
        throw InvalidInput("rotated: R^3 surfaces need a block rotation fixing e4");
    auto model = std::make_shared<RotatedModel>(S.model(), R);
    return ParametricSurface(S.ambient(), model, S.chart(), S.orientation(), S.name());
}

Mat4 random_rotation4(Rng& rng) {
    Mat4 G;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G(i, j) = rng.normal();
    Eigen::HouseholderQR<Mat4> qr(G);
    Mat4 Q = qr.householderQ();
    Mat4 Rm = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 4; ++i)
        if (Rm(i, i) < 0.0) Q.col(i) *= -1.0;
    if (Q.determinant() < 0.0) Q.col(0) *= -1.0;
    return Q;
}

}  // namespace willmore
