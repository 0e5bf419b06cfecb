#include "willmore/shapes.hpp"

#include "willmore/fourier.hpp"
#include "willmore/transform.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <sstream>

namespace willmore {

namespace {

struct TubeTorusModel final : SurfaceModel {
    double R, r;
    TubeTorusModel(double R_, double r_) : R(R_), r(r_) {}
    Jet jet(double u, double v) const override {
        const double cu = std::cos(u), su = std::sin(u);
        const double cv = std::cos(v), sv = std::sin(v);
        const double w = R + r * cu;
        Jet j;
        j.p << w * cv, w * sv, r * su, 0.0;
        j.pu << -r * su * cv, -r * su * sv, r * cu, 0.0;
        j.pv << -w * sv, w * cv, 0.0, 0.0;
        j.puu << -r * cu * cv, -r * cu * sv, -r * su, 0.0;
        j.puv << r * su * sv, -r * su * cv, 0.0, 0.0;
        j.pvv << -w * cv, -w * sv, 0.0, 0.0;
        return j;
    }
};

struct ProductTorusModel final : SurfaceModel {
    double a, b;
    ProductTorusModel(double a_) : a(a_), b(std::sqrt(1.0 - a_ * a_)) {}
    Jet jet(double u, double v) const override {
        const double cu = std::cos(u), su = std::sin(u);
        const double cv = std::cos(v), sv = std::sin(v);
        Jet j;
        j.p << a * cu, a * su, b * cv, b * sv;
        j.pu << -a * su, a * cu, 0.0, 0.0;
        j.pv << 0.0, 0.0, -b * sv, b * cv;
        j.puu << -a * cu, -a * su, 0.0, 0.0;
        j.puv.setZero();
        j.pvv << 0.0, 0.0, -b * cv, -b * sv;
        return j;
    }
};

struct SphereR3Model final : SurfaceModel {
    Vec3 c;
    double rho;
    SphereR3Model(const Vec3& c_, double rho_) : c(c_), rho(rho_) {}
    // u = azimuth, v = polar angle from the +z pole.
    Jet jet(double u, double v) const override {
        const double cu = std::cos(u), su = std::sin(u);
        const double cv = std::cos(v), sv = std::sin(v);
        Jet j;
        j.p << c[0] + rho * sv * cu, c[1] + rho * sv * su, c[2] + rho * cv, 0.0;
        j.pu << -rho * sv * su, rho * sv * cu, 0.0, 0.0;
        j.pv << rho * cv * cu, rho * cv * su, -rho * sv, 0.0;
        j.puu << -rho * sv * cu, -rho * sv * su, 0.0, 0.0;
        j.puv << -rho * cv * su, rho * cv * cu, 0.0, 0.0;
        j.pvv << -rho * sv * cu, -rho * sv * su, -rho * cv, 0.0;
        return j;
    }
};

struct GeodesicSphereModel final : SurfaceModel {
    Vec4 q;        // center
    double r;      // geodesic radius
    Vec4 e, f, g;  // orthonormal frame orthogonal to q; g is the chart pole axis
    GeodesicSphereModel(const Vec4& q_, double r_, const Vec4& e_, const Vec4& f_, const Vec4& g_)
        : q(q_), r(r_), e(e_), f(f_), g(g_) {}
    Jet jet(double u, double v) const override {
        const double cu = std::cos(u), su = std::sin(u);
        const double cv = std::cos(v), sv = std::sin(v);
        const double cr = std::cos(r), sr = std::sin(r);
        // direction on the unit 2-sphere spanned by (e, f, g)
        const Vec4 dir = sv * cu * e + sv * su * f + cv * g;
        const Vec4 dir_u = -sv * su * e + sv * cu * f;
        const Vec4 dir_v = cv * cu * e + cv * su * f - sv * g;
        const Vec4 dir_uu = -sv * cu * e - sv * su * f;
        const Vec4 dir_uv = -cv * su * e + cv * cu * f;
        const Vec4 dir_vv = -dir;
        Jet j;
        j.p = cr * q + sr * dir;
        j.pu = sr * dir_u;
        j.pv = sr * dir_v;
        j.puu = sr * dir_uu;
        j.puv = sr * dir_uv;
        j.pvv = sr * dir_vv;
        return j;
    }
};

// Hopf torus data: trigonometric interpolant of the twist-corrected lift.
struct HopfTorusModel final : SurfaceModel {
    TrigInterpolant lam1, lam2;  // components of Lambda(s) in C^2
    double holonomy = 0.0;

    Jet jet(double s, double phi) const override {
        using C = std::complex<double>;
        const C L1 = lam1.eval(s), L2 = lam2.eval(s);
        const C L1p = lam1.eval(s, 1), L2p = lam2.eval(s, 1);
        const C L1pp = lam1.eval(s, 2), L2pp = lam2.eval(s, 2);
        const C ephi(std::cos(phi), std::sin(phi));
        const C i(0.0, 1.0);
        auto pack = [&](const C& a, const C& b) {
            return Vec4(a.real(), a.imag(), b.real(), b.imag());
        };
        Jet j;
        j.p = pack(ephi * L1, ephi * L2);
        j.pu = pack(ephi * L1p, ephi * L2p);
        j.pv = pack(i * ephi * L1, i * ephi * L2);
        j.puu = pack(ephi * L1pp, ephi * L2pp);
        j.puv = pack(i * ephi * L1p, i * ephi * L2p);
        j.pvv = pack(-ephi * L1, -ephi * L2);
        return j;
    }
};

struct RevolutionTorusModel final : SurfaceModel {
    ClosedCurve profile;
    explicit RevolutionTorusModel(ClosedCurve p) : profile(std::move(p)) {}
    // Profile (x(u), y(u)) in {z = 0, y > 0}, rotated about the x-axis.
    Jet jet(double u, double v) const override {
        const CurveJet c = profile.jet(u);
        const double cv = std::cos(v), sv = std::sin(v);
        Jet j;
        j.p << c.p[0], c.p[1] * cv, c.p[1] * sv, 0.0;
        j.pu << c.d1[0], c.d1[1] * cv, c.d1[1] * sv, 0.0;
        j.pv << 0.0, -c.p[1] * sv, c.p[1] * cv, 0.0;
        j.puu << c.d2[0], c.d2[1] * cv, c.d2[1] * sv, 0.0;
        j.puv << 0.0, -c.d1[1] * sv, c.d1[1] * cv, 0.0;
        j.pvv << 0.0, -c.p[1] * cv, -c.p[1] * sv, 0.0;
        return j;
    }
};

// Normal graph with exact 1-jet; the Weingarten relation supplies the
// derivative of the unit normal from the base 2-jet.
struct PerturbedModel final : Jet1Model {
    std::shared_ptr<const SurfaceModel> base;
    Ambient ambient;
    int orientation;
    double amp;
    int m, n;

    PerturbedModel(const ParametricSurface& S, double amplitude, int m_, int n_)
        : base(S.model()), ambient(S.ambient()), orientation(S.orientation()), amp(amplitude),
          m(m_), n(n_) {}

    void jet1(double u, double v, Vec4& p, Vec4& pu, Vec4& pv) const override {
        const Jet j = base->jet(u, v);
        const CurvatureSample c = curvature_from_jet(j, ambient, orientation);
        const double det = c.E * c.G - c.F * c.F;
        const double guu = c.G / det, guv = -c.F / det, gvv = c.E / det;
        // dN = -(shape operator applied to dX) in the tangent basis
        const Vec4 Nu = -((guu * c.L + guv * c.M) * j.pu + (guv * c.L + gvv * c.M) * j.pv);
        const Vec4 Nv = -((guu * c.M + guv * c.N) * j.pu + (guv * c.M + gvv * c.N) * j.pv);

        const double A = amp * std::cos(m * u) * std::cos(n * v);
        const double Au = -amp * m * std::sin(m * u) * std::cos(n * v);
        const double Av = -amp * n * std::cos(m * u) * std::sin(n * v);

        if (ambient == Ambient::R3) {
            p = j.p + A * c.normal;
            pu = j.pu + Au * c.normal + A * Nu;
            pv = j.pv + Av * c.normal + A * Nv;
        } else {
            // geodesic normal graph cos(A) x + sin(A) N stays on S^3
            const double cA = std::cos(A), sA = std::sin(A);
            p = cA * j.p + sA * c.normal;
            pu = cA * j.pu + sA * Nu + (-sA * j.p + cA * c.normal) * Au;
            pv = cA * j.pv + sA * Nv + (-sA * j.p + cA * c.normal) * Av;
        }
    }
};

// Tube around a space curve via the Frenet frame; exact 1-jet (needs three
// derivatives of the curve), second derivatives by finite differences.
struct SpaceTubeModel final : Jet1Model {
    ClosedCurve curve;
    double r;
    SpaceTubeModel(ClosedCurve c, double r_) : curve(std::move(c)), r(r_) {}

    void frame(double t, Vec3& gamma, Vec3& T, Vec3& N, Vec3& B, Vec3& dT, Vec3& dN,
               Vec3& dB) const {
        const Vec3 g1 = curve.raw_derivative(t, 1);
        const Vec3 g2 = curve.raw_derivative(t, 2);
        const Vec3 g3 = curve.raw_derivative(t, 3);
        gamma = curve.raw_derivative(t, 0);
        const double sp = g1.norm();
        const Vec3 cr = g1.cross(g2);
        const double crn = cr.norm();
        if (crn < 1e-12) throw InvalidInput("tube_around_curve: vanishing curvature point");
        const double kappa = crn / (sp * sp * sp);
        const double tau = cr.dot(g3) / (crn * crn);
        T = g1 / sp;
        B = cr / crn;
        N = B.cross(T);
        // Frenet equations in the curve parameter (speed sp)
        dT = sp * kappa * N;
        dN = sp * (-kappa * T + tau * B);
        dB = -sp * tau * N;
    }

    void jet1(double t, double th, Vec4& p, Vec4& pt, Vec4& pth) const override {
        Vec3 gamma, T, N, B, dT, dN, dB;
        frame(t, gamma, T, N, B, dT, dN, dB);
        const double c = std::cos(th), s = std::sin(th);
        const Vec3 pos = gamma + r * (c * N + s * B);
        const Vec3 dpos_t = curve.raw_derivative(t, 1) + r * (c * dN + s * dB);
        const Vec3 dpos_th = r * (-s * N + c * B);
        p << pos, 0.0;
        pt << dpos_t, 0.0;
        pth << dpos_th, 0.0;
    }
};

Vec4 orthonormal_complement(const Vec4& q, int which) {
    // deterministic frame orthogonal to q via Gram-Schmidt on the axes
    std::array<Vec4, 3> frame;
    int count = 0;
    for (int axis = 0; axis < 4 && count < 3; ++axis) {
        Vec4 cand = Vec4::Unit(axis);
        cand -= cand.dot(q) * q;
        for (int k = 0; k < count; ++k) cand -= cand.dot(frame[k]) * frame[k];
        if (cand.norm() > 1e-6) frame[count++] = cand.normalized();
    }
    if (count < 3) throw InvalidInput("orthonormal_complement: frame construction failed");
    return frame[which];
}

void check_immersion(const ParametricSurface& S, int n = 128) {
    const QuadratureNodes nodes = quadrature_nodes(S, QuadratureGrid(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const Jet jet = S.jet(nodes.u[i], nodes.v[j]);
            const CurvatureSample c = curvature_from_jet(jet, S.ambient(), 1);
            (void)c;
            if (S.ambient() == Ambient::S3 && std::abs(jet.p.norm() - 1.0) > 1e-10)
                throw InvalidInput("shape: S^3 surface leaves the sphere");
        }
}

}  // namespace

ParametricSurface tube_torus(double R, double r) {
    if (!(r > 0.0 && r < R)) throw InvalidInput("tube_torus: need 0 < r < R");
    std::ostringstream name;
    name << "tube(" << R << "," << r << ")";
    return ParametricSurface(Ambient::R3, std::make_shared<TubeTorusModel>(R, r), std::nullopt,
                             +1, name.str());
}

ParametricSurface product_torus(double a) {
    if (!(a > 0.0 && a < 1.0)) throw InvalidInput("product_torus: need 0 < a < 1");
    std::ostringstream name;
    name << "product(" << a << ")";
    return ParametricSurface(Ambient::S3, std::make_shared<ProductTorusModel>(a), std::nullopt,
                             +1, name.str());
}

ParametricSurface clifford_torus() {
    return product_torus(1.0 / std::sqrt(2.0)).with_name("clifford");
}

ParametricSurface hopf_torus(const ClosedCurve& curve) {
    if (curve.ambient() != CurveAmbient::S2) throw InvalidInput("hopf_torus: S^2 curves only");

    // Horizontal space at z in C^2 is spanned by w0 = (-conj(z2), conj(z1))
    // and i w0; the lift direction solves d(hopf)[w] = tangent of the curve.
    using C = std::complex<double>;
    auto lift_rhs = [](const Vec4& z, const Vec3& target) {
        const C z1(z[0], z[1]), z2(z[2], z[3]);
        const C w01 = -std::conj(z2), w02 = std::conj(z1);
        const Vec4 w0(w01.real(), w01.imag(), w02.real(), w02.imag());
        const Vec4 w1(-w01.imag(), w01.real(), -w02.imag(), w02.real());  // i*w0
        const Vec3 d0 = hopf_differential(z, w0);
        const Vec3 d1 = hopf_differential(z, w1);
        // |d0| = |d1| = 2 and d0 _|_ d1 (Riemannian submersion of factor 2)
        return Vec4(0.25 * target.dot(d0) * w0 + 0.25 * target.dot(d1) * w1);
    };

    // Total length of the curve on S^2 (constant-speed reparametrization).
    const double L = curve_length(curve);

    // Joint RK4 in sigma in [0, 2pi] for (t(sigma), Gamma(sigma)):
    //   dt/dsigma = (L/2pi)/|c'(t)|, dGamma/dsigma = lift of the unit tangent
    // scaled by L/2pi.
    const int steps = 4096;
    const double h = kTwoPi / steps;
    const double speed_sigma = L / kTwoPi;

    struct State {
        double t;
        Vec4 z;
    };
    auto rhs = [&](const State& s) {
        const CurveJet cj = curve.jet(s.t);
        const double sp = cj.d1.norm();
        State d;
        d.t = speed_sigma / sp;
        d.z = lift_rhs(s.z, cj.d1 * (speed_sigma / sp));
        return d;
    };

    // Start point: any fiber point over curve(0).
    State s;
    s.t = 0.0;
    {
        const Vec3 y = curve.jet(0.0).p;
        // Fiber over (y1,y2,y3): |z1|^2 = (1+y1)/2, z1 conj(z2) = (y2+iy3)/2.
        const double a1 = std::sqrt(std::max(0.0, (1.0 + y[0]) / 2.0));
        if (a1 > 1e-8) {
            const C z1(a1, 0.0);
            const C z2 = std::conj(C(y[1], y[2]) / (2.0 * z1));
            s.z = Vec4(z1.real(), z1.imag(), z2.real(), z2.imag());
        } else {
            s.z = Vec4(0.0, 0.0, 1.0, 0.0);
        }
        s.z.normalize();
    }

    std::vector<Vec4> zs(steps + 1);
    std::vector<double> sigmas(steps + 1);
    zs[0] = s.z;
    sigmas[0] = 0.0;
    for (int k = 0; k < steps; ++k) {
        const State k1 = rhs(s);
        State s2{s.t + 0.5 * h * k1.t, s.z + 0.5 * h * k1.z};
        const State k2 = rhs(s2);
        State s3{s.t + 0.5 * h * k2.t, s.z + 0.5 * h * k2.z};
        const State k3 = rhs(s3);
        State s4{s.t + h * k3.t, s.z + h * k3.z};
        const State k4 = rhs(s4);
        s.t += h / 6.0 * (k1.t + 2.0 * k2.t + 2.0 * k3.t + k4.t);
        s.z += h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
        // the norm drift stays a smooth ~1e-13 function of sigma; projecting
        // per step would inject grid-frequency jitter into the interpolant
        zs[k + 1] = s.z.normalized();
        sigmas[k + 1] = h * (k + 1);
    }

    // Holonomy: Gamma(2pi) = e^{i alpha} Gamma(0).
    const C e1(zs[steps][0], zs[steps][1]), e2(zs[steps][2], zs[steps][3]);
    const C b1(zs[0][0], zs[0][1]), b2(zs[0][2], zs[0][3]);
    const C overlap = e1 * std::conj(b1) + e2 * std::conj(b2);
    const double alpha = std::arg(overlap);

    // Twist-corrected samples Lambda(sigma) = e^{-i alpha sigma/2pi} Gamma,
    // made exactly periodic by removing the leftover integration ramp.
    std::vector<C> l1(steps), l2(steps);
    C defect1, defect2;
    {
        auto lam = [&](int k) {
            const double ph = -alpha * sigmas[k] / kTwoPi;
            const C e(std::cos(ph), std::sin(ph));
            return std::pair<C, C>(e * C(zs[k][0], zs[k][1]), e * C(zs[k][2], zs[k][3]));
        };
        const auto end = lam(steps);
        const auto begin = lam(0);
        defect1 = end.first - begin.first;
        defect2 = end.second - begin.second;
        for (int k = 0; k < steps; ++k) {
            const auto v = lam(k);
            const double frac = sigmas[k] / kTwoPi;
            l1[k] = v.first - frac * defect1;
            l2[k] = v.second - frac * defect2;
        }
    }

    auto model = std::make_shared<HopfTorusModel>();
    model->lam1 = TrigInterpolant(l1);
    model->lam2 = TrigInterpolant(l2);
    model->holonomy = alpha;

    ParametricSurface S(Ambient::S3, model, std::nullopt, +1, "hopf");
    check_immersion(S);
    return S;
}

ParametricSurface revolution_torus(const ClosedCurve& profile) {
    if (profile.ambient() != CurveAmbient::H2)
        throw InvalidInput("revolution_torus: profile must live in the upper half-plane");
    return ParametricSurface(Ambient::R3, std::make_shared<RevolutionTorusModel>(profile),
                             std::nullopt, +1, "revolution");
}

ParametricSurface sphere_r3(const Vec3& center, double rho) {
    if (!(rho > 0.0)) throw InvalidInput("sphere_r3: radius must be positive");
    SphereChart chart;
    chart.eps = 1e-3;
    chart.cap_area = 2.0 * kTwoPi * rho * rho * (1.0 - std::cos(chart.eps));
    std::ostringstream name;
    name << "sphere(" << rho << ")";
    return ParametricSurface(Ambient::R3, std::make_shared<SphereR3Model>(center, rho), chart, +1,
                             name.str());
}

ParametricSurface geodesic_sphere(const PointS3& center, double radius, const Vec4* pole_axis) {
    if (!(radius > 0.0 && radius < kPi))
        throw InvalidInput("geodesic_sphere: radius outside (0, pi)");
    const Vec4 q = center.coords();
    Vec4 g;
    if (pole_axis) {
        g = *pole_axis;
        g -= g.dot(q) * q;
        if (g.norm() < 1e-8) throw InvalidInput("geodesic_sphere: pole axis parallel to center");
        g.normalize();
    } else {
        g = orthonormal_complement(q, 2);
    }
    Vec4 e = orthonormal_complement(q, 0);
    e -= e.dot(g) * g;
    if (e.norm() < 1e-6) {
        e = orthonormal_complement(q, 1);
        e -= e.dot(g) * g;
    }
    e.normalize();
    // f completes the frame (4d cross of q, e, g up to sign); build by
    // Gram-Schmidt over the axes.
    Vec4 f = Vec4::Zero();
    for (int axis = 0; axis < 4; ++axis) {
        Vec4 cand = Vec4::Unit(axis);
        cand -= cand.dot(q) * q;
        cand -= cand.dot(e) * e;
        cand -= cand.dot(g) * g;
        if (cand.norm() > 1e-6) {
            f = cand.normalized();
            break;
        }
    }
    if (f.norm() < 0.5) throw InvalidInput("geodesic_sphere: frame construction failed");

    SphereChart chart;
    chart.eps = 1e-3;
    const double sr = std::sin(radius);
    chart.cap_area = 2.0 * kTwoPi * sr * sr * (1.0 - std::cos(chart.eps));
    std::ostringstream name;
    name << "geodesic-sphere(" << radius << ")";
    return ParametricSurface(Ambient::S3,
                             std::make_shared<GeodesicSphereModel>(q, radius, e, f, g), chart, +1,
                             name.str());
}

ParametricSurface equator_s3() {
    return geodesic_sphere(PointS3(Vec4(0, 0, 0, 1)), kPi / 2).with_name("equator");
}

ParametricSurface perturbed(const ParametricSurface& base, double amplitude, int m, int n) {
    if (!base.torus_domain())
        throw InvalidInput("perturbed: torus-domain base surfaces only");
    if (amplitude == 0.0) return base;

    // A normal graph stays an immersion while the focal factors of the graph
    // height stay positive; past a focal crossing EG - F^2 returns positive
    // with flipped orientation, so the factors are what must be checked.
    for (int i = 0; i < 128; ++i)
        for (int j = 0; j < 128; ++j) {
            const double u = kTwoPi * i / 128.0, v = kTwoPi * j / 128.0;
            const CurvatureSample c = curvature_at(base, u, v);
            const double A = amplitude * std::cos(m * u) * std::cos(n * v);
            double f1, f2;
            if (base.ambient() == Ambient::S3) {
                f1 = std::cos(A) - std::sin(A) * c.k1;
                f2 = std::cos(A) - std::sin(A) * c.k2;
            } else {
                f1 = 1.0 - A * c.k1;
                f2 = 1.0 - A * c.k2;
            }
            if (!(f1 > 0.0 && f2 > 0.0))
                throw InvalidInput("perturbed: amplitude breaks the immersion");
        }

    auto model = fd_from_jet1(std::make_shared<PerturbedModel>(base, amplitude, m, n));
    ParametricSurface S(base.ambient(), model, std::nullopt, base.orientation(),
                        "perturbed " + base.name());
    check_immersion(S);
    return S;
}

ParametricSurface tube_around_curve(const ClosedCurve& curve, double r) {
    if (curve.ambient() != CurveAmbient::R3)
        throw InvalidInput("tube_around_curve: R^3 curves only");
    if (!(r > 0.0)) throw InvalidInput("tube_around_curve: radius must be positive");
    auto model = fd_from_jet1(std::make_shared<SpaceTubeModel>(curve, r));
    ParametricSurface S(Ambient::R3, model, std::nullopt, +1, "space-tube");
    check_immersion(S, 64);
    return S;
}

std::vector<std::pair<double, double>> tube_energy_profile(double R,
                                                           const std::vector<double>& radii,
                                                           const QuadratureGrid& q) {
    std::vector<std::pair<double, double>> out;
    out.reserve(radii.size());
    for (double r : radii) out.emplace_back(r, willmore_energy(tube_torus(R, r), q));
    return out;
}

// --- ShapeSpec ----------------------------------------------------------------

ParametricSurface build_shape(const std::string& spec) {
    std::map<std::string, std::string> kv;
    std::istringstream in(spec);
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw InvalidInput("build_shape: expected key=value, got '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    auto num = [&](const char* key, double dflt = std::nan("")) {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (std::isnan(dflt)) throw InvalidInput(std::string("build_shape: missing ") + key);
            return dflt;
        }
        return std::stod(it->second);
    };
    auto str = [&](const char* key, const char* dflt = nullptr) {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (!dflt) throw InvalidInput(std::string("build_shape: missing ") + key);
            return std::string(dflt);
        }
        return it->second;
    };

    const std::string kind = str("kind");
    if (kind == "tube") return tube_torus(num("R"), num("r"));
    if (kind == "product") return product_torus(num("a"));
    if (kind == "clifford") return clifford_torus();
    if (kind == "hopf") {
        const std::string curve = str("curve", "equator");
        if (curve == "equator") return hopf_torus(equator_s2()).with_name("hopf(equator)");
        if (curve == "latitude")
            return hopf_torus(latitude_s2(num("height"))).with_name("hopf(latitude)");
        if (curve == "wavy")
            return hopf_torus(wavy_latitude_s2(num("height"), num("amplitude"),
                                               static_cast<int>(num("mode"))))
                .with_name("hopf(wavy)");
        return hopf_torus(parse_curve_file(curve));
    }
    if (kind == "revolution") {
        const double amp = num("amplitude", 0.0);
        const auto profile = amp == 0.0
                                 ? circle_h2(num("h"), num("r0"))
                                 : wobble_profile_h2(num("h"), num("r0"), amp,
                                                     static_cast<int>(num("mode", 2)));
        return revolution_torus(profile);
    }
    if (kind == "sphere") return sphere_r3(Vec3::Zero(), num("radius", 1.0));
    if (kind == "geodesic-sphere")
        return geodesic_sphere(PointS3(Vec4(0, 0, 0, 1)), num("radius"));
    if (kind == "equator") return equator_s3();
    if (kind == "perturbed") {
        std::string base_kind = str("base");
        ParametricSurface base = base_kind == "product" ? product_torus(num("a"))
                                 : base_kind == "clifford"
                                     ? clifford_torus()
                                     : tube_torus(num("R"), num("r"));
        return perturbed(base, num("amplitude"), static_cast<int>(num("m", 2)),
                         static_cast<int>(num("n", 2)));
    }
    if (kind == "trefoil-tube") return tube_around_curve(trefoil_r3(), num("r", 0.1));
    if (kind == "lifted-tube") return stereographic_lift(tube_torus(num("R"), num("r")));
    throw InvalidInput("build_shape: unknown kind '" + kind + "'");
}

std::vector<ParametricSurface> catalog_s3() {
    std::vector<ParametricSurface> out;
    out.push_back(clifford_torus());
    out.push_back(product_torus(0.6));
    out.push_back(product_torus(0.3));
    out.push_back(hopf_torus(equator_s2()).with_name("hopf(equator)"));
    out.push_back(hopf_torus(wavy_latitude_s2(0.3, 0.08, 3)).with_name("hopf(wavy)"));
    out.push_back(stereographic_lift(tube_torus(2.0, 1.0)));
    out.push_back(equator_s3());
    out.push_back(geodesic_sphere(PointS3(Vec4(0, 0, 0, 1)), 0.7));
    return out;
}

std::vector<ParametricSurface> catalog_r3() {
    std::vector<ParametricSurface> out;
    out.push_back(tube_torus(std::sqrt(2.0), 1.0));
    out.push_back(tube_torus(2.0, 1.0));
    out.push_back(sphere_r3(Vec3::Zero(), 1.0));
    out.push_back(sphere_r3(Vec3(0.2, -0.1, 0.4), 0.5));
    out.push_back(revolution_torus(wobble_profile_h2(2.0, 0.8, 0.05, 2)));
    return out;
}

}  // namespace willmore
