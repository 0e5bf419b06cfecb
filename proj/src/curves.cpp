#include "willmore/curves.hpp"

#include "willmore/numerics.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace willmore {

namespace {

// Adaptive integral over one period. The first split sits at the golden
// fraction: a uniform or dyadic split can alias pure harmonics whose period
// divides the subintervals (whole and halves then agree exactly and the
// recursion stops at a wrong value).
double integrate_periodic(const std::function<double(double)>& f, double abs_tol) {
    const double golden = kTwoPi * 0.6180339887498949;
    return adaptive_simpson(f, 0.0, golden, 0.5 * abs_tol) +
           adaptive_simpson(f, golden, kTwoPi, 0.5 * abs_tol);
}

}  // namespace

ClosedCurve::ClosedCurve(CurveAmbient ambient, std::array<FourierSeries, 3> coords)
    : ambient_(ambient), coords_(std::move(coords)) {
    if (!regular(1e-10)) throw InvalidInput("ClosedCurve: irregular curve (vanishing speed)");
    if (ambient_ == CurveAmbient::H2) {
        for (int i = 0; i < 256; ++i) {
            const double y = jet(kTwoPi * i / 256.0).p[1];
            if (!(y > 1e-9)) throw InvalidInput("ClosedCurve: H2 curve touches y = 0");
        }
    }
}

Vec3 ClosedCurve::raw_derivative(double t, int order) const {
    return Vec3(coords_[0].eval(t, order), coords_[1].eval(t, order), coords_[2].eval(t, order));
}

CurveJet ClosedCurve::jet(double t) const {
    CurveJet j;
    const Vec3 c = raw_derivative(t, 0);
    const Vec3 c1 = raw_derivative(t, 1);
    const Vec3 c2 = raw_derivative(t, 2);
    if (ambient_ != CurveAmbient::S2) {
        j.p = c;
        j.d1 = c1;
        j.d2 = c2;
        return j;
    }
    // Radial normalization n = c/|c| with exact quotient-rule jets.
    const double r2 = c.squaredNorm();
    const double r = std::sqrt(r2);
    if (r < 1e-12) throw InvalidInput("ClosedCurve: S2 curve passes through the origin");
    const double cc1 = c.dot(c1);
    j.p = c / r;
    j.d1 = c1 / r - c * (cc1 / (r2 * r));
    const double q = c1.squaredNorm() + c.dot(c2);
    j.d2 = c2 / r - (2.0 * cc1 / (r2 * r)) * c1 - (q / (r2 * r)) * c +
           (3.0 * cc1 * cc1 / (r2 * r2 * r)) * c;
    return j;
}

double ClosedCurve::min_speed() const {
    double m = 1e300;
    for (int i = 0; i < 4096; ++i) m = std::min(m, jet(kTwoPi * i / 4096.0).d1.norm());
    return m;
}

bool ClosedCurve::regular(double tol) const {
    double vmax = 0.0, vmin = 1e300;
    for (int i = 0; i < 2048; ++i) {
        const double s = jet(kTwoPi * i / 2048.0).d1.norm();
        vmax = std::max(vmax, s);
        vmin = std::min(vmin, s);
    }
    return vmin > tol * std::max(vmax, 1.0);
}

double total_curvature(const ClosedCurve& curve, double abs_tol) {
    if (curve.ambient() != CurveAmbient::R3)
        throw InvalidInput("total_curvature: R^3 curves only");
    if (!curve.regular()) throw InvalidInput("total_curvature: irregular curve");
    auto f = [&](double t) {
        const CurveJet j = curve.jet(t);
        const double sp = j.d1.norm();
        return j.d1.cross(j.d2).norm() / (sp * sp);
    };
    return integrate_periodic(f, abs_tol);
}

double geodesic_curvature_s2(const ClosedCurve& curve, double t) {
    const CurveJet j = curve.jet(t);
    const double sp = j.d1.norm();
    return j.p.cross(j.d1).dot(j.d2) / (sp * sp * sp);
}

double elastic_energy_s2(const ClosedCurve& curve, double abs_tol) {
    if (curve.ambient() != CurveAmbient::S2)
        throw InvalidInput("elastic_energy_s2: S^2 curves only");
    auto f = [&](double t) {
        const CurveJet j = curve.jet(t);
        const double sp = j.d1.norm();
        const double k = j.p.cross(j.d1).dot(j.d2) / (sp * sp * sp);
        return (1.0 + k * k) * sp;
    };
    return kPi * integrate_periodic(f, abs_tol);
}

double hyperbolic_curvature(const ClosedCurve& curve, double t) {
    const CurveJet j = curve.jet(t);
    const double sp = j.d1.norm();
    const double y = j.p[1];
    const double k_euc = (j.d1[0] * j.d2[1] - j.d1[1] * j.d2[0]) / (sp * sp * sp);
    const double ny = j.d1[0] / sp;  // y-component of the left normal (-y', x')/|g'|
    return y * k_euc + ny;
}

double hyperbolic_bending(const ClosedCurve& curve, double abs_tol) {
    if (curve.ambient() != CurveAmbient::H2)
        throw InvalidInput("hyperbolic_bending: upper half-plane curves only");
    auto f = [&](double t) {
        const CurveJet j = curve.jet(t);
        const double k = hyperbolic_curvature(curve, t);
        return k * k * j.d1.norm() / j.p[1];
    };
    return integrate_periodic(f, abs_tol);
}

double curve_length(const ClosedCurve& curve, double abs_tol) {
    auto f = [&](double t) {
        const CurveJet j = curve.jet(t);
        const double sp = j.d1.norm();
        return curve.ambient() == CurveAmbient::H2 ? sp / j.p[1] : sp;
    };
    return integrate_periodic(f, abs_tol);
}

// --- text format ---------------------------------------------------------------

ClosedCurve parse_curve(std::istream& in) {
    CurveAmbient ambient = CurveAmbient::R3;
    bool have_ambient = false;
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> coeffs;

    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "ambient") {
            std::string a;
            ls >> a;
            if (a == "r3") ambient = CurveAmbient::R3;
            else if (a == "s2") ambient = CurveAmbient::S2;
            else if (a == "h2") ambient = CurveAmbient::H2;
            else throw InvalidInput("parse_curve: unknown ambient '" + a + "'");
            have_ambient = true;
        } else if (tok == "coord") {
            std::string name, kind;
            ls >> name >> kind;
            std::vector<double> vals;
            double x;
            while (ls >> x) vals.push_back(x);
            if (kind == "cos") coeffs[name].first = vals;
            else if (kind == "sin") {
                // sine list starts at k = 1; shift into b_[1..]
                std::vector<double> b(vals.size() + 1, 0.0);
                for (std::size_t i = 0; i < vals.size(); ++i) b[i + 1] = vals[i];
                coeffs[name].second = b;
            } else throw InvalidInput("parse_curve: expected cos|sin, got '" + kind + "'");
        } else {
            throw InvalidInput("parse_curve: unexpected token '" + tok + "'");
        }
    }
    if (!have_ambient) throw InvalidInput("parse_curve: missing ambient line");

    auto get = [&](const char* name) {
        auto it = coeffs.find(name);
        if (it == coeffs.end()) return FourierSeries();
        return FourierSeries(it->second.first, it->second.second);
    };
    std::array<FourierSeries, 3> c{get("x"), get("y"), get("z")};
    return ClosedCurve(ambient, std::move(c));
}

ClosedCurve parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("parse_curve_file: cannot open " + path);
    return parse_curve(in);
}

std::string serialize_curve(const ClosedCurve& curve) {
    std::ostringstream out;
    out.precision(17);
    out << "ambient "
        << (curve.ambient() == CurveAmbient::R3   ? "r3"
            : curve.ambient() == CurveAmbient::S2 ? "s2"
                                                  : "h2")
        << "\n";
    const char* names[3] = {"x", "y", "z"};
    const int ncoord = curve.ambient() == CurveAmbient::H2 ? 2 : 3;
    for (int i = 0; i < ncoord; ++i) {
        const auto& s = curve.coords()[i];
        if (!s.cos_coeffs().empty()) {
            out << "coord " << names[i] << " cos";
            for (double a : s.cos_coeffs()) out << " " << a;
            out << "\n";
        }
        if (s.sin_coeffs().size() > 1) {
            out << "coord " << names[i] << " sin";
            for (std::size_t k = 1; k < s.sin_coeffs().size(); ++k)
                out << " " << s.sin_coeffs()[k];
            out << "\n";
        }
    }
    return out.str();
}

// --- builtin curves ---------------------------------------------------------------

ClosedCurve circle_r3(double radius) {
    std::array<FourierSeries, 3> c{FourierSeries({0.0, radius}, {}),
                                   FourierSeries({0.0}, {0.0, radius}), FourierSeries()};
    return ClosedCurve(CurveAmbient::R3, std::move(c));
}

ClosedCurve ellipse_r3(double a, double b) {
    std::array<FourierSeries, 3> c{FourierSeries({0.0, a}, {}), FourierSeries({0.0}, {0.0, b}),
                                   FourierSeries()};
    return ClosedCurve(CurveAmbient::R3, std::move(c));
}

ClosedCurve trefoil_r3() {
    // (2 + cos 3t) cos 2t = 2 cos 2t + (cos t + cos 5t)/2, etc.
    std::array<FourierSeries, 3> c{
        FourierSeries({0.0, 0.5, 2.0, 0.0, 0.0, 0.5}, {}),
        FourierSeries({0.0}, {0.0, -0.5, 2.0, 0.0, 0.0, 0.5}),
        FourierSeries({0.0}, {0.0, 0.0, 0.0, 1.0})};
    return ClosedCurve(CurveAmbient::R3, std::move(c));
}

ClosedCurve latitude_s2(double height) {
    if (!(height > -1.0 && height < 1.0)) throw InvalidInput("latitude_s2: |height| must be < 1");
    const double rho = std::sqrt(1.0 - height * height);
    std::array<FourierSeries, 3> c{FourierSeries({0.0, rho}, {}),
                                   FourierSeries({0.0}, {0.0, rho}),
                                   FourierSeries::constant(height)};
    return ClosedCurve(CurveAmbient::S2, std::move(c));
}

ClosedCurve wavy_latitude_s2(double height, double amplitude, int mode) {
    const double rho = std::sqrt(1.0 - height * height);
    std::vector<double> zc(static_cast<std::size_t>(mode) + 1, 0.0);
    zc[0] = height;
    zc[static_cast<std::size_t>(mode)] = amplitude;
    std::array<FourierSeries, 3> c{FourierSeries({0.0, rho}, {}),
                                   FourierSeries({0.0}, {0.0, rho}), FourierSeries(zc, {})};
    return ClosedCurve(CurveAmbient::S2, std::move(c));
}

ClosedCurve equator_s2() { return latitude_s2(0.0); }

ClosedCurve circle_h2(double h, double r) {
    if (!(h > r)) throw InvalidInput("circle_h2: circle must stay in y > 0");
    std::array<FourierSeries, 3> c{FourierSeries({0.0, r}, {}),
                                   FourierSeries({h}, {0.0, r}), FourierSeries()};
    return ClosedCurve(CurveAmbient::H2, std::move(c));
}

ClosedCurve wobble_profile_h2(double h, double r0, double amplitude, int mode) {
    // (x, y) = (0, h) + r0 (1 + amp cos(mode t)) (cos t, sin t); products of
    // cosines expand into shifted harmonics.
    const std::size_t n = static_cast<std::size_t>(mode) + 2;
    std::vector<double> xc(n, 0.0), xs(n, 0.0), yc(n, 0.0), ys(n, 0.0);
    xc[1] += r0;
    ys[1] += r0;
    const double half = 0.5 * r0 * amplitude;
    // cos(mt) cos t = (cos (m-1)t + cos (m+1)t)/2
    xc[static_cast<std::size_t>(mode - 1)] += half;
    xc[static_cast<std::size_t>(mode + 1)] += half;
    // cos(mt) sin t = (sin (m+1)t - sin (m-1)t)/2
    ys[static_cast<std::size_t>(mode + 1)] += half;
    if (mode - 1 >= 1) ys[static_cast<std::size_t>(mode - 1)] -= half;
    yc[0] = h;
    if (mode == 1) yc[0] += 0.0;  // sin(0)=0 term dropped above
    std::array<FourierSeries, 3> c{FourierSeries(xc, xs), FourierSeries(yc, ys), FourierSeries()};
    return ClosedCurve(CurveAmbient::H2, std::move(c));
}

}  // namespace willmore
