#pragma once

#include "willmore/parallel.hpp"
#include "willmore/types.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace willmore {

enum class Ambient { R3, S3 };

/// Full 2-jet of an immersion at one parameter point. Surfaces in R^3 use
/// the first three components and keep the fourth identically zero.
struct Jet {
    Vec4 p = Vec4::Zero();
    Vec4 pu = Vec4::Zero();
    Vec4 pv = Vec4::Zero();
    Vec4 puu = Vec4::Zero();
    Vec4 puv = Vec4::Zero();
    Vec4 pvv = Vec4::Zero();
};

/// Jet evaluator interface. Implementations must be pure: evaluation is
/// called concurrently from the quadrature kernels.
struct SurfaceModel {
    virtual ~SurfaceModel() = default;
    virtual Jet jet(double u, double v) const = 0;
};

/// 1-jet evaluator; second derivatives are produced by Richardson-extrapolated
/// central differences of the exact first derivatives (step 1e-5).
struct Jet1Model {
    virtual ~Jet1Model() = default;
    virtual void jet1(double u, double v, Vec4& p, Vec4& pu, Vec4& pv) const = 0;
};

std::shared_ptr<const SurfaceModel> fd_from_jet1(std::shared_ptr<const Jet1Model> m,
                                                 double step = 1e-5);

/// Position-only evaluator; the whole jet is filled by Richardson-extrapolated
/// central differences (fallback for user-supplied surfaces).
std::shared_ptr<const SurfaceModel> fd_from_position(std::function<Vec4(double, double)> pos,
                                                     double step = 1e-5);

/// Pole-excluding chart data for sphere-topology surfaces: the chart covers
/// polar angles [eps, pi - eps]; the two excluded caps enter integrals through
/// the analytic cap area times the (constant) integrand of the catalog sphere.
struct SphereChart {
    double eps = 1e-3;
    double cap_area = 0.0;  // total area of the two excluded caps
};

/// Immersion of a torus rectangle [0,2pi)^2 or a sphere chart into R^3 or S^3,
/// with exact first/second derivative jets.
class ParametricSurface {
public:
    ParametricSurface(Ambient ambient, std::shared_ptr<const SurfaceModel> model,
                      std::optional<SphereChart> chart = std::nullopt, int orientation = +1,
                      std::string name = {})
        : ambient_(ambient), model_(std::move(model)), chart_(chart),
          orientation_(orientation), name_(std::move(name)) {}

    Ambient ambient() const { return ambient_; }
    bool torus_domain() const { return !chart_.has_value(); }
    const std::optional<SphereChart>& chart() const { return chart_; }
    int orientation() const { return orientation_; }
    const std::string& name() const { return name_; }

    Jet jet(double u, double v) const { return model_->jet(u, v); }
    Vec4 position(double u, double v) const { return model_->jet(u, v).p; }
    const std::shared_ptr<const SurfaceModel>& model() const { return model_; }

    ParametricSurface with_orientation(int orient) const {
        return ParametricSurface(ambient_, model_, chart_, orient, name_);
    }
    ParametricSurface with_name(std::string n) const {
        return ParametricSurface(ambient_, model_, chart_, orientation_, std::move(n));
    }

private:
    Ambient ambient_;
    std::shared_ptr<const SurfaceModel> model_;
    std::optional<SphereChart> chart_;
    int orientation_;
    std::string name_;
};

/// Fundamental forms and curvatures at one parameter point. The second form
/// is taken with respect to the ambient connection of R^3, or the tangential
/// connection of S^3 for spherical ambients.
struct CurvatureSample {
    double E = 0, F = 0, G = 0;  // first fundamental form
    double L = 0, M = 0, N = 0;  // second fundamental form
    Vec4 normal = Vec4::Zero();  // unit normal (in T S^3 for spherical ambient)
    double k1 = 0, k2 = 0;       // principal curvatures, k1 >= k2
    double H = 0;                // mean curvature (k1+k2)/2
    double K = 0;                // extrinsic Gauss curvature k1*k2

    double area_element() const { return std::sqrt(E * G - F * F); }
    /// Intrinsic Gauss curvature (Gauss equation adds +1 in S^3).
    double intrinsic_K(Ambient a) const { return a == Ambient::S3 ? 1.0 + K : K; }
};

CurvatureSample curvature_from_jet(const Jet& jet, Ambient ambient, int orientation);
CurvatureSample curvature_at(const ParametricSurface& S, double u, double v);

// --- quadrature ---------------------------------------------------------------

/// Node counts for the product quadrature rule: periodic trapezoid on torus
/// rectangles, Gauss-Legendre x trapezoid on sphere charts.
struct QuadratureGrid {
    int n_u = 128;
    int n_v = 128;
    QuadratureGrid() = default;
    QuadratureGrid(int nu, int nv) : n_u(nu), n_v(nv) {
        if (nu < 16 || nv < 16) throw InvalidInput("QuadratureGrid: node counts must be >= 16");
    }
    explicit QuadratureGrid(int n) : QuadratureGrid(n, n) {}
};

/// Nodes and weights of the rule on a given surface domain.
struct QuadratureNodes {
    std::vector<double> u, wu;
    std::vector<double> v, wv;
};
QuadratureNodes quadrature_nodes(const ParametricSurface& S, const QuadratureGrid& q);

/// Integral of f(jet, curvature) dmu over the surface. Evaluations are
/// data-parallel over nodes; the reduction uses a fixed pairwise order, so
/// the result is bit-identical for any worker count. Sphere charts add the
/// analytic cap correction (integrand evaluated at the chart boundary, valid
/// for the constant-curvature catalog spheres that carry chart domains).
double integrate(const ParametricSurface& S, const QuadratureGrid& q,
                 const std::function<double(const Jet&, const CurvatureSample&)>& f,
                 Exec exec);
double integrate(const ParametricSurface& S, const QuadratureGrid& q,
                 const std::function<double(const Jet&, const CurvatureSample&)>& f);

// --- surface functionals -------------------------------------------------------

double area(const ParametricSurface& S, const QuadratureGrid& q);

/// Willmore energy: int H^2 dmu in R^3, int (1 + H^2) dmu in S^3.
double willmore_energy(const ParametricSurface& S, const QuadratureGrid& q);

/// Upper bound for the area of the distance surface at offset t in S^3:
/// the Jacobian (cos t - k1 sin t)(cos t - k2 sin t) of x -> cos t x + sin t N
/// integrated over the points that have not yet passed a focal time (both
/// factors >= 0). Vanishes at |t| = pi, equals area(S) at t = 0, and is
/// bounded by the Willmore energy pointwise.
double offset_area(const ParametricSurface& S, double t, const QuadratureGrid& q);

/// offset_area for many offsets at once, reusing the curvature samples.
std::vector<double> offset_area_profile(const ParametricSurface& S,
                                        const std::vector<double>& ts, const QuadratureGrid& q);

/// int K dmu with the intrinsic Gauss curvature (equals 2 pi chi).
double gauss_bonnet_integral(const ParametricSurface& S, const QuadratureGrid& q);

/// Total absolute Gauss curvature int |K| dmu of a surface in R^3.
double total_abs_gauss(const ParametricSurface& S, const QuadratureGrid& q);

/// Sup-norm residual of the Willmore Euler-Lagrange equation
///   Delta H + ((k1-k2)^2 / 2) H = 0
/// over the quadrature nodes, with the Laplace-Beltrami operator discretized
/// by second-order conservative periodic finite differences in coordinates.
/// Only doubly periodic (torus rectangle) domains are accepted.
double el_residual(const ParametricSurface& S, const QuadratureGrid& q);

/// Parameter location of the point of S closest to p, found by a coarse grid
/// scan plus Newton refinement. Returns (u, v, distance).
struct ClosestPoint {
    double u = 0, v = 0, distance = 0;
};
ClosestPoint closest_point(const ParametricSurface& S, const Vec4& p);

}  // namespace willmore
