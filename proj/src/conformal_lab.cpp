#include "willmore/conformal_lab.hpp"

#include "willmore/numerics.hpp"
#include "willmore/transform.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace willmore {

double check_invariance(const ParametricSurface& S, const ConformalParam& v,
                        const QuadratureGrid& q) {
    if (S.ambient() != Ambient::S3) throw InvalidInput("check_invariance: S^3 surfaces only");
    const double base = willmore_energy(S, q);
    const double mapped = willmore_energy(conformal_image(S, v), q);
    return std::abs(mapped - base) / base;
}

FlatStructure flat_structure(const ParametricSurface& S, const QuadratureGrid& q, double tol) {
    if (!S.torus_domain()) throw InvalidInput("flat_structure: torus-domain surfaces only");
    const QuadratureNodes nodes = quadrature_nodes(S, q);
    double E0 = 0, F0 = 0, G0 = 0;
    bool first = true;
    for (int j = 0; j < q.n_v; ++j)
        for (int i = 0; i < q.n_u; ++i) {
            const Jet jet = S.jet(nodes.u[i], nodes.v[j]);
            const double E = jet.pu.dot(jet.pu), F = jet.pu.dot(jet.pv), G = jet.pv.dot(jet.pv);
            if (first) {
                E0 = E;
                F0 = F;
                G0 = G;
                first = false;
                continue;
            }
            // conformally flat: (E, F, G) parallel to (E0, F0, G0)
            const double s = (E * E0 + F * F0 + G * G0) / (E0 * E0 + F0 * F0 + G0 * G0);
            const double d = std::hypot(E - s * E0, F - s * F0, G - s * G0);
            if (d > tol * std::hypot(E, F, G))
                throw InvalidInput("flat_structure: surface is not conformally flat "
                                   "in these coordinates");
        }
    return FlatStructure{E0, F0, G0};
}

namespace {

// Moments of the ambient coordinates against the flat measure du dv,
// normalized so total mass equals the induced area of S.
Vec4 flat_moments(const ParametricSurface& S, const ConformalParam& v, const QuadratureGrid& q,
                  double area_scale) {
    const QuadratureNodes nodes = quadrature_nodes(S, q);
    const std::size_t n = static_cast<std::size_t>(q.n_u) * q.n_v;
    Vec4 m = Vec4::Zero();
    std::array<std::vector<double>, 4> comp;
    for (int c = 0; c < 4; ++c) comp[c].resize(n);
    std::vector<double> scratch;
    parallel_fill(
        scratch, n,
        [&](std::size_t idx) {
            const int i = static_cast<int>(idx % q.n_u);
            const int j = static_cast<int>(idx / q.n_u);
            const Vec4 y = apply_conformal(v, S.position(nodes.u[i], nodes.v[j]));
            for (int c = 0; c < 4; ++c) comp[c][idx] = y[c];
            return 0.0;
        },
        default_exec());
    for (int c = 0; c < 4; ++c)
        m[c] = deterministic_sum(comp[c]) / static_cast<double>(n) * area_scale;
    return m;
}

}  // namespace

BalanceResult balance(const ParametricSurface& S, const QuadratureGrid& q, double tol_factor,
                      int max_iter) {
    if (S.ambient() != Ambient::S3) throw InvalidInput("balance: S^3 surfaces only");
    flat_structure(S, QuadratureGrid(32, 32));  // rejects non-flat inputs
    const double A = area(S, q);
    const double tol = tol_factor * A;

    Vec4 v = Vec4::Zero();
    Vec4 m = flat_moments(S, ConformalParam(v), q, A);
    int it = 0;
    const double fd_step = 1e-6;
    for (; it < max_iter && m.norm() > tol; ++it) {
        Mat4 J;
        for (int c = 0; c < 4; ++c) {
            Vec4 vp = v + fd_step * Vec4::Unit(c);
            Vec4 vm = v - fd_step * Vec4::Unit(c);
            J.col(c) =
                (flat_moments(S, ConformalParam(vp), q, A) -
                 flat_moments(S, ConformalParam(vm), q, A)) /
                (2.0 * fd_step);
        }
        const Vec4 step = J.partialPivLu().solve(m);
        double damping = 1.0;
        bool improved = false;
        for (int k = 0; k < 30; ++k) {
            Vec4 cand = v - damping * step;
            if (cand.norm() > ConformalParam::kMaxNorm)
                cand *= ConformalParam::kMaxNorm / cand.norm();
            const Vec4 mc = flat_moments(S, ConformalParam(cand), q, A);
            if (mc.norm() < m.norm()) {
                v = cand;
                m = mc;
                improved = true;
                break;
            }
            damping *= 0.5;  // halve on residual increase
        }
        if (!improved) break;
    }
    if (m.norm() > tol)
        throw NoConvergence("balance: residual " + std::to_string(m.norm()) +
                            " above tolerance after damped Newton");
    return BalanceResult{ConformalParam(v), m, it};
}

double conformal_area(const ParametricSurface& S, const ConformalParam& v, double abs_tol) {
    if (S.ambient() != Ambient::S3) throw InvalidInput("conformal_area: S^3 surfaces only");
    const double one_minus = 1.0 - v.v().squaredNorm();
    auto integrand = [&](double u, double w) {
        const Jet jet = S.jet(u, w);
        const double E = jet.pu.dot(jet.pu), F = jet.pu.dot(jet.pv), G = jet.pv.dot(jet.pv);
        const double root = std::sqrt(std::max(E * G - F * F, 0.0));
        const double lam = one_minus / (jet.p - v.v()).squaredNorm();
        return lam * lam * root;
    };

    // The conformal factor concentrates near the surface point closest to the
    // attracting fixed point v/|v|. Anchoring the cell corners there makes the
    // spike land on quadrature samples, so the refinement test sees it.
    double u_star = 0.0, v_star = 0.0;
    if (v.norm() > 0.5) {
        const ClosestPoint cp = closest_point(S, v.v().normalized());
        u_star = cp.u;
        v_star = cp.v;
    }

    double total = 0.0;
    if (S.torus_domain()) {
        // both directions periodic: integrate over [u*, u* + 2pi)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                total += adaptive_quad_2d(integrand, u_star + kPi * a, u_star + kPi * (a + 1),
                                          v_star + kPi * b, v_star + kPi * (b + 1),
                                          abs_tol / 4.0, 20, 2);
    } else {
        // The integrand needs no normal, so the chart can run essentially to
        // the poles; the area element vanishes there like sin(theta) and the
        // remaining polar slivers are O(1e-18) even under the largest
        // admissible conformal factor.
        const double lo = 1e-9, hi = kPi - 1e-9;
        const double vs = std::clamp(v_star, lo + 1e-9, hi - 1e-9);
        for (int a = 0; a < 2; ++a) {
            total += adaptive_quad_2d(integrand, u_star + kPi * a, u_star + kPi * (a + 1), lo,
                                      vs, abs_tol / 4.0, 20, 2);
            total += adaptive_quad_2d(integrand, u_star + kPi * a, u_star + kPi * (a + 1), vs,
                                      hi, abs_tol / 4.0, 20, 2);
        }
    }
    return total;
}

ConformalVolumeResult conformal_volume(const ParametricSurface& S, int grid_per_axis,
                                       int budget, double abs_tol) {
    ConformalVolumeResult out;

    // candidate grid on {|v| <= 0.95}, evaluated in parallel; the argmax scan
    // stays serial in grid order so ties break deterministically
    std::vector<Vec4> candidates;
    candidates.push_back(Vec4::Zero());
    const int g = grid_per_axis;
    for (int i0 = 0; i0 < g; ++i0)
        for (int i1 = 0; i1 < g; ++i1)
            for (int i2 = 0; i2 < g; ++i2)
                for (int i3 = 0; i3 < g; ++i3) {
                    Vec4 v;
                    v << -0.95 + 1.9 * i0 / (g - 1), -0.95 + 1.9 * i1 / (g - 1),
                        -0.95 + 1.9 * i2 / (g - 1), -0.95 + 1.9 * i3 / (g - 1);
                    if (v.norm() <= 0.95) candidates.push_back(v);
                }
    std::vector<double> values;
    parallel_fill(
        values, candidates.size(),
        [&](std::size_t k) { return conformal_area(S, ConformalParam(candidates[k]), abs_tol); },
        default_exec());

    int evals = static_cast<int>(candidates.size());
    Vec4 best_v = candidates[0];
    double best = values[0];
    for (std::size_t k = 1; k < candidates.size(); ++k)
        if (values[k] > best) {
            best = values[k];
            best_v = candidates[k];
        }
    auto value = [&](const Vec4& v) {
        ++evals;
        return conformal_area(S, ConformalParam(v), abs_tol);
    };

    // local refinement, capped by the remaining budget
    if (budget > evals) {
        auto f = [&](const Eigen::VectorXd& x) {
            Vec4 v(x[0], x[1], x[2], x[3]);
            if (v.norm() > 0.95) return -1e30;
            return value(v);
        };
        Eigen::VectorXd start(4);
        start << best_v[0], best_v[1], best_v[2], best_v[3];
        const NelderMeadResult nm = nelder_mead_max(f, start, 0.05, budget - evals);
        if (nm.value > best) {
            best = nm.value;
            best_v = Vec4(nm.x[0], nm.x[1], nm.x[2], nm.x[3]);
        }
    }
    out.value = best;
    out.argmax = ConformalParam(best_v);
    out.evaluations = evals;
    return out;
}

Lambda1Result lattice_lambda1(const Lattice& lattice) {
    // Dual basis of {(1,0), (x,y)}: xi1 = (1, -x/y), xi2 = (0, 1/y).
    const double x = lattice.x, y = lattice.y;
    double min_sq = 1e300;
    const int mmax = 3;
    const int nmax = static_cast<int>(std::ceil(3.0 * y)) + 2;
    for (int m = -mmax; m <= mmax; ++m)
        for (int n = -nmax; n <= nmax; ++n) {
            if (m == 0 && n == 0) continue;
            const double a = m;
            const double b = (n - m * x) / y;
            min_sq = std::min(min_sq, a * a + b * b);
        }
    Lambda1Result out;
    out.lambda1 = 4.0 * kPi * kPi * min_sq;
    out.lambda1_area = out.lambda1 * lattice.area();
    return out;
}

Lattice conformal_class(const ParametricSurface& S, const QuadratureGrid& q) {
    const FlatStructure m = flat_structure(S, q);
    // Lattice generators in the flat structure: (sqrt E, 0) and
    // (F/sqrt E, sqrt(G - F^2/E)); their ratio is the modulus.
    const std::complex<double> tau(m.F / m.E, std::sqrt(std::max(m.G / m.E - (m.F / m.E) * (m.F / m.E), 0.0)));
    const Vec2 red = reduce_lattice(tau);
    return Lattice(red[0], red[1]);
}

LiYauResult li_yau_chain(const ParametricSurface& S, const QuadratureGrid& q) {
    LiYauResult out;
    const BalanceResult bal = balance(S, q);
    out.v0 = bal.v0;
    const Lattice lat = conformal_class(S, q);
    out.lambda1_area = lattice_lambda1(lat).lambda1_area;
    out.two_willmore = 2.0 * willmore_energy(S, q);
    out.holds = out.lambda1_area <= out.two_willmore + 1e-8;
    return out;
}

std::vector<double> kpoint_limit(const std::vector<ParametricSurface>& patches, const PointS3& p,
                                 const std::vector<double>& t_sequence, bool require_on_surface,
                                 double abs_tol) {
    if (patches.empty()) throw InvalidInput("kpoint_limit: no patches");
    if (require_on_surface) {
        double dmin = 1e300;
        for (const auto& S : patches) dmin = std::min(dmin, closest_point(S, p.coords()).distance);
        if (dmin > 1e-10)
            throw InvalidInput("kpoint_limit: p is not on the surface (distance " +
                               std::to_string(dmin) + ")");
    }
    double prev = 0.0;
    std::vector<double> out;
    out.reserve(t_sequence.size());
    for (double t : t_sequence) {
        if (!(t > prev && t < 1.0))
            throw InvalidInput("kpoint_limit: t sequence must increase inside (0,1)");
        prev = t;
        const ConformalParam v(t * p.coords());
        double a = 0.0;
        for (const auto& S : patches) a += conformal_area(S, v, abs_tol);
        out.push_back(a);
    }
    return out;
}

std::vector<double> kpoint_limit(const ParametricSurface& S, const PointS3& p,
                                 const std::vector<double>& t_sequence, double abs_tol) {
    return kpoint_limit(std::vector<ParametricSurface>{S}, p, t_sequence, true, abs_tol);
}

}  // namespace willmore
