#include "willmore/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace willmore {

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double simpson_cell(const std::function<double(double, double)>& f, double au, double bu,
                    double av, double bv) {
    const double wu[3] = {1.0, 4.0, 1.0};
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double u = au + 0.5 * (bu - au) * i;
        for (int j = 0; j < 3; ++j) {
            const double v = av + 0.5 * (bv - av) * j;
            s += wu[i] * wu[j] * f(u, v);
        }
    }
    return s * (bu - au) * (bv - av) / 36.0;
}

double quad2d_rec(const std::function<double(double, double)>& f, double au, double bu, double av,
                  double bv, double coarse, double tol, int depth, int force) {
    const double mu = 0.5 * (au + bu), mv = 0.5 * (av + bv);
    const double c00 = simpson_cell(f, au, mu, av, mv);
    const double c10 = simpson_cell(f, mu, bu, av, mv);
    const double c01 = simpson_cell(f, au, mu, mv, bv);
    const double c11 = simpson_cell(f, mu, bu, mv, bv);
    const double fine = c00 + c10 + c01 + c11;
    // the acceptance threshold floors at the roundoff level of the cell value,
    // otherwise deep cells can never satisfy their share of the tolerance
    const double accept = std::max(15.0 * tol, 4e-16 * std::abs(fine));
    if (depth <= 0 || (force <= 0 && std::abs(fine - coarse) <= accept))
        return fine + (fine - coarse) / 15.0;
    const double t = 0.5 * tol;
    return quad2d_rec(f, au, mu, av, mv, c00, t, depth - 1, force - 1) +
           quad2d_rec(f, mu, bu, av, mv, c10, t, depth - 1, force - 1) +
           quad2d_rec(f, au, mu, mv, bv, c01, t, depth - 1, force - 1) +
           quad2d_rec(f, mu, bu, mv, bv, c11, t, depth - 1, force - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double adaptive_quad_2d(const std::function<double(double, double)>& f, double au, double bu,
                        double av, double bv, double abs_tol, int max_depth, int min_depth) {
    const double coarse = simpson_cell(f, au, bu, av, bv);
    return quad2d_rec(f, au, bu, av, bv, coarse, abs_tol, max_depth, min_depth);
}

std::pair<double, double> golden_section_max(const std::function<double(double)>& f, double a,
                                             double b, double x_tol, int max_iter) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

NelderMeadResult nelder_mead_max(const std::function<double(const Eigen::VectorXd&)>& f,
                                 const Eigen::VectorXd& start, double step, int max_evals) {
    const int n = static_cast<int>(start.size());
    int evals = 0;
    auto g = [&](const Eigen::VectorXd& x) {
        ++evals;
        return -f(x);  // minimize -f
    };

    std::vector<Eigen::VectorXd> xs(n + 1, start);
    std::vector<double> fs(n + 1);
    for (int i = 0; i < n; ++i) xs[i + 1][i] += step;
    for (int i = 0; i <= n; ++i) fs[i] = g(xs[i]);

    while (evals < max_evals) {
        // order ascending (best first)
        std::vector<int> order(n + 1);
        for (int i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        std::vector<Eigen::VectorXd> xs2(n + 1);
        std::vector<double> fs2(n + 1);
        for (int i = 0; i <= n; ++i) {
            xs2[i] = xs[order[i]];
            fs2[i] = fs[order[i]];
        }
        xs = xs2;
        fs = fs2;
        if (std::abs(fs[n] - fs[0]) < 1e-14 * (1.0 + std::abs(fs[0]))) break;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < n; ++i) centroid += xs[i];
        centroid /= n;

        const Eigen::VectorXd xr = centroid + (centroid - xs[n]);
        const double fr = g(xr);
        if (fr < fs[0]) {
            const Eigen::VectorXd xe = centroid + 2.0 * (centroid - xs[n]);
            const double fe = g(xe);
            if (fe < fr) {
                xs[n] = xe;
                fs[n] = fe;
            } else {
                xs[n] = xr;
                fs[n] = fr;
            }
        } else if (fr < fs[n - 1]) {
            xs[n] = xr;
            fs[n] = fr;
        } else {
            const Eigen::VectorXd xc = centroid + 0.5 * (xs[n] - centroid);
            const double fc = g(xc);
            if (fc < fs[n]) {
                xs[n] = xc;
                fs[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    xs[i] = xs[0] + 0.5 * (xs[i] - xs[0]);
                    fs[i] = g(xs[i]);
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (fs[i] < fs[best]) best = i;
    return {xs[best], -fs[best], evals};
}

Vec2 reduce_lattice(std::complex<double> tau) {
    if (tau.imag() < 0.0) tau = std::conj(tau);
    if (!(tau.imag() > 1e-14)) throw InvalidInput("reduce_lattice: degenerate lattice");
    for (int it = 0; it < 200; ++it) {
        tau -= std::round(tau.real());
        if (std::abs(tau) < 1.0 - 1e-15) {
            tau = -1.0 / tau;
            continue;
        }
        break;
    }
    tau -= std::round(tau.real());
    double x = std::abs(tau.real());  // classes are symmetric under x -> -x
    double y = tau.imag();
    if (x > 0.5) x = 1.0 - x;  // guard rounding at the boundary
    return Vec2(x, y);
}

}  // namespace willmore
