#include "willmore/spectral.hpp"

#include "willmore/fourier.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <complex>

namespace willmore {

namespace {

struct FlatMinimalData {
    double guu, guv, gvv;  // contravariant metric (constant on the grid)
    double pot;            // |A|^2 + 2 (constant)
};

// Validates minimality and metric constancy on the n x n grid and returns the
// constant coefficients.
FlatMinimalData flat_minimal_data(const ParametricSurface& S, int n) {
    if (S.ambient() != Ambient::S3) throw InvalidInput("jacobi: S^3 surfaces only");
    if (!S.torus_domain()) throw InvalidInput("jacobi: torus discretization needs a torus domain");
    const double h = kTwoPi / n;
    FlatMinimalData d{0, 0, 0, 0};
    double E0 = 0, F0 = 0, G0 = 0, pot0 = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const CurvatureSample c = curvature_at(S, h * i, h * j);
            if (std::abs(c.H) > 1e-8)
                throw InvalidInput("jacobi: surface is not minimal (|H| > 1e-8)");
            const double pot = c.k1 * c.k1 + c.k2 * c.k2 + 2.0;
            if (i == 0 && j == 0) {
                E0 = c.E;
                F0 = c.F;
                G0 = c.G;
                pot0 = pot;
            } else {
                const double scale = std::abs(E0) + std::abs(F0) + std::abs(G0);
                if (std::abs(c.E - E0) + std::abs(c.F - F0) + std::abs(c.G - G0) > 1e-8 * scale ||
                    std::abs(pot - pot0) > 1e-8 * pot0)
                    throw InvalidInput("jacobi: non-constant metric; flat minimal tori only");
            }
        }
    const double det = E0 * G0 - F0 * F0;
    d.guu = G0 / det;
    d.guv = -F0 / det;
    d.gvv = E0 / det;
    d.pot = pot0;
    return d;
}

bool is_great_sphere(const ParametricSurface& S) {
    if (S.torus_domain()) return false;
    // great sphere <=> minimal: check H at a few chart points
    for (int i = 0; i < 8; ++i) {
        const CurvatureSample c = curvature_at(S, kTwoPi * i / 8.0, kPi / 3.0 + 0.1 * i);
        if (std::abs(c.H) > 1e-8)
            throw InvalidInput("jacobi: sphere-domain surface is not minimal");
    }
    return true;
}

JacobiSpectrum sphere_closed_form(int n, int max_eigenvalues) {
    // -L on a great sphere: eigenvalues l(l+1) - 2 with multiplicity 2l + 1.
    JacobiSpectrum out;
    out.resolution = n;
    for (int l = 0; out.eigenvalues.size() < static_cast<std::size_t>(max_eigenvalues); ++l) {
        const double lam = l * (l + 1.0) - 2.0;
        for (int m = 0; m < 2 * l + 1 &&
                        out.eigenvalues.size() < static_cast<std::size_t>(max_eigenvalues);
             ++m)
            out.eigenvalues.push_back(lam);
    }
    out.tol = 1e-3 * std::abs(out.eigenvalues.front());
    for (double lam : out.eigenvalues) {
        if (lam < -out.tol) ++out.index;
        else if (lam <= out.tol) ++out.nullity;
    }
    return out;
}

void finish_counts(JacobiSpectrum& s) {
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
    s.tol = 1e-3 * std::abs(s.eigenvalues.front());
    s.index = 0;
    s.nullity = 0;
    s.indeterminate = false;
    for (double lam : s.eigenvalues) {
        if (lam < -s.tol) ++s.index;
        else if (lam <= s.tol) ++s.nullity;
        const double a = std::abs(lam);
        if (a >= 0.5 * s.tol && a <= 2.0 * s.tol) s.indeterminate = true;
    }
}

}  // namespace

Eigen::SparseMatrix<double> jacobi_matrix(const ParametricSurface& S, int n) {
    const FlatMinimalData d = flat_minimal_data(S, n);
    const double h = kTwoPi / n;
    const double cu = d.guu / (h * h);
    const double cv = d.gvv / (h * h);
    const double cx = d.guv / (2.0 * h * 2.0 * h);  // centered cross differences

    auto at = [n](int i, int j) {
        return ((j % n + n) % n) * n + ((i % n + n) % n);
    };

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(n) * n * 9);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int row = at(i, j);
            // -Delta f = -(guu f_uu + 2 guv f_uv + gvv f_vv)
            trip.emplace_back(row, row, 2.0 * cu + 2.0 * cv - d.pot);
            trip.emplace_back(row, at(i + 1, j), -cu);
            trip.emplace_back(row, at(i - 1, j), -cu);
            trip.emplace_back(row, at(i, j + 1), -cv);
            trip.emplace_back(row, at(i, j - 1), -cv);
            trip.emplace_back(row, at(i + 1, j + 1), -2.0 * cx);
            trip.emplace_back(row, at(i - 1, j - 1), -2.0 * cx);
            trip.emplace_back(row, at(i + 1, j - 1), 2.0 * cx);
            trip.emplace_back(row, at(i - 1, j + 1), 2.0 * cx);
        }
    Eigen::SparseMatrix<double> A(n * n, n * n);
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    return A;
}

JacobiSpectrum jacobi_spectrum(const ParametricSurface& S, int n, int max_eigenvalues) {
    if (!S.torus_domain() && is_great_sphere(S)) return sphere_closed_form(n, max_eigenvalues);

    JacobiSpectrum out;
    out.resolution = n;
    const Eigen::SparseMatrix<double> A = jacobi_matrix(S, n);
    const int N = static_cast<int>(A.rows());

    if (n <= 64) {
        Eigen::MatrixXd dense(A);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw NoConvergence("jacobi_spectrum: dense solve failed");
        out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + N);
        finish_counts(out);
        return out;
    }

    // Shift-inverted block subspace iteration: the shift sits just below the
    // bottom of the spectrum (lambda_min >= -pot), making A - sigma I positive
    // definite; the iteration then resolves the smallest eigenvalues of A,
    // multiplicities included.
    const FlatMinimalData d = flat_minimal_data(S, n);
    const double sigma = -(d.pot + 1.0);
    Eigen::SparseMatrix<double> M = A;
    for (int k = 0; k < N; ++k) M.coeffRef(k, k) -= sigma;
    M.makeCompressed();
    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(M);
    if (llt.info() != Eigen::Success)
        throw NoConvergence("jacobi_spectrum: shifted factorization failed");

    const int block = std::min(std::max(max_eigenvalues + 12, 32), N);
    Rng rng(0x5eedca11);
    Eigen::MatrixXd V(N, block);
    for (int c = 0; c < block; ++c)
        for (int r = 0; r < N; ++r) V(r, c) = rng.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr0(V);
    V = qr0.householderQ() * Eigen::MatrixXd::Identity(N, block);

    Eigen::VectorXd prev = Eigen::VectorXd::Zero(block);
    for (int it = 0; it < 200; ++it) {
        Eigen::MatrixXd Z(N, block);
        for (int c = 0; c < block; ++c) Z.col(c) = llt.solve(V.col(c));
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(Z);
        V = qr.householderQ() * Eigen::MatrixXd::Identity(N, block);

        if (it % 5 == 4 || it == 199) {
            const Eigen::MatrixXd T = V.transpose() * (A * V);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (T + T.transpose()));
            const Eigen::VectorXd ritz = es.eigenvalues();
            const int check = std::min(max_eigenvalues, block - 8);
            double delta = 0.0;
            for (int k = 0; k < check; ++k)
                delta = std::max(delta, std::abs(ritz[k] - prev[k]));
            prev = ritz;
            if (delta < 1e-10) break;
        }
    }
    const Eigen::MatrixXd T = V.transpose() * (A * V);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (T + T.transpose()));
    const int keep = std::min(max_eigenvalues, block - 8);
    out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + keep);
    finish_counts(out);
    return out;
}

int morse_index(const ParametricSurface& S, int n) { return jacobi_spectrum(S, n).index; }

std::vector<double> normal_component_grid(const ParametricSurface& S, int n, int axis) {
    const double h = kTwoPi / n;
    std::vector<double> f(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            f[static_cast<std::size_t>(j) * n + i] = curvature_at(S, h * i, h * j).normal[axis];
    return f;
}

std::vector<double> apply_jacobi_operator(const ParametricSurface& S, int n,
                                          const std::vector<double>& f) {
    if (f.size() != static_cast<std::size_t>(n) * n)
        throw InvalidInput("apply_jacobi_operator: grid size mismatch");
    const FlatMinimalData d = flat_minimal_data(S, n);

    using C = std::complex<double>;
    std::vector<C> grid(f.begin(), f.end());

    // 2D FFT (rows then columns)
    auto fft2 = [n](std::vector<C>& g, bool inverse) {
        std::vector<C> line(n);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) line[i] = g[static_cast<std::size_t>(j) * n + i];
            fft(line, inverse);
            for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(j) * n + i] = line[i];
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) line[j] = g[static_cast<std::size_t>(j) * n + i];
            fft(line, inverse);
            for (int j = 0; j < n; ++j) g[static_cast<std::size_t>(j) * n + i] = line[j];
        }
    };
    fft2(grid, false);
    auto freq = [n](int k) { return k <= n / 2 ? k : k - n; };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double ku = freq(i), kv = freq(j);
            const double sym = d.guu * ku * ku + 2.0 * d.guv * ku * kv + d.gvv * kv * kv;
            grid[static_cast<std::size_t>(j) * n + i] *= (sym - d.pot);
        }
    fft2(grid, true);

    std::vector<double> out(f.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = grid[k].real();
    return out;
}

}  // namespace willmore
