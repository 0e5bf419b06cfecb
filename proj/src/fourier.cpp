#include "willmore/fourier.hpp"

#include <cmath>

namespace willmore {

FourierSeries::FourierSeries(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : a_(std::move(cos_coeffs)), b_(std::move(sin_coeffs)) {}

double FourierSeries::eval(double t, int deriv) const {
    double s = (deriv == 0 && !a_.empty()) ? a_[0] : 0.0;
    const std::size_t kmax = std::max(a_.size(), b_.size());
    for (std::size_t k = 1; k < kmax; ++k) {
        const double kk = static_cast<double>(k);
        const double a = k < a_.size() ? a_[k] : 0.0;
        const double b = k < b_.size() ? b_[k] : 0.0;
        double ca = a, cb = b;
        // d/dt rotates (cos, sin) -> (-k sin, k cos).
        for (int d = 0; d < deriv; ++d) {
            const double na = kk * cb;
            const double nb = -kk * ca;
            ca = na;
            cb = nb;
        }
        s += ca * std::cos(kk * t) + cb * std::sin(kk * t);
    }
    return s;
}

void fft(std::vector<std::complex<double>>& x, bool inverse) {
    const std::size_t n = x.size();
    if (n == 0 || (n & (n - 1)) != 0) throw InvalidInput("fft: size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 1.0 : -1.0) * kTwoPi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> a = x[i + k];
                const std::complex<double> b = x[i + k + len / 2] * w;
                x[i + k] = a + b;
                x[i + k + len / 2] = a - b;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& c : x) c /= static_cast<double>(n);
}

TrigInterpolant::TrigInterpolant(const std::vector<std::complex<double>>& samples,
                                 double trunc_rel) {
    std::vector<std::complex<double>> c = samples;
    fft(c, false);
    const std::size_t n = c.size();
    for (auto& z : c) z /= static_cast<double>(n);

    double cmax = 0.0;
    for (const auto& z : c) cmax = std::max(cmax, std::abs(z));
    const double cutoff = trunc_rel * cmax;

    // Band-limit at the last significant frequency. Everything inside the
    // band is kept (low-frequency noise is harmless under differentiation);
    // the tail of integrator/rounding noise beyond it is dropped wholesale,
    // since |k|^2 amplification would otherwise dominate second derivatives.
    auto signed_freq = [n](std::size_t i) {
        return (i <= n / 2) ? static_cast<double>(i)
                            : static_cast<double>(i) - static_cast<double>(n);
    };
    double band = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(c[i]) >= cutoff) band = std::max(band, std::abs(signed_freq(i)));

    modes_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double k = signed_freq(i);
        if (std::abs(k) <= band) modes_.push_back({k, c[i]});
    }
}

std::complex<double> TrigInterpolant::eval(double t, int deriv) const {
    std::complex<double> s(0.0, 0.0);
    for (const auto& m : modes_) {
        std::complex<double> coeff = m.c;
        for (int d = 0; d < deriv; ++d) coeff *= std::complex<double>(0.0, m.k);
        s += coeff * std::complex<double>(std::cos(m.k * t), std::sin(m.k * t));
    }
    return s;
}

}  // namespace willmore
