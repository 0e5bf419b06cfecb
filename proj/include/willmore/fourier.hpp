#pragma once

#include "willmore/types.hpp"

#include <complex>
#include <vector>

namespace willmore {

/// Real trigonometric series a0 + sum_k (a_k cos kt + b_k sin kt) with exact
/// derivatives of any order.
class FourierSeries {
public:
    FourierSeries() = default;
    FourierSeries(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    static FourierSeries constant(double c) { return FourierSeries({c}, {}); }

    /// d-th derivative at t.
    double eval(double t, int deriv = 0) const;

    const std::vector<double>& cos_coeffs() const { return a_; }
    const std::vector<double>& sin_coeffs() const { return b_; }
    bool empty() const { return a_.empty() && b_.empty(); }

private:
    std::vector<double> a_;  // a_[k] multiplies cos(kt); a_[0] is the constant
    std::vector<double> b_;  // b_[k] multiplies sin(kt); b_[0] unused (zero)
};

/// In-place radix-2 complex FFT (n must be a power of two).
void fft(std::vector<std::complex<double>>& x, bool inverse);

/// Complex trigonometric interpolant built from equispaced periodic samples
/// on [0, 2pi): evaluates the band-limited interpolant and its derivatives
/// anywhere. The band ends at the last coefficient reaching `trunc_rel`
/// times the largest magnitude; the noise tail beyond it is dropped.
class TrigInterpolant {
public:
    TrigInterpolant() = default;
    TrigInterpolant(const std::vector<std::complex<double>>& samples, double trunc_rel = 1e-12);

    std::complex<double> eval(double t, int deriv = 0) const;
    int mode_count() const { return static_cast<int>(modes_.size()); }

private:
    struct Mode {
        double k;
        std::complex<double> c;
    };
    std::vector<Mode> modes_;
};

}  // namespace willmore
