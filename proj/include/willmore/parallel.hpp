#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace willmore {

/// Execution policy for the data-parallel kernels. Parallel and Serial
/// produce bit-identical results: buffers are filled elementwise and
/// reduced in a fixed pairwise order, so the thread count never changes
/// the floating-point operation sequence of any single value.
enum class Exec { Serial, Parallel };

/// Process-wide default used by the high-level entry points.
Exec default_exec();
void set_default_exec(Exec e);

namespace detail {
double pairwise_sum(const double* x, std::size_t n);
}

/// Sum with a fixed pairwise reduction order (independent of thread count).
inline double deterministic_sum(std::span<const double> x) {
    return detail::pairwise_sum(x.data(), x.size());
}

/// Fill out[i] = f(i) for i in [0,n). The OpenMP and serial paths produce
/// identical buffers.
template <class F>
void parallel_fill(std::vector<double>& out, std::size_t n, F&& f, Exec exec) {
    out.resize(n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    }
}

/// Serial reference implementations, kept for testing the parallel kernels.
namespace serial {

template <class F>
double sum_map(std::size_t n, F&& f) {
    std::vector<double> buf(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = f(i);
    return detail::pairwise_sum(buf.data(), buf.size());
}

}  // namespace serial

/// Map-reduce over [0,n): buffer fill (possibly parallel) followed by the
/// deterministic pairwise sum.
template <class F>
double sum_map(std::size_t n, F&& f, Exec exec) {
    std::vector<double> buf;
    parallel_fill(buf, n, f, exec);
    return detail::pairwise_sum(buf.data(), buf.size());
}

template <class F>
double sum_map(std::size_t n, F&& f) {
    return sum_map(n, f, default_exec());
}

}  // namespace willmore
