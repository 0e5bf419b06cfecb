#include "willmore/parallel.hpp"

namespace willmore {

namespace {
Exec g_default = Exec::Parallel;
}

Exec default_exec() { return g_default; }
void set_default_exec(Exec e) { g_default = e; }

namespace detail {

double pairwise_sum(const double* x, std::size_t n) {
    if (n <= 16) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += x[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

}  // namespace detail
}  // namespace willmore
