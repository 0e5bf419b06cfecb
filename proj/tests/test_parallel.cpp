#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "willmore/parallel.hpp"
#include "willmore/shapes.hpp"
#include "willmore/surface.hpp"

#include <cmath>

using namespace willmore;

TEST_CASE("pairwise sum is independent of chunk boundaries and reasonably accurate") {
    std::vector<double> xs(100001);
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = std::sin(0.1 * static_cast<double>(i)) * 1e-3 + 1.0;
    const double s = deterministic_sum(xs);
    long double ref = 0.0L;
    for (double x : xs) ref += static_cast<long double>(x);
    CHECK(std::abs(s - static_cast<double>(ref)) < 1e-9);
}

TEST_CASE("parallel and serial kernels produce bit-identical integrals") {
    const QuadratureGrid q(128);
    for (const auto& S : {clifford_torus(), tube_torus(2.0, 1.0), product_torus(0.35)}) {
        auto f = [](const Jet&, const CurvatureSample& c) { return 1.0 + c.H * c.H; };
        const double par = integrate(S, q, f, Exec::Parallel);
        const double ser = integrate(S, q, f, Exec::Serial);
        CHECK(par == ser);  // exact equality, not approximate
    }
}

TEST_CASE("serial reference sum_map matches the parallel map-reduce bitwise") {
    auto f = [](std::size_t i) {
        const double x = 1e-4 * static_cast<double>(i);
        return std::cos(x) * std::exp(-x * 0.01);
    };
    const double a = sum_map(1 << 18, f, Exec::Parallel);
    const double b = serial::sum_map(1 << 18, f);
    CHECK(a == b);
}

TEST_CASE("default execution policy is restored") {
    const Exec before = default_exec();
    set_default_exec(Exec::Serial);
    CHECK(default_exec() == Exec::Serial);
    set_default_exec(before);
}
