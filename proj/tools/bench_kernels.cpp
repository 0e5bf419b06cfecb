// Compares the serial reference kernels with the OpenMP ones on the heavy
// inner loops: quadrature reductions, offset profiles, landscape slices and
// operator assembly. The two paths must agree bitwise; the table reports the
// timings and the speedup.

#include "willmore/canonical_family.hpp"
#include "willmore/parallel.hpp"
#include "willmore/shapes.hpp"
#include "willmore/spectral.hpp"
#include "willmore/transform.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace willmore;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
    f();  // warm up
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < reps; ++k) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char* name, double value_serial, double value_parallel, double ms_serial,
         double ms_parallel) {
    std::printf("%-34s %12.3f %12.3f %8.2fx   %s\n", name, ms_serial, ms_parallel,
                ms_serial / ms_parallel,
                value_serial == value_parallel ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP off)\n");
#endif
    std::printf("%-34s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

    const QuadratureGrid q(512);
    const auto clifford = clifford_torus();
    const auto lifted = stereographic_lift(tube_torus(2.0, 1.0));

    {
        auto f = [](const Jet&, const CurvatureSample& c) { return 1.0 + c.H * c.H; };
        double vs = 0, vp = 0;
        const double ts = time_ms([&] { vs = integrate(clifford, q, f, Exec::Serial); }, 3);
        const double tp = time_ms([&] { vp = integrate(clifford, q, f, Exec::Parallel); }, 3);
        row("willmore energy 512^2", vs, vp, ts, tp);
    }
    {
        auto f = [](const Jet&, const CurvatureSample& c) { return 1.0 + c.H * c.H; };
        double vs = 0, vp = 0;
        const double ts = time_ms([&] { vs = integrate(lifted, q, f, Exec::Serial); }, 3);
        const double tp = time_ms([&] { vp = integrate(lifted, q, f, Exec::Parallel); }, 3);
        row("lifted-tube energy 512^2", vs, vp, ts, tp);
    }
    {
        std::vector<double> ts_list(64);
        for (int k = 0; k < 64; ++k) ts_list[k] = -kPi + kTwoPi * (k + 0.5) / 64.0;
        const QuadratureGrid q128(128);
        double vs = 0, vp = 0;
        const Exec before = default_exec();
        const double ts = time_ms(
            [&] {
                set_default_exec(Exec::Serial);
                vs = offset_area_profile(clifford, ts_list, q128).back();
            },
            3);
        const double tp = time_ms(
            [&] {
                set_default_exec(Exec::Parallel);
                vp = offset_area_profile(clifford, ts_list, q128).back();
            },
            3);
        set_default_exec(before);
        row("offset profile 64 x 128^2", vs, vp, ts, tp);
    }
    {
        const QuadratureGrid q64(64);
        double vs = 0, vp = 0;
        const Exec before = default_exec();
        const double ts = time_ms(
            [&] {
                set_default_exec(Exec::Serial);
                vs = family_area(lifted, FamilyPoint(ConformalParam(Vec4(0.2, 0, 0, 0)), 0.3),
                                 q64);
            },
            5);
        const double tp = time_ms(
            [&] {
                set_default_exec(Exec::Parallel);
                vp = family_area(lifted, FamilyPoint(ConformalParam(Vec4(0.2, 0, 0, 0)), 0.3),
                                 q64);
            },
            5);
        set_default_exec(before);
        row("family area 64^2", vs, vp, ts, tp);
    }
    {
        double vs = 0, vp = 0;
        const double ts = time_ms(
            [&] { vs = serial::sum_map(1 << 22, [](std::size_t i) { return std::sin(1e-6 * i); }); },
            3);
        const double tp = time_ms(
            [&] {
                vp = sum_map(1 << 22, [](std::size_t i) { return std::sin(1e-6 * i); },
                             Exec::Parallel);
            },
            3);
        row("map-reduce 4M", vs, vp, ts, tp);
    }
    return 0;
}
