#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace willmore {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Error thrown when an input violates a documented precondition.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Error thrown when a surface fails the immersion requirement at a node.
struct DegenerateImmersion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Error thrown when an iterative solve fails to converge.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deterministic RNG. Wraps a fixed 64-bit generator and maps outputs to
/// doubles explicitly so that streams are identical across platforms and
/// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

    Vec4 normal4() { return Vec4(normal(), normal(), normal(), normal()); }

    /// Uniform direction on S^3.
    Vec4 unit4() {
        Vec4 g = normal4();
        while (g.norm() < 1e-8) g = normal4();
        return g.normalized();
    }

    /// Uniform in the ball of radius rmax in R^4.
    Vec4 ball4(double rmax) {
        double r = rmax * std::pow(uniform(), 0.25);
        return r * unit4();
    }

private:
    std::uint64_t state_;
};

}  // namespace willmore
