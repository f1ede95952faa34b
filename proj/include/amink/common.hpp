#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace amink {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double t) const { return {x * t, y * t}; }
    bool operator==(const Vec2&) const = default;
};

inline Vec2 operator*(double t, Vec2 v) { return v * t; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Direction of a support/gauge query; 1-homogeneity makes normalization optional.
using Direction = Vec2;

// Absolute tolerance for geometric predicates at unit scale.
inline constexpr double kGeomTol = 1e-12;

/// Small deterministic RNG (SplitMix64). Used everywhere a seed appears so
/// that studies and tests reproduce bit-identically across platforms;
/// std::uniform_*_distribution is not portable across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double next_double(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

/// Fixed-order pairwise reduction; deterministic regardless of thread count
/// and more accurate than a running sum on long inputs.
double pairwise_sum(std::span<const double> values);

}  // namespace amink
