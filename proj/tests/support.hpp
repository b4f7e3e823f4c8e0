#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "ridgelab/grid.hpp"

namespace testsupport {

using ridgelab::cplx;
using ridgelab::Vec3;

inline constexpr double kPi = std::numbers::pi;
inline const double kSqrtPi = std::sqrt(std::numbers::pi);

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

inline Vec3 unit(double theta) { return {std::cos(theta), std::sin(theta), 0.0}; }

inline double max_abs(std::span<const cplx> v) {
    double m = 0.0;
    for (const cplx& x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// max |a - b| / max |b|
inline double max_rel_diff(std::span<const cplx> a, std::span<const cplx> b) {
    const double scale = max_abs(b);
    return scale > 0.0 ? max_abs_diff(a, b) / scale : max_abs(a);
}

inline std::vector<cplx> combine(cplx alpha, std::span<const cplx> a, cplx beta, std::span<const cplx> b) {
    std::vector<cplx> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = alpha * a[i] + beta * b[i];
    return out;
}

}  // namespace testsupport
