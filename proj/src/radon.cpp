#include "ridgelab/radon.hpp"

#include <algorithm>
#include <cmath>

#include "ridgelab/numeric.hpp"

namespace ridgelab {

namespace {

// Orthonormal basis of the hyperplane orthogonal to u.
std::array<Vec3, 2> complement(const Vec3& u, int n) {
    if (n == 2) return {Vec3{-u[1], u[0], 0.0}, Vec3{0.0, 0.0, 0.0}};
    Vec3 seed = std::abs(u[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    double s = dot(seed, u);
    Vec3 e1{seed[0] - s * u[0], seed[1] - s * u[1], seed[2] - s * u[2]};
    double norm = std::sqrt(dot(e1, e1));
    for (double& c : e1) c /= norm;
    Vec3 e2{u[1] * e1[2] - u[2] * e1[1], u[2] * e1[0] - u[0] * e1[2], u[0] * e1[1] - u[1] * e1[0]};
    return {e1, e2};
}

std::vector<double> linspace_knots(double lo, double hi, int pieces) {
    std::vector<double> k;
    for (int i = 0; i <= pieces; ++i) k.push_back(lo + (hi - lo) * i / pieces);
    return k;
}

}  // namespace

SinogramField radon_from_slices(const SpectralSlices& slices, const Axis& p_axis) {
    SinogramField out(slices.directions, p_axis);
    const std::size_t M = slices.omega.count(), P = p_axis.count();
    InverseTransform inverse(slices.omega, p_axis);
#pragma omp parallel for schedule(static)
    for (std::size_t k = 0; k < slices.directions.size(); ++k) {
        inverse.apply(std::span<const cplx>(slices.values.data() + k * M, M), std::span<cplx>(out.values.data() + k * P, P));
    }
    return out;
}

SinogramField radon(const Source& source, const DirectionSet& directions, const Axis& p_axis, const Axis& omega) {
    return radon_from_slices(spectral_slices(source, directions, omega), p_axis);
}

cplx radon_direct(const Source& source, const Vec3& u, double p) {
    const int n = source.dimension();
    const auto basis = complement(u, n);
    const Vec3 base{p * u[0], p * u[1], p * u[2]};
    auto at = [&](double s, double t) {
        const Vec3& e1 = basis[0];
        const Vec3& e2 = basis[1];
        return source.value({base[0] + s * e1[0] + t * e2[0], base[1] + s * e1[1] + t * e2[1], base[2] + s * e1[2] + t * e2[2]});
    };

    double R;
    double rel = 1e-12;
    if (source.is_sampled()) {
        const auto& g = source.sampled().grid;
        double r2 = 0.0;
        for (int d = 0; d < n; ++d) {
            double m = std::max(std::abs(g.axis(d).min()), std::abs(g.axis(d).max()));
            r2 += m * m;
        }
        R = std::sqrt(r2);
        rel = 1e-9;
    } else {
        R = source.analytic().support_radius();
    }
    if (std::abs(p) > R) return 0.0;
    const double half = std::sqrt(R * R - p * p);
    const int pieces = source.is_sampled() ? 64 : 8;
    auto knots = linspace_knots(-half, half, pieces);
    if (n == 2) return integrate_pieces([&](double s) { return at(s, 0.0); }, knots, rel, 1e-300).value;
    auto inner = [&](double s) {
        double h = std::sqrt(std::max(0.0, half * half - s * s));
        if (h == 0.0) return cplx(0.0);
        return integrate_pieces([&](double t) { return at(s, t); }, linspace_knots(-h, h, pieces), rel, 1e-300).value;
    };
    return integrate_pieces(inner, knots, rel, 1e-300).value;
}

BackProjection dual_radon(const SinogramField& sinogram, const CartesianGrid& grid) {
    if (sinogram.directions.dimension() != grid.dimension()) throw ShapeError("dual_radon: dimension mismatch");
    BackProjection out{SampledField(grid), 0};
    const Axis& p = sinogram.p_axis;
    const std::size_t P = p.count();
    std::size_t missed = 0;
#pragma omp parallel for schedule(static) reduction(+ : missed)
    for (std::size_t q = 0; q < grid.size(); ++q) {
        const Vec3 x = grid.point(q);
        cplx acc = 0.0;
        for (std::size_t k = 0; k < sinogram.directions.size(); ++k) {
            double t = (dot(sinogram.directions[k], x) - p.min()) / p.spacing();
            if (t < 0.0 || t > static_cast<double>(P - 1)) {
                ++missed;
                continue;
            }
            auto i0 = std::min(static_cast<std::size_t>(t), P - 2);
            double frac = t - static_cast<double>(i0);
            cplx v = (1.0 - frac) * sinogram.at(k, i0) + frac * sinogram.at(k, i0 + 1);
            acc += sinogram.directions.weight(k) * v;
        }
        out.field.values[q] = acc;
    }
    out.out_of_range = missed;
    return out;
}

IdentityCheck duality_check(const SampledField& f, const SinogramFunction& rho, const DirectionSet& directions,
                            const Axis& p_axis, const Axis& omega) {
    SinogramField rho_samples = SinogramField::from_function(directions, p_axis, rho);
    BackProjection back = dual_radon(rho_samples, f.grid);
    ComplexCompensatedSum lhs;
    for (std::size_t q = 0; q < f.values.size(); ++q) lhs.add(f.values[q] * back.field.values[q]);

    SinogramField rf = radon(Source(f), directions, p_axis, omega);
    ComplexCompensatedSum rhs;
    for (std::size_t k = 0; k < directions.size(); ++k)
        for (std::size_t i = 0; i < p_axis.count(); ++i)
            rhs.add(directions.weight(k) * p_axis.trapezoid_weight(i) * rf.at(k, i) * rho_samples.at(k, i));
    return make_check(lhs.value() * f.grid.cell_volume(), rhs.value());
}

std::vector<cplx> radon_moments(const SinogramField& sinogram, int k) {
    std::vector<cplx> out(sinogram.directions.size());
    for (std::size_t d = 0; d < sinogram.directions.size(); ++d) {
        ComplexCompensatedSum s;
        for (std::size_t i = 0; i < sinogram.p_axis.count(); ++i) {
            double p = sinogram.p_axis[i];
            s.add(std::pow(p, k) * sinogram.p_axis.trapezoid_weight(i) * sinogram.at(d, i));
        }
        out[d] = s.value();
    }
    return out;
}

}  // namespace ridgelab
