#include "ridgelab/ridgelet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ridgelab/radon.hpp"
#include "ridgelab/wavelet.hpp"
#include "spectral_rows.hpp"

namespace ridgelab {

namespace {

SampledField sample_source(const Source& source, const CartesianGrid& grid) {
    if (source.is_sampled() && source.sampled().grid == grid) return source.sampled();
    return SampledField::from_function(grid, [&](const Vec3& x) { return source.value(x); });
}

cplx grid_pairing(const SampledField& f, const SampledField& g) {
    ComplexCompensatedSum s;
    for (std::size_t q = 0; q < f.values.size(); ++q) s.add(f.values[q] * g.values[q]);
    return s.value() * f.grid.cell_volume();
}

std::vector<double> ygrid_scale_weights(const YGrid& grid) {
    std::vector<double> w(grid.scales().count());
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = grid.scale_weight(j);
    return w;
}

std::vector<std::size_t> window_nodes(const ScaleGrid& scales, double lo, double hi) {
    std::vector<std::size_t> nodes;
    for (std::size_t j = 0; j < scales.count(); ++j)
        if (scales[j] >= lo * (1 - 1e-12) && scales[j] <= hi * (1 + 1e-12)) nodes.push_back(j);
    return nodes;
}

}  // namespace

RidgeletField ridgelet_from_slices(const SpectralSlices& slices, const ActivationFunction& psi, const YGrid& grid) {
    if (!(slices.directions == grid.directions())) throw ShapeError("ridgelet: slices and YGrid use different directions");
    RidgeletField out(grid);
    const std::size_t M = slices.omega.count(), nb = grid.b_axis().count(), na = grid.scales().count();
    InverseTransform inverse(slices.omega, grid.b_axis());
    const auto filters = detail::analysis_filters(psi, grid.scales(), slices.omega);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < grid.directions().size(); ++k) {
        std::vector<cplx> row(slices.values.begin() + static_cast<std::ptrdiff_t>(k * M),
                              slices.values.begin() + static_cast<std::ptrdiff_t>((k + 1) * M));
        detail::analyze_row(row, filters, inverse, nb, na, out.values.data() + grid.index(k, 0, 0));
    }
    return out;
}

RidgeletField ridgelet(const Source& source, const ActivationFunction& psi, const YGrid& grid, const Axis& omega) {
    if (source.dimension() != grid.dimension()) throw ShapeError("ridgelet: source and YGrid dimensions differ");
    return ridgelet_from_slices(spectral_slices(source, grid.directions(), omega), psi, grid);
}

cplx ridgelet_direct(const Source& source, const ActivationFunction& psi, const Vec3& u, double b, double a) {
    if (source.is_sampled()) {
        const SampledField& f = source.sampled();
        ComplexCompensatedSum s;
        for (std::size_t q = 0; q < f.values.size(); ++q) {
            const double t = (dot(f.grid.point(q), u) - b) / a;
            s.add(f.values[q] * std::conj(psi.value(t)));
        }
        return s.value() * f.grid.cell_volume() / a;
    }
    const double R = source.analytic().support_radius();
    const double reach = psi.spatial_extent() * a;
    const double lo = std::max(-R, b - reach), hi = std::min(R, b + reach);
    if (lo >= hi) return 0.0;
    std::vector<double> knots;
    const int pieces = 16;
    for (int i = 0; i <= pieces; ++i) knots.push_back(lo + (hi - lo) * i / pieces);
    auto integrand = [&](double p) { return radon_direct(source, u, p) * std::conj(psi.value((p - b) / a)) / a; };
    return integrate_pieces(integrand, knots, 1e-11, 1e-300).value;
}

RidgeletField ridgelet_point_mass(const PointMass& delta, const ActivationFunction& psi, const YGrid& grid) {
    RidgeletField out(grid);
    const auto& dirs = grid.directions();
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        const double p = dot(delta.location, dirs[k]);
        for (std::size_t i = 0; i < grid.b_axis().count(); ++i)
            for (std::size_t j = 0; j < grid.scales().count(); ++j) {
                const double a = grid.scales()[j];
                out.at(k, i, j) = delta.weight * std::conj(psi.value((p - grid.b_axis()[i]) / a)) / a;
            }
    }
    return out;
}

SampledField synthesis(const RidgeletField& field, const ActivationFunction& psi, const CartesianGrid& grid) {
    if (field.grid.dimension() != grid.dimension()) throw ShapeError("synthesis: dimension mismatch");
    ProfileSynthesizer synth(field, psi, ygrid_scale_weights(field.grid));
    const DirectionSet& dirs = field.grid.directions();
    SampledField out(grid);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t q = 0; q < grid.size(); ++q) {
        const Vec3 x = grid.point(q);
        cplx acc = 0.0;
        for (std::size_t k = 0; k < dirs.size(); ++k) acc += dirs.weight(k) * synth.evaluate(k, dot(x, dirs[k]));
        out.values[q] = acc;
    }
    return out;
}

cplx synthesis_at(const RidgeletField& field, const ActivationFunction& psi, const Vec3& x) {
    ProfileSynthesizer synth(field, psi, ygrid_scale_weights(field.grid));
    const DirectionSet& dirs = field.grid.directions();
    ComplexCompensatedSum acc;
    for (std::size_t k = 0; k < dirs.size(); ++k) acc.add(dirs.weight(k) * synth.evaluate(k, dot(x, dirs[k])));
    return acc.value();
}

Reconstruction reconstruct(const Source& f, const ReconstructionPair& pair, const YGrid& ygrid, const Axis& omega,
                           const CartesianGrid& grid) {
    RidgeletField coefficients = ridgelet(f, pair.psi, ygrid, omega);
    SampledField rec = synthesis(coefficients, pair.eta, grid);
    for (cplx& v : rec.values) v /= pair.K;
    SampledField reference = sample_source(f, grid);
    double err = relative_l2(rec, reference);
    return {std::move(rec), err};
}

IdentityCheck parseval_check(const Source& f, const Source& g, const ReconstructionPair& pair, const YGrid& ygrid,
                             const Axis& omega, const CartesianGrid& grid) {
    const cplx lhs = grid_pairing(sample_source(f, grid), sample_source(g, grid));
    RidgeletField rf = ridgelet(f, pair.psi, ygrid, omega);
    RidgeletField rg = ridgelet(g, pair.eta.conjugate(), ygrid, omega);
    const cplx rhs = y_integral(multiply(rf, rg)) / pair.K;
    return make_check(lhs, rhs);
}

RidgeletField separable_bump(const YGrid& grid, double b0, double b_width, double a0, double log_width,
                             const std::function<cplx(const Vec3&)>& direction_profile) {
    RidgeletField out(grid);
    const auto& dirs = grid.directions();
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        const cplx phi_u = direction_profile ? direction_profile(dirs[k]) : cplx(1.0);
        for (std::size_t i = 0; i < grid.b_axis().count(); ++i)
            for (std::size_t j = 0; j < grid.scales().count(); ++j) {
                const double db = (grid.b_axis()[i] - b0) / b_width;
                const double dl = std::log(grid.scales()[j] / a0) / log_width;
                const double e = -0.5 * (db * db + dl * dl);
                out.at(k, i, j) = e < -36.0 ? cplx(0.0) : phi_u * std::exp(e);
            }
    }
    return out;
}

IdentityCheck transpose_check(const Source& f, const RidgeletField& phi, const ActivationFunction& psi,
                              const Axis& omega, const CartesianGrid& grid) {
    const cplx lhs = grid_pairing(sample_source(f, grid), synthesis(phi, psi, grid));
    RidgeletField rf = ridgelet(f, psi.conjugate(), phi.grid, omega);
    const cplx rhs = y_integral(multiply(rf, phi));
    return make_check(lhs, rhs);
}

FactorizationCheck factorization_check(const Source& f, const ActivationFunction& psi, const YGrid& ygrid,
                                       const Axis& omega, const Axis& p_axis) {
    SpectralSlices slices = spectral_slices(f, ygrid.directions(), omega);
    RidgeletField direct = ridgelet_from_slices(slices, psi, ygrid);
    SinogramField sino = radon_from_slices(slices, p_axis);
    RidgeletField via = cwt_sinogram(sino, psi, ygrid.b_axis(), ygrid.scales(), omega);
    double num = 0.0, den = 0.0, other = 0.0;
    for (std::size_t q = 0; q < direct.values.size(); ++q) {
        num = std::max(num, std::abs(direct.values[q] - via.values[q]));
        den = std::max(den, std::abs(direct.values[q]));
        other = std::max(other, std::abs(via.values[q]));
    }
    return {den == 0.0 ? num : num / den, den, other};
}

RadonViaRidgelet radon_via_ridgelet(const Source& f, const ReconstructionPair& pair, const YGrid& ygrid,
                                    const Axis& omega, const Axis& p_axis) {
    SpectralSlices slices = spectral_slices(f, ygrid.directions(), omega);
    RidgeletField coefficients = scale_power(ridgelet_from_slices(slices, pair.psi, ygrid), ygrid.dimension() - 1);
    ProfileSynthesizer synth(coefficients, pair.eta, ygrid_scale_weights(ygrid));
    SinogramField out(ygrid.directions(), p_axis);
    const std::size_t K = ygrid.directions().size();
#pragma omp parallel for collapse(2) schedule(static)
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < p_axis.count(); ++i) out.at(k, i) = synth.evaluate(k, p_axis[i]) / pair.c;
    SinogramField reference = radon_from_slices(slices, p_axis);
    const double err = relative_l2(out, reference);
    return {std::move(out), std::move(reference), err};
}

IdentityCheck desingularization_check(const Source& f, const Source& phi, const ReconstructionPair& pair,
                                      const YGrid& ygrid, const Axis& omega, const Axis& p_axis,
                                      const CartesianGrid& grid) {
    const cplx lhs = grid_pairing(sample_source(f, grid), sample_source(phi, grid));
    SinogramField rf = radon(f, ygrid.directions(), p_axis, omega);
    RidgeletField w = cwt_sinogram(rf, pair.psi, ygrid.b_axis(), ygrid.scales(), omega);
    RidgeletField rphi = ridgelet(phi, pair.eta.conjugate(), ygrid, omega);
    const cplx rhs = y_integral(multiply(w, rphi)) / pair.K;
    return make_check(lhs, rhs);
}

IdentityCheck desingularization_check(const PointMass& delta, const TestFunction& phi, const ReconstructionPair& pair,
                                      const YGrid& ygrid, const Axis& omega) {
    const cplx lhs = delta.weight * phi.value(delta.location);
    RidgeletField w = ridgelet_point_mass(delta, pair.psi, ygrid);
    RidgeletField rphi = ridgelet(phi, pair.eta.conjugate(), ygrid, omega);
    const cplx rhs = y_integral(multiply(w, rphi)) / pair.K;
    return make_check(lhs, rhs);
}

DecayProbe decay_probe(const RidgeletField& field, int s, int r, double a_lo, double a_hi) {
    const YGrid& g = field.grid;
    const auto nodes = window_nodes(g.scales(), a_lo, a_hi);
    if (nodes.size() < 3) throw std::invalid_argument("decay_probe: fewer than three scales inside the fit window");
    double sup = 0.0;
    std::vector<double> column_max(g.scales().count(), 0.0);
    for (std::size_t k = 0; k < g.directions().size(); ++k)
        for (std::size_t i = 0; i < g.b_axis().count(); ++i) {
            const double b = g.b_axis()[i];
            const double bw = std::pow(1.0 + b * b, 0.5 * r);
            for (std::size_t j = 0; j < g.scales().count(); ++j) {
                const double a = g.scales()[j];
                const double m = std::abs(field.at(k, i, j));
                sup = std::max(sup, (std::pow(a, s) + std::pow(a, -s)) * bw * m);
                column_max[j] = std::max(column_max[j], m);
            }
        }
    std::vector<double> x, y;
    for (std::size_t j : nodes) {
        if (column_max[j] == 0.0) continue;
        x.push_back(std::log(g.scales()[j]));
        y.push_back(std::log(column_max[j]));
    }
    LineFit fit{0.0, 0.0};
    if (x.size() >= 2) fit = fit_line(x, y);
    return {sup, fit, x.size()};
}

Remark43Demo remark43_demo(const YGrid& ygrid, const Axis& omega, double plateau_lo, double plateau_hi,
                           double slope_lo, double slope_hi) {
    const int n = ygrid.dimension();
    const std::size_t i0 = ygrid.b_axis().nearest(0.0);
    if (std::abs(ygrid.b_axis()[i0]) > 1e-12 * ygrid.b_axis().spacing())
        throw std::invalid_argument("remark43_demo: the b axis must contain b = 0");
    const auto plateau_nodes = window_nodes(ygrid.scales(), plateau_lo, plateau_hi);
    const auto slope_nodes = window_nodes(ygrid.scales(), slope_lo, slope_hi);
    if (plateau_nodes.size() < 3 || slope_nodes.size() < 3)
        throw std::invalid_argument("remark43_demo: scale grid leaves fewer than three nodes in a fit window");

    RidgeletField field = ridgelet(TestFunction::gaussian(n), ActivationFunction::remark43(n), ygrid, omega);
    Remark43Demo demo;
    const double target = 24.0 * std::sqrt(std::numbers::pi);
    for (std::size_t j = 0; j < ygrid.scales().count(); ++j) {
        demo.scales.push_back(ygrid.scales()[j]);
        demo.scaled_values.push_back(ygrid.scales()[j] * field.at(0, i0, j).real());
    }

    std::vector<double> ones, inv, inv2, v;
    demo.pointwise_deviation = 0.0;
    for (std::size_t j : plateau_nodes) {
        const double a = demo.scales[j];
        ones.push_back(1.0);
        inv.push_back(1.0 / a);
        inv2.push_back(1.0 / (a * a));
        v.push_back(demo.scaled_values[j]);
        demo.pointwise_deviation = std::max(demo.pointwise_deviation, std::abs(demo.scaled_values[j] - target) / target);
    }
    demo.plateau = least_squares({ones, inv, inv2}, v)[0];

    std::vector<double> x, y;
    for (std::size_t j : slope_nodes) {
        x.push_back(std::log(demo.scales[j]));
        y.push_back(std::log(std::abs(field.at(0, i0, j))));
    }
    demo.slope_fit = fit_line(x, y);
    return demo;
}

}  // namespace ridgelab
