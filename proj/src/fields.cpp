#include "ridgelab/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ridgelab/numeric.hpp"

namespace ridgelab {

SampledField::SampledField(CartesianGrid g, std::vector<cplx> v) : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.size()) throw ShapeError("SampledField: value count does not match grid");
}

SampledField SampledField::from_function(const CartesianGrid& g, const std::function<cplx(const Vec3&)>& f) {
    SampledField out(g);
    for (std::size_t q = 0; q < g.size(); ++q) out.values[q] = f(g.point(q));
    return out;
}

SinogramField::SinogramField(DirectionSet d, Axis p)
    : directions(std::move(d)), p_axis(p), values(directions.size() * p_axis.count()) {}

SinogramField::SinogramField(DirectionSet d, Axis p, std::vector<cplx> v)
    : directions(std::move(d)), p_axis(p), values(std::move(v)) {
    if (values.size() != directions.size() * p_axis.count()) throw ShapeError("SinogramField: value count mismatch");
}

SinogramField SinogramField::from_function(const DirectionSet& d, const Axis& p,
                                           const std::function<cplx(const Vec3&, double)>& f) {
    SinogramField out(d, p);
    for (std::size_t k = 0; k < d.size(); ++k)
        for (std::size_t i = 0; i < p.count(); ++i) out.at(k, i) = f(d[k], p[i]);
    return out;
}

RidgeletField::RidgeletField(YGrid g, std::vector<cplx> v) : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid.size()) throw ShapeError("RidgeletField: value count mismatch");
}

RidgeletField RidgeletField::from_function(const YGrid& g,
                                           const std::function<cplx(const Vec3&, double, double)>& f) {
    RidgeletField out(g);
    const auto& dirs = g.directions();
    for (std::size_t k = 0; k < dirs.size(); ++k)
        for (std::size_t i = 0; i < g.b_axis().count(); ++i)
            for (std::size_t j = 0; j < g.scales().count(); ++j) out.at(k, i, j) = f(dirs[k], g.b_axis()[i], g.scales()[j]);
    return out;
}

double relative_gap(cplx lhs, cplx rhs) {
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

IdentityCheck make_check(cplx lhs, cplx rhs) { return {lhs, rhs, relative_gap(lhs, rhs)}; }

cplx y_integral(const RidgeletField& field) { return y_integral(field.grid, field.values); }

RidgeletField multiply(const RidgeletField& a, const RidgeletField& b) {
    if (!(a.grid == b.grid)) throw ShapeError("multiply: fields live on different YGrids");
    RidgeletField out(a.grid);
    for (std::size_t q = 0; q < out.values.size(); ++q) out.values[q] = a.values[q] * b.values[q];
    return out;
}

RidgeletField scale_power(const RidgeletField& field, double s) {
    RidgeletField out = field;
    const auto& scales = field.grid.scales();
    std::vector<double> factor(scales.count());
    for (std::size_t j = 0; j < scales.count(); ++j) factor[j] = std::pow(scales[j], s);
    for (std::size_t q = 0; q < out.values.size(); ++q) out.values[q] *= factor[q % scales.count()];
    return out;
}

namespace {

double ratio(double num, double den) {
    if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(num / den);
}

}  // namespace

double relative_l2(const SampledField& approx, const SampledField& reference) {
    if (!(approx.grid == reference.grid)) throw ShapeError("relative_l2: grids differ");
    CompensatedSum num, den;
    for (std::size_t q = 0; q < approx.values.size(); ++q) {
        num.add(std::norm(approx.values[q] - reference.values[q]));
        den.add(std::norm(reference.values[q]));
    }
    return ratio(num.value(), den.value());
}

double relative_l2(const SinogramField& approx, const SinogramField& reference) {
    if (!(approx.directions == reference.directions) || !(approx.p_axis == reference.p_axis)) {
        throw ShapeError("relative_l2: sinogram grids differ");
    }
    CompensatedSum num, den;
    for (std::size_t k = 0; k < approx.directions.size(); ++k) {
        for (std::size_t i = 0; i < approx.p_axis.count(); ++i) {
            double w = approx.directions.weight(k) * approx.p_axis.trapezoid_weight(i);
            num.add(w * std::norm(approx.at(k, i) - reference.at(k, i)));
            den.add(w * std::norm(reference.at(k, i)));
        }
    }
    return ratio(num.value(), den.value());
}

}  // namespace ridgelab
