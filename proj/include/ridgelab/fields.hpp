#pragma once

#include <functional>
#include <vector>

#include "ridgelab/grid.hpp"

namespace ridgelab {

// Complex samples of a function on a CartesianGrid (row-major, last axis fastest).
struct SampledField {
    CartesianGrid grid;
    std::vector<cplx> values;

    explicit SampledField(CartesianGrid g) : grid(std::move(g)), values(grid.size()) {}
    SampledField(CartesianGrid g, std::vector<cplx> v);

    static SampledField from_function(const CartesianGrid& g, const std::function<cplx(const Vec3&)>& f);
};

// Radon-domain values rho(u_k, p_i); flat index k * p_count + i.
struct SinogramField {
    DirectionSet directions;
    Axis p_axis;
    std::vector<cplx> values;

    SinogramField(DirectionSet d, Axis p);
    SinogramField(DirectionSet d, Axis p, std::vector<cplx> v);

    static SinogramField from_function(const DirectionSet& d, const Axis& p,
                                       const std::function<cplx(const Vec3&, double)>& f);

    cplx& at(std::size_t k, std::size_t i) { return values[k * p_axis.count() + i]; }
    cplx at(std::size_t k, std::size_t i) const { return values[k * p_axis.count() + i]; }
};

// Values Phi(u_k, b_i, a_j) on a YGrid.
struct RidgeletField {
    YGrid grid;
    std::vector<cplx> values;

    explicit RidgeletField(YGrid g) : grid(std::move(g)), values(grid.size()) {}
    RidgeletField(YGrid g, std::vector<cplx> v);

    static RidgeletField from_function(const YGrid& g, const std::function<cplx(const Vec3&, double, double)>& f);

    cplx& at(std::size_t k, std::size_t i, std::size_t j) { return values[grid.index(k, i, j)]; }
    cplx at(std::size_t k, std::size_t i, std::size_t j) const { return values[grid.index(k, i, j)]; }
};

// Single-signal scalogram W(b_i, a_j); flat index i * scale_count + j.
struct ScalogramField {
    Axis b_axis;
    ScaleGrid scales;
    std::vector<cplx> values;

    ScalogramField(Axis b, ScaleGrid s) : b_axis(b), scales(std::move(s)), values(b_axis.count() * scales.count()) {}

    cplx& at(std::size_t i, std::size_t j) { return values[i * scales.count() + j]; }
    cplx at(std::size_t i, std::size_t j) const { return values[i * scales.count() + j]; }
};

// Weighted Dirac mass at x0.
struct PointMass {
    Vec3 location{0.0, 0.0, 0.0};
    cplx weight{1.0, 0.0};
};

// Result of an identity check: both sides and |lhs - rhs| / max(|lhs|, |rhs|, 1e-300).
struct IdentityCheck {
    cplx lhs;
    cplx rhs;
    double gap;
};

double relative_gap(cplx lhs, cplx rhs);
IdentityCheck make_check(cplx lhs, cplx rhs);

cplx y_integral(const RidgeletField& field);

// Pointwise product of two fields on the same YGrid.
RidgeletField multiply(const RidgeletField& a, const RidgeletField& b);

// J_s: multiplies every node by a^s.
RidgeletField scale_power(const RidgeletField& field, double s);

// Relative L2 distance over a Cartesian grid, sum |a - b|^2 / sum |b|^2.
double relative_l2(const SampledField& approx, const SampledField& reference);

// Relative L2 distance of sinograms with direction weights and trapezoid in p.
double relative_l2(const SinogramField& approx, const SinogramField& reference);

}  // namespace ridgelab
