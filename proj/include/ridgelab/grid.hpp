#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ridgelab {

using cplx = std::complex<double>;

// Points and directions are stored with three slots; unused trailing
// components are zero so dot products work for n = 2 and n = 3 alike.
using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a catalog name or its parameters are not recognized.
class CatalogError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Uniform 1-D sampling of [min, max] with `count` inclusive nodes.
class Axis {
public:
    Axis(double min, double max, std::size_t count);

    static Axis symmetric(double half_width, std::size_t count) {
        return Axis(-half_width, half_width, count);
    }

    double min() const { return min_; }
    double max() const { return max_; }
    std::size_t count() const { return count_; }
    double spacing() const { return spacing_; }

    double operator[](std::size_t i) const { return min_ + static_cast<double>(i) * spacing_; }

    // Trapezoid weight: spacing, halved at both endpoints.
    double trapezoid_weight(std::size_t i) const;

    bool is_symmetric(double rel_tol = 1e-12) const;
    std::size_t nearest(double x) const;
    bool contains(double x) const { return x >= min_ && x <= max_; }
    std::vector<double> values() const;

    // Same interval with every spacing halved.
    Axis refined() const { return Axis(min_, max_, 2 * count_ - 1); }

    friend bool operator==(const Axis&, const Axis&) = default;

private:
    double min_;
    double max_;
    std::size_t count_;
    double spacing_;
};

// Tensor grid in R^n, n in {2, 3}; flat index is row-major (last axis fastest).
class CartesianGrid {
public:
    explicit CartesianGrid(std::vector<Axis> axes);

    static CartesianGrid cube(int n, double half_width, std::size_t count);

    int dimension() const { return static_cast<int>(axes_.size()); }
    const Axis& axis(int d) const { return axes_.at(static_cast<std::size_t>(d)); }
    const std::vector<Axis>& axes() const { return axes_; }
    std::size_t size() const { return size_; }
    double cell_volume() const { return cell_volume_; }
    Vec3 point(std::size_t flat) const;
    std::array<std::size_t, 3> multi_index(std::size_t flat) const;

    CartesianGrid refined() const;

    friend bool operator==(const CartesianGrid&, const CartesianGrid&) = default;

private:
    std::vector<Axis> axes_;
    std::size_t size_;
    double cell_volume_;
};

class DirectionSet {
public:
    DirectionSet(int dimension, std::vector<Vec3> directions, std::vector<double> weights);

    int dimension() const { return dimension_; }
    std::size_t size() const { return directions_.size(); }
    const Vec3& operator[](std::size_t k) const { return directions_[k]; }
    double weight(std::size_t k) const { return weights_[k]; }
    const std::vector<Vec3>& directions() const { return directions_; }
    const std::vector<double>& weights() const { return weights_; }
    double total_weight() const;

    // Index of -u_k if present (within 1e-12), otherwise size().
    std::size_t antipode(std::size_t k) const;

    friend bool operator==(const DirectionSet&, const DirectionSet&) = default;

private:
    int dimension_;
    std::vector<Vec3> directions_;
    std::vector<double> weights_;
};

// n = 2: theta_k = 2 pi k / count, weights 2 pi / count.
// n = 3: Fibonacci sphere, weights 4 pi / count.
DirectionSet make_direction_set(int n, std::size_t count);

// Geometric scale grid a_j = a_min * exp(j * log_step).
class ScaleGrid {
public:
    ScaleGrid(double a_min, double a_max, std::size_t count);

    double a_min() const { return a_min_; }
    double a_max() const { return a_max_; }
    std::size_t count() const { return count_; }
    double log_step() const { return log_step_; }
    double operator[](std::size_t j) const { return values_[j]; }
    const std::vector<double>& values() const { return values_; }

    // Trapezoid weight in log a (log_step, halved at the ends).
    double log_weight(std::size_t j) const;
    std::size_t nearest(double a) const;
    ScaleGrid refined() const { return ScaleGrid(a_min_, a_max_, 2 * count_ - 1); }

    friend bool operator==(const ScaleGrid&, const ScaleGrid&) = default;

private:
    double a_min_;
    double a_max_;
    std::size_t count_;
    double log_step_;
    std::vector<double> values_;
};

// Discretization of Y^{n+1} = S^{n-1} x R x R_+ with measure du db da / a^n.
// Flat index: direction slowest, then b, then a.
class YGrid {
public:
    YGrid(DirectionSet directions, Axis b_axis, ScaleGrid scales);

    int dimension() const { return directions_.dimension(); }
    const DirectionSet& directions() const { return directions_; }
    const Axis& b_axis() const { return b_axis_; }
    const ScaleGrid& scales() const { return scales_; }

    std::size_t size() const { return directions_.size() * b_axis_.count() * scales_.count(); }
    std::size_t index(std::size_t k, std::size_t i, std::size_t j) const {
        return (k * b_axis_.count() + i) * scales_.count() + j;
    }

    // w_k * trapezoid(b_i) * a_j * log_weight(j) * a_j^{-n}
    double weight(std::size_t k, std::size_t i, std::size_t j) const;
    // a_j * log_weight(j) * a_j^{-n}: the a-part of the weight.
    double scale_weight(std::size_t j) const { return scale_weights_[j]; }

    YGrid refined() const;

    friend bool operator==(const YGrid&, const YGrid&) = default;

private:
    DirectionSet directions_;
    Axis b_axis_;
    ScaleGrid scales_;
    std::vector<double> scale_weights_;
};

// Compensated quadrature sum of values * YGrid weights.
cplx y_integral(const YGrid& grid, std::span<const cplx> values);

}  // namespace ridgelab
