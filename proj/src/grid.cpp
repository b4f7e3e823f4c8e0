#include "ridgelab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ridgelab/numeric.hpp"

namespace ridgelab {

Axis::Axis(double min, double max, std::size_t count) : min_(min), max_(max), count_(count) {
    if (!(min < max)) throw ShapeError("Axis requires min < max");
    if (count < 2) throw ShapeError("Axis requires at least two nodes");
    spacing_ = (max - min) / static_cast<double>(count - 1);
}

double Axis::trapezoid_weight(std::size_t i) const {
    return (i == 0 || i + 1 == count_) ? 0.5 * spacing_ : spacing_;
}

bool Axis::is_symmetric(double rel_tol) const {
    return std::abs(min_ + max_) <= rel_tol * std::max(std::abs(min_), std::abs(max_));
}

std::size_t Axis::nearest(double x) const {
    double t = std::round((x - min_) / spacing_);
    if (t <= 0.0) return 0;
    return std::min(count_ - 1, static_cast<std::size_t>(t));
}

std::vector<double> Axis::values() const {
    std::vector<double> v(count_);
    for (std::size_t i = 0; i < count_; ++i) v[i] = (*this)[i];
    return v;
}

CartesianGrid::CartesianGrid(std::vector<Axis> axes) : axes_(std::move(axes)) {
    if (axes_.size() != 2 && axes_.size() != 3) {
        throw ShapeError("CartesianGrid supports dimension 2 or 3, got " + std::to_string(axes_.size()));
    }
    size_ = 1;
    cell_volume_ = 1.0;
    for (const Axis& a : axes_) {
        size_ *= a.count();
        cell_volume_ *= a.spacing();
    }
}

CartesianGrid CartesianGrid::cube(int n, double half_width, std::size_t count) {
    return CartesianGrid(std::vector<Axis>(static_cast<std::size_t>(n), Axis::symmetric(half_width, count)));
}

std::array<std::size_t, 3> CartesianGrid::multi_index(std::size_t flat) const {
    std::array<std::size_t, 3> idx{0, 0, 0};
    for (int d = dimension() - 1; d >= 0; --d) {
        std::size_t c = axes_[static_cast<std::size_t>(d)].count();
        idx[static_cast<std::size_t>(d)] = flat % c;
        flat /= c;
    }
    return idx;
}

Vec3 CartesianGrid::point(std::size_t flat) const {
    auto idx = multi_index(flat);
    Vec3 x{0.0, 0.0, 0.0};
    for (std::size_t d = 0; d < axes_.size(); ++d) x[d] = axes_[d][idx[d]];
    return x;
}

CartesianGrid CartesianGrid::refined() const {
    std::vector<Axis> axes;
    for (const Axis& a : axes_) axes.push_back(a.refined());
    return CartesianGrid(std::move(axes));
}

DirectionSet::DirectionSet(int dimension, std::vector<Vec3> directions, std::vector<double> weights)
    : dimension_(dimension), directions_(std::move(directions)), weights_(std::move(weights)) {
    if (dimension_ != 2 && dimension_ != 3) throw ShapeError("DirectionSet supports dimension 2 or 3");
    if (directions_.size() != weights_.size()) throw ShapeError("DirectionSet: directions/weights size mismatch");
    for (const Vec3& u : directions_) {
        if (std::abs(std::sqrt(dot(u, u)) - 1.0) > 1e-12) throw ShapeError("DirectionSet: direction is not a unit vector");
        if (dimension_ == 2 && u[2] != 0.0) throw ShapeError("DirectionSet: third component must vanish for n = 2");
    }
}

double DirectionSet::total_weight() const {
    CompensatedSum s;
    for (double w : weights_) s.add(w);
    return s.value();
}

std::size_t DirectionSet::antipode(std::size_t k) const {
    const Vec3& u = directions_[k];
    for (std::size_t m = 0; m < directions_.size(); ++m) {
        const Vec3& v = directions_[m];
        if (std::abs(u[0] + v[0]) <= 1e-12 && std::abs(u[1] + v[1]) <= 1e-12 && std::abs(u[2] + v[2]) <= 1e-12) return m;
    }
    return directions_.size();
}

DirectionSet make_direction_set(int n, std::size_t count) {
    if (n != 2 && n != 3) throw ShapeError("make_direction_set: unsupported dimension " + std::to_string(n));
    if (count < 4) throw ShapeError("make_direction_set: at least 4 directions required");
    std::vector<Vec3> dirs(count);
    const double c = static_cast<double>(count);
    if (n == 2) {
        for (std::size_t k = 0; k < count; ++k) {
            double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / c;
            dirs[k] = {std::cos(theta), std::sin(theta), 0.0};
        }
        return DirectionSet(2, std::move(dirs), std::vector<double>(count, 2.0 * std::numbers::pi / c));
    }
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < count; ++k) {
        double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / c;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden_angle * static_cast<double>(k);
        Vec3 u{r * std::cos(phi), r * std::sin(phi), z};
        double norm = std::sqrt(dot(u, u));
        dirs[k] = {u[0] / norm, u[1] / norm, u[2] / norm};
    }
    return DirectionSet(3, std::move(dirs), std::vector<double>(count, 4.0 * std::numbers::pi / c));
}

ScaleGrid::ScaleGrid(double a_min, double a_max, std::size_t count) : a_min_(a_min), a_max_(a_max), count_(count) {
    if (!(a_min > 0.0 && a_min < a_max)) throw ShapeError("ScaleGrid requires 0 < a_min < a_max");
    if (count < 2) throw ShapeError("ScaleGrid requires at least two scales");
    log_step_ = std::log(a_max / a_min) / static_cast<double>(count - 1);
    values_.resize(count);
    for (std::size_t j = 0; j < count; ++j) values_[j] = a_min * std::exp(log_step_ * static_cast<double>(j));
    values_.back() = a_max;
}

double ScaleGrid::log_weight(std::size_t j) const {
    return (j == 0 || j + 1 == count_) ? 0.5 * log_step_ : log_step_;
}

std::size_t ScaleGrid::nearest(double a) const {
    double t = std::round(std::log(a / a_min_) / log_step_);
    if (t <= 0.0) return 0;
    return std::min(count_ - 1, static_cast<std::size_t>(t));
}

YGrid::YGrid(DirectionSet directions, Axis b_axis, ScaleGrid scales)
    : directions_(std::move(directions)), b_axis_(b_axis), scales_(std::move(scales)) {
    const int n = directions_.dimension();
    scale_weights_.resize(scales_.count());
    for (std::size_t j = 0; j < scales_.count(); ++j) {
        double a = scales_[j];
        scale_weights_[j] = a * scales_.log_weight(j) * std::pow(a, -n);
    }
}

double YGrid::weight(std::size_t k, std::size_t i, std::size_t j) const {
    return directions_.weight(k) * b_axis_.trapezoid_weight(i) * scale_weights_[j];
}

YGrid YGrid::refined() const {
    return YGrid(make_direction_set(dimension(), 2 * directions_.size()), b_axis_.refined(), scales_.refined());
}

cplx y_integral(const YGrid& grid, std::span<const cplx> values) {
    if (values.size() != grid.size()) {
        throw ShapeError("y_integral: field has " + std::to_string(values.size()) + " values, grid has " +
                         std::to_string(grid.size()));
    }
    ComplexCompensatedSum total;
    const std::size_t nd = grid.directions().size(), nb = grid.b_axis().count(), na = grid.scales().count();
    for (std::size_t k = 0; k < nd; ++k) {
        for (std::size_t i = 0; i < nb; ++i) {
            const double wki = grid.directions().weight(k) * grid.b_axis().trapezoid_weight(i);
            const cplx* row = values.data() + grid.index(k, i, 0);
            for (std::size_t j = 0; j < na; ++j) total.add(row[j] * (wki * grid.scale_weight(j)));
        }
    }
    return total.value();
}

}  // namespace ridgelab
