#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ridgelab/fields.hpp"

namespace ridgelab {

// An analytic test function on R^n with closed-form (or quadrature-backed)
// spatial values and Fourier transform f^(w) = int f(x) e^{-i x.w} dx.
class FunctionModel {
public:
    virtual ~FunctionModel() = default;
    virtual int dimension() const = 0;
    virtual cplx value(const Vec3& x) const = 0;
    virtual cplx spectrum(const Vec3& w) const = 0;
    // Radius beyond which |f| is negligible for line and plane integrals.
    virtual double support_radius() const = 0;
    virtual std::string name() const = 0;
};

struct GaussianTerm {
    cplx weight{1.0, 0.0};
    double alpha = 1.0;
    Vec3 center{0.0, 0.0, 0.0};
};

class TestFunction {
public:
    explicit TestFunction(std::shared_ptr<const FunctionModel> model);

    // weight * exp(-alpha |x - center|^2)
    static TestFunction gaussian(int n, double alpha = 1.0, Vec3 center = {0.0, 0.0, 0.0}, cplx weight = 1.0);
    static TestFunction gaussian_mixture(int n, std::vector<GaussianTerm> terms);
    // Seeded mixture of a few Gaussians with random weights, widths and centers.
    static TestFunction random_mixture(int n, std::uint64_t seed, std::size_t terms = 4);
    // (-Laplacian)^k exp(-|x|^2); spectrum pi^{n/2} |w|^{2k} exp(-|w|^2/4).
    static TestFunction laplacian_gaussian(int n, int k);
    // Radial function with spectrum exp(-|w|^2 - 1/|w|^2): every moment vanishes.
    static TestFunction lizorkin_radial(int n);
    static TestFunction zero(int n);

    TestFunction shifted(const Vec3& y) const;
    TestFunction scaled(cplx c) const;

    int dimension() const { return model_->dimension(); }
    cplx value(const Vec3& x) const { return model_->value(x); }
    cplx spectrum(const Vec3& w) const { return model_->spectrum(w); }
    double support_radius() const { return model_->support_radius(); }
    std::string name() const { return model_->name(); }

private:
    std::shared_ptr<const FunctionModel> model_;
};

// Accepts: gaussian, gaussian(alpha), shifted_gaussian(d), laplacian_gaussian(k),
// lizorkin_radial, random_mixture(seed), zero.
TestFunction parse_test_function(const std::string& spec, int n);

SampledField sample(const TestFunction& f, const CartesianGrid& grid);

// Multilinear interpolation of grid samples; zero outside the grid box.
cplx interpolate(const SampledField& field, const Vec3& x);

// Either sampled data (referenced, not owned) or an analytic test function.
class Source {
public:
    Source(const SampledField& field) : sampled_(&field) {}  // NOLINT(google-explicit-constructor)
    Source(TestFunction f) : analytic_(std::move(f)) {}       // NOLINT(google-explicit-constructor)

    bool is_sampled() const { return sampled_ != nullptr; }
    const SampledField& sampled() const { return *sampled_; }
    const TestFunction& analytic() const { return *analytic_; }
    int dimension() const { return is_sampled() ? sampled_->grid.dimension() : analytic_->dimension(); }

    // Spatial value: exact for analytic sources, interpolated for sampled ones.
    cplx value(const Vec3& x) const { return is_sampled() ? interpolate(*sampled_, x) : analytic_->value(x); }

private:
    const SampledField* sampled_ = nullptr;
    std::optional<TestFunction> analytic_;
};

}  // namespace ridgelab
