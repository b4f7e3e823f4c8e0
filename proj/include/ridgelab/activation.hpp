#pragma once

#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ridgelab/grid.hpp"

namespace ridgelab {

// Order of the zero of psi^ at omega = 0 for spectra that are flat there.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

enum class ActivationKind { gaussian, hermite_spectral, remark43, lizorkin_bump, table, derived };

// Evaluator backend for one activation profile. Spectra follow
// psi^(w) = int psi(x) e^{-i x w} dx.
class ActivationModel {
public:
    virtual ~ActivationModel() = default;

    virtual cplx value(double x) const = 0;
    virtual cplx spectrum(double w) const = 0;
    virtual int vanishing_order() const = 0;
    // Effective spectral band [lo, hi] of |psi^| on the positive half-line.
    virtual std::pair<double, double> band() const = 0;
    // |x| beyond which psi is negligible.
    virtual double spatial_extent() const = 0;

    virtual std::vector<cplx> moments(int k_max) const;
    // out[i] = psi(t0 + i * dt) for i < count.
    virtual void kernel_row(double t0, double dt, std::size_t count, cplx* out) const;
    // True when psi is real-valued, so kernel_row_real carries the whole kernel.
    virtual bool has_real_kernel() const { return false; }
    // out[i] = Re psi(t0 + i * dt).
    virtual void kernel_row_real(double t0, double dt, std::size_t count, double* out) const;

    // Profile of conj(psi): spectrum conj(psi^(-w)).
    virtual std::shared_ptr<const ActivationModel> conjugate() const = 0;
    // Profile with spectrum w^m psi^(w).
    virtual std::shared_ptr<const ActivationModel> compensate(int m) const = 0;

    virtual ActivationKind kind() const = 0;
    virtual std::string name() const = 0;
};

class ActivationFunction {
public:
    explicit ActivationFunction(std::shared_ptr<const ActivationModel> model);

    // psi(x) = exp(-x^2)
    static ActivationFunction gaussian();
    // psi^(w) = w^m exp(-w^2 / 4)
    static ActivationFunction hermite_spectral(int m);
    // psi^(w) = 2 pi^{1 - n/2} w^{2n} exp(-w^2 / 4)
    static ActivationFunction remark43(int n);
    // psi^(w) = exp(-w^2 - 1/w^2), extended by 0 at w = 0
    static ActivationFunction lizorkin_bump();
    // Cubic interpolation of tabulated spectrum samples on a uniform omega axis; zero outside.
    static ActivationFunction table(const Axis& omega, std::vector<cplx> spectrum, int vanishing_order);

    ActivationFunction conjugate() const { return ActivationFunction(model_->conjugate()); }
    // Spectrum w^m psi^(w): the usual way to let eta compensate a non-vanishing psi^(0).
    ActivationFunction compensated(int m) const { return ActivationFunction(model_->compensate(m)); }

    cplx value(double x) const { return model_->value(x); }
    cplx operator()(double x) const { return model_->value(x); }
    cplx spectrum(double w) const { return model_->spectrum(w); }
    int vanishing_order() const { return model_->vanishing_order(); }
    std::pair<double, double> band() const { return model_->band(); }
    double spatial_extent() const { return model_->spatial_extent(); }
    ActivationKind kind() const { return model_->kind(); }
    std::string name() const { return model_->name(); }
    void kernel_row(double t0, double dt, std::size_t count, cplx* out) const { model_->kernel_row(t0, dt, count, out); }
    bool has_real_kernel() const { return model_->has_real_kernel(); }
    void kernel_row_real(double t0, double dt, std::size_t count, double* out) const {
        model_->kernel_row_real(t0, dt, count, out);
    }
    const ActivationModel& model() const { return *model_; }

private:
    std::shared_ptr<const ActivationModel> model_;
};

// Accepts gaussian, hermite_spectral(m), remark43(n), lizorkin_bump; throws CatalogError otherwise.
ActivationFunction parse_activation(const std::string& spec);

// m_k = int x^k psi(x) dx for k = 0..k_max (k_max <= 12).
std::vector<cplx> moments(const ActivationFunction& psi, int k_max);

struct Admissibility {
    bool admissible;
    // int |psi^(w)|^2 / |w|^n dw when admissible, +inf otherwise.
    double value;
};

Admissibility is_admissible(const ActivationFunction& psi, int n);

class ConstantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class DivergentConstant : public ConstantError {
public:
    using ConstantError::ConstantError;
};
class ZeroConstant : public ConstantError {
public:
    using ConstantError::ConstantError;
};
class HalfLineMismatch : public ConstantError {
public:
    using ConstantError::ConstantError;
};

// K = (2 pi)^{n-1} int conj(psi^) eta^ / |w|^n dw
cplx k_constant(const ActivationFunction& psi, const ActivationFunction& eta, int n);

// c = int_0^inf conj(psi^) eta^ dw / w, checked against the negative half-line.
cplx c_constant(const ActivationFunction& psi, const ActivationFunction& eta);

struct ReconstructionPair {
    ActivationFunction psi;
    ActivationFunction eta;
    cplx K;
    cplx c;
    int dimension;
};

ReconstructionPair make_pair(const ActivationFunction& psi, const ActivationFunction& eta, int n);

}  // namespace ridgelab
