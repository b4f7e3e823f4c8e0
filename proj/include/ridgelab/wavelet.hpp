#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ridgelab/activation.hpp"
#include "ridgelab/fields.hpp"

namespace ridgelab {

// A 1-D signal given either by samples on a uniform axis or analytically
// (values, spectrum and an effective support radius).
class Signal1D {
public:
    static Signal1D samples(const Axis& p_axis, std::vector<cplx> values);
    static Signal1D analytic(std::function<cplx(double)> value, std::function<cplx(double)> spectrum, double radius);

    bool is_sampled() const { return p_axis_.has_value(); }
    const Axis& p_axis() const { return *p_axis_; }
    const std::vector<cplx>& values() const { return values_; }
    cplx value(double p) const { return value_(p); }
    cplx spectrum(double w) const { return spectrum_(w); }
    double radius() const { return radius_; }

private:
    std::optional<Axis> p_axis_;
    std::vector<cplx> values_;
    std::function<cplx(double)> value_;
    std::function<cplx(double)> spectrum_;
    double radius_ = 0.0;
};

// W(b, a) = (1/2 pi) int g^(w) conj(psi^(a w)) e^{i b w} dw, one chirp-z per scale.
ScalogramField cwt(const Signal1D& signal, const ActivationFunction& psi, const Axis& b_axis, const ScaleGrid& scales,
                   const Axis& omega);

// W(b, a) = int g(p) (1/a) conj(psi((p - b)/a)) dp: trapezoid over the samples, or adaptive
// quadrature for analytic signals.
cplx cwt_direct(const Signal1D& signal, const ActivationFunction& psi, double b, double a);

// cwt applied to every direction row of a sinogram; output indexed (u, b, a).
RidgeletField cwt_sinogram(const SinogramField& sinogram, const ActivationFunction& psi, const Axis& b_axis,
                           const ScaleGrid& scales, const Axis& omega);

// M Phi(p) = int int (1/a) psi((p - b)/a) Phi(b, a) db da/a, trapezoid in b and log a.
std::vector<cplx> wavelet_synthesis(const ScalogramField& field, const ActivationFunction& psi, const Axis& p_axis);

// Slice-wise M applied to every direction of a (u, b, a) field.
SinogramField wavelet_synthesis(const RidgeletField& field, const ActivationFunction& psi, const Axis& p_axis);

// Evaluates sum_{i,j} wt(b_i) * weight_j * Phi(b_i, a_j) * (1/a_j) psi((p - b_i)/a_j) for the
// rows of a (u, b, a) field at arbitrary p. Shared by wavelet and ridgelet synthesis.
class ProfileSynthesizer {
public:
    ProfileSynthesizer(const RidgeletField& field, const ActivationFunction& psi, std::vector<double> scale_weights);
    cplx evaluate(std::size_t direction, double p) const;

    std::size_t direction_count() const { return directions_; }

private:
    ActivationFunction psi_;
    Axis b_axis_;
    ScaleGrid scales_;
    std::size_t directions_;
    // Real and imaginary parts of Phi(k, b_i, a_j) * wt(b_i) * weight_j / a_j, stored as (k, j, i).
    std::vector<double> weighted_re_;
    std::vector<double> weighted_im_;
    bool real_kernel_;
    // Per (k, j) row: first nonzero i and one past the last; empty rows give (0, 0).
    std::vector<std::pair<std::size_t, std::size_t>> support_;
    double extent_;
};

}  // namespace ridgelab
