#pragma once

#include <memory>
#include <span>
#include <vector>

#include "ridgelab/fields.hpp"
#include "ridgelab/source.hpp"

namespace ridgelab {

// Values of f^(w) on the FFT dual grid. Frequency axes are centered:
// index N/2 holds w = 0 and the spacing is 2 pi / (N h).
struct Spectrum {
    CartesianGrid spatial;
    CartesianGrid frequencies;
    std::vector<cplx> values;
};

// f^(omega_m u_k) over a direction set and a symmetric omega axis; flat index k * M + m.
struct SpectralSlices {
    DirectionSet directions;
    Axis omega;
    std::vector<cplx> values;

    SpectralSlices(DirectionSet d, Axis w);

    cplx& at(std::size_t k, std::size_t m) { return values[k * omega.count() + m]; }
    cplx at(std::size_t k, std::size_t m) const { return values[k * omega.count() + m]; }
};

Spectrum forward_fourier(const SampledField& field);

// Closed-form spectrum for analytic sources, exact nonuniform DFT for sampled ones.
SpectralSlices spectral_slices(const Source& source, const DirectionSet& directions, const Axis& omega);

// f(x) = (2 pi)^{-n} int_{S^{n-1}} int_0^inf e^{i w u.x} w^{n-1} f^(w u) dw du, evaluated
// as half of the full-line integral with |w|^{n-1} (trapezoid in w).
SampledField polar_inverse(const SpectralSlices& slices, const CartesianGrid& grid);

// Bluestein chirp-z evaluation of y_i = sum_m x_m exp(sign * i * t_i * s_m) for uniform
// input nodes s and output nodes t with unrelated spacings. One FFT pair per call;
// apply() is safe to call concurrently.
class ChirpZ {
public:
    ChirpZ(const Axis& input_nodes, const Axis& output_nodes, int sign);
    ~ChirpZ();
    ChirpZ(const ChirpZ&) = delete;
    ChirpZ& operator=(const ChirpZ&) = delete;

    std::size_t input_size() const { return pre_.size(); }
    std::size_t output_size() const { return post_.size(); }
    std::size_t fft_size() const { return length_; }

    void apply(std::span<const cplx> in, std::span<cplx> out) const;

private:
    std::size_t length_;
    std::vector<cplx> pre_;
    std::vector<cplx> post_;
    std::vector<cplx> kernel_fft_;
    void* forward_plan_ = nullptr;
    void* backward_plan_ = nullptr;
};

// Trapezoid forward transform of samples g(p_i): G(w_m) = sum_i wt_i g_i e^{-i w_m p_i}.
class SampleTransform {
public:
    SampleTransform(const Axis& p_axis, const Axis& omega);
    void apply(std::span<const cplx> samples, std::span<cplx> spectrum) const;

private:
    Axis p_axis_;
    ChirpZ chirp_;
};

// Trapezoid inverse transform g(b_i) = (1/2 pi) sum_m wt_m G_m e^{i w_m b_i}.
class InverseTransform {
public:
    InverseTransform(const Axis& omega, const Axis& b_axis);
    void apply(std::span<const cplx> spectrum, std::span<cplx> samples) const;

private:
    Axis omega_;
    ChirpZ chirp_;
};

}  // namespace ridgelab
