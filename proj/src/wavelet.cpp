#include "ridgelab/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ridgelab/fourier.hpp"
#include "ridgelab/numeric.hpp"
#include "spectral_rows.hpp"

namespace ridgelab {

namespace detail {

std::vector<cplx> analysis_filters(const ActivationFunction& psi, const ScaleGrid& scales, const Axis& omega) {
    const std::size_t M = omega.count();
    std::vector<cplx> h(scales.count() * M);
    for (std::size_t j = 0; j < scales.count(); ++j)
        for (std::size_t m = 0; m < M; ++m) h[j * M + m] = std::conj(psi.spectrum(scales[j] * omega[m]));
    return h;
}

void analyze_row(const std::vector<cplx>& spectrum, const std::vector<cplx>& filters, const InverseTransform& inverse,
                 std::size_t nb, std::size_t na, cplx* out) {
    const std::size_t M = spectrum.size();
    std::vector<cplx> product(M), column(nb);
    for (std::size_t j = 0; j < na; ++j) {
        const cplx* h = filters.data() + j * M;
        for (std::size_t m = 0; m < M; ++m) product[m] = spectrum[m] * h[m];
        inverse.apply(product, column);
        for (std::size_t i = 0; i < nb; ++i) out[i * na + j] = column[i];
    }
}

}  // namespace detail

Signal1D Signal1D::samples(const Axis& p_axis, std::vector<cplx> values) {
    if (values.size() != p_axis.count()) throw ShapeError("Signal1D: sample count does not match axis");
    Signal1D s;
    s.p_axis_ = p_axis;
    s.values_ = std::move(values);
    s.radius_ = std::max(std::abs(p_axis.min()), std::abs(p_axis.max()));
    return s;
}

Signal1D Signal1D::analytic(std::function<cplx(double)> value, std::function<cplx(double)> spectrum, double radius) {
    Signal1D s;
    s.value_ = std::move(value);
    s.spectrum_ = std::move(spectrum);
    s.radius_ = radius;
    return s;
}

ScalogramField cwt(const Signal1D& signal, const ActivationFunction& psi, const Axis& b_axis, const ScaleGrid& scales,
                   const Axis& omega) {
    if (!omega.is_symmetric()) throw ShapeError("cwt: omega axis must be symmetric");
    const std::size_t M = omega.count();
    std::vector<cplx> spectrum(M);
    if (signal.is_sampled()) {
        SampleTransform forward(signal.p_axis(), omega);
        forward.apply(signal.values(), spectrum);
    } else {
        for (std::size_t m = 0; m < M; ++m) spectrum[m] = signal.spectrum(omega[m]);
    }
    ScalogramField out(b_axis, scales);
    InverseTransform inverse(omega, b_axis);
    detail::analyze_row(spectrum, detail::analysis_filters(psi, scales, omega), inverse, b_axis.count(), scales.count(), out.values.data());
    return out;
}

cplx cwt_direct(const Signal1D& signal, const ActivationFunction& psi, double b, double a) {
    if (signal.is_sampled()) {
        const Axis& p = signal.p_axis();
        std::vector<cplx> kernel(p.count());
        psi.kernel_row((p.min() - b) / a, p.spacing() / a, p.count(), kernel.data());
        ComplexCompensatedSum s;
        for (std::size_t i = 0; i < p.count(); ++i) s.add(signal.values()[i] * std::conj(kernel[i]) * p.trapezoid_weight(i));
        return s.value() / a;
    }
    const double R = signal.radius();
    const double reach = psi.spatial_extent() * a;
    double lo = std::max(-R, b - reach), hi = std::min(R, b + reach);
    if (lo >= hi) return 0.0;
    std::vector<double> knots;
    const int pieces = 32;
    for (int i = 0; i <= pieces; ++i) knots.push_back(lo + (hi - lo) * i / pieces);
    auto f = [&](double x) { return signal.value(x) * std::conj(psi.value((x - b) / a)) / a; };
    return integrate_pieces(f, knots, 1e-12, 1e-300).value;
}

RidgeletField cwt_sinogram(const SinogramField& sinogram, const ActivationFunction& psi, const Axis& b_axis,
                           const ScaleGrid& scales, const Axis& omega) {
    if (!omega.is_symmetric()) throw ShapeError("cwt_sinogram: omega axis must be symmetric");
    YGrid grid(sinogram.directions, b_axis, scales);
    RidgeletField out(grid);
    const std::size_t M = omega.count(), P = sinogram.p_axis.count();
    const std::size_t nb = b_axis.count(), na = scales.count();
    SampleTransform forward(sinogram.p_axis, omega);
    InverseTransform inverse(omega, b_axis);
    const auto filters = detail::analysis_filters(psi, scales, omega);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < sinogram.directions.size(); ++k) {
        std::vector<cplx> spectrum(M);
        forward.apply(std::span<const cplx>(sinogram.values.data() + k * P, P), spectrum);
        detail::analyze_row(spectrum, filters, inverse, nb, na, out.values.data() + grid.index(k, 0, 0));
    }
    return out;
}

ProfileSynthesizer::ProfileSynthesizer(const RidgeletField& field, const ActivationFunction& psi,
                                       std::vector<double> scale_weights)
    : psi_(psi),
      b_axis_(field.grid.b_axis()),
      scales_(field.grid.scales()),
      directions_(field.grid.directions().size()),
      real_kernel_(psi.has_real_kernel()),
      extent_(psi.spatial_extent()) {
    const std::size_t nb = b_axis_.count(), na = scales_.count();
    if (scale_weights.size() != na) throw ShapeError("ProfileSynthesizer: one weight per scale required");
    weighted_re_.resize(field.values.size());
    weighted_im_.resize(field.values.size());
    support_.assign(directions_ * na, {0, 0});
    for (std::size_t k = 0; k < directions_; ++k)
        for (std::size_t j = 0; j < na; ++j) {
            const double wj = scale_weights[j] / scales_[j];
            const std::size_t row = (k * na + j) * nb;
            std::size_t first = nb, last = 0;
            for (std::size_t i = 0; i < nb; ++i) {
                const cplx v = field.at(k, i, j) * (wj * b_axis_.trapezoid_weight(i));
                weighted_re_[row + i] = v.real();
                weighted_im_[row + i] = v.imag();
                if (v != 0.0) {
                    first = std::min(first, i);
                    last = i + 1;
                }
            }
            if (first < last) support_[k * na + j] = {first, last};
        }
}

cplx ProfileSynthesizer::evaluate(std::size_t k, double p) const {
    const std::size_t nb = b_axis_.count(), na = scales_.count();
    const double b0 = b_axis_.min(), db = b_axis_.spacing();
    thread_local std::vector<double> kernel_re;
    thread_local std::vector<cplx> kernel;
    double total_re = 0.0, total_im = 0.0;
    for (std::size_t j = 0; j < na; ++j) {
        const auto [first, last] = support_[k * na + j];
        if (first == last) continue;
        const double a = scales_[j];
        const double reach = extent_ * a;
        double lo = std::ceil((p - reach - b0) / db), hi = std::floor((p + reach - b0) / db);
        lo = std::max(lo, static_cast<double>(first));
        hi = std::min(hi, static_cast<double>(last - 1));
        if (lo > hi) continue;
        const auto i0 = static_cast<std::size_t>(lo), i1 = static_cast<std::size_t>(hi);
        const std::size_t count = i1 - i0 + 1;
        const double* re = weighted_re_.data() + (k * na + j) * nb + i0;
        const double* im = weighted_im_.data() + (k * na + j) * nb + i0;
        const double t0 = (p - b_axis_[i0]) / a;
        if (real_kernel_) {
            kernel_re.resize(nb);
            psi_.kernel_row_real(t0, -db / a, count, kernel_re.data());
            double r0 = 0.0, r1 = 0.0, m0 = 0.0, m1 = 0.0;
            std::size_t i = 0;
            for (; i + 1 < count; i += 2) {
                r0 += re[i] * kernel_re[i];
                m0 += im[i] * kernel_re[i];
                r1 += re[i + 1] * kernel_re[i + 1];
                m1 += im[i + 1] * kernel_re[i + 1];
            }
            if (i < count) {
                r0 += re[i] * kernel_re[i];
                m0 += im[i] * kernel_re[i];
            }
            total_re += r0 + r1;
            total_im += m0 + m1;
        } else {
            kernel.resize(nb);
            psi_.kernel_row(t0, -db / a, count, kernel.data());
            for (std::size_t i = 0; i < count; ++i) {
                total_re += re[i] * kernel[i].real() - im[i] * kernel[i].imag();
                total_im += re[i] * kernel[i].imag() + im[i] * kernel[i].real();
            }
        }
    }
    return {total_re, total_im};
}

std::vector<cplx> wavelet_synthesis(const ScalogramField& field, const ActivationFunction& psi, const Axis& p_axis) {
    DirectionSet single(2, {Vec3{1.0, 0.0, 0.0}}, {1.0});
    RidgeletField wrapped(YGrid(single, field.b_axis, field.scales), field.values);
    SinogramField s = wavelet_synthesis(wrapped, psi, p_axis);
    return s.values;
}

SinogramField wavelet_synthesis(const RidgeletField& field, const ActivationFunction& psi, const Axis& p_axis) {
    const ScaleGrid& scales = field.grid.scales();
    std::vector<double> weights(scales.count());
    for (std::size_t j = 0; j < scales.count(); ++j) weights[j] = scales.log_weight(j);
    ProfileSynthesizer synth(field, psi, std::move(weights));
    SinogramField out(field.grid.directions(), p_axis);
    const std::size_t K = field.grid.directions().size();
#pragma omp parallel for collapse(2) schedule(static)
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < p_axis.count(); ++i) out.at(k, i) = synth.evaluate(k, p_axis[i]);
    return out;
}

}  // namespace ridgelab
