#include "ridgelab/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace ridgelab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW's planner is not thread-safe; execution with new arrays is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

std::size_t fft_friendly_length(std::size_t n) {
    for (std::size_t L = n;; ++L) {
        std::size_t r = L;
        for (std::size_t f : {2u, 3u, 5u, 7u})
            while (r % f == 0) r /= f;
        if (r == 1) return L;
    }
}

void require_symmetric(const Axis& omega) {
    if (!omega.is_symmetric()) throw ShapeError("omega axis must be symmetric about 0");
}

}  // namespace

SpectralSlices::SpectralSlices(DirectionSet d, Axis w)
    : directions(std::move(d)), omega(w), values(directions.size() * omega.count()) {}

Spectrum forward_fourier(const SampledField& field) {
    const CartesianGrid& g = field.grid;
    const int n = g.dimension();
    std::vector<int> dims(static_cast<std::size_t>(n));
    std::vector<Axis> freq_axes;
    for (int d = 0; d < n; ++d) {
        const Axis& a = g.axis(d);
        const auto N = a.count();
        dims[static_cast<std::size_t>(d)] = static_cast<int>(N);
        double dw = kTwoPi / (static_cast<double>(N) * a.spacing());
        double lo = -static_cast<double>(N / 2) * dw;
        freq_axes.emplace_back(lo, lo + static_cast<double>(N - 1) * dw, N);
    }
    CartesianGrid freq(freq_axes);

    std::vector<cplx> buffer = field.values;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_plan plan = fftw_plan_dft(n, dims.data(), as_fftw(buffer.data()), as_fftw(buffer.data()), FFTW_FORWARD,
                                       FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }

    Spectrum out{g, freq, std::vector<cplx>(g.size())};
    Vec3 origin{0.0, 0.0, 0.0};
    for (int d = 0; d < n; ++d) origin[static_cast<std::size_t>(d)] = g.axis(d).min();
    const double vol = g.cell_volume();
    for (std::size_t q = 0; q < freq.size(); ++q) {
        auto idx = freq.multi_index(q);
        std::size_t src = 0;
        for (int d = 0; d < n; ++d) {
            auto ud = static_cast<std::size_t>(d);
            std::size_t N = g.axis(d).count();
            src = src * N + (idx[ud] + N - N / 2) % N;
        }
        Vec3 w = freq.point(q);
        out.values[q] = buffer[src] * vol * std::polar(1.0, -dot(origin, w));
    }
    return out;
}

SpectralSlices spectral_slices(const Source& source, const DirectionSet& directions, const Axis& omega) {
    require_symmetric(omega);
    if (source.dimension() != directions.dimension()) throw ShapeError("spectral_slices: dimension mismatch");
    SpectralSlices out(directions, omega);
    const std::size_t M = omega.count();
    if (!source.is_sampled()) {
        const TestFunction& f = source.analytic();
        for (std::size_t k = 0; k < directions.size(); ++k) {
            const Vec3& u = directions[k];
            for (std::size_t m = 0; m < M; ++m) {
                double w = omega[m];
                out.at(k, m) = f.spectrum({w * u[0], w * u[1], w * u[2]});
            }
        }
        return out;
    }

    const SampledField& field = source.sampled();
    const CartesianGrid& g = field.grid;
    const double vol = g.cell_volume();
    std::vector<Vec3> points(g.size());
    for (std::size_t q = 0; q < g.size(); ++q) points[q] = g.point(q);

#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < directions.size(); ++k) {
        const Vec3& u = directions[k];
        std::vector<cplx> acc(M, 0.0);
        for (std::size_t q = 0; q < g.size(); ++q) {
            const cplx fq = field.values[q];
            if (fq == cplx(0.0)) continue;
            const double p = dot(u, points[q]);
            const cplx step = std::polar(1.0, -omega.spacing() * p);
            cplx z;
            for (std::size_t m = 0; m < M; ++m) {
                // Re-anchor the phase recurrence periodically to bound drift.
                if (m % 64 == 0) z = std::polar(1.0, -omega[m] * p);
                acc[m] += fq * z;
                z *= step;
            }
        }
        for (std::size_t m = 0; m < M; ++m) out.at(k, m) = acc[m] * vol;
    }
    return out;
}

SampledField polar_inverse(const SpectralSlices& slices, const CartesianGrid& grid) {
    const int n = grid.dimension();
    if (slices.directions.dimension() != n) throw ShapeError("polar_inverse: dimension mismatch");
    const Axis& omega = slices.omega;
    const std::size_t M = omega.count();
    const std::size_t K = slices.directions.size();

    // g[k][m] = w_k * wt_m * |w_m|^{n-1} * f^(w_m u_k)
    std::vector<cplx> weighted(K * M);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t m = 0; m < M; ++m) {
            double w = omega[m];
            weighted[k * M + m] = slices.directions.weight(k) * omega.trapezoid_weight(m) *
                                  std::pow(std::abs(w), n - 1) * slices.at(k, m);
        }
    }
    const double pref = 0.5 / std::pow(kTwoPi, n);
    SampledField out(grid);
#pragma omp parallel for schedule(static)
    for (std::size_t q = 0; q < grid.size(); ++q) {
        const Vec3 x = grid.point(q);
        cplx total = 0.0;
        for (std::size_t k = 0; k < K; ++k) {
            const double p = dot(slices.directions[k], x);
            const cplx step = std::polar(1.0, omega.spacing() * p);
            const cplx* row = weighted.data() + k * M;
            cplx z, acc = 0.0;
            for (std::size_t m = 0; m < M; ++m) {
                if (m % 64 == 0) z = std::polar(1.0, omega[m] * p);
                acc += row[m] * z;
                z *= step;
            }
            total += acc;
        }
        out.values[q] = pref * total;
    }
    return out;
}

ChirpZ::ChirpZ(const Axis& input_nodes, const Axis& output_nodes, int sign) {
    const std::size_t M = input_nodes.count(), N = output_nodes.count();
    const double s0 = input_nodes.min(), ds = input_nodes.spacing();
    const double t0 = output_nodes.min(), dt = output_nodes.spacing();
    const double D = ds * dt;
    const double sg = sign >= 0 ? 1.0 : -1.0;
    length_ = fft_friendly_length(N + M - 1);

    pre_.resize(M);
    for (std::size_t m = 0; m < M; ++m) {
        double mm = static_cast<double>(m);
        pre_[m] = std::polar(1.0, sg * (t0 * mm * ds + 0.5 * D * mm * mm));
    }
    post_.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        double ii = static_cast<double>(i);
        post_[i] = std::polar(1.0, sg * (t0 * s0 + ii * dt * s0 + 0.5 * D * ii * ii));
    }
    kernel_fft_.assign(length_, 0.0);
    for (std::size_t k = 0; k < N; ++k) {
        double kk = static_cast<double>(k);
        kernel_fft_[k] = std::polar(1.0, -sg * 0.5 * D * kk * kk);
    }
    for (std::size_t k = 1; k < M; ++k) {
        double kk = static_cast<double>(k);
        kernel_fft_[length_ - k] = std::polar(1.0, -sg * 0.5 * D * kk * kk);
    }

    std::vector<cplx> scratch(length_);
    std::lock_guard<std::mutex> lock(planner_mutex());
    const int L = static_cast<int>(length_);
    forward_plan_ = fftw_plan_dft_1d(L, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_FORWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    backward_plan_ = fftw_plan_dft_1d(L, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), as_fftw(kernel_fft_.data()), as_fftw(kernel_fft_.data()));
    const double inv = 1.0 / static_cast<double>(length_);
    for (auto& v : kernel_fft_) v *= inv;
}

ChirpZ::~ChirpZ() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

void ChirpZ::apply(std::span<const cplx> in, std::span<cplx> out) const {
    if (in.size() != pre_.size() || out.size() != post_.size()) throw ShapeError("ChirpZ: buffer size mismatch");
    std::vector<cplx> work(length_, 0.0);
    for (std::size_t m = 0; m < pre_.size(); ++m) work[m] = in[m] * pre_[m];
    fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), as_fftw(work.data()), as_fftw(work.data()));
    for (std::size_t k = 0; k < length_; ++k) work[k] *= kernel_fft_[k];
    fftw_execute_dft(static_cast<fftw_plan>(backward_plan_), as_fftw(work.data()), as_fftw(work.data()));
    for (std::size_t i = 0; i < post_.size(); ++i) out[i] = work[i] * post_[i];
}

SampleTransform::SampleTransform(const Axis& p_axis, const Axis& omega) : p_axis_(p_axis), chirp_(p_axis, omega, -1) {}

void SampleTransform::apply(std::span<const cplx> samples, std::span<cplx> spectrum) const {
    std::vector<cplx> weighted(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) weighted[i] = samples[i] * p_axis_.trapezoid_weight(i);
    chirp_.apply(weighted, spectrum);
}

InverseTransform::InverseTransform(const Axis& omega, const Axis& b_axis) : omega_(omega), chirp_(omega, b_axis, +1) {}

void InverseTransform::apply(std::span<const cplx> spectrum, std::span<cplx> samples) const {
    std::vector<cplx> weighted(spectrum.size());
    for (std::size_t m = 0; m < spectrum.size(); ++m) weighted[m] = spectrum[m] * (omega_.trapezoid_weight(m) / kTwoPi);
    chirp_.apply(weighted, samples);
}

}  // namespace ridgelab
