#include <doctest.h>

#include <cmath>
#include <vector>

#include "ridgelab/fourier.hpp"
#include "ridgelab/source.hpp"
#include "support.hpp"

using namespace ridgelab;
using testsupport::kPi;

namespace {

cplx gaussian_spectrum_2d(const Vec3& w) { return kPi * std::exp(-dot(w, w) / 4.0); }

}  // namespace

TEST_CASE("forward_fourier of a Gaussian") {
    const CartesianGrid grid = CartesianGrid::cube(2, 8.0, 128);
    const Spectrum s = forward_fourier(sample(TestFunction::gaussian(2), grid));
    REQUIRE(s.values.size() == s.frequencies.size());
    double worst = 0.0;
    for (std::size_t q = 0; q < s.values.size(); ++q)
        worst = std::max(worst, std::abs(s.values[q] - gaussian_spectrum_2d(s.frequencies.point(q))));
    CHECK(worst <= 1e-8);

    const Axis& w0 = s.frequencies.axis(0);
    CHECK(std::abs(w0[64]) <= 1e-14);
    CHECK(w0.spacing() == doctest::Approx(2.0 * kPi / (128 * grid.axis(0).spacing())));
}

TEST_CASE("forward_fourier of zero is zero") {
    const Spectrum s = forward_fourier(SampledField(CartesianGrid::cube(2, 4.0, 32)));
    CHECK(testsupport::max_abs(s.values) == 0.0);
}

TEST_CASE("forward_fourier obeys the shift theorem") {
    const CartesianGrid grid = CartesianGrid::cube(2, 8.0, 128);
    const Vec3 y{0.7, -1.1, 0.0};
    const Spectrum base = forward_fourier(sample(TestFunction::gaussian(2), grid));
    const Spectrum moved = forward_fourier(sample(TestFunction::gaussian(2).shifted(y), grid));
    auto rng = testsupport::make_rng(11);
    for (int t = 0; t < 10; ++t) {
        const std::size_t q = testsupport::pick(rng, base.values.size());
        const Vec3 w = base.frequencies.point(q);
        const cplx expected = std::exp(cplx(0.0, -dot(y, w))) * base.values[q];
        CHECK(std::abs(moved.values[q] - expected) <= 1e-8);
    }
}

TEST_CASE("forward_fourier keeps Hermitian symmetry of real input") {
    const CartesianGrid grid = CartesianGrid::cube(2, 6.0, 64);
    const Spectrum s = forward_fourier(sample(TestFunction::random_mixture(2, 5), grid));
    const std::size_t n = 64;
    double worst = 0.0;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
            const cplx v = s.values[i * n + j];
            const cplx mirrored = s.values[(n - i) * n + (n - j)];
            worst = std::max(worst, std::abs(v - std::conj(mirrored)));
        }
    CHECK(worst <= 1e-10);
}

TEST_CASE("spectral_slices of the analytic Gaussian") {
    const DirectionSet d = make_direction_set(2, 12);
    const Axis omega = Axis::symmetric(4.0, 9);
    const SpectralSlices s = spectral_slices(TestFunction::gaussian(2), d, omega);
    for (std::size_t k = 0; k < d.size(); ++k) {
        CHECK(std::abs(s.at(k, 6) - kPi * std::exp(-1.0)) <= 1e-6);
        CHECK(s.at(k, 4) == s.at(0, 4));
    }
}

TEST_CASE("spectral_slices agree at the origin across directions") {
    const CartesianGrid grid = CartesianGrid::cube(2, 6.0, 48);
    const SampledField f = sample(TestFunction::random_mixture(2, 21), grid);
    const DirectionSet d = make_direction_set(2, 16);
    const SpectralSlices s = spectral_slices(f, d, Axis::symmetric(3.0, 7));
    cplx total = 0.0;
    for (const cplx& v : f.values) total += v * grid.cell_volume();
    for (std::size_t k = 0; k < d.size(); ++k) CHECK(std::abs(s.at(k, 3) - total) <= 1e-12 * std::abs(total));
}

TEST_CASE("sampled and analytic spectral slices coincide") {
    const CartesianGrid grid = CartesianGrid::cube(2, 8.0, 64);
    const TestFunction g = TestFunction::gaussian(2);
    const SampledField f = sample(g, grid);
    const DirectionSet d = make_direction_set(2, 24);
    const Axis omega = Axis::symmetric(6.0, 61);
    const SpectralSlices sampled = spectral_slices(f, d, omega);
    const SpectralSlices analytic = spectral_slices(g, d, omega);
    CHECK(testsupport::max_abs_diff(sampled.values, analytic.values) <= 1e-6);
}

TEST_CASE("spectral slice symmetry and Hermitian structure") {
    const CartesianGrid grid = CartesianGrid::cube(2, 6.0, 48);
    const SampledField f = sample(TestFunction::random_mixture(2, 8), grid);
    const DirectionSet d = make_direction_set(2, 8);
    const Axis omega = Axis::symmetric(5.0, 21);
    const SpectralSlices s = spectral_slices(f, d, omega);
    const std::size_t m = omega.count();
    for (std::size_t k = 0; k < d.size(); ++k) {
        const std::size_t ka = d.antipode(k);
        REQUIRE(ka < d.size());
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(std::abs(s.at(k, m - 1 - i) - s.at(ka, i)) <= 1e-10);
            CHECK(std::abs(s.at(k, m - 1 - i) - std::conj(s.at(k, i))) <= 1e-10);
        }
    }
}

TEST_CASE("spectral_slices requires a symmetric frequency axis") {
    const DirectionSet d = make_direction_set(2, 8);
    CHECK_THROWS_AS(spectral_slices(TestFunction::gaussian(2), d, Axis(-1.0, 2.0, 11)), ShapeError);
}

TEST_CASE("spectral_slices and forward_fourier are linear") {
    const CartesianGrid grid = CartesianGrid::cube(2, 6.0, 32);
    const SampledField f = sample(TestFunction::random_mixture(2, 1), grid);
    const SampledField g = sample(TestFunction::random_mixture(2, 2), grid);
    const cplx alpha(0.5, 2.0);
    const cplx beta(-1.25, 0.5);
    const SampledField h(grid, testsupport::combine(alpha, f.values, beta, g.values));

    const DirectionSet d = make_direction_set(2, 8);
    const Axis omega = Axis::symmetric(4.0, 17);
    const auto sf = spectral_slices(f, d, omega);
    const auto sg = spectral_slices(g, d, omega);
    const auto sh = spectral_slices(h, d, omega);
    const auto expected = testsupport::combine(alpha, sf.values, beta, sg.values);
    CHECK(testsupport::max_abs_diff(sh.values, expected) <= 1e-12 * testsupport::max_abs(expected));

    const auto ff = forward_fourier(f).values;
    const auto fg = forward_fourier(g).values;
    const auto fh = forward_fourier(h).values;
    const auto fe = testsupport::combine(alpha, ff, beta, fg);
    CHECK(testsupport::max_abs_diff(fh, fe) <= 1e-12 * testsupport::max_abs(fe));

    const CartesianGrid out = CartesianGrid::cube(2, 3.0, 9);
    const auto pf = polar_inverse(sf, out).values;
    const auto pg = polar_inverse(sg, out).values;
    const auto ph = polar_inverse(sh, out).values;
    const auto pe = testsupport::combine(alpha, pf, beta, pg);
    CHECK(testsupport::max_abs_diff(ph, pe) <= 1e-12 * testsupport::max_abs(pe));
}

TEST_CASE("polar_inverse recovers a Gaussian") {
    const DirectionSet d = make_direction_set(2, 180);
    const Axis omega = Axis::symmetric(12.0, 512);
    const CartesianGrid grid = CartesianGrid::cube(2, 4.0, 33);
    const TestFunction g = TestFunction::gaussian(2);
    const SampledField rec = polar_inverse(spectral_slices(g, d, omega), grid);
    CHECK(relative_l2(rec, sample(g, grid)) <= 1e-3);
}

TEST_CASE("polar_inverse of zero slices is zero") {
    const SpectralSlices zero(make_direction_set(2, 16), Axis::symmetric(4.0, 33));
    CHECK(testsupport::max_abs(polar_inverse(zero, CartesianGrid::cube(2, 2.0, 5)).values) == 0.0);
}

TEST_CASE("polar_inverse of a shifted Gaussian is centered at the shift") {
    const DirectionSet d = make_direction_set(2, 180);
    const Axis omega = Axis::symmetric(12.0, 512);
    const CartesianGrid grid = CartesianGrid::cube(2, 4.0, 33);
    const Vec3 y{1.0, -0.5, 0.0};
    const SampledField rec = polar_inverse(spectral_slices(TestFunction::gaussian(2).shifted(y), d, omega), grid);
    std::size_t best = 0;
    for (std::size_t q = 1; q < rec.values.size(); ++q)
        if (std::abs(rec.values[q]) > std::abs(rec.values[best])) best = q;
    const Vec3 peak = grid.point(best);
    CHECK(std::abs(peak[0] - y[0]) <= grid.axis(0).spacing());
    CHECK(std::abs(peak[1] - y[1]) <= grid.axis(1).spacing());
}

TEST_CASE("ChirpZ matches the direct exponential sum") {
    const Axis in(-3.0, 2.0, 37);
    const Axis out(-1.5, 4.0, 23);
    std::vector<cplx> x(in.count());
    auto rng = testsupport::make_rng(3);
    for (auto& v : x) v = {testsupport::uniform(rng, -1, 1), testsupport::uniform(rng, -1, 1)};
    for (int sign : {-1, 1}) {
        const ChirpZ cz(in, out, sign);
        std::vector<cplx> y(out.count());
        cz.apply(x, y);
        for (std::size_t i = 0; i < out.count(); ++i) {
            cplx direct = 0.0;
            for (std::size_t m = 0; m < in.count(); ++m) direct += x[m] * std::exp(cplx(0.0, sign * out[i] * in[m]));
            CHECK(std::abs(y[i] - direct) <= 1e-11);
        }
    }
}
