// Acceptance run: one PASS/FAIL line per criterion, with the measurements behind it.
// Items marked "FAIL (known)" are claims that do not hold numerically; they are reported
// but do not change the exit status.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "commands.hpp"
#include "ridgelab/activation.hpp"
#include "ridgelab/fourier.hpp"
#include "ridgelab/radon.hpp"
#include "ridgelab/ridgelet.hpp"
#include "ridgelab/wavelet.hpp"
#include "support.hpp"

using namespace ridgelab;
using testsupport::kPi;
using testsupport::kSqrtPi;

namespace {

enum class Status { Pass, Fail, Known };

struct Item {
    std::string name;
    double measured;
    double limit;
    Status status;
};

class Criterion {
public:
    explicit Criterion(std::string title) : title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

    // measured <= limit passes
    void at_most(const std::string& name, double measured, double limit) {
        items_.push_back({name, measured, limit, measured <= limit ? Status::Pass : Status::Fail});
    }
    void at_least(const std::string& name, double measured, double limit) {
        items_.push_back({name, measured, limit, measured >= limit ? Status::Pass : Status::Fail});
    }
    void known(const std::string& name, double measured, double limit) {
        items_.push_back({name, measured, limit, measured <= limit ? Status::Pass : Status::Known});
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    bool report(int number) const {
        bool ok = true;
        for (const auto& i : items_) ok = ok && i.status != Status::Fail;
        std::printf("%s criterion %d: %s (%.1f s)\n", ok ? "PASS" : "FAIL", number, title_.c_str(), seconds());
        for (const auto& i : items_) {
            const char* tag = i.status == Status::Pass ? "pass" : i.status == Status::Fail ? "FAIL" : "FAIL (known)";
            std::printf("    %-13s %-58s %.4e  (limit %.1e)\n", tag, i.name.c_str(), i.measured, i.limit);
        }
        std::fflush(stdout);
        return ok;
    }

private:
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Item> items_;
};

const ActivationFunction& h2() {
    static const ActivationFunction psi = ActivationFunction::hermite_spectral(2);
    return psi;
}

const ReconstructionPair& h2_pair() {
    static const ReconstructionPair pair = make_pair(h2(), h2(), 2);
    return pair;
}

Signal1D gaussian_signal(double center = 0.0, double width = 1.0) {
    return Signal1D::analytic(
        [=](double p) { return cplx(std::exp(-(p - center) * (p - center) / (width * width))); },
        [=](double w) {
            return width * kSqrtPi * std::exp(-width * width * w * w / 4.0) * std::polar(1.0, -center * w);
        },
        center + 8.0 * width);
}

// b = 0 at index 120, a = 1 at index 4.
YGrid small_grid(std::size_t directions) {
    return YGrid(make_direction_set(2, directions), Axis::symmetric(12.0, 241), ScaleGrid(1.0 / 16.0, 16.0, 9));
}

double rel(double diff, double scale) { return scale > 0.0 ? diff / scale : diff; }

bool criterion1() {
    Criterion c("closed-form golden values");
    const Axis omega = Axis::symmetric(16.0, 512);

    const DirectionSet d = make_direction_set(2, 36);
    const Axis p = Axis::symmetric(8.0, 161);
    const SinogramField s = radon(TestFunction::gaussian(2), d, p, omega);
    double worst = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k)
        for (std::size_t i = 0; i < p.count(); ++i)
            worst = std::max(worst, std::abs(s.at(k, i) - kSqrtPi * std::exp(-p[i] * p[i])));
    c.at_most("Radon of Gaussian vs sqrt(pi) exp(-p^2), max over grid", worst, 1e-6);

    const ScalogramField w = cwt(gaussian_signal(), h2(), Axis::symmetric(8.0, 161), ScaleGrid(0.25, 4.0, 9), omega);
    c.at_most("CWT of Gaussian at (0, 1) vs 1/sqrt(2)", std::abs(w.at(80, 4) - 1.0 / std::sqrt(2.0)), 1e-6);

    const YGrid y = small_grid(32);
    const RidgeletField r = ridgelet(TestFunction::gaussian(2), h2(), y, omega);
    double rworst = 0.0;
    for (std::size_t k = 0; k < y.directions().size(); ++k)
        rworst = std::max(rworst, std::abs(r.at(k, 120, 4) - std::sqrt(kPi / 2.0)));
    c.at_most("ridgelet of Gaussian at (u, 0, 1) vs sqrt(pi/2), all u", rworst, 1e-6);

    c.at_most("K(h2, h2) vs 2 pi sqrt(2 pi)", std::abs(h2_pair().K - 2.0 * kPi * std::sqrt(2.0 * kPi)), 1e-6);
    c.at_most("c(h2, h2) vs 2", std::abs(c_constant(h2(), h2()) - 2.0), 1e-8);

    const cli::GridOptions defaults;
    const ReportRow parseval = cli::run_suite("parseval", h2_pair(), defaults.ygrid(), defaults.omega());
    c.at_most("Parseval lhs vs pi/2 (exact)", std::abs(parseval.lhs - kPi / 2.0), 0.0);
    c.at_most("Parseval gap on default grids", parseval.gap, 2e-2);
    return c.report(1);
}

bool criterion2() {
    Criterion c("scale decay of R_psi phi for psi = remark43(2)");
    const cli::Remark43Options o;
    const auto b = cli::parse_range(o.b_range);
    const auto w = cli::parse_range(o.omega_range);
    const YGrid y(make_direction_set(o.dimension, o.directions), Axis(b.first, b.second, o.b_count),
                  ScaleGrid(o.scale_min, o.scale_max, o.scale_count));
    const Remark43Demo demo = remark43_demo(y, Axis(w.first, w.second, o.omega_count));
    const double target = 24.0 * kSqrtPi;
    c.at_most("plateau of a R_psi phi(u, 0, a) on [8, 32] vs 24 sqrt(pi), relative", std::abs(demo.plateau - target) / target,
              1e-2);
    c.at_most("log-log slope on [8, 64] vs -1", std::abs(demo.slope_fit.slope + 1.0), 2e-2);
    c.known("pointwise a R_psi phi vs 24 sqrt(pi) at every node of [8, 32]", demo.pointwise_deviation, 1e-2);
    c.at_most("runtime in seconds", c.seconds(), 30.0);
    return c.report(2);
}

bool criterion3() {
    Criterion c("identity suites on default grids");
    const cli::GridOptions defaults;
    const YGrid y = defaults.ygrid();
    const Axis omega = defaults.omega();
    for (const std::string& name : cli::suite_names()) {
        const ReportRow row = cli::run_suite(name, h2_pair(), y, omega);
        c.at_most(name, row.gap, row.tol);
    }
    const RadonViaRidgelet g = radon_via_ridgelet(TestFunction::gaussian(2), h2_pair(), y, omega, y.b_axis());
    c.known("radon-via-ridgelet for a Gaussian (nonzero mean)", g.rel_l2, 2e-2);
    const TestFunction f = TestFunction::gaussian(2);
    const IdentityCheck shifted = parseval_check(f, f.shifted({4.0, 0.0, 0.0}), h2_pair(), y, omega,
                                                 CartesianGrid::cube(2, 8.0, 129));
    c.known("parseval for Gaussians four units apart", shifted.gap, 2e-2);
    c.at_most("runtime in seconds", c.seconds(), 300.0);
    return c.report(3);
}

bool criterion4() {
    Criterion c("oracle equivalences");
    auto rng = testsupport::make_rng(2024);
    const Axis omega = Axis::symmetric(16.0, 512);

    const YGrid y = small_grid(24);
    const TestFunction f = TestFunction::random_mixture(2, 6);
    const RidgeletField r = ridgelet(f, h2(), y, omega);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const std::size_t k = testsupport::pick(rng, y.directions().size());
        const std::size_t i = 80 + testsupport::pick(rng, 81);
        const std::size_t j = testsupport::pick(rng, y.scales().count());
        const cplx direct = ridgelet_direct(f, h2(), y.directions()[k], y.b_axis()[i], y.scales()[j]);
        worst = std::max(worst, std::abs(r.at(k, i, j) - direct));
    }
    c.at_most("spectral vs direct ridgelet, 20 random nodes", worst, 1e-4);

    const DirectionSet d = make_direction_set(2, 64);
    const Axis p = Axis::symmetric(6.0, 121);
    const SinogramField s = radon(f, d, p, omega);
    worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const std::size_t k = testsupport::pick(rng, d.size());
        const std::size_t i = testsupport::pick(rng, p.count());
        worst = std::max(worst, std::abs(s.at(k, i) - radon_direct(f, d[k], p[i])));
    }
    c.at_most("Fourier-slice vs line-integral Radon, 20 random (u, p)", worst, 1e-5);

    const TestFunction g = TestFunction::gaussian(2);
    const DirectionSet d24 = make_direction_set(2, 24);
    const Axis w = Axis::symmetric(6.0, 61);
    const SpectralSlices sampled = spectral_slices(sample(g, CartesianGrid::cube(2, 8.0, 64)), d24, w);
    const SpectralSlices analytic = spectral_slices(g, d24, w);
    c.at_most("sampled vs analytic spectral slices", testsupport::max_abs_diff(sampled.values, analytic.values), 1e-6);
    return c.report(4);
}

double linearity_gap(const std::function<std::vector<cplx>(const SampledField&)>& op, const SampledField& f,
                     const SampledField& g) {
    const cplx alpha(0.75, -1.5);
    const cplx beta(2.0, 0.5);
    const SampledField h(f.grid, testsupport::combine(alpha, f.values, beta, g.values));
    const auto expected = testsupport::combine(alpha, op(f), beta, op(g));
    return rel(testsupport::max_abs_diff(op(h), expected), testsupport::max_abs(expected));
}

bool criterion5() {
    Criterion c("randomized property tests (seeded)");
    auto rng = testsupport::make_rng(5);
    const Axis omega = Axis::symmetric(16.0, 512);
    const YGrid y = small_grid(16);
    const CartesianGrid grid = CartesianGrid::cube(2, 6.0, 40);
    const SampledField f = sample(TestFunction::random_mixture(2, 1), grid);
    const SampledField g = sample(TestFunction::random_mixture(2, 2), grid);

    const DirectionSet d = make_direction_set(2, 16);
    const Axis p = Axis::symmetric(6.0, 61);
    c.at_most("linearity of radon (relative)",
              linearity_gap([&](const SampledField& x) { return radon(x, d, p, omega).values; }, f, g), 1e-12);
    c.at_most("linearity of ridgelet (relative)",
              linearity_gap([&](const SampledField& x) { return ridgelet(x, h2(), y, omega).values; }, f, g), 1e-12);
    const CartesianGrid out = CartesianGrid::cube(2, 3.0, 7);
    c.at_most("linearity of ridgelet synthesis (relative)",
              linearity_gap(
                  [&](const SampledField& x) { return synthesis(ridgelet(x, h2(), y, omega), h2(), out).values; }, f, g),
              1e-12);

    const TestFunction m = TestFunction::random_mixture(2, 4);
    const Vec3 shift{0.7, -0.4, 0.0};
    const SinogramField rs = radon(m.shifted(shift), d, p, omega);
    const RidgeletField rr = ridgelet(m.shifted(shift), h2(), y, omega);
    double radon_worst = 0.0;
    double ridgelet_worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        const std::size_t k = testsupport::pick(rng, d.size());
        const std::size_t i = testsupport::pick(rng, p.count());
        radon_worst = std::max(radon_worst, std::abs(rs.at(k, i) - radon_direct(m, d[k], p[i] - dot(shift, d[k]))));
        const std::size_t ky = testsupport::pick(rng, y.directions().size());
        const std::size_t iy = testsupport::pick(rng, y.b_axis().count());
        const std::size_t jy = testsupport::pick(rng, y.scales().count());
        const Vec3& u = y.directions()[ky];
        const double b = y.b_axis()[iy] - dot(shift, u);
        const double a = y.scales()[jy];
        const YGrid one(DirectionSet(2, {u}, {1.0}), Axis(b, b + 1.0, 2), ScaleGrid(a, 2.0 * a, 2));
        ridgelet_worst = std::max(ridgelet_worst, std::abs(rr.at(ky, iy, jy) - ridgelet(m, h2(), one, omega).at(0, 0, 0)));
    }
    c.at_most("translation covariance of radon, 10 random (u, p)", radon_worst, 1e-6);
    c.at_most("translation covariance of ridgelet, 10 random nodes", ridgelet_worst, 1e-6);

    const Axis b = Axis::symmetric(8.0, 161);
    const ScaleGrid scales(0.5, 8.0, 9);
    const ScalogramField base = cwt(gaussian_signal(0.3), h2(), b, scales, omega);
    double shift_worst = 0.0;
    for (int steps = 1; steps <= 7; ++steps) {
        const ScalogramField moved = cwt(gaussian_signal(0.3 + steps * b.spacing()), h2(), b, scales, omega);
        for (std::size_t i = steps; i < b.count(); ++i)
            for (std::size_t j = 0; j < scales.count(); ++j)
                shift_worst = std::max(shift_worst, std::abs(moved.at(i, j) - base.at(i - steps, j)));
    }
    c.at_most("wavelet shift covariance", shift_worst, 1e-6);

    const double lambda = 2.0;
    const ScalogramField wl = cwt(gaussian_signal(0.3 * lambda, lambda), h2(), b, scales, omega);
    const ScalogramField ws = cwt(gaussian_signal(0.3), h2(), Axis::symmetric(4.0, 161), ScaleGrid(0.25, 4.0, 9), omega);
    c.at_most("wavelet scale covariance W_{g(./l)}(b, a) = W_g(b/l, a/l)",
              testsupport::max_abs_diff(wl.values, ws.values), 1e-6);
    const cplx lhs = cwt_direct(gaussian_signal(0.3 * lambda, lambda), h2(), 1.0, 1.5);
    const cplx rhs = lambda * cwt_direct(gaussian_signal(0.3), h2(), 1.0 / lambda, 1.5 / lambda);
    c.known("wavelet scale covariance with an extra factor l", std::abs(lhs - rhs), 1e-6);

    const SinogramField sm = radon(m, d, p, omega);
    double even = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k)
        for (std::size_t i = 0; i < p.count(); ++i)
            even = std::max(even, std::abs(sm.at(d.antipode(k), p.count() - 1 - i) - sm.at(k, i)));
    c.at_most("sinogram evenness R f(-u, -p) = R f(u, p)", even, 1e-8);

    RidgeletField atom(y);
    const std::size_t k = 3, i = 130, j = 5;
    atom.at(k, i, j) = cplx(1.0, -2.0);
    const Vec3 u = y.directions()[k];
    const double b0 = y.b_axis()[i];
    const cplx ref = synthesis_at(atom, h2(), {b0 * u[0], b0 * u[1], 0.0});
    double ridge = 0.0;
    for (int t = 0; t < 10; ++t) {
        const double s = testsupport::uniform(rng, -5.0, 5.0);
        const cplx v = synthesis_at(atom, h2(), {b0 * u[0] - s * u[1], b0 * u[1] + s * u[0], 0.0});
        ridge = std::max(ridge, std::abs(v - ref));
    }
    c.at_most("ridge constancy of single-atom synthesis", ridge, 1e-10);

    const PointMass delta{{0.5, -0.3, 0.0}, cplx(1.0, 0.5)};
    const RidgeletField phi = separable_bump(y, 0.2, 1.0, 1.0, 0.6, [](const Vec3& v) { return cplx(1.0 + 0.3 * v[0]); });
    const cplx pl = y_integral(multiply(ridgelet_point_mass(delta, h2(), y), phi));
    const cplx pr = delta.weight * synthesis_at(phi, h2().conjugate(), delta.location);
    c.at_most("point-mass duality (relative)", rel(std::abs(pl - pr), std::abs(pl)), 1e-5);
    return c.report(5);
}

bool criterion6() {
    Criterion c("grid-refinement convergence");
    const YGrid coarse(make_direction_set(2, 90), Axis::symmetric(12.0, 128), ScaleGrid(1.0 / 16.0, 16.0, 48));
    const Axis omega = Axis::symmetric(16.0, 256);
    const TestFunction f = TestFunction::gaussian(2).shifted({0.75, -0.5, 0.0});
    const CartesianGrid grid = CartesianGrid::cube(2, 4.0, 33);
    const double e1 = reconstruct(f, h2_pair(), coarse, omega, grid).rel_l2;
    const double e2 = reconstruct(f, h2_pair(), coarse.refined(), omega.refined(), grid).rel_l2;
    std::printf("    reconstruction error %.4e on the coarse grid, %.4e after halving every spacing\n", e1, e2);
    c.at_least("error ratio coarse / refined", e1 / e2, 1.5);
    return c.report(6);
}

}  // namespace

int main() {
    const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3,
                                                      criterion4, criterion5, criterion6};
    int failed = 0;
    for (const auto& run : criteria) {
        try {
            if (!run()) ++failed;
        } catch (const std::exception& e) {
            std::printf("FAIL criterion threw: %s\n", e.what());
            ++failed;
        }
    }
    std::printf("%s: %d of %zu criteria failed\n", failed == 0 ? "PASS" : "FAIL", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
