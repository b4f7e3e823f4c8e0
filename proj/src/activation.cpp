#include "ridgelab/activation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "parse_call.hpp"
#include "ridgelab/numeric.hpp"
#include "ridgelab/source.hpp"

namespace ridgelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

cplx ipow(int m) {
    static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((m % 4) + 4) % 4];
}

double factorial(int k) { return std::tgamma(k + 1.0); }

// Smallest/largest points of a scan where |f| exceeds rel * max|f|.
std::pair<double, double> scan_support(const std::function<double(double)>& mag, double lo, double hi, double step,
                                       double rel) {
    double peak = 0.0;
    for (double x = lo; x <= hi; x += step) peak = std::max(peak, mag(x));
    double first = hi, last = lo;
    for (double x = lo; x <= hi; x += step) {
        if (mag(x) > rel * peak) {
            first = std::min(first, x);
            last = std::max(last, x);
        }
    }
    return {std::max(lo, first - step), std::min(hi, last + step)};
}

// Physicists' Hermite series sum_k c_k H_k(x) converted to monomial coefficients.
std::vector<cplx> hermite_to_monomial(const std::vector<cplx>& c) {
    const std::size_t K = c.size();
    std::vector<std::vector<double>> H(K);
    for (std::size_t k = 0; k < K; ++k) {
        H[k].assign(K, 0.0);
        if (k == 0) {
            H[0][0] = 1.0;
        } else if (k == 1) {
            H[1][1] = 2.0;
        } else {
            for (std::size_t d = 0; d < K; ++d) {
                double v = -2.0 * static_cast<double>(k - 1) * H[k - 2][d];
                if (d > 0) v += 2.0 * H[k - 1][d - 1];
                H[k][d] = v;
            }
        }
    }
    std::vector<cplx> mono(K, 0.0);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t d = 0; d < K; ++d) mono[d] += c[k] * H[k][d];
    return mono;
}

// psi(x) = exp(-x^2) sum_k c_k H_k(x), psi^(w) = sqrt(pi) exp(-w^2/4) sum_k c_k (-i w)^k.
class HermiteGaussModel final : public ActivationModel {
public:
    HermiteGaussModel(std::vector<cplx> coeffs, ActivationKind kind, std::string name)
        : coeffs_(std::move(coeffs)), kind_(kind), name_(std::move(name)) {
        while (coeffs_.size() > 1 && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
        monomial_ = hermite_to_monomial(coeffs_);
        for (const cplx& m : monomial_) {
            real_monomial_.push_back(m.real());
            if (m.imag() != 0.0) real_ = false;
        }
        order_ = kInfiniteOrder;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] != cplx(0.0)) {
                order_ = static_cast<int>(k);
                break;
            }
        }
        band_ = scan_support([this](double w) { return std::abs(spectrum(w)); }, 0.0, 200.0, 0.01, 1e-18);
        band_.first = 0.0;
        extent_ = scan_support([this](double x) { return std::abs(value(x)); }, 0.0, 60.0, 0.01, 1e-18).second;
    }

    cplx value(double x) const override { return poly(x) * std::exp(-x * x); }

    cplx spectrum(double w) const override {
        cplx s = 0.0, z = 1.0;
        for (const cplx& c : coeffs_) {
            s += c * z;
            z *= cplx(0.0, -w);
        }
        return std::sqrt(kPi) * std::exp(-w * w / 4.0) * s;
    }

    int vanishing_order() const override { return order_; }
    std::pair<double, double> band() const override { return band_; }
    double spatial_extent() const override { return extent_; }

    void kernel_row(double t0, double dt, std::size_t count, cplx* out) const override {
        fill_row(t0, dt, count, out, [this](double t) { return poly(t); });
    }

    bool has_real_kernel() const override { return real_; }

    void kernel_row_real(double t0, double dt, std::size_t count, double* out) const override {
        if (!real_) {
            ActivationModel::kernel_row_real(t0, dt, count, out);
            return;
        }
        fill_row(t0, dt, count, out, [this](double t) {
            double acc = 0.0;
            for (std::size_t d = real_monomial_.size(); d-- > 0;) acc = acc * t + real_monomial_[d];
            return acc;
        });
    }

    std::shared_ptr<const ActivationModel> conjugate() const override {
        std::vector<cplx> c(coeffs_.size());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = std::conj(coeffs_[k]);
        return std::make_shared<HermiteGaussModel>(std::move(c), ActivationKind::derived, "conj(" + name_ + ")");
    }

    std::shared_ptr<const ActivationModel> compensate(int m) const override {
        std::vector<cplx> c(coeffs_.size() + static_cast<std::size_t>(m), 0.0);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k + static_cast<std::size_t>(m)] = ipow(m) * coeffs_[k];
        return std::make_shared<HermiteGaussModel>(std::move(c), ActivationKind::derived,
                                                   "compensated(" + name_ + "," + std::to_string(m) + ")");
    }

    ActivationKind kind() const override { return kind_; }
    std::string name() const override { return name_; }

private:
    // exp(-t_i^2) by a multiplicative recurrence outward from the node nearest t = 0.
    template <typename T, typename Poly>
    void fill_row(double t0, double dt, std::size_t count, T* out, Poly poly_at) const {
        if (count == 0) return;
        if (dt == 0.0) {
            std::fill(out, out + count, poly_at(t0) * std::exp(-t0 * t0));
            return;
        }
        double centre = std::round(-t0 / dt);
        auto start = static_cast<std::size_t>(std::clamp(centre, 0.0, static_cast<double>(count - 1)));
        const double shrink = std::exp(-2.0 * dt * dt);
        const double ts = t0 + static_cast<double>(start) * dt;
        const double gs = std::exp(-ts * ts);
        double g = gs;
        double r = std::exp(-(2.0 * ts * dt + dt * dt));
        for (std::size_t i = start; i < count; ++i) {
            double t = t0 + static_cast<double>(i) * dt;
            out[i] = g == 0.0 ? T(0.0) : poly_at(t) * g;
            g *= r;
            r *= shrink;
        }
        g = gs;
        r = std::exp(2.0 * ts * dt - dt * dt);
        for (std::size_t i = start; i-- > 0;) {
            g *= r;
            r *= shrink;
            double t = t0 + static_cast<double>(i) * dt;
            out[i] = g == 0.0 ? T(0.0) : poly_at(t) * g;
        }
    }

    cplx poly(double x) const {
        cplx acc = 0.0;
        for (std::size_t d = monomial_.size(); d-- > 0;) acc = acc * x + monomial_[d];
        return acc;
    }

    std::vector<cplx> coeffs_;
    std::vector<cplx> monomial_;
    std::vector<double> real_monomial_;
    bool real_ = true;
    ActivationKind kind_;
    std::string name_;
    int order_;
    std::pair<double, double> band_;
    double extent_;
};

using ComplexSpectrum = std::function<cplx(cplx)>;

// Integral of F along the ray r e^{i theta}, r in [0, inf).
cplx ray_integral(const ComplexSpectrum& F, double theta, const std::vector<double>& extra_knots) {
    const cplx dir = std::polar(1.0, theta);
    std::vector<double> knots{0.0, 0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
    for (double k : extra_knots)
        if (k > 0.0 && k < 8.0) knots.push_back(k);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    knots.push_back(std::numeric_limits<double>::infinity());
    return integrate_pieces([&](double r) { return F(r * dir) * dir; }, knots, 1e-13, 1e-300).value;
}

// Spectrum analytic in the sectors |arg w| < pi/4 and |arg w - pi| < pi/4 and
// decaying at 0 and infinity there. Spatial values and moments use rotated rays.
class SpectralAnalyticModel final : public ActivationModel {
public:
    SpectralAnalyticModel(ComplexSpectrum F, int order, double extent, ActivationKind kind, std::string name)
        : F_(std::move(F)), order_(order), extent_(extent), kind_(kind), name_(std::move(name)) {
        band_ = scan_support([this](double w) { return std::abs(spectrum(w)); }, 0.0, 200.0, 0.005, 1e-18);
    }

    cplx value(double x) const override {
        const double theta = x >= 0.0 ? kPi / 6.0 : -kPi / 6.0;
        std::vector<double> extra;
        if (x != 0.0) {
            double rs = std::cbrt(2.0 / std::abs(x));
            extra = {0.5 * rs, rs, 2.0 * rs};
        }
        cplx pos = ray_integral([&](cplx z) { return F_(z) * std::exp(kI * z * x); }, theta, extra);
        cplx neg = ray_integral([&](cplx z) { return F_(-z) * std::exp(-kI * z * x); }, -theta, extra);
        return (pos + neg) / (2.0 * kPi);
    }

    cplx spectrum(double w) const override { return F_(cplx(w, 0.0)); }
    int vanishing_order() const override { return order_; }
    std::pair<double, double> band() const override { return band_; }
    double spatial_extent() const override { return extent_; }

    std::vector<cplx> moments(int k_max) const override {
        ComplexSpectrum reflected = [F = F_](cplx z) { return F(-z); };
        std::vector<cplx> m(static_cast<std::size_t>(k_max) + 1);
        for (int k = 0; k <= k_max; ++k) {
            double sign = (k % 2 == 0) ? 1.0 : -1.0;
            m[static_cast<std::size_t>(k)] = half_moment(F_, k) + sign * half_moment(reflected, k);
        }
        return m;
    }

    std::shared_ptr<const ActivationModel> conjugate() const override {
        ComplexSpectrum G = [F = F_](cplx z) { return std::conj(F(-std::conj(z))); };
        return std::make_shared<SpectralAnalyticModel>(G, order_, extent_, ActivationKind::derived, "conj(" + name_ + ")");
    }

    std::shared_ptr<const ActivationModel> compensate(int m) const override {
        ComplexSpectrum G = [F = F_, m](cplx z) { return std::pow(z, m) * F(z); };
        int order = order_ == kInfiniteOrder ? kInfiniteOrder : order_ + m;
        return std::make_shared<SpectralAnalyticModel>(G, order, extent_, ActivationKind::derived,
                                                       "compensated(" + name_ + "," + std::to_string(m) + ")");
    }

    ActivationKind kind() const override { return kind_; }
    std::string name() const override { return name_; }

private:
    // int_0^inf x^k psi(x) dx through the Laplace kernel int_0^inf x^k e^{i z x} dx = k! / (-i z)^{k+1},
    // valid once both half-lines of omega are rotated into the upper half-plane.
    static cplx half_moment(const ComplexSpectrum& F, int k) {
        const double theta = kPi / 8.0;
        auto kernel = [k](cplx z) { return std::pow(-kI * z, -(k + 1)); };
        cplx right = ray_integral([&](cplx z) { return F(z) * kernel(z); }, theta, {});
        cplx left = ray_integral([&](cplx z) { return F(-z) * kernel(-z); }, -theta, {});
        return factorial(k) / (2.0 * kPi) * (right + left);
    }

    ComplexSpectrum F_;
    int order_;
    double extent_;
    ActivationKind kind_;
    std::string name_;
    std::pair<double, double> band_;
};

class TableModel final : public ActivationModel {
public:
    TableModel(const Axis& omega, std::vector<cplx> values, int order, std::string name)
        : omega_(omega), values_(std::move(values)), order_(order), name_(std::move(name)) {
        if (values_.size() != omega_.count()) throw ShapeError("table activation: value count does not match axis");
        std::vector<double> re(values_.size()), im(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) {
            re[i] = values_[i].real();
            im[i] = values_[i].imag();
        }
        re_ = std::make_shared<Spline>(re.begin(), re.end(), omega_.min(), omega_.spacing());
        im_ = std::make_shared<Spline>(im.begin(), im.end(), omega_.min(), omega_.spacing());
    }

    cplx value(double x) const override {
        auto f = [&](double w) { return spectrum(w) * std::polar(1.0, w * x); };
        std::vector<double> knots;
        const std::size_t pieces = 16;
        for (std::size_t i = 0; i <= pieces; ++i)
            knots.push_back(omega_.min() + (omega_.max() - omega_.min()) * static_cast<double>(i) / pieces);
        return integrate_pieces(f, knots, 1e-11, 1e-14).value / (2.0 * kPi);
    }

    cplx spectrum(double w) const override {
        if (w < omega_.min() || w > omega_.max()) return 0.0;
        return {(*re_)(w), (*im_)(w)};
    }

    int vanishing_order() const override { return order_; }
    std::pair<double, double> band() const override {
        return {std::max(0.0, omega_.min()), std::max(std::abs(omega_.min()), std::abs(omega_.max()))};
    }
    double spatial_extent() const override { return 60.0; }

    std::vector<cplx> moments(int k_max) const override {
        if (k_max > 8) throw std::domain_error("moments above k = 8 are refused for table activations");
        return ActivationModel::moments(k_max);
    }

    std::shared_ptr<const ActivationModel> conjugate() const override {
        std::vector<cplx> v(values_.rbegin(), values_.rend());
        for (auto& x : v) x = std::conj(x);
        return std::make_shared<TableModel>(Axis(-omega_.max(), -omega_.min(), omega_.count()), std::move(v), order_,
                                            "conj(" + name_ + ")");
    }

    std::shared_ptr<const ActivationModel> compensate(int m) const override {
        std::vector<cplx> v(values_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= std::pow(omega_[i], m);
        int order = order_ == kInfiniteOrder ? kInfiniteOrder : order_ + m;
        return std::make_shared<TableModel>(omega_, std::move(v), order,
                                            "compensated(" + name_ + "," + std::to_string(m) + ")");
    }

    ActivationKind kind() const override { return ActivationKind::table; }
    std::string name() const override { return name_; }

private:
    using Spline = boost::math::interpolators::cardinal_cubic_b_spline<double>;
    Axis omega_;
    std::vector<cplx> values_;
    int order_;
    std::string name_;
    std::shared_ptr<Spline> re_;
    std::shared_ptr<Spline> im_;
};

int add_orders(int a, int b) {
    if (a == kInfiniteOrder || b == kInfiniteOrder) return kInfiniteOrder;
    return a + b;
}

// int over eps < |w| (side > 0: w > 0 only; side < 0: w < 0 only; 0: both) of g, with the
// hole eps -> 0 removed by Richardson extrapolation. `leading_power` is the exponent of the
// first error term eps^p.
cplx hole_integral(const std::function<cplx(double)>& g, int side, double hi, double leading_power) {
    double floor = 1e-300;
    const double eps0 = std::min(0.05, hi / 4.0);
    {
        auto mag = [&](double w) { return cplx(std::abs(g(w)) + std::abs(g(-w))); };
        floor = 1e-16 * integrate(mag, eps0, hi, 1e-6, 1e-300, 12).value.real();
    }
    auto piece = [&](double a, double b) {
        cplx s = 0.0;
        if (side >= 0) s += integrate(g, a, b, 1e-13, floor).value;
        if (side <= 0) s += integrate([&](double w) { return g(-w); }, a, b, 1e-13, floor).value;
        return s;
    };
    ComplexCompensatedSum base;
    for (double a = eps0; a < hi; a *= 2.0) base.add(piece(a, std::min(2.0 * a, hi)));
    std::vector<cplx> values{base.value()};
    double eps = eps0;
    for (int level = 1; level <= 5; ++level) {
        values.push_back(values.back() + piece(eps / 2.0, eps));
        eps /= 2.0;
    }
    return richardson(values, std::min(leading_power, 30.0));
}

double combined_band(const ActivationFunction& a, const ActivationFunction& b) {
    return std::min(a.band().second, b.band().second);
}

}  // namespace

std::vector<cplx> ActivationModel::moments(int k_max) const {
    const double L = std::max(1.0, 1.2 * spatial_extent());
    std::vector<double> knots;
    const int pieces = 24;
    for (int i = 0; i <= pieces; ++i) knots.push_back(-L + 2.0 * L * i / pieces);
    std::vector<cplx> m(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        auto f = [&](double x) { return std::pow(x, k) * value(x); };
        auto g = [&](double x) { return cplx(std::abs(f(x))); };
        QuadratureResult core = integrate_pieces(f, knots, 1e-13, 1e-16);
        double scale = integrate_pieces(g, knots, 1e-8, 1e-16).value.real();
        double tail = integrate(g, L, 2.0 * L, 1e-6, 1e-300).value.real() +
                      integrate(g, -2.0 * L, -L, 1e-6, 1e-300).value.real();
        if (tail > 1e-10 * std::max(1.0, scale)) {
            std::ostringstream os;
            os << "moment " << k << " of " << name() << ": tail estimate " << tail << " exceeds tolerance";
            throw QuadratureError(os.str());
        }
        m[static_cast<std::size_t>(k)] = core.value;
    }
    return m;
}

void ActivationModel::kernel_row(double t0, double dt, std::size_t count, cplx* out) const {
    for (std::size_t i = 0; i < count; ++i) out[i] = value(t0 + static_cast<double>(i) * dt);
}

void ActivationModel::kernel_row_real(double t0, double dt, std::size_t count, double* out) const {
    for (std::size_t i = 0; i < count; ++i) out[i] = value(t0 + static_cast<double>(i) * dt).real();
}

ActivationFunction::ActivationFunction(std::shared_ptr<const ActivationModel> model) : model_(std::move(model)) {
    if (!model_) throw std::invalid_argument("ActivationFunction: null model");
}

ActivationFunction ActivationFunction::gaussian() {
    return ActivationFunction(std::make_shared<HermiteGaussModel>(std::vector<cplx>{1.0}, ActivationKind::gaussian, "gaussian"));
}

ActivationFunction ActivationFunction::hermite_spectral(int m) {
    if (m < 0 || m > 24) throw CatalogError("hermite_spectral order must lie in [0, 24]");
    std::vector<cplx> c(static_cast<std::size_t>(m) + 1, 0.0);
    c.back() = ipow(m) / std::sqrt(kPi);
    return ActivationFunction(std::make_shared<HermiteGaussModel>(std::move(c), ActivationKind::hermite_spectral,
                                                                  "hermite_spectral(" + std::to_string(m) + ")"));
}

ActivationFunction ActivationFunction::remark43(int n) {
    if (n < 1 || n > 6) throw CatalogError("remark43 dimension must lie in [1, 6]");
    std::vector<cplx> c(static_cast<std::size_t>(2 * n) + 1, 0.0);
    c.back() = 2.0 * std::pow(kPi, 1.0 - 0.5 * n) * ipow(2 * n) / std::sqrt(kPi);
    return ActivationFunction(std::make_shared<HermiteGaussModel>(std::move(c), ActivationKind::remark43,
                                                                  "remark43(" + std::to_string(n) + ")"));
}

ActivationFunction ActivationFunction::lizorkin_bump() {
    ComplexSpectrum F = [](cplx z) -> cplx {
        if (std::abs(z) < 0.02) return 0.0;
        return std::exp(-z * z - 1.0 / (z * z));
    };
    return ActivationFunction(
        std::make_shared<SpectralAnalyticModel>(F, kInfiniteOrder, 160.0, ActivationKind::lizorkin_bump, "lizorkin_bump"));
}

ActivationFunction ActivationFunction::table(const Axis& omega, std::vector<cplx> spectrum, int vanishing_order) {
    return ActivationFunction(std::make_shared<TableModel>(omega, std::move(spectrum), vanishing_order, "table"));
}

ActivationFunction parse_activation(const std::string& spec) {
    auto call = detail::parse_call(spec);
    auto int_arg = [&](std::size_t i) {
        double v = call.args.at(i);
        if (v != std::floor(v)) throw CatalogError("integer parameter expected in '" + spec + "'");
        return static_cast<int>(v);
    };
    if (call.name == "gaussian") {
        detail::expect_args(call, 0, 0);
        return ActivationFunction::gaussian();
    }
    if (call.name == "hermite_spectral") {
        detail::expect_args(call, 1, 1);
        return ActivationFunction::hermite_spectral(int_arg(0));
    }
    if (call.name == "remark43") {
        detail::expect_args(call, 1, 1);
        return ActivationFunction::remark43(int_arg(0));
    }
    if (call.name == "lizorkin_bump") {
        detail::expect_args(call, 0, 0);
        return ActivationFunction::lizorkin_bump();
    }
    throw CatalogError("unknown activation function '" + call.name + "'");
}

std::vector<cplx> moments(const ActivationFunction& psi, int k_max) {
    if (k_max < 0 || k_max > 12) throw std::domain_error("moments: k_max must lie in [0, 12]");
    return psi.model().moments(k_max);
}

Admissibility is_admissible(const ActivationFunction& psi, int n) {
    const int v = psi.vanishing_order();
    const bool finite = v == kInfiniteOrder || 2 * v - n > -1;
    if (!finite) return {false, std::numeric_limits<double>::infinity()};
    auto g = [&](double w) { return cplx(std::norm(psi.spectrum(w)) / std::pow(std::abs(w), n)); };
    double p = v == kInfiniteOrder ? 30.0 : 2.0 * v - n + 1.0;
    return {true, hole_integral(g, 0, psi.band().second, p).real()};
}

cplx k_constant(const ActivationFunction& psi, const ActivationFunction& eta, int n) {
    const int v = add_orders(psi.vanishing_order(), eta.vanishing_order());
    if (v != kInfiniteOrder && v <= n - 1) {
        throw DivergentConstant("K(" + psi.name() + ", " + eta.name() + ") diverges: combined vanishing order " +
                                std::to_string(v) + " does not exceed n - 1 = " + std::to_string(n - 1));
    }
    const double hi = combined_band(psi, eta);
    const double p = v == kInfiniteOrder ? 30.0 : v - n + 1.0;
    auto g = [&](double w) { return std::conj(psi.spectrum(w)) * eta.spectrum(w) / std::pow(std::abs(w), n); };
    auto g_abs = [&](double w) { return cplx(std::abs(g(w))); };
    const double pref = std::pow(2.0 * kPi, n - 1);
    cplx K = pref * hole_integral(g, 0, hi, p);
    double scale = pref * hole_integral(g_abs, 0, hi, p).real();
    if (std::abs(K) < 1e-12 * scale) {
        throw ZeroConstant("K(" + psi.name() + ", " + eta.name() + ") vanishes: not a reconstruction pair");
    }
    return K;
}

cplx c_constant(const ActivationFunction& psi, const ActivationFunction& eta) {
    const int v = add_orders(psi.vanishing_order(), eta.vanishing_order());
    if (v < 1) {
        throw DivergentConstant("c(" + psi.name() + ", " + eta.name() + ") diverges: combined vanishing order 0");
    }
    const double hi = combined_band(psi, eta);
    const double p = v == kInfiniteOrder ? 30.0 : static_cast<double>(v);
    auto g = [&](double w) { return std::conj(psi.spectrum(w)) * eta.spectrum(w) / std::abs(w); };
    auto g_abs = [&](double w) { return cplx(std::abs(g(w))); };
    cplx pos = hole_integral(g, +1, hi, p);
    cplx neg = hole_integral(g, -1, hi, p);
    if (std::abs(pos - neg) > 1e-8 * std::max(std::abs(pos), std::abs(neg))) {
        std::ostringstream os;
        os << "c(" << psi.name() << ", " << eta.name() << "): half-line integrals differ (" << pos << " vs " << neg << ")";
        throw HalfLineMismatch(os.str());
    }
    double scale = hole_integral(g_abs, +1, hi, p).real();
    if (std::abs(pos) < 1e-12 * scale) {
        throw ZeroConstant("c(" + psi.name() + ", " + eta.name() + ") vanishes");
    }
    return pos;
}

ReconstructionPair make_pair(const ActivationFunction& psi, const ActivationFunction& eta, int n) {
    cplx K = k_constant(psi, eta, n);
    cplx c = c_constant(psi, eta);
    return {psi, eta, K, c, n};
}

}  // namespace ridgelab
