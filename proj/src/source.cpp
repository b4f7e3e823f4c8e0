#include "ridgelab/source.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "parse_call.hpp"
#include "ridgelab/numeric.hpp"

namespace ridgelab {

namespace detail {

CatalogCall parse_call(const std::string& text) {
    CatalogCall call;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto open = s.find('(');
    if (open == std::string::npos) {
        call.name = s;
    } else {
        if (s.back() != ')') throw CatalogError("malformed catalog entry '" + text + "'");
        call.name = s.substr(0, open);
        std::string inner = s.substr(open + 1, s.size() - open - 2);
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                call.args.push_back(std::stod(item, &used));
                if (used != item.size()) throw CatalogError("bad argument");
            } catch (const std::exception&) {
                throw CatalogError("non-numeric argument '" + item + "' in '" + text + "'");
            }
        }
    }
    if (call.name.empty()) throw CatalogError("empty catalog name");
    return call;
}

void expect_args(const CatalogCall& call, std::size_t lo, std::size_t hi) {
    if (call.args.size() < lo || call.args.size() > hi) {
        throw CatalogError("wrong number of parameters for '" + call.name + "'");
    }
}

}  // namespace detail

namespace {

constexpr double kPi = std::numbers::pi;

void check_dimension(int n) {
    if (n != 2 && n != 3) throw CatalogError("test functions support dimension 2 or 3");
}

double norm2(const Vec3& x) { return dot(x, x); }

class MixtureModel final : public FunctionModel {
public:
    MixtureModel(int n, std::vector<GaussianTerm> terms, std::string name)
        : n_(n), terms_(std::move(terms)), name_(std::move(name)) {
        for (const auto& t : terms_)
            if (!(t.alpha > 0.0)) throw CatalogError("Gaussian width must be positive");
    }
    int dimension() const override { return n_; }
    cplx value(const Vec3& x) const override {
        cplx s = 0.0;
        for (const auto& t : terms_) {
            Vec3 d{x[0] - t.center[0], x[1] - t.center[1], x[2] - t.center[2]};
            s += t.weight * std::exp(-t.alpha * norm2(d));
        }
        return s;
    }
    cplx spectrum(const Vec3& w) const override {
        cplx s = 0.0;
        for (const auto& t : terms_) {
            double amp = std::pow(kPi / t.alpha, 0.5 * n_) * std::exp(-norm2(w) / (4.0 * t.alpha));
            s += t.weight * amp * std::polar(1.0, -dot(t.center, w));
        }
        return s;
    }
    double support_radius() const override {
        double r = 0.0;
        for (const auto& t : terms_) r = std::max(r, std::sqrt(norm2(t.center)) + std::sqrt(45.0 / t.alpha));
        return r;
    }
    std::string name() const override { return name_; }

private:
    int n_;
    std::vector<GaussianTerm> terms_;
    std::string name_;
};

// Generalized Laguerre polynomial L_k^{(alpha)}(t) by the three-term recurrence.
double laguerre(int k, double alpha, double t) {
    double prev = 1.0;
    if (k == 0) return prev;
    double cur = 1.0 + alpha - t;
    for (int m = 1; m < k; ++m) {
        double next = ((2.0 * m + 1.0 + alpha - t) * cur - (m + alpha) * prev) / (m + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

class LaplacianGaussianModel final : public FunctionModel {
public:
    LaplacianGaussianModel(int n, int k) : n_(n), k_(k) {
        if (k < 0 || k > 6) throw CatalogError("laplacian_gaussian order must lie in [0, 6]");
    }
    int dimension() const override { return n_; }
    cplx value(const Vec3& x) const override {
        double r2 = norm2(x);
        double fact = std::tgamma(k_ + 1.0);
        return std::pow(4.0, k_) * fact * laguerre(k_, 0.5 * n_ - 1.0, r2) * std::exp(-r2);
    }
    cplx spectrum(const Vec3& w) const override {
        double w2 = norm2(w);
        return std::pow(kPi, 0.5 * n_) * std::pow(w2, k_) * std::exp(-w2 / 4.0);
    }
    double support_radius() const override { return std::sqrt(50.0 + 6.0 * k_); }
    std::string name() const override { return "laplacian_gaussian(" + std::to_string(k_) + ")"; }

private:
    int n_;
    int k_;
};

double lizorkin_profile(double rho) {
    if (rho <= 0.0) return 0.0;
    return std::exp(-rho * rho - 1.0 / (rho * rho));
}

class LizorkinRadialModel final : public FunctionModel {
public:
    explicit LizorkinRadialModel(int n) : n_(n) {}
    int dimension() const override { return n_; }
    cplx value(const Vec3& x) const override {
        double r = std::sqrt(norm2(x));
        std::function<cplx(double)> integrand;
        double pref;
        if (n_ == 2) {
            integrand = [r](double rho) { return cplx(lizorkin_profile(rho) * rho * std::cyl_bessel_j(0.0, rho * r)); };
            pref = 1.0 / (2.0 * kPi);
        } else {
            integrand = [r](double rho) {
                double s = rho * r;
                double sinc = s < 1e-8 ? 1.0 - s * s / 6.0 : std::sin(s) / s;
                return cplx(lizorkin_profile(rho) * rho * rho * sinc);
            };
            pref = 1.0 / (2.0 * kPi * kPi);
        }
        std::vector<double> knots{0.04, 0.3, 1.0, 2.0, 4.0, 7.5};
        return pref * integrate_pieces(integrand, knots, 1e-12, 1e-18).value;
    }
    cplx spectrum(const Vec3& w) const override { return lizorkin_profile(std::sqrt(norm2(w))); }
    double support_radius() const override { return 200.0; }
    std::string name() const override { return "lizorkin_radial"; }

private:
    int n_;
};

class ShiftedModel final : public FunctionModel {
public:
    ShiftedModel(std::shared_ptr<const FunctionModel> base, Vec3 y) : base_(std::move(base)), y_(y) {}
    int dimension() const override { return base_->dimension(); }
    cplx value(const Vec3& x) const override { return base_->value({x[0] - y_[0], x[1] - y_[1], x[2] - y_[2]}); }
    cplx spectrum(const Vec3& w) const override { return base_->spectrum(w) * std::polar(1.0, -dot(y_, w)); }
    double support_radius() const override { return base_->support_radius() + std::sqrt(norm2(y_)); }
    std::string name() const override { return "shifted(" + base_->name() + ")"; }

private:
    std::shared_ptr<const FunctionModel> base_;
    Vec3 y_;
};

class ScaledModel final : public FunctionModel {
public:
    ScaledModel(std::shared_ptr<const FunctionModel> base, cplx c) : base_(std::move(base)), c_(c) {}
    int dimension() const override { return base_->dimension(); }
    cplx value(const Vec3& x) const override { return c_ * base_->value(x); }
    cplx spectrum(const Vec3& w) const override { return c_ * base_->spectrum(w); }
    double support_radius() const override { return base_->support_radius(); }
    std::string name() const override { return "scaled(" + base_->name() + ")"; }

private:
    std::shared_ptr<const FunctionModel> base_;
    cplx c_;
};

}  // namespace

TestFunction::TestFunction(std::shared_ptr<const FunctionModel> model) : model_(std::move(model)) {
    if (!model_) throw std::invalid_argument("TestFunction: null model");
}

TestFunction TestFunction::gaussian(int n, double alpha, Vec3 center, cplx weight) {
    check_dimension(n);
    if (n == 2) center[2] = 0.0;
    return TestFunction(std::make_shared<MixtureModel>(n, std::vector<GaussianTerm>{{weight, alpha, center}}, "gaussian"));
}

TestFunction TestFunction::gaussian_mixture(int n, std::vector<GaussianTerm> terms) {
    check_dimension(n);
    return TestFunction(std::make_shared<MixtureModel>(n, std::move(terms), "gaussian_mixture"));
}

TestFunction TestFunction::random_mixture(int n, std::uint64_t seed, std::size_t terms) {
    check_dimension(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> weight(0.5, 1.5), width(0.7, 2.0), pos(-1.5, 1.5);
    std::vector<GaussianTerm> t(terms);
    for (auto& term : t) {
        term.weight = weight(rng);
        term.alpha = width(rng);
        for (int d = 0; d < n; ++d) term.center[static_cast<std::size_t>(d)] = pos(rng);
    }
    return TestFunction(std::make_shared<MixtureModel>(n, std::move(t), "random_mixture(" + std::to_string(seed) + ")"));
}

TestFunction TestFunction::laplacian_gaussian(int n, int k) {
    check_dimension(n);
    return TestFunction(std::make_shared<LaplacianGaussianModel>(n, k));
}

TestFunction TestFunction::lizorkin_radial(int n) {
    check_dimension(n);
    return TestFunction(std::make_shared<LizorkinRadialModel>(n));
}

TestFunction TestFunction::zero(int n) {
    check_dimension(n);
    return TestFunction(std::make_shared<MixtureModel>(n, std::vector<GaussianTerm>{{0.0, 1.0, {}}}, "zero"));
}

TestFunction TestFunction::shifted(const Vec3& y) const {
    return TestFunction(std::make_shared<ShiftedModel>(model_, y));
}

TestFunction TestFunction::scaled(cplx c) const { return TestFunction(std::make_shared<ScaledModel>(model_, c)); }

TestFunction parse_test_function(const std::string& spec, int n) {
    auto call = detail::parse_call(spec);
    if (call.name == "gaussian") {
        detail::expect_args(call, 0, 1);
        return TestFunction::gaussian(n, call.args.empty() ? 1.0 : call.args[0]);
    }
    if (call.name == "shifted_gaussian") {
        detail::expect_args(call, 1, 1);
        return TestFunction::gaussian(n, 1.0, {call.args[0], 0.0, 0.0});
    }
    if (call.name == "laplacian_gaussian") {
        detail::expect_args(call, 1, 1);
        return TestFunction::laplacian_gaussian(n, static_cast<int>(call.args[0]));
    }
    if (call.name == "lizorkin_radial") {
        detail::expect_args(call, 0, 0);
        return TestFunction::lizorkin_radial(n);
    }
    if (call.name == "random_mixture") {
        detail::expect_args(call, 1, 1);
        return TestFunction::random_mixture(n, static_cast<std::uint64_t>(call.args[0]));
    }
    if (call.name == "zero") {
        detail::expect_args(call, 0, 0);
        return TestFunction::zero(n);
    }
    throw CatalogError("unknown test function '" + call.name + "'");
}

SampledField sample(const TestFunction& f, const CartesianGrid& grid) {
    if (f.dimension() != grid.dimension()) throw ShapeError("sample: dimension mismatch");
    return SampledField::from_function(grid, [&](const Vec3& x) { return f.value(x); });
}

cplx interpolate(const SampledField& field, const Vec3& x) {
    const auto& g = field.grid;
    const int n = g.dimension();
    std::array<std::size_t, 3> base{0, 0, 0};
    std::array<double, 3> frac{0.0, 0.0, 0.0};
    for (int d = 0; d < n; ++d) {
        const Axis& a = g.axis(d);
        double t = (x[static_cast<std::size_t>(d)] - a.min()) / a.spacing();
        if (t < 0.0 || t > static_cast<double>(a.count() - 1)) return 0.0;
        auto i0 = std::min(static_cast<std::size_t>(t), a.count() - 2);
        base[static_cast<std::size_t>(d)] = i0;
        frac[static_cast<std::size_t>(d)] = t - static_cast<double>(i0);
    }
    cplx acc = 0.0;
    const int corners = 1 << n;
    for (int c = 0; c < corners; ++c) {
        double w = 1.0;
        std::size_t flat = 0;
        for (int d = 0; d < n; ++d) {
            int bit = (c >> d) & 1;
            auto ud = static_cast<std::size_t>(d);
            w *= bit ? frac[ud] : 1.0 - frac[ud];
            flat = flat * g.axis(d).count() + base[ud] + static_cast<std::size_t>(bit);
        }
        if (w != 0.0) acc += w * field.values[flat];
    }
    return acc;
}

}  // namespace ridgelab
