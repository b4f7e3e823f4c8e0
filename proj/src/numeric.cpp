#include "ridgelab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace ridgelab {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;
using Gauss = boost::math::quadrature::gauss<double, 30>;

struct RuleResult {
    cplx value;
    double error;
};

// Fixed 61-point Kronrod rule with its embedded 30-point Gauss rule on [a, b].
RuleResult apply_rule(const std::function<cplx(double)>& f, double a, double b) {
    static const auto& x = Kronrod::abscissa();
    static const auto& wk = Kronrod::weights();
    static const auto& wg = Gauss::weights();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx fc = f(c);
    cplx kron = wk[0] * fc, gauss = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const cplx s = f(c - h * x[i]) + f(c + h * x[i]);
        kron += wk[i] * s;
        if (i % 2 == 1) gauss += wg[i / 2] * s;
    }
    return {kron * h, std::abs(kron - gauss) * h};
}

struct Adaptive {
    const std::function<cplx(double)>& f;
    double rel_tol;
    double abs_density;
    unsigned max_depth;

    RuleResult run(double a, double b, const RuleResult& whole, unsigned depth) const {
        const double allowed = std::max(abs_density * std::abs(b - a), rel_tol * std::abs(whole.value));
        if (whole.error <= allowed || depth >= max_depth || !std::isfinite(whole.error)) return whole;
        const double m = 0.5 * (a + b);
        RuleResult left = apply_rule(f, a, m), right = apply_rule(f, m, b);
        RuleResult l = run(a, m, left, depth + 1), r = run(m, b, right, depth + 1);
        return {l.value + r.value, l.error + r.error};
    }
};

}  // namespace

QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b, double rel_tol, double abs_tol,
                           unsigned max_depth) {
    if (a == b) return {0.0, 0.0};
    if (a > b) {
        QuadratureResult r = integrate(f, b, a, rel_tol, abs_tol, max_depth);
        return {-r.value, r.error};
    }
    // Infinite limits are mapped onto finite intervals; the rule never touches the endpoints.
    if (std::isinf(a) && std::isinf(b)) {
        auto g = [&](double t) {
            const double d = 1.0 - t * t;
            return f(t / d) * ((1.0 + t * t) / (d * d));
        };
        return integrate(g, -1.0, 1.0, rel_tol, abs_tol, max_depth);
    }
    if (std::isinf(b)) {
        auto g = [&](double t) { return f(a + t / (1.0 - t)) / ((1.0 - t) * (1.0 - t)); };
        return integrate(g, 0.0, 1.0, rel_tol, abs_tol, max_depth);
    }
    if (std::isinf(a)) {
        auto g = [&](double t) { return f(b - t / (1.0 - t)) / ((1.0 - t) * (1.0 - t)); };
        return integrate(g, 0.0, 1.0, rel_tol, abs_tol, max_depth);
    }

    const RuleResult whole = apply_rule(f, a, b);
    // A first pass fixes the relative target from the global estimate so that nearly empty
    // subintervals are not refined towards an unreachable relative accuracy.
    const double target = std::max(abs_tol, rel_tol * std::abs(whole.value));
    Adaptive adaptive{f, rel_tol, 0.25 * target / (b - a), max_depth};
    RuleResult res = adaptive.run(a, b, whole, 0);
    QuadratureResult r{res.value, res.error};
    const double allowed = std::max(abs_tol, rel_tol * std::abs(r.value));
    if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag()) ||
        (r.error > 100.0 * allowed && r.error > 1e-14 * std::max(1.0, std::abs(r.value)))) {
        std::ostringstream os;
        os << "quadrature on [" << a << ", " << b << "] did not converge: estimate " << r.value << ", error "
           << r.error;
        throw QuadratureError(os.str());
    }
    return r;
}

QuadratureResult integrate_pieces(const std::function<cplx(double)>& f, const std::vector<double>& knots,
                                  double rel_tol, double abs_tol, unsigned max_depth) {
    ComplexCompensatedSum total;
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        // Per-piece tolerance is absolute so that small pieces next to large ones do not stall.
        QuadratureResult r = integrate(f, knots[i], knots[i + 1], rel_tol, abs_tol, max_depth);
        total.add(r.value);
        err += r.error;
    }
    return {total.value(), err};
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line needs at least two points");
    auto coef = least_squares({std::vector<double>(x.size(), 1.0), x}, y);
    return {coef[1], coef[0]};
}

std::vector<double> least_squares(const std::vector<std::vector<double>>& columns, const std::vector<double>& y) {
    const Eigen::Index m = static_cast<Eigen::Index>(y.size());
    const Eigen::Index p = static_cast<Eigen::Index>(columns.size());
    if (m < p) throw std::invalid_argument("least_squares: fewer samples than unknowns");
    Eigen::MatrixXd A(m, p);
    Eigen::VectorXd rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        rhs(i) = y[static_cast<std::size_t>(i)];
        for (Eigen::Index c = 0; c < p; ++c) A(i, c) = columns[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
    }
    Eigen::VectorXd sol = A.colPivHouseholderQr().solve(rhs);
    return std::vector<double>(sol.data(), sol.data() + sol.size());
}

cplx richardson(std::vector<cplx> values, double leading_power) {
    // Halving h: the term h^q shrinks by 2^q per level.
    for (std::size_t level = 0; level + 1 < values.size(); ++level) {
        double factor = std::pow(2.0, leading_power + static_cast<double>(level));
        for (std::size_t i = 0; i + 1 + level < values.size(); ++i) {
            values[i] = (factor * values[i + 1] - values[i]) / (factor - 1.0);
        }
    }
    return values.front();
}

}  // namespace ridgelab
