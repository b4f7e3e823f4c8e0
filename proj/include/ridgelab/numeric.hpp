#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ridgelab {

using cplx = std::complex<double>;

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Kahan-Babuska (Neumaier) compensated accumulator.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexCompensatedSum {
public:
    void add(cplx x) {
        re_.add(x.real());
        im_.add(x.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

struct QuadratureResult {
    cplx value;
    double error;
};

// Adaptive 61-point Gauss-Kronrod on [a, b]; infinite limits are allowed.
// Throws QuadratureError when the error estimate exceeds
// max(abs_tol, rel_tol * |value|) by more than a factor of 100.
QuadratureResult integrate(const std::function<cplx(double)>& f, double a, double b,
                           double rel_tol = 1e-12, double abs_tol = 0.0, unsigned max_depth = 18);

// Same but splits [a, b] at the given interior breakpoints.
QuadratureResult integrate_pieces(const std::function<cplx(double)>& f, const std::vector<double>& knots,
                                  double rel_tol = 1e-12, double abs_tol = 0.0, unsigned max_depth = 18);

struct LineFit {
    double slope;
    double intercept;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Least-squares coefficients of y ~ sum_k c_k * basis_k(x).
std::vector<double> least_squares(const std::vector<std::vector<double>>& columns, const std::vector<double>& y);

// Richardson extrapolation of values f(h_0), f(h_0 / 2), ... with error
// terms h^{p}, h^{p+1}, ... removed in turn.
cplx richardson(std::vector<cplx> values, double leading_power);

}  // namespace ridgelab
