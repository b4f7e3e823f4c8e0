#pragma once

#include <functional>
#include <vector>

#include "ridgelab/activation.hpp"
#include "ridgelab/fields.hpp"
#include "ridgelab/fourier.hpp"
#include "ridgelab/numeric.hpp"
#include "ridgelab/source.hpp"

namespace ridgelab {

// R_psi f(u, b, a) = (1/2 pi) int f^(w u) conj(psi^(a w)) e^{i b w} dw, one inverse
// transform per (u, a) onto the whole b axis.
RidgeletField ridgelet(const Source& source, const ActivationFunction& psi, const YGrid& grid, const Axis& omega);
RidgeletField ridgelet_from_slices(const SpectralSlices& slices, const ActivationFunction& psi, const YGrid& grid);

// <f, conj(psi_{u,b,a})> by direct quadrature: nested adaptive quadrature for analytic
// sources, the Cartesian Riemann sum for sampled ones.
cplx ridgelet_direct(const Source& source, const ActivationFunction& psi, const Vec3& u, double b, double a);

// weight * (1/a) conj(psi((x0.u - b)/a)) at every node.
RidgeletField ridgelet_point_mass(const PointMass& delta, const ActivationFunction& psi, const YGrid& grid);

// R^t_psi Phi(x) = sum over the YGrid of Phi(u,b,a) (1/a) psi((x.u - b)/a) with weights du db da / a^n.
SampledField synthesis(const RidgeletField& field, const ActivationFunction& psi, const CartesianGrid& grid);
cplx synthesis_at(const RidgeletField& field, const ActivationFunction& psi, const Vec3& x);

struct Reconstruction {
    SampledField field;
    double rel_l2;
};

// (1/K) R^t_eta R_psi f on `grid`, compared with f sampled on the same grid.
Reconstruction reconstruct(const Source& f, const ReconstructionPair& pair, const YGrid& ygrid, const Axis& omega,
                           const CartesianGrid& grid);

// lhs = int f g dx (trapezoid on `grid`); rhs = (1/K) y_integral(R_psi f * R_{conj eta} g).
IdentityCheck parseval_check(const Source& f, const Source& g, const ReconstructionPair& pair, const YGrid& ygrid,
                             const Axis& omega, const CartesianGrid& grid);

// phi(u) * exp(-(b - b0)^2 / (2 sb^2) - log(a / a0)^2 / (2 sl^2)), set to exactly zero where the
// exponent drops below -36. An empty direction profile means phi = 1.
RidgeletField separable_bump(const YGrid& grid, double b0, double b_width, double a0, double log_width,
                             const std::function<cplx(const Vec3&)>& direction_profile = {});

// lhs = int f R^t_psi Phi dx on `grid`; rhs = y_integral(R_{conj psi} f * Phi).
IdentityCheck transpose_check(const Source& f, const RidgeletField& phi, const ActivationFunction& psi,
                              const Axis& omega, const CartesianGrid& grid);

struct FactorizationCheck {
    // max |A - B| / max |A| (0 when both vanish), A = ridgelet(f), B = cwt_sinogram(radon(f)).
    double deviation;
    double max_direct;
    double max_via_radon;
};

FactorizationCheck factorization_check(const Source& f, const ActivationFunction& psi, const YGrid& ygrid,
                                       const Axis& omega, const Axis& p_axis);

struct RadonViaRidgelet {
    SinogramField sinogram;
    SinogramField reference;
    double rel_l2;
};

// (1/c) M_eta R_psi f, realized as the YGrid b/a quadrature of J_{n-1} R_psi f, against radon(f).
RadonViaRidgelet radon_via_ridgelet(const Source& f, const ReconstructionPair& pair, const YGrid& ygrid,
                                    const Axis& omega, const Axis& p_axis);

// lhs = int f phi dx; rhs = (1/K) y_integral(W_psi(Rf) * R_{conj eta} phi), W_psi(Rf) from cwt_sinogram
// of radon(f) sampled on `p_axis`.
IdentityCheck desingularization_check(const Source& f, const Source& phi, const ReconstructionPair& pair,
                                      const YGrid& ygrid, const Axis& omega, const Axis& p_axis,
                                      const CartesianGrid& grid);

// Point-mass form: lhs = weight * phi(x0); rhs uses ridgelet_point_mass for R_psi delta.
IdentityCheck desingularization_check(const PointMass& delta, const TestFunction& phi, const ReconstructionPair& pair,
                                      const YGrid& ygrid, const Axis& omega);

struct DecayProbe {
    // sup over the grid of (a^s + a^{-s}) (1 + b^2)^{r/2} |Phi|
    double sup;
    // log-log fit of max_{u,b} |Phi(u,b,a)| against a over the requested window
    LineFit slope_fit;
    std::size_t fit_points;
};

// Throws std::invalid_argument when fewer than three scales fall inside [a_lo, a_hi].
DecayProbe decay_probe(const RidgeletField& field, int s, int r, double a_lo, double a_hi);

struct Remark43Demo {
    std::vector<double> scales;
    // a * R_psi phi(u, 0, a) for psi = remark43(n), phi = exp(-|x|^2)
    std::vector<double> scaled_values;
    // Limit estimate P from the least-squares fit P + Q1/a + Q2/a^2 over the plateau window.
    double plateau;
    // max over plateau-window nodes of |a R - 24 sqrt(pi)| / (24 sqrt(pi))
    double pointwise_deviation;
    LineFit slope_fit;
};

// Needs b = 0 on the b axis; throws std::invalid_argument when either window holds fewer than
// three scale nodes.
Remark43Demo remark43_demo(const YGrid& ygrid, const Axis& omega, double plateau_lo = 8.0, double plateau_hi = 32.0,
                           double slope_lo = 8.0, double slope_hi = 64.0);

}  // namespace ridgelab
