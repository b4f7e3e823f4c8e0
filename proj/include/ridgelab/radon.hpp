#pragma once

#include <functional>

#include "ridgelab/fields.hpp"
#include "ridgelab/fourier.hpp"
#include "ridgelab/source.hpp"

namespace ridgelab {

// Rf(u, p) = (1/2 pi) int f^(w u) e^{i p w} dw from spectral slices, one chirp-z per direction.
SinogramField radon(const Source& source, const DirectionSet& directions, const Axis& p_axis, const Axis& omega);

// Same transform starting from precomputed slices.
SinogramField radon_from_slices(const SpectralSlices& slices, const Axis& p_axis);

// Direct quadrature of f over the hyperplane x.u = p (line for n = 2, plane for n = 3).
// Sampled sources are read through multilinear interpolation.
cplx radon_direct(const Source& source, const Vec3& u, double p);

struct BackProjection {
    SampledField field;
    // Number of (x, u) reads with x.u outside the p axis; those reads count as 0.
    std::size_t out_of_range;
};

// R* rho(x) = sum_k w_k rho(u_k, x.u_k), linear interpolation in p.
BackProjection dual_radon(const SinogramField& sinogram, const CartesianGrid& grid);

using SinogramFunction = std::function<cplx(const Vec3& u, double p)>;

// lhs = int f R* rho dx on f's grid, rhs = int int Rf rho du dp on (directions, p_axis).
IdentityCheck duality_check(const SampledField& f, const SinogramFunction& rho, const DirectionSet& directions,
                            const Axis& p_axis, const Axis& omega);

// Per-direction moments int p^k rho(u, p) dp (trapezoid in p).
std::vector<cplx> radon_moments(const SinogramField& sinogram, int k);

}  // namespace ridgelab
