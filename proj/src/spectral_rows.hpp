#pragma once

#include <vector>

#include "ridgelab/activation.hpp"
#include "ridgelab/fourier.hpp"

namespace ridgelab::detail {

// conj(psi^(a_j w_m)) for all scales, laid out (j, m).
std::vector<cplx> analysis_filters(const ActivationFunction& psi, const ScaleGrid& scales, const Axis& omega);

// Writes W(b_i, a_j) for every (i, j) from one spectrum g^(w_m); output index i * na + j.
void analyze_row(const std::vector<cplx>& spectrum, const std::vector<cplx>& filters, const InverseTransform& inverse,
                 std::size_t nb, std::size_t na, cplx* out);

}  // namespace ridgelab::detail
