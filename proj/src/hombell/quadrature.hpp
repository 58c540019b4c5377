#pragma once

#include "hombell/fock.hpp"
#include "hombell/intervals.hpp"

namespace hombell {

// Gram matrix of the quadrature wavefunctions over an interval set:
// G[m][n] = ∫_I ψ_m(x) ψ_n(x) dx, for 0 <= m, n < dim. Adaptive
// Gauss-Legendre panels, absolute tolerance per entry.
RealMatrix gram_matrix(int dim, const IntervalSet& bins, double abs_tol = 1e-12);

// Single entry ∫_I ψ_m ψ_n dx (same adaptive scheme).
double cell_integral(int m, int n, const IntervalSet& bins, double abs_tol = 1e-12);

// Everything outside ±clip_radius(n) is below double underflow once squared;
// used to clip unbounded tails before quadrature.
double clip_radius(int n_max);

}  // namespace hombell
