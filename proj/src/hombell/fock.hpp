#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

// Fock-basis numerics shared by every other module: harmonic-oscillator
// position wavefunctions in the x = (a + a†)/√2 quadrature convention,
// Hermitian eigendecomposition, tensor products and subspace compressions.
namespace hombell {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// ψ_n(x) = π^{-1/4} (2^n n!)^{-1/2} H_n(x) e^{-x²/2}. Evaluated with the
// normalized three-term recurrence so it stays finite for n up to 64.
// Returns exactly 0 once the Gaussian envelope underflows.
double hermite_wavefunction(int n, double x);

// All of ψ_0(x) .. ψ_{n_max}(x) in one recurrence pass.
void hermite_wavefunctions(int n_max, double x, std::span<double> out);

// Largest |H - H†| entry; throws std::invalid_argument when it exceeds
// tol * max(1, largest |entry|).
double require_hermitian(const ComplexMatrix& h, double tol);

struct EigenSystem {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // orthonormal columns, vectors.col(i) <-> values[i]
};

EigenSystem hermitian_eigensystem(const ComplexMatrix& h, double hermiticity_tol = 1e-9);

// Eigenvalues only (ascending); cheaper inner loop for optimizers.
RealVector hermitian_eigenvalues(const ComplexMatrix& h, double hermiticity_tol = 1e-9);

// Kronecker product with (first, second) index ordering: row (i*rowsB + k).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Compression P†HP onto an orthonormal basis (vectors must pairwise satisfy
// |<bi|bj> - δij| <= ortho_tol, otherwise throws).
ComplexMatrix project_subspace(const ComplexMatrix& h,
                               const std::vector<ComplexVector>& basis,
                               double ortho_tol = 1e-10);

struct BipartiteState {
  int dim_a = 0;
  int dim_b = 0;
  ComplexVector amplitudes;  // size dim_a * dim_b, index i*dim_b + j

  double norm() const { return amplitudes.norm(); }
  Complex amplitude(int i, int j) const { return amplitudes(i * dim_b + j); }
};

// |<a|b>|² with zero-padding of the smaller state onto the larger local dims.
double overlap_fidelity(const BipartiteState& a, const BipartiteState& b);

// max |<a|(Φa ⊗ Φb)|b>|² over per-party diagonal phases (and, optionally,
// complex conjugation of b, which corresponds to flipping the sign of every
// quadrature angle). Used when comparing optimizer states against published
// amplitudes that are only fixed up to the measurement gauge.
double gauge_fidelity(const BipartiteState& a, const BipartiteState& b,
                      bool allow_conjugation = true);

}  // namespace hombell
