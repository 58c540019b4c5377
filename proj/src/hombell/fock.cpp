#include "hombell/fock.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hombell {

namespace {
constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^-1/4
}

double hermite_wavefunction(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_wavefunction: n must be >= 0");
  if (!std::isfinite(x)) throw std::invalid_argument("hermite_wavefunction: x must be finite");
  const double gauss = std::exp(-0.5 * x * x);
  if (gauss == 0.0) return 0.0;
  double prev = 0.0;
  double cur = kPiQuarterInv * gauss;
  for (int k = 0; k < n; ++k) {
    const double next =
        std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

void hermite_wavefunctions(int n_max, double x, std::span<double> out) {
  if (n_max < 0 || out.size() < static_cast<size_t>(n_max) + 1)
    throw std::invalid_argument("hermite_wavefunctions: bad n_max/output span");
  const double gauss = std::exp(-0.5 * x * x);
  out[0] = kPiQuarterInv * gauss;
  if (n_max >= 1) out[1] = std::numbers::sqrt2 * x * out[0];
  for (int k = 1; k < n_max; ++k)
    out[k + 1] =
        std::sqrt(2.0 / (k + 1)) * x * out[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * out[k - 1];
}

double require_hermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) throw std::invalid_argument("require_hermitian: matrix not square");
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (asym > tol * scale) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max asymmetry " << asym << " exceeds tolerance " << tol * scale;
    throw std::invalid_argument(msg.str());
  }
  return asym;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& h, double hermiticity_tol) {
  require_hermitian(h, hermiticity_tol);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const ComplexMatrix& h, double hermiticity_tol) {
  require_hermitian(h, hermiticity_tol);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
  return solver.eigenvalues();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix project_subspace(const ComplexMatrix& h, const std::vector<ComplexVector>& basis,
                               double ortho_tol) {
  if (basis.empty()) throw std::invalid_argument("project_subspace: empty basis");
  const Eigen::Index dim = h.rows();
  ComplexMatrix p(dim, static_cast<Eigen::Index>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != dim)
      throw std::invalid_argument("project_subspace: basis vector dimension mismatch");
    p.col(static_cast<Eigen::Index>(i)) = basis[i];
  }
  const ComplexMatrix gram = p.adjoint() * p;
  const double dev = (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (dev > ortho_tol) {
    std::ostringstream msg;
    msg << "project_subspace: basis not orthonormal (max deviation " << dev << ")";
    throw std::invalid_argument(msg.str());
  }
  return p.adjoint() * h * p;
}

double overlap_fidelity(const BipartiteState& a, const BipartiteState& b) {
  const int da = std::max(a.dim_a, b.dim_a);
  const int db = std::max(a.dim_b, b.dim_b);
  Complex dot = 0.0;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      const Complex va = (i < a.dim_a && j < a.dim_b) ? a.amplitude(i, j) : Complex{0.0};
      const Complex vb = (i < b.dim_a && j < b.dim_b) ? b.amplitude(i, j) : Complex{0.0};
      dot += std::conj(va) * vb;
    }
  return std::norm(dot);
}

namespace {

// |sum_ij conj(a_ij) b_ij e^{i(phi_i + psi_j)}| maximized by coordinate-wise
// phase alignment; each update is exact given the others, so the sweep is
// monotone. Coordinate ascent can stall in local optima, hence a handful of
// deterministic restarts.
double aligned_overlap(const Eigen::MatrixXcd& m, int sweeps) {
  const int ra = static_cast<int>(m.rows());
  const int rb = static_cast<int>(m.cols());
  double best = 0.0;
  uint64_t lcg = 0x9e3779b97f4a7c15ull;
  auto next_angle = [&lcg] {
    lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
    return 2.0 * std::numbers::pi * static_cast<double>(lcg >> 11) / 9007199254740992.0;
  };
  for (int restart = 0; restart < 12; ++restart) {
    ComplexVector pa(ra), pb(rb);
    for (int i = 0; i < ra; ++i)
      pa(i) = restart == 0 ? Complex{1.0} : std::polar(1.0, next_angle());
    for (int j = 0; j < rb; ++j)
      pb(j) = restart == 0 ? Complex{1.0} : std::polar(1.0, next_angle());
    double cur = 0.0;
    for (int it = 0; it < sweeps; ++it) {
      for (int i = 0; i < ra; ++i) {
        Complex z = 0.0;
        for (int j = 0; j < rb; ++j) z += m(i, j) * pb(j);
        if (std::abs(z) > 0) pa(i) = std::conj(z) / std::abs(z);
      }
      for (int j = 0; j < rb; ++j) {
        Complex z = 0.0;
        for (int i = 0; i < ra; ++i) z += m(i, j) * pa(i);
        if (std::abs(z) > 0) pb(j) = std::conj(z) / std::abs(z);
      }
      Complex total = 0.0;
      for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j) total += m(i, j) * pa(i) * pb(j);
      cur = std::abs(total);
    }
    best = std::max(best, cur);
  }
  return best;
}

}  // namespace

double gauge_fidelity(const BipartiteState& a, const BipartiteState& b, bool allow_conjugation) {
  const int da = std::max(a.dim_a, b.dim_a);
  const int db = std::max(a.dim_b, b.dim_b);
  Eigen::MatrixXcd m(da, db), mc(da, db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      const Complex va = (i < a.dim_a && j < a.dim_b) ? a.amplitude(i, j) : Complex{0.0};
      const Complex vb = (i < b.dim_a && j < b.dim_b) ? b.amplitude(i, j) : Complex{0.0};
      m(i, j) = std::conj(va) * vb;
      mc(i, j) = std::conj(va) * std::conj(vb);
    }
  double best = aligned_overlap(m, 60);
  if (allow_conjugation) best = std::max(best, aligned_overlap(mc, 60));
  return best * best;
}

}  // namespace hombell
