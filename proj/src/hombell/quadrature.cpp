#include "hombell/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hombell {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton iteration
// on the Legendre recurrence.
template <int N>
struct GaussRule {
  std::array<double, N> nodes{};
  std::array<double, N> weights{};

  GaussRule() {
    for (int i = 0; i < N; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= N; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = N * (x * p1 - p0) / (x * x - 1.0);
        const double step = p1 / dp;
        x -= step;
        if (std::abs(step) < 1e-16) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= N; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = N * (x * p1 - p0) / (x * x - 1.0);
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussRule<16>& coarse_rule() {
  static const GaussRule<16> rule;
  return rule;
}
const GaussRule<32>& fine_rule() {
  static const GaussRule<32> rule;
  return rule;
}

// Accumulates the upper triangle of ψψ^T outer products at the rule's nodes.
template <int N>
void panel_sum(const GaussRule<N>& rule, int dim, double a, double b, double* acc) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::vector<double> psi(static_cast<size_t>(dim));
  for (int q = 0; q < N; ++q) {
    const double x = mid + half * rule.nodes[q];
    const double w = half * rule.weights[q];
    hermite_wavefunctions(dim - 1, x, psi);
    size_t idx = 0;
    for (int m = 0; m < dim; ++m) {
      const double wm = w * psi[m];
      for (int n = m; n < dim; ++n) acc[idx++] += wm * psi[n];
    }
  }
}

// One finite panel with embedded error estimate (16 vs 32 points); bisects
// until the worst entry difference is below tol.
void adaptive_panel(int dim, double a, double b, double tol, int depth, double* acc) {
  const size_t tri = static_cast<size_t>(dim) * (dim + 1) / 2;
  std::vector<double> lo(tri, 0.0), hi(tri, 0.0);
  panel_sum(coarse_rule(), dim, a, b, lo.data());
  panel_sum(fine_rule(), dim, a, b, hi.data());
  double err = 0.0;
  for (size_t i = 0; i < tri; ++i) err = std::max(err, std::abs(hi[i] - lo[i]));
  if (err < tol || depth >= 40 || (b - a) < 1e-13) {
    for (size_t i = 0; i < tri; ++i) acc[i] += hi[i];
    return;
  }
  const double mid = 0.5 * (a + b);
  adaptive_panel(dim, a, mid, 0.5 * tol, depth + 1, acc);
  adaptive_panel(dim, mid, b, 0.5 * tol, depth + 1, acc);
}

}  // namespace

double clip_radius(int n_max) { return std::sqrt(2.0 * n_max + 1.0) + 10.0; }

RealMatrix gram_matrix(int dim, const IntervalSet& bins, double abs_tol) {
  if (dim < 1) throw std::invalid_argument("gram_matrix: dim must be >= 1");
  const double clip = clip_radius(dim - 1);
  const size_t tri = static_cast<size_t>(dim) * (dim + 1) / 2;
  std::vector<double> acc(tri, 0.0);
  for (const auto& [lo, hi] : bins.segments()) {
    const double a = std::max(lo, -clip);
    const double b = std::min(hi, clip);
    if (b <= a) continue;
    // Initial split on a scale no coarser than the local oscillation length.
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / 2.0)));
    for (int p = 0; p < panels; ++p) {
      const double pa = a + (b - a) * p / panels;
      const double pb = a + (b - a) * (p + 1) / panels;
      adaptive_panel(dim, pa, pb, abs_tol / panels, 0, acc.data());
    }
  }
  RealMatrix g(dim, dim);
  size_t idx = 0;
  for (int m = 0; m < dim; ++m)
    for (int n = m; n < dim; ++n) {
      g(m, n) = acc[idx];
      g(n, m) = acc[idx];
      ++idx;
    }
  return g;
}

double cell_integral(int m, int n, const IntervalSet& bins, double abs_tol) {
  if (m < 0 || n < 0) throw std::invalid_argument("cell_integral: photon numbers must be >= 0");
  const int dim = std::max(m, n) + 1;
  // Reuses the matrix path; dims here stay small enough that the extra
  // entries are cheap next to the wavefunction recurrence itself.
  return gram_matrix(dim, bins, abs_tol)(m, n);
}

}  // namespace hombell
