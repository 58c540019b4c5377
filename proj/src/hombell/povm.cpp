#include "hombell/povm.hpp"

#include <cmath>
#include <stdexcept>

#include "hombell/quadrature.hpp"

namespace hombell {

namespace {

ComplexMatrix phase_dress(const RealMatrix& g, double theta) {
  const int dim = static_cast<int>(g.rows());
  ComplexMatrix out(dim, dim);
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n)
      out(m, n) = g(m, n) * std::polar(1.0, theta * (n - m));
  return out;
}

}  // namespace

ComplexMatrix povm_element(const HomodyneSetting& setting, int outcome, int dim) {
  if (dim < 1) throw std::invalid_argument("povm_element: dim must be >= 1");
  if (outcome != 1 && outcome != -1)
    throw std::invalid_argument("povm_element: outcome must be +1 or -1");
  const IntervalSet& region = outcome == 1 ? setting.bins : setting.bins.complement();
  return phase_dress(gram_matrix(dim, region), setting.theta);
}

ComplexMatrix observable(const HomodyneSetting& setting, int dim) {
  if (dim < 1) throw std::invalid_argument("observable: dim must be >= 1");
  ComplexMatrix sigma = 2.0 * phase_dress(gram_matrix(dim, setting.bins), setting.theta);
  sigma.diagonal().array() -= 1.0;
  return sigma;
}

ComplexMatrix apply_loss(const ComplexMatrix& op, const LossModel& loss) {
  const int dim = static_cast<int>(op.rows());
  if (op.cols() != dim) throw std::invalid_argument("apply_loss: matrix must be square");
  const double eta = loss.eta;
  if (eta == 1.0) return op;

  // sqrt-binomial table
  RealMatrix sqb = RealMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    sqb(n, 0) = 1.0;
    for (int k = 1; k <= n; ++k) {
      const double binom = sqb(n, k - 1) * sqb(n, k - 1) * (n - k + 1) / k;
      sqb(n, k) = std::sqrt(binom);
    }
  }

  ComplexMatrix out(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      Complex sum = 0.0;
      const int kmax = std::min(m, n);
      for (int k = 0; k <= kmax; ++k) {
        const double w =
            sqb(m, k) * sqb(n, k) * std::pow(1.0 - eta, k) * std::pow(eta, 0.5 * (m + n) - k);
        sum += w * op(m - k, n - k);
      }
      out(m, n) = sum;
    }
  }
  return out;
}

}  // namespace hombell
