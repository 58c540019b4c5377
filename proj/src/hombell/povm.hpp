#pragma once

#include <optional>

#include "hombell/fock.hpp"
#include "hombell/intervals.hpp"

namespace hombell {

// One dichotomic homodyne measurement: local-oscillator phase plus the
// interval set that maps quadrature outcomes to +1.
struct HomodyneSetting {
  double theta = 0.0;
  IntervalSet bins;

  static HomodyneSetting all_pass() { return {0.0, IntervalSet::real_line()}; }
};

struct LossModel {
  double eta = 1.0;  // transmissivity / overall detection efficiency

  explicit LossModel(double eta_) : eta(eta_) {
    if (!(eta >= 0.0 && eta <= 1.0))
      throw std::invalid_argument("LossModel: eta must lie in [0, 1]");
  }
};

// POVM element <m|Π_outcome|n> = e^{iθ(n-m)} ∫ ψ_m ψ_n dx with the integral
// over the bins for outcome +1 and their complement for -1.
ComplexMatrix povm_element(const HomodyneSetting& setting, int outcome, int dim);

// σ = Π_{+1} - Π_{-1} = 2 Π_{+1} - 1.
ComplexMatrix observable(const HomodyneSetting& setting, int dim);

// Heisenberg-picture photon-loss map (beam splitter of transmissivity eta
// against vacuum, reflected mode traced out):
//   <m|O_η|n> = Σ_k sqrt(C(m,k) C(n,k)) (1-η)^k η^{(m+n)/2-k} O[m-k][n-k].
// Only lowers indices, so a d×d block stays exact under truncation.
ComplexMatrix apply_loss(const ComplexMatrix& op, const LossModel& loss);

inline ComplexMatrix observable(const HomodyneSetting& setting, int dim,
                                const std::optional<LossModel>& loss) {
  ComplexMatrix sigma = observable(setting, dim);
  return loss ? apply_loss(sigma, *loss) : sigma;
}

}  // namespace hombell
