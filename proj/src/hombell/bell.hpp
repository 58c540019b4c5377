#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hombell/fock.hpp"
#include "hombell/povm.hpp"

namespace hombell {

// Two-outcome correlator Bell inequality plus the homodyne settings that
// realize each measurement. Marginal coefficients default to zero (CHSH and
// the multi-setting sweeps are correlator-only).
struct BellScenario {
  std::vector<HomodyneSetting> settings_a;
  std::vector<HomodyneSetting> settings_b;
  RealMatrix coefficients;   // c(x, y), size mA x mB
  RealVector marginals_a;    // size mA
  RealVector marginals_b;    // size mB
  double local_bound = 0.0;

  int settings_count_a() const { return static_cast<int>(settings_a.size()); }
  int settings_count_b() const { return static_cast<int>(settings_b.size()); }

  // <A0B0> + <A0B1> + <A1B0> - <A1B1> <= 2, all-pass settings.
  static BellScenario chsh();

  void validate() const;
};

// Σ_xy c(x,y) σ_A(x) ⊗ σ_B(y) + marginal terms; loss, when present, is
// applied to every local observable before assembly.
ComplexMatrix assemble(const BellScenario& scenario, int dim_a, int dim_b,
                       const std::optional<LossModel>& loss = std::nullopt);

struct BellScore {
  double score = 0.0;
  BipartiteState optimal_state;
  double residual = 0.0;  // ||B v - score v||
};

// Top eigenvalue and eigenvector; with a subspace the operator is compressed
// first and the eigenvector lifted back to the full product space.
BellScore score(const BellScenario& scenario, int dim_a, int dim_b,
                const std::optional<LossModel>& loss = std::nullopt,
                const std::vector<ComplexVector>* subspace = nullptr);

// Product-space basis vectors e_{ia} ⊗ e_{jb} for given local index lists.
std::vector<ComplexVector> product_subspace_basis(const std::vector<int>& indices_a,
                                                  const std::vector<int>& indices_b, int dim_a,
                                                  int dim_b);

// Basis {|0,n>, |1,n-1>, ..., |n,0>} inside local dims (n+1, n+1).
std::vector<ComplexVector> energy_subspace_basis(int total_photons);

// Inequality coefficient file format (UTF-8 text, '#' comments):
//   bound <real>
//   settings <mA> <mB>
//   <mA rows of mB coefficients>
//   marginals_A <mA reals>      (optional)
//   marginals_B <mB reals>      (optional)
// Parse errors carry 1-based line numbers. Settings are initialized all-pass.
BellScenario load_inequality(std::istream& in);
BellScenario load_inequality_file(const std::string& path);
void save_inequality(const BellScenario& scenario, std::ostream& out);

}  // namespace hombell
