#pragma once

// The generating function tau = sum_n t^n sum_{lambda |- n} J_lambda / j_lambda
// prod_{box} 1/(u^{-1} + c_b(box)), its rescaling, the evolution and Virasoro
// operators, and the Feray coefficients.

#include <optional>

#include "hurwitz/report.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

enum class TauMode {
  SymbolicBU,  // coefficients in Q(b, u)
  SymbolicBN,  // u^{-1} replaced by the symbol N
  Sampled,     // b and N rational
};
const char* tau_mode_name(TauMode mode);

struct TauSeries {
  TauMode mode = TauMode::SymbolicBU;
  Scalar b;
  std::optional<BigRat> n_value;  // Sampled only
  GradedSeries series;

  // u and u^{-1} as scalars in the coordinates of the mode.
  Scalar u() const;
  Scalar inv_u() const;
};

// Shared Jack table for the formal b, b = 1, or any other rational b.
JackTable& jacks_for(const Scalar& b);

// prod_{box} 1/(u^{-1} + c_b(box)) in the coordinates of the mode.
Scalar content_weight(const Partition& lambda, const Scalar& b, TauMode mode,
                      const std::optional<BigRat>& n_value = std::nullopt);

TauSeries expand_tau(int n_max, TauMode mode, const Scalar& b = Scalar::variable(Var::B),
                     const std::optional<BigRat>& n_value = std::nullopt);

// tau(-t/u; p, -u), from a SymbolicBU expansion.
GradedSeries rescale_tilde(const TauSeries& tau);

// E_b = u (t p_1/(1+b) - 2 D_b)
GradedSeries apply_Eb(const GradedSeries& s, const Scalar& b, const Scalar& u);
// (t d/dt - E_b) tau
GradedSeries evolution_residual(const TauSeries& tau);
// Rebuilds tau degree by degree from the evolution equation and [t^0] = 1.
GradedSeries tau_from_evolution(int n_max, const Scalar& b, const Scalar& u);

// L_i = p_i^* / u + (1+b) sum_{m+n=i} p_m^* p_n^* + sum_n p_n p_{n+i}^*
//       + b(i-1) p_i^* - t delta_{i,1}/(1+b)
GradedSeries apply_virasoro(const GradedSeries& s, int i, const Scalar& b, const Scalar& inv_u);
// ([L_i, L_j] - (i-j) L_{i+j}) f
GradedSeries virasoro_commutator_residual(int i, int j, const GradedSeries& f, const Scalar& b,
                                          const Scalar& inv_u);

// a^k_rho = [(ut)^{|rho|} (-u)^k p_rho] (1+b)^{l(rho)} z_rho tau, from a
// symbolic expansion in b and u.
class FerayTable {
 public:
  FerayTable(int max_size, int max_k);
  int max_size() const { return max_size_; }
  int max_k() const { return max_k_; }
  // Zero for k < 0; delta_{k,0} for the empty partition.
  Scalar a(int k, const Partition& rho) const;

 private:
  int max_size_, max_k_;
  std::map<Partition, std::vector<Scalar>> values_;
};

// Orthogonality, norms, D_b eigenvalues, the pairings with p_{1^n} and
// p_{2 1^{n-2}}, the Cauchy sum, and eigen-solve against Gram-Schmidt.
CheckReport check_jack_core(int n_max);
CheckReport check_evolution(const TauSeries& tau);
CheckReport check_evolution_uniqueness(const TauSeries& tau);
CheckReport check_virasoro(const TauSeries& tau, int i_max);
CheckReport check_virasoro_commutators(int pairs_max, int trials, int max_degree,
                                       unsigned seed);
CheckReport check_virasoro_sum(int max_degree, unsigned seed);
CheckReport check_feray_recursion(const FerayTable& table);
CheckReport check_feray_hk(const FerayTable& table, int max_size, int max_k);
CheckReport check_feray_polynomial(const FerayTable& table);
CheckReport check_character_orthogonality(int n_max);
// (1+b) t d/dt log tilde-tau has coefficients in N[b], through u^{u_order}.
CheckReport check_positivity(int n_max, int u_order);

}  // namespace hurwitz
