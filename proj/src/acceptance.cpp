#include "hurwitz/acceptance.hpp"

#include "hurwitz/bgw.hpp"
#include "hurwitz/monotone.hpp"
#include "hurwitz/ortho.hpp"
#include "hurwitz/pfaffian.hpp"
#include "hurwitz/tau.hpp"

namespace hurwitz {

namespace {

const char* const kTitles[kCriteria] = {
    "Jack core",
    "evolution equation",
    "Virasoro constraints",
    "Feray recursion",
    "b = 0 monotone oracle",
    "positivity",
    "b = 1 Schur expansion",
    "symplectic expansion",
    "Oliveira-Novaes identity",
    "Pfaffians",
    "BKP equation",
    "BGW integrals",
};

std::vector<BigRat> spectrum(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

const char* criterion_title(int k) {
  if (k < 1 || k > kCriteria) throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(k));
  return kTitles[k - 1];
}

std::vector<CheckReport> run_criterion(int k) {
  switch (k) {
    case 1:
      return {check_jack_core(6)};
    case 2: {
      const TauSeries tau = expand_tau(5, TauMode::SymbolicBU);
      return {check_evolution(tau), check_evolution_uniqueness(tau)};
    }
    case 3: {
      const TauSeries tau = expand_tau(5, TauMode::SymbolicBU);
      return {check_virasoro(tau, 5), check_virasoro_commutators(3, 20, 4, 2024), check_virasoro_sum(5, 7)};
    }
    case 4: {
      const FerayTable table(6, 4);
      return {check_feray_recursion(table), check_feray_hk(table, 5, 3), check_feray_polynomial(table),
              check_character_orthogonality(5)};
    }
    case 5:
      return {compare_with_tau(5, 4), check_monotone_totals(5, 4)};
    case 6:
      return {check_positivity(5, 6)};
    case 7:
      return {check_ortho_dims(6), check_a_coeff(5), schur_expansion_check(5), check_key_identity(4, 3),
              check_virasoro_on_schur(4, 3)};
    case 8:
      return {symplectic_dual_check(4, 5)};
    case 9: {
      std::vector<CheckReport> r;
      for (int m = 1; m <= 4; ++m) r.push_back(oliveira_novaes_check(m));
      return r;
    }
    case 10:
      return {check_pfaffian_basics(20, 10), check_pfaffian_det(50, 8, 11), check_schur_pfaffian_random(20, 12),
              check_minor_summation_random(13), check_a_pfaffian_all(6, 6)};
    case 11:
      return {bkp_equation_check(5, BkpMode::Symbolic), check_beta_ratios(2, 8, 4), check_trunc(5)};
    case 12: {
      std::vector<CheckReport> r = {check_bgw_kernel(6)};
      for (const auto& x : {spectrum({1}), spectrum({1, 2}), spectrum({1, 2, 3})})
        r.push_back(bgw_orthogonal_check(x, 4));
      for (const auto& x : {spectrum({1}), spectrum({1, 2, 3})}) r.push_back(bgw_as_printed_check(x, 4));
      for (const auto& x : {spectrum({1}), spectrum({1, 2})}) r.push_back(bgw_unitary_det_check(x, 4));
      return r;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(k));
  }
}

}  // namespace hurwitz
