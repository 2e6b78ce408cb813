#pragma once

// Series expansions of the O(2n) and U(n) BGW integrals at rational spectra:
// the Pfaffian and determinant formulas against the tau-function side.

#include "hurwitz/pfaffian.hpp"

namespace hurwitz {

// Power series in t with rational coefficients, exact through order().
// Integer constants have unbounded order.
class TSeries {
 public:
  static constexpr int kExact = 1 << 30;

  TSeries(long c = 0);  // NOLINT(google-explicit-constructor)
  TSeries(std::vector<BigRat> coeffs, int order);

  int order() const { return order_; }
  BigRat coeff(int k) const;
  const std::vector<BigRat>& coeffs() const { return c_; }
  // Lowest k with a nonzero coefficient, or -1.
  int valuation() const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend bool operator==(const TSeries& a, const TSeries& b) { return a.c_ == b.c_; }

  TSeries scaled(const BigRat& c) const;
  TSeries truncated(int order) const;
  // Divides by t^k; NonCancellingPole if a coefficient below t^k is nonzero.
  TSeries shift_down(int k) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRat> c_;
  int order_ = kExact;
};

json series_json(const TSeries& s);

// (tx)^{j/2} I_j(2 sqrt(tx)) = sum_l (tx)^{l+j} / (l! (l+j)!), through t^order.
TSeries bessel_series(int j, const BigRat& x, int order);

// M(t; x, y) = sum_{k,l >= 0} t^{k+l} x^k a_{kl} y^l, stored by t-degree.
struct BGWKernel {
  int t_max = 0;
  std::vector<std::map<std::pair<int, int>, BigRat>> terms;  // [d] -> (k, l) -> a_{kl}

  TSeries at(const BigRat& x, const BigRat& y) const;
  // sum_k (tx)^k a_{k,-1} = (1 + I_0(2 sqrt(tx)))/2; the printed variant is I_0/2.
  TSeries border(const BigRat& x, bool as_printed = false) const;
};
BGWKernel bgw_kernel(int t_max);

// prod_{k<n} (2k)! Pf(M) / (t^{n(n-1)/2} Delta(x)).
TSeries bgw_orthogonal(const std::vector<BigRat>& x, int t_max, bool as_printed = false);
// tau_{b=1}(t; p, u) at u^{-1} = 2n, p_i = 2 sum_j x_j^i, from the zonal expansion.
TSeries bgw_tau_side(const std::vector<BigRat>& x, int t_max);
// sum_{l(lambda) <= n} t^{|lambda|} a_lambda(n) s_lambda(x), with a_lambda(n)
// from its Pfaffian and s_lambda from the bialternant.
TSeries bgw_schur_route(const std::vector<BigRat>& x, int t_max);
// prod_{k<n} k! det((tx_i)^{(n-j)/2} I_{n-j}) / (t^{n(n-1)/2} Delta(x)).
TSeries bgw_unitary_det(const std::vector<BigRat>& x, int t_max);
// Trunc(tau_{b=0}, n) at u = 1/n, p_i = sum_j x_j^i.
TSeries bgw_unitary_tau(const std::vector<BigRat>& x, int t_max);

// Sum of c_mu prod_i p[mu_i] for numeric power sums p[1], p[2], ...
BigRat evaluate_power_sums(const SymFun& f, const std::vector<BigRat>& p);

CheckReport check_bgw_kernel(int t_max);
CheckReport bgw_orthogonal_check(const std::vector<BigRat>& x, int t_max);
// Runs the printed border entry; passes when the t^0 coefficient is wrong
// for odd n, as expected.
CheckReport bgw_as_printed_check(const std::vector<BigRat>& x, int t_max);
CheckReport bgw_unitary_det_check(const std::vector<BigRat>& x, int t_max);

}  // namespace hurwitz
