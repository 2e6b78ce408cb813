#pragma once

// Dimensions of orthogonal and symplectic irreducibles as polynomials in the
// rank, the coefficients a_lambda(n) = 1/(hook^2 o_lambda(1^{2n})), and the
// b = 1 and b = -1/2 Schur expansions of tau.

#include "hurwitz/report.hpp"

namespace hurwitz {

// o_lambda(1^N) = (1/hook) prod_{box} (N + shift(box)), kept factored.
struct OrthoDim {
  Partition lambda;
  BigInt hook;
  std::vector<long> shifts;

  // The polynomial evaluated at an arbitrary scalar, e.g. N, 2n or 1/u.
  Scalar at(const Scalar& n) const;
  BigRat at(long n) const;
};

OrthoDim ortho_dim(const Partition& lambda);
// Weyl's product for SO(2n); requires l(lambda) <= n.
BigRat so_dim(const Partition& lambda, int n);
// sp_lambda(1^{2n}) = (-1)^{|lambda|} o_{lambda^t}(1^{-2n}), for scalar n.
Scalar sp_dim(const Partition& lambda, const Scalar& n);
// Weyl's product for Sp(2n); requires l(lambda) <= n.
BigRat sp_dim_weyl(const Partition& lambda, int n);

// Content product prod (N + c_1(box)) = Z_lambda(1^N), as a polynomial in Var::N.
Scalar zonal_dim(const Partition& lambda);

// a_lambda(n) as rational functions of n, written in Var::N.
Scalar a_coeff_def(const Partition& lambda);
// The product formula with lambda padded to length k; InvalidPadding if k < l(lambda).
Scalar a_coeff_closed(const Partition& lambda, int k);
// The same product formula on an arbitrary integer tuple rho_i = lambda_i - i.
Scalar a_coeff_rho(const std::vector<long>& rho);

// Sorts rho = (lambda_i - i) into decreasing order. Returns the sign of the
// sorting permutation and the partition, or sign 0 when s^{(rho)} vanishes.
struct Straightened {
  int sign = 0;
  Partition lambda;
};
Straightened straighten(const std::vector<long>& rho);
std::vector<long> rho_of(const Partition& lambda, int k);

// Schur function in the rescaled variables p_i -> c p_i.
SymFun schur_scaled(const Partition& lambda, const BigRat& c);

// omega_2(p_r) = 2 (-1)^{r-1} p_r
SymFun omega2(const SymFun& f);

BigRat zonal_spherical(const Partition& lambda, const Partition& mu);
BigRat g_coeff(const Partition& lambda, const Partition& gamma);

CheckReport check_ortho_dims(int max_size);
CheckReport check_a_coeff(int max_size);
CheckReport check_a_antisymmetry(int max_size);
CheckReport check_key_identity(int max_size, int r_max);
CheckReport check_virasoro_on_schur(int max_size, int r_max);
CheckReport schur_expansion_check(int n_max);
// Checks the expansion over symplectic dimensions sp_lambda(1^{2N}). With
// as_printed, checks the variant with o_{lambda^t}(1^{2N}), which differs by
// N -> -N.
CheckReport symplectic_dual_check(int n_max, int omega_max, bool as_printed = false);
// G carries the class sizes m!/z_mu; as_printed keeps the extra 1/m! on the
// right-hand side.
CheckReport oliveira_novaes_check(int m, bool as_printed = false);

}  // namespace hurwitz
