#pragma once

// Pfaffians and determinants over any commutative ring, the kernel a_{ij}
// whose Pfaffians give a_lambda(n), the normalization beta_N, truncation of
// Schur expansions, and the BKP equation for tau_{b=1}(t; 2p, 1/(2N)).

#include <cstdint>
#include <unordered_map>

#include "hurwitz/report.hpp"

namespace hurwitz {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

template <class T>
T pf_rec(const Matrix<T>& a, std::uint32_t mask, std::unordered_map<std::uint32_t, T>& memo) {
  if (mask == 0) return T(1);
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  const int first = __builtin_ctz(mask);
  const std::uint32_t rest = mask & ~(1u << first);
  T sum(0);
  int sign = 1;
  for (std::uint32_t m = rest; m; m &= m - 1) {
    const int j = __builtin_ctz(m);
    const T& e = a[first][j];
    if (!(e == T(0))) {
      T term = e * pf_rec(a, rest & ~(1u << j), memo);
      if (sign > 0)
        sum += term;
      else
        sum -= term;
    }
    sign = -sign;
  }
  memo.emplace(mask, sum);
  return sum;
}

template <class T>
T det_rec(const Matrix<T>& a, int row, std::uint32_t cols, std::unordered_map<std::uint32_t, T>& memo) {
  if (row == static_cast<int>(a.size())) return T(1);
  if (auto it = memo.find(cols); it != memo.end()) return it->second;
  T sum(0);
  int sign = 1;
  for (int j = 0; j < static_cast<int>(a.size()); ++j) {
    if (!(cols & (1u << j))) continue;
    const T& e = a[row][j];
    if (!(e == T(0))) {
      T term = e * det_rec(a, row + 1, cols & ~(1u << j), memo);
      if (sign > 0)
        sum += term;
      else
        sum -= term;
    }
    sign = -sign;
  }
  memo.emplace(cols, sum);
  return sum;
}

}  // namespace detail

// First-row expansion Pf(A) = sum_j (-1)^j a_{1j} Pf(A without 1, j),
// memoized on index subsets. Uses the entries above the diagonal only.
template <class T>
T pfaffian_of(const Matrix<T>& a) {
  if (a.size() % 2) throw Error(ErrorCode::OddSize, "Pfaffian of an odd-sized matrix");
  if (a.size() > 30) throw Error(ErrorCode::BudgetExceeded, "Pfaffian size limit is 30");
  std::unordered_map<std::uint32_t, T> memo;
  return detail::pf_rec(a, a.empty() ? 0u : (1u << a.size()) - 1, memo);
}

// Laplace expansion along rows, memoized on the remaining columns.
template <class T>
T determinant_of(const Matrix<T>& a) {
  if (a.size() > 30) throw Error(ErrorCode::BudgetExceeded, "determinant size limit is 30");
  for (const auto& row : a)
    if (row.size() != a.size()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  std::unordered_map<std::uint32_t, T> memo;
  return detail::det_rec(a, 0, a.empty() ? 0u : (1u << a.size()) - 1, memo);
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.size(), std::vector<T>(b.empty() ? 0 : b[0].size(), T(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.empty() ? 0 : a[0].size(), std::vector<T>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Validated entry points: OddSize, NotSkew.
Scalar pfaffian(const Matrix<Scalar>& a);
Scalar determinant(const Matrix<Scalar>& a);
void require_skew(const Matrix<Scalar>& a);

// The kernel a_{ij}, i, j >= -1.
BigRat a_kernel(int i, int j);
// prod_{k<n} (2k)! Pf(a_{lambda_i+n-i, lambda_j+n-j}), padded with index -1 for odd n.
BigRat a_pfaffian(const Partition& lambda, int n);

// beta_N = 1 / prod_{k=1}^{N-1} (2k)!, with beta_0 = 1.
BigRat beta(int n);
// Falling factorial (x)_m.
Scalar falling(const Scalar& x, int m);
// R_k(N) = 1/(2N+2k-4)_{2k-2} and S_k(N) = 1/((2N+2k-2)_{2k} (2N+2k-4)_{2k}) in Var::N.
Scalar r_k(int k);
Scalar s_k(int k);

// Coefficients in the Schur basis, via the Hall scalar product.
std::map<Partition, Scalar> schur_expand(const SymFun& f);
SymFun from_schur(const std::map<Partition, Scalar>& c);
// Keeps the Schur terms with at most l rows.
GradedSeries trunc(const GradedSeries& tau, int l);
// Integer roots r >= from of a univariate polynomial in Var::N.
std::vector<long> integer_roots_from(const MPoly& p, long from);

// tau_{b=1}(t; 2p, u) at u = 1/(2N), symbolic in N.
GradedSeries bkp_tau(int n_max);

enum class BkpMode { Symbolic, Sampled };

CheckReport check_pfaffian_basics(int trials, unsigned seed);
CheckReport check_pfaffian_det(int trials, int max_size, unsigned seed);
CheckReport schur_pfaffian_check(const std::vector<BigRat>& x);
CheckReport check_schur_pfaffian_random(int trials, unsigned seed);
CheckReport minor_summation_check(const Matrix<Scalar>& b, const Matrix<Scalar>& a);
CheckReport check_minor_summation_random(unsigned seed);
CheckReport a_pfaffian_check(const Partition& lambda, int n);
CheckReport check_a_pfaffian_all(int max_size, int n_max);
CheckReport check_beta_ratios(int n_lo, int n_hi, int k_max);
CheckReport check_trunc(int n_max);
// Residual of the BKP equation, multiplied through by tau(N)^2, in every
// p-degree 0..max_degree; tau is expanded through t^{max_degree + 4}.
CheckReport bkp_equation_check(int max_degree, BkpMode mode,
                               const std::vector<BigRat>& samples = {});

}  // namespace hurwitz
