#pragma once

// Partitions and symmetric functions in the power-sum basis.

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hurwitz/exact.hpp"

namespace hurwitz {

class Partition {
 public:
  Partition() = default;
  // Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Sorts and drops zero parts; negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0-based; zero beyond the length.
  int part(int i) const { return i < length() ? parts_[i] : 0; }

  Partition conjugate() const;
  // m[i] = number of parts equal to i, for i in 0..max part.
  std::vector<int> multiplicities() const;
  int multiplicity(int k) const;
  BigInt z() const;
  BigInt hook_product() const;
  // Number of standard Young tableaux.
  BigInt dim() const;
  bool dominated_by(const Partition& o) const;

  Partition with_part(int k) const;
  Partition without_part(int k) const;
  Partition merged(const Partition& o) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Partitions of n in decreasing lexicographic order, (n) first.
const std::vector<Partition>& partitions_of(int n);

// b-content (1+b)(col-1) - (row-1) of the box at 1-based (row, col).
Scalar content(int row, int col, const Scalar& b);
std::vector<Scalar> contents(const Partition& lambda, const Scalar& b);
Scalar content_sum(const Partition& lambda, const Scalar& b);

struct Hooks {
  Scalar hook;
  Scalar hook_prime;
  Scalar j;
};
Hooks hooks(const Partition& lambda, const Scalar& b);

// Complete homogeneous symmetric function h_k evaluated on a finite multiset.
Scalar hk_of_multiset(int k, const std::vector<Scalar>& xs);

class SymFun {
 public:
  using Map = std::map<Partition, Scalar>;

  SymFun() = default;
  SymFun(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static SymFun p(const Partition& mu, const Scalar& c = Scalar(1));
  static SymFun pk(int k) { return p(Partition({k})); }

  const Map& coeffs() const { return c_; }
  Scalar coeff(const Partition& mu) const;
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  int max_degree() const;
  void add_term(const Partition& mu, const Scalar& c);

  SymFun degree_part(int n) const;
  SymFun truncated(int max_degree) const;

  SymFun operator-() const;
  SymFun& operator+=(const SymFun& o);
  SymFun& operator-=(const SymFun& o);
  SymFun& operator*=(const Scalar& c);
  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  friend SymFun operator*(SymFun a, const Scalar& c) { return a *= c; }
  friend SymFun operator*(const Scalar& c, SymFun a) { return a *= c; }
  friend SymFun operator*(const SymFun& a, const SymFun& b);
  friend bool operator==(const SymFun& a, const SymFun& b) { return a.c_ == b.c_; }

  SymFun map_coeffs(const std::function<Scalar(const Scalar&)>& f) const;
  SymFun specialize(Var v, const BigRat& value) const;
  SymFun substitute(Var v, const Scalar& replacement) const;
  // Substitutes p_i -> factor(i) * p_i.
  SymFun rescale(const std::function<Scalar(int)>& factor) const;

  std::string to_string() const;

 private:
  Map c_;
};

// Product keeping only terms of degree <= max_degree.
SymFun mul_truncated(const SymFun& a, const SymFun& b, int max_degree);

SymFun mul_pk(const SymFun& f, int k);
// p_k^* = k d/dp_k
SymFun pk_star(const SymFun& f, int k);
// d/dp_k
SymFun derive(const SymFun& f, int k);

Scalar inner_product(const SymFun& f, const SymFun& g, const Scalar& b);
SymFun laplace_beltrami(const SymFun& f, const Scalar& b);

// Monomial symmetric function m_lambda in the power-sum basis.
const SymFun& m_to_p(const Partition& lambda);
// chi^lambda(mu) by Murnaghan-Nakayama.
long char_sym(const Partition& lambda, const Partition& mu);
SymFun schur(const Partition& lambda);

// Jack functions J_lambda^{(1+b)} for a fixed value of b, which may be the
// formal symbol or a rational number.
class JackTable {
 public:
  explicit JackTable(Scalar b);
  const Scalar& b() const { return b_; }

  // Eigen-solve of D_b in the monomial basis.
  const SymFun& jack(const Partition& lambda);
  // Gram-Schmidt under the b-scalar product along reverse lexicographic order.
  const SymFun& jack_gram_schmidt(const Partition& lambda);
  const Hooks& hooks(const Partition& lambda);

 private:
  struct Degree;
  const Degree& degree(int n);

  Scalar b_;
  std::recursive_mutex mu_;
  std::map<int, std::shared_ptr<Degree>> degrees_;
  std::map<Partition, SymFun> jack_;
  std::map<Partition, SymFun> gs_;
  std::map<Partition, Hooks> hooks_;
};

// Jack function at b = 1.
SymFun zonal(const Partition& lambda);

// The formal b and the b = 1 table, shared process-wide.
JackTable& symbolic_jacks();
JackTable& zonal_jacks();

}  // namespace hurwitz
