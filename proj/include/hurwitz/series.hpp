#pragma once

// Truncated power series in t whose coefficients are symmetric functions.

#include <vector>

#include "hurwitz/symfun.hpp"

namespace hurwitz {

class GradedSeries {
 public:
  explicit GradedSeries(int max_degree = 0) : slices_(max_degree + 1) {}

  int max_degree() const { return static_cast<int>(slices_.size()) - 1; }
  SymFun& operator[](int n) { return slices_.at(n); }
  const SymFun& operator[](int n) const { return slices_.at(n); }
  // Zero outside 0..max_degree.
  SymFun coeff(int n) const;
  Scalar coeff(int n, const Partition& mu) const { return coeff(n).coeff(mu); }
  bool is_zero() const;
  // Smallest n with a nonzero slice, or -1.
  int first_nonzero() const;

  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  GradedSeries& operator*=(const Scalar& c);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(GradedSeries a, const Scalar& c) { return a *= c; }
  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.slices_ == b.slices_;
  }

  GradedSeries map_slices(const std::function<SymFun(const SymFun&)>& f) const;
  // Multiplies by t^k, dropping what falls beyond max_degree.
  GradedSeries shift(int k) const;

 private:
  std::vector<SymFun> slices_;
};

// Products and transcendental functions use the t-grading and truncate at
// the smaller of the operand degrees.
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_log(const GradedSeries& s);
GradedSeries series_exp(const GradedSeries& s);
// d/dp_i applied slice by slice.
GradedSeries series_derive(const GradedSeries& s, int i);
// t d/dt
GradedSeries series_euler(const GradedSeries& s);
Scalar series_coeff(const GradedSeries& s, int n, const Partition& mu);

}  // namespace hurwitz
