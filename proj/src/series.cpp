#include "hurwitz/series.hpp"

#include <algorithm>

namespace hurwitz {

SymFun GradedSeries::coeff(int n) const {
  if (n < 0 || n > max_degree()) return {};
  return slices_[n];
}

bool GradedSeries::is_zero() const {
  return std::all_of(slices_.begin(), slices_.end(), [](const SymFun& f) { return f.is_zero(); });
}

int GradedSeries::first_nonzero() const {
  for (int n = 0; n <= max_degree(); ++n)
    if (!slices_[n].is_zero()) return n;
  return -1;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  if (o.max_degree() > max_degree()) slices_.resize(o.slices_.size());
  for (int n = 0; n <= o.max_degree(); ++n) slices_[n] += o.slices_[n];
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
  if (o.max_degree() > max_degree()) slices_.resize(o.slices_.size());
  for (int n = 0; n <= o.max_degree(); ++n) slices_[n] -= o.slices_[n];
  return *this;
}

GradedSeries& GradedSeries::operator*=(const Scalar& c) {
  for (auto& s : slices_) s *= c;
  return *this;
}

GradedSeries GradedSeries::map_slices(const std::function<SymFun(const SymFun&)>& f) const {
  GradedSeries out(max_degree());
  for (int n = 0; n <= max_degree(); ++n) out.slices_[n] = f(slices_[n]);
  return out;
}

GradedSeries GradedSeries::shift(int k) const {
  GradedSeries out(max_degree());
  for (int n = 0; n <= max_degree(); ++n)
    if (n + k >= 0 && n + k <= max_degree()) out.slices_[n + k] = slices_[n];
  return out;
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
  const int d = std::min(a.max_degree(), b.max_degree());
  GradedSeries out(d);
  for (int i = 0; i <= d; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= d; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

GradedSeries series_log(const GradedSeries& s) {
  if (!(s[0] == SymFun(Scalar(1))))
    throw Error(ErrorCode::LogOfNonUnit, "logarithm needs constant term 1");
  const int d = s.max_degree();
  GradedSeries l(d);
  // n L_n = n s_n - sum_{k=1}^{n-1} k L_k s_{n-k}
  for (int n = 1; n <= d; ++n) {
    SymFun acc = s[n] * Scalar(n);
    for (int k = 1; k < n; ++k)
      if (!l[k].is_zero() && !s[n - k].is_zero()) acc -= (l[k] * s[n - k]) * Scalar(k);
    l[n] = acc * Scalar::ratio(1, n);
  }
  return l;
}

GradedSeries series_exp(const GradedSeries& s) {
  if (!s[0].is_zero()) throw Error(ErrorCode::InvalidArgument, "exponential needs zero constant term");
  const int d = s.max_degree();
  GradedSeries e(d);
  e[0] = SymFun(Scalar(1));
  // n E_n = sum_{k=1}^{n} k L_k E_{n-k}
  for (int n = 1; n <= d; ++n) {
    SymFun acc;
    for (int k = 1; k <= n; ++k)
      if (!s[k].is_zero() && !e[n - k].is_zero()) acc += (s[k] * e[n - k]) * Scalar(k);
    e[n] = acc * Scalar::ratio(1, n);
  }
  return e;
}

GradedSeries series_derive(const GradedSeries& s, int i) {
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "derivative index must be positive");
  return s.map_slices([i](const SymFun& f) { return derive(f, i); });
}

GradedSeries series_euler(const GradedSeries& s) {
  GradedSeries out(s.max_degree());
  for (int n = 0; n <= s.max_degree(); ++n) out[n] = s[n] * Scalar(n);
  return out;
}

Scalar series_coeff(const GradedSeries& s, int n, const Partition& mu) { return s.coeff(n, mu); }

}  // namespace hurwitz
