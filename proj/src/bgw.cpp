#include "hurwitz/bgw.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/ortho.hpp"
#include "hurwitz/tau.hpp"

namespace hurwitz {

namespace {

BigInt factorial(long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigRat power(const BigRat& x, int k) {
  BigRat r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

void require_spectrum(const std::vector<BigRat>& x) {
  if (x.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one eigenvalue");
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) throw Error(ErrorCode::DegenerateSpectrum, "repeated eigenvalue " + to_string(x[i]));
}

BigRat vandermonde(const std::vector<BigRat>& x) {
  BigRat v(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= x[i] - x[j];
  return v;
}

json spectrum_json(const std::vector<BigRat>& x) {
  json a = json::array();
  for (const auto& v : x) a.push_back(to_string(v));
  return a;
}

// Power sums c * sum_j x_j^i for i = 1..n_max, indexed from 1.
std::vector<BigRat> power_sums(const std::vector<BigRat>& x, int n_max, long c) {
  std::vector<BigRat> p(n_max + 1, 0);
  for (int i = 1; i <= n_max; ++i)
    for (const auto& v : x) p[i] += c * power(v, i);
  return p;
}

// s_lambda(x_1..x_n) = det(x_i^{lambda_j + n - j}) / Delta.
BigRat bialternant(const Partition& lambda, const std::vector<BigRat>& x) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) return 0;
  Matrix<BigRat> m(n, std::vector<BigRat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = power(x[i], lambda.part(j) + n - 1 - j);
  return determinant_of(m) / vandermonde(x);
}

}  // namespace

TSeries::TSeries(long c) {
  if (c != 0) c_.push_back(BigRat(c));
}

TSeries::TSeries(std::vector<BigRat> coeffs, int order) : c_(std::move(coeffs)), order_(order) {
  if (static_cast<int>(c_.size()) > order_ + 1) c_.resize(order_ + 1);
  trim();
}

void TSeries::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRat TSeries::coeff(int k) const {
  if (k > order_) throw Error(ErrorCode::InvalidArgument, "coefficient beyond the tracked order");
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigRat(0);
}

int TSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  order_ = std::min(order_, o.order_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  if (static_cast<int>(c_.size()) > order_ + 1) c_.resize(order_ + 1);
  trim();
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  order_ = std::min(order_, o.order_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  if (static_cast<int>(c_.size()) > order_ + 1) c_.resize(order_ + 1);
  trim();
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  // A truncated factor is known through its order; the other factor's
  // valuation pushes that precision up.
  auto known = [](const TSeries& f, const TSeries& g) {
    return f.order_ == TSeries::kExact ? TSeries::kExact : f.order_ + std::max(0, g.valuation());
  };
  const int order = std::min(known(a, b), known(b, a));
  std::vector<BigRat> c;
  if (!a.c_.empty() && !b.c_.empty()) {
    const std::size_t len = std::min<std::size_t>(a.c_.size() + b.c_.size() - 1,
                                                  order == TSeries::kExact ? SIZE_MAX : order + 1);
    c.assign(len, 0);
    for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < len; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return TSeries(std::move(c), order);
}

TSeries TSeries::scaled(const BigRat& s) const {
  TSeries r = *this;
  for (auto& v : r.c_) v *= s;
  r.trim();
  return r;
}

TSeries TSeries::truncated(int order) const { return TSeries(c_, std::min(order, order_)); }

TSeries TSeries::shift_down(int k) const {
  for (int i = 0; i < k && i < static_cast<int>(c_.size()); ++i)
    if (c_[i] != 0)
      throw Error(ErrorCode::NonCancellingPole,
                  "coefficient of t^" + std::to_string(i) + " survives division by t^" + std::to_string(k));
  std::vector<BigRat> c;
  if (static_cast<int>(c_.size()) > k) c.assign(c_.begin() + k, c_.end());
  return TSeries(std::move(c), order_ == kExact ? kExact : order_ - k);
}

std::string TSeries::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + hurwitz::to_string(c_[k]) + ")";
    if (k > 0) s += k == 1 ? "*t" : "*t^" + std::to_string(k);
  }
  if (s.empty()) s = "0";
  if (order_ != kExact) s += " + O(t^" + std::to_string(order_ + 1) + ")";
  return s;
}

json series_json(const TSeries& s) {
  json a = json::array();
  const int top = s.order() == TSeries::kExact ? static_cast<int>(s.coeffs().size()) - 1 : s.order();
  for (int k = 0; k <= top; ++k) a.push_back({{"power", k}, {"coefficient", to_string(s.coeff(k))}});
  return a;
}

TSeries bessel_series(int j, const BigRat& x, int order) {
  std::vector<BigRat> c(order + 1, 0);
  for (int l = 0; l + j <= order; ++l) c[l + j] = power(x, l + j) / BigRat(factorial(l) * factorial(l + j));
  return TSeries(std::move(c), order);
}

BGWKernel bgw_kernel(int t_max) {
  if (t_max < 1) throw Error(ErrorCode::InvalidArgument, "kernel needs t_max >= 1");
  BGWKernel k{t_max, std::vector<std::map<std::pair<int, int>, BigRat>>(t_max + 1)};
  for (int d = 0; d <= t_max; ++d)
    for (int i = 0; i <= d; ++i) {
      BigRat a = a_kernel(i, d - i);
      if (a != 0) k.terms[d][{i, d - i}] = a;
    }
  return k;
}

TSeries BGWKernel::at(const BigRat& x, const BigRat& y) const {
  std::vector<BigRat> c(t_max + 1, 0);
  for (int d = 0; d <= t_max; ++d)
    for (const auto& [kl, a] : terms[d]) c[d] += a * power(x, kl.first) * power(y, kl.second);
  return TSeries(std::move(c), t_max);
}

TSeries BGWKernel::border(const BigRat& x, bool as_printed) const {
  std::vector<BigRat> c(t_max + 1, 0);
  for (int k = 0; k <= t_max; ++k) c[k] = a_kernel(k, -1) * power(x, k);
  TSeries s(std::move(c), t_max);
  // The printed entry I_0/2 is 1/2 lower in the constant term.
  return as_printed ? s - TSeries(std::vector<BigRat>{rat(1, 2)}, t_max) : s;
}

TSeries bgw_orthogonal(const std::vector<BigRat>& x, int t_max, bool as_printed) {
  require_spectrum(x);
  const int n = static_cast<int>(x.size());
  const int shift = n * (n - 1) / 2;
  const BGWKernel k = bgw_kernel(std::max(1, t_max + shift));
  const int size = n % 2 ? n + 1 : n;
  Matrix<TSeries> m(size, std::vector<TSeries>(size));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = k.at(x[i], x[j]);
  if (n % 2)
    for (int i = 0; i < n; ++i) {
      m[i][n] = k.border(x[i], as_printed);
      m[n][i] = TSeries(0) - m[i][n];
    }
  BigRat prefactor(1);
  for (int j = 1; j < n; ++j) prefactor *= BigRat(factorial(2 * j));
  const TSeries pf = pfaffian_of(m).truncated(t_max + shift);
  return pf.shift_down(shift).scaled(prefactor / vandermonde(x)).truncated(t_max);
}

BigRat evaluate_power_sums(const SymFun& f, const std::vector<BigRat>& p) {
  BigRat sum(0);
  for (const auto& [mu, c] : f.coeffs()) {
    BigRat term = c.exact();
    for (int part : mu.parts()) {
      if (part >= static_cast<int>(p.size())) throw Error(ErrorCode::InvalidArgument, "power sum index out of range");
      term *= p[part];
    }
    sum += term;
  }
  return sum;
}

TSeries bgw_tau_side(const std::vector<BigRat>& x, int t_max) {
  require_spectrum(x);
  const long rank = 2 * static_cast<long>(x.size());
  const auto p = power_sums(x, std::max(1, t_max), 2);
  JackTable& z = zonal_jacks();
  std::vector<BigRat> c(t_max + 1, 0);
  for (int d = 0; d <= t_max; ++d)
    for (const auto& lambda : partitions_of(d)) {
      // Zonal polynomials in more than 2n rows vanish on 2n variables.
      if (lambda.length() > rank) continue;
      const Scalar w = content_weight(lambda, Scalar(1), TauMode::Sampled, BigRat(rank)) / z.hooks(lambda).j;
      c[d] += w.exact() * evaluate_power_sums(z.jack(lambda), p);
    }
  return TSeries(std::move(c), t_max);
}

TSeries bgw_schur_route(const std::vector<BigRat>& x, int t_max) {
  require_spectrum(x);
  const int n = static_cast<int>(x.size());
  std::vector<BigRat> c(t_max + 1, 0);
  for (int d = 0; d <= t_max; ++d)
    for (const auto& lambda : partitions_of(d))
      if (lambda.length() <= n) c[d] += a_pfaffian(lambda, n) * bialternant(lambda, x);
  return TSeries(std::move(c), t_max);
}

TSeries bgw_unitary_det(const std::vector<BigRat>& x, int t_max) {
  require_spectrum(x);
  const int n = static_cast<int>(x.size());
  const int shift = n * (n - 1) / 2;
  // Each entry (tx)^{j/2} I_j(2 sqrt(tx)) is a series in integer powers of t.
  Matrix<TSeries> m(n, std::vector<TSeries>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) m[i][j - 1] = bessel_series(n - j, x[i], t_max + shift);
  BigRat prefactor(1);
  for (int k = 1; k < n; ++k) prefactor *= BigRat(factorial(k));
  const TSeries det = determinant_of(m).truncated(t_max + shift);
  return det.shift_down(shift).scaled(prefactor / vandermonde(x)).truncated(t_max);
}

TSeries bgw_unitary_tau(const std::vector<BigRat>& x, int t_max) {
  require_spectrum(x);
  const int n = static_cast<int>(x.size());
  const TauSeries tau = expand_tau(t_max, TauMode::SymbolicBN, Scalar(0));
  const GradedSeries t = trunc(tau.series, n);
  const auto p = power_sums(x, std::max(1, t_max), 1);
  std::vector<BigRat> c(t_max + 1, 0);
  for (int d = 0; d <= t_max; ++d)
    c[d] = evaluate_power_sums(t[d].specialize(Var::N, BigRat(n)), p);
  return TSeries(std::move(c), t_max);
}

CheckReport check_bgw_kernel(int t_max) {
  Check c("bgw-kernel", "M(t;x,y) = sum t^{k+l} x^k a_{kl} y^l; antisymmetry, M(x,x) = 0, Bessel form",
          {{"tmax", t_max}});
  try {
    const BGWKernel k = bgw_kernel(t_max);
    for (int d = 0; d <= t_max; ++d) {
      BigRat diag(0);
      for (const auto& [kl, a] : k.terms[d]) {
        auto it = k.terms[d].find({kl.second, kl.first});
        c.that(it != k.terms[d].end() && it->second == -a, {{"degree", d}, {"k", kl.first}, {"l", kl.second}},
               "antisymmetry");
        diag += a;
      }
      c.equal(Scalar(0), Scalar(diag), {{"degree", d}, {"property", "M(x,x)"}});
    }
    const std::vector<std::pair<BigRat, BigRat>> points = {{1, 2}, {rat(3, 2), rat(-1, 3)}, {5, rat(2, 7)}};
    for (const auto& [x, y] : points) {
      json where = {{"x", to_string(x)}, {"y", to_string(y)}};
      // (1/4) int_0^t dt'/t' (A_x (1 + B_y) - A_y (1 + B_x)), with
      // A_x = sqrt(t'x) I_1(2 sqrt(t'x)) and B_y = I_0(2 sqrt(t'y)).
      const TSeries ax = bessel_series(1, x, t_max), ay = bessel_series(1, y, t_max);
      const TSeries bx = bessel_series(0, x, t_max) + TSeries(1), by = bessel_series(0, y, t_max) + TSeries(1);
      const TSeries integrand = ax * by - ay * bx;
      std::vector<BigRat> integral(t_max + 1, 0);
      for (int d = 1; d <= t_max; ++d) integral[d] = integrand.coeff(d) / BigRat(4 * d);
      const TSeries bessel_form(integral, t_max);
      const TSeries m = k.at(x, y);
      for (int d = 0; d <= t_max; ++d) {
        where["degree"] = d;
        c.equal(Scalar(bessel_form.coeff(d)), Scalar(m.coeff(d)), where);
      }
      const TSeries border = k.border(x);
      const TSeries half_one_plus_i0 = bx.scaled(rat(1, 2));
      for (int d = 0; d <= t_max; ++d) {
        where["degree"] = d;
        where["property"] = "border";
        c.equal(Scalar(half_one_plus_i0.coeff(d)), Scalar(border.coeff(d)), where);
      }
      where.erase("property");
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport bgw_orthogonal_check(const std::vector<BigRat>& x, int t_max) {
  Check c("bgw-orthogonal", "prod (2k)! Pf(M) / (t^{n(n-1)/2} Delta) = tau_{b=1}(t; p(XX^t), 1/(2n))",
          {{"x", spectrum_json(x)}, {"tmax", t_max}});
  try {
    const TSeries pf = bgw_orthogonal(x, t_max);
    const TSeries tau = bgw_tau_side(x, t_max);
    const TSeries schur = bgw_schur_route(x, t_max);
    c.equal(Scalar(1), Scalar(pf.coeff(0)), {{"route", "pfaffian"}, {"degree", 0}});
    for (int d = 0; d <= t_max; ++d) {
      c.equal(Scalar(tau.coeff(d)), Scalar(pf.coeff(d)), {{"route", "pfaffian"}, {"degree", d}});
      c.equal(Scalar(tau.coeff(d)), Scalar(schur.coeff(d)), {{"route", "schur"}, {"degree", d}});
    }
    // Zonal polynomials beyond 2n rows vanish on the doubled spectrum.
    const auto p = power_sums(x, std::max(1, t_max), 2);
    for (int d = 0; d <= t_max; ++d)
      for (const auto& lambda : partitions_of(d))
        if (lambda.length() > 2 * static_cast<int>(x.size()))
          c.equal(Scalar(0), Scalar(evaluate_power_sums(zonal(lambda), p)),
                  {{"lambda", partition_json(lambda)}, {"property", "vanishing zonal"}});
    // Symmetric in the eigenvalues.
    std::vector<BigRat> rev(x.rbegin(), x.rend());
    c.that(bgw_orthogonal(rev, t_max) == pf, {{"property", "permutation"}});
    // Homogeneous in t x.
    for (long s : {2L, 3L}) {
      std::vector<BigRat> sx;
      for (const auto& v : x) sx.push_back(v * s);
      const TSeries scaled = bgw_orthogonal(sx, t_max);
      for (int d = 0; d <= t_max; ++d)
        c.equal(Scalar(pf.coeff(d) * power(BigRat(s), d)), Scalar(scaled.coeff(d)),
                {{"property", "homogeneity"}, {"c", s}, {"degree", d}});
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport bgw_as_printed_check(const std::vector<BigRat>& x, int t_max) {
  Check c("bgw-as-printed", "border entry I_0/2 gives a wrong constant term for odd n",
          {{"x", spectrum_json(x)}, {"tmax", t_max}});
  try {
    if (x.size() % 2 == 0) throw Error(ErrorCode::InvalidArgument, "the border entry only exists for odd n");
    bool failed_t0 = false;
    std::string detail;
    try {
      const TSeries printed = bgw_orthogonal(x, t_max, true);
      failed_t0 = printed.coeff(0) != 1;
      detail = "t^0 coefficient " + to_string(printed.coeff(0));
    } catch (const Error& e) {
      // A surviving low-order term means the normalization is already off below t^0.
      failed_t0 = e.code() == ErrorCode::NonCancellingPole;
      detail = e.what();
    }
    c.that(failed_t0, {{"degree", 0}, {"printed", detail}}, "printed border gave the right constant term");
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport bgw_unitary_det_check(const std::vector<BigRat>& x, int t_max) {
  Check c("bgw-unitary", "prod k! det((tx_i)^{(n-j)/2} I_{n-j}) / (t^{n(n-1)/2} Delta) = Trunc(tau_{b=0}, n)",
          {{"x", spectrum_json(x)}, {"tmax", t_max}});
  try {
    const TSeries det = bgw_unitary_det(x, t_max);
    const TSeries tau = bgw_unitary_tau(x, t_max);
    c.equal(Scalar(1), Scalar(det.coeff(0)), {{"degree", 0}});
    for (int d = 0; d <= t_max; ++d) c.equal(Scalar(tau.coeff(d)), Scalar(det.coeff(d)), {{"degree", d}});
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

}  // namespace hurwitz
