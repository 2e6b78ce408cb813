#include "hurwitz/pfaffian.hpp"

#include <bit>
#include <random>

#include "hurwitz/ortho.hpp"
#include "hurwitz/tau.hpp"

namespace hurwitz {

namespace {

BigInt factorial(long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Scalar var_n() { return Scalar::variable(Var::N); }

Scalar random_rat(std::mt19937& rng, int num = 5, int den = 4) {
  std::uniform_int_distribution<int> dn(-num, num), dd(1, den);
  return Scalar(rat(dn(rng), dd(rng)));
}

Matrix<Scalar> random_skew(std::mt19937& rng, int n) {
  Matrix<Scalar> a(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a[i][j] = random_rat(rng);
      a[j][i] = -a[i][j];
    }
  return a;
}

Matrix<Scalar> random_matrix(std::mt19937& rng, int rows, int cols) {
  Matrix<Scalar> a(rows, std::vector<Scalar>(cols));
  for (auto& row : a)
    for (auto& e : row) e = random_rat(rng);
  return a;
}

json matrix_json(const Matrix<Scalar>& a) {
  json m = json::array();
  for (const auto& row : a) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    m.push_back(r);
  }
  return m;
}

Matrix<Scalar> submatrix(const Matrix<Scalar>& a, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  Matrix<Scalar> s(rows.size(), std::vector<Scalar>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s[i][j] = a[rows[i]][cols[j]];
  return s;
}

SymFun collapse(const GradedSeries& s, int max_degree) {
  SymFun f;
  for (int n = 0; n <= std::min(max_degree, s.max_degree()); ++n) f += s[n];
  return f;
}

SymFun double_p(const SymFun& f) {
  return f.rescale([](int) { return Scalar(2); });
}

}  // namespace

void require_skew(const Matrix<Scalar>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) throw Error(ErrorCode::NotSkew, "matrix is not square");
    if (!a[i][i].is_zero()) throw Error(ErrorCode::NotSkew, "nonzero diagonal entry");
    for (std::size_t j = 0; j < i; ++j)
      if (!(a[i][j] == -a[j][i])) throw Error(ErrorCode::NotSkew, "matrix is not skew-symmetric");
  }
}

Scalar pfaffian(const Matrix<Scalar>& a) {
  if (a.size() % 2) throw Error(ErrorCode::OddSize, "Pfaffian of an odd-sized matrix");
  require_skew(a);
  return pfaffian_of(a);
}

Scalar determinant(const Matrix<Scalar>& a) { return determinant_of(a); }

BigRat a_kernel(int i, int j) {
  if (i < -1 || j < -1) throw Error(ErrorCode::InvalidArgument, "kernel indices start at -1");
  if (i == j) return 0;
  if (i < j) return -a_kernel(j, i);
  // i > j from here on
  if (j >= 1) {
    BigInt fi = factorial(i), fj = factorial(j);
    return rat(i - j, BigInt(4 * (i + j)) * fi * fi * fj * fj);
  }
  if (i > 0) {
    BigInt fi = factorial(i);
    return rat(1, 2 * fi * fi);
  }
  return 1;  // (i, j) = (0, -1)
}

BigRat a_pfaffian(const Partition& lambda, int n) {
  if (lambda.length() > n) throw Error(ErrorCode::InvalidPadding, "a_lambda(n) needs l(lambda) <= n");
  std::vector<int> idx;
  for (int i = 1; i <= n; ++i) idx.push_back(lambda.part(i - 1) + n - i);
  if (n % 2) idx.push_back(-1);
  Matrix<BigRat> m(idx.size(), std::vector<BigRat>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m[i][j] = a_kernel(idx[i], idx[j]);
  BigRat prefactor(1);
  for (int k = 1; k < n; ++k) prefactor *= BigRat(factorial(2 * k));
  return prefactor * pfaffian_of(m);
}

BigRat beta(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "beta_N needs N >= 0");
  BigInt prod = 1;
  for (int k = 1; k < n; ++k) prod *= factorial(2 * k);
  return rat(1, prod);
}

Scalar falling(const Scalar& x, int m) {
  Scalar prod(1);
  for (int i = 0; i < m; ++i) prod *= x - Scalar(i);
  return prod;
}

Scalar r_k(int k) {
  return Scalar(1) / falling(Scalar(2) * var_n() + Scalar(2 * k - 4), 2 * k - 2);
}

Scalar s_k(int k) {
  const Scalar two_n = Scalar(2) * var_n();
  return Scalar(1) / (falling(two_n + Scalar(2 * k - 2), 2 * k) * falling(two_n + Scalar(2 * k - 4), 2 * k));
}

std::map<Partition, Scalar> schur_expand(const SymFun& f) {
  std::map<Partition, Scalar> out;
  if (f.is_zero()) return out;
  for (int d = 0; d <= f.max_degree(); ++d) {
    const SymFun part = f.degree_part(d);
    if (part.is_zero()) continue;
    for (const auto& mu : partitions_of(d)) {
      Scalar c = inner_product(part, schur(mu), Scalar(0));
      if (!c.is_zero()) out.emplace(mu, c);
    }
  }
  return out;
}

SymFun from_schur(const std::map<Partition, Scalar>& c) {
  SymFun f;
  for (const auto& [mu, x] : c) f += schur(mu) * x;
  return f;
}

GradedSeries trunc(const GradedSeries& tau, int l) {
  return tau.map_slices([l](const SymFun& f) {
    auto c = schur_expand(f);
    std::erase_if(c, [l](const auto& kv) { return kv.first.length() > l; });
    return from_schur(c);
  });
}

std::vector<long> integer_roots_from(const MPoly& p, long from) {
  if (p.vars() & ~mask_of(Var::N))
    throw Error(ErrorCode::InvalidArgument, "integer roots need a polynomial in N alone");
  std::vector<long> roots;
  if (p.is_constant()) return roots;
  // Cauchy bound: |r| <= 1 + max |a_i / a_d|.
  const unsigned d = p.degree(Var::N);
  const BigRat lead = p.coeff_in(Var::N, d).constant_value();
  BigRat bound(0);
  for (unsigned i = 0; i < d; ++i) {
    BigRat q = abs(p.coeff_in(Var::N, i).constant_term() / lead);
    if (q > bound) bound = q;
  }
  const BigInt top = BigInt(bound.get_num() / bound.get_den()) + 1;
  if (!top.fits_slong_p()) throw Error(ErrorCode::BudgetExceeded, "root bound too large");
  for (long r = from; r <= top.get_si(); ++r)
    if (p.evaluate(Assignment().set(Var::N, BigRat(r))) == 0) roots.push_back(r);
  return roots;
}

GradedSeries bkp_tau(int n_max) {
  const TauSeries tau = expand_tau(n_max, TauMode::SymbolicBN, Scalar(1));
  const Scalar two_n = Scalar(2) * var_n();
  return tau.series.map_slices([&](const SymFun& f) { return double_p(f.substitute(Var::N, two_n)); });
}

CheckReport check_pfaffian_basics(int trials, unsigned seed) {
  Check c("pfaffian-basics", "Pf expansion, row-pair linearity, sign under swaps",
          {{"trials", trials}, {"seed", seed}});
  std::mt19937 rng(seed);
  try {
    Matrix<Scalar> a2 = random_skew(rng, 2);
    c.equal(a2[0][1], pfaffian(a2), {{"size", 2}});
    Matrix<Scalar> a4 = random_skew(rng, 4);
    c.equal(a4[0][1] * a4[2][3] - a4[0][2] * a4[1][3] + a4[0][3] * a4[1][2], pfaffian(a4), {{"size", 4}});
    c.equal(Scalar(1), pfaffian(Matrix<Scalar>{}), {{"size", 0}});
    for (int t = 0; t < trials; ++t) {
      const int n = 2 * (1 + t % 4);
      std::uniform_int_distribution<int> pick(0, n - 1);
      const int i = pick(rng);
      int j = pick(rng);
      if (j == i) j = (i + 1) % n;
      json where = {{"trial", t}, {"size", n}, {"i", i}, {"j", j}};
      // Linearity in row/column i.
      Matrix<Scalar> a = random_skew(rng, n), b = a;
      for (int k = 0; k < n; ++k)
        if (k != i) {
          b[i][k] = random_rat(rng);
          b[k][i] = -b[i][k];
        }
      const Scalar alpha = random_rat(rng), beta_ = random_rat(rng);
      Matrix<Scalar> mix = a;
      for (int k = 0; k < n; ++k)
        if (k != i) {
          mix[i][k] = alpha * a[i][k] + beta_ * b[i][k];
          mix[k][i] = -mix[i][k];
        }
      where["property"] = "linearity";
      c.equal(alpha * pfaffian(a) + beta_ * pfaffian(b), pfaffian(mix), where);
      // Simultaneous swap of rows and columns i, j.
      Matrix<Scalar> s = a;
      std::swap(s[i], s[j]);
      for (auto& row : s) std::swap(row[i], row[j]);
      where["property"] = "swap";
      c.equal(-pfaffian(a), pfaffian(s), where);
    }
    bool odd = false, skew = false;
    try {
      pfaffian(Matrix<Scalar>(3, std::vector<Scalar>(3)));
    } catch (const Error& e) {
      odd = e.code() == ErrorCode::OddSize;
    }
    try {
      Matrix<Scalar> bad = random_skew(rng, 2);
      bad[1][0] = bad[0][1] + Scalar(1);
      pfaffian(bad);
    } catch (const Error& e) {
      skew = e.code() == ErrorCode::NotSkew;
    }
    c.that(odd, {{"property", "odd size rejected"}});
    c.that(skew, {{"property", "non-skew rejected"}});
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_pfaffian_det(int trials, int max_size, unsigned seed) {
  Check c("pfaffian-squared", "Pf(A)^2 = det(A)", {{"trials", trials}, {"max_size", max_size}, {"seed", seed}});
  std::mt19937 rng(seed);
  try {
    for (int t = 0; t < trials; ++t) {
      const int n = 2 * (1 + t % (max_size / 2));
      Matrix<Scalar> a = random_skew(rng, n);
      const Scalar pf = pfaffian(a);
      c.equal(determinant(a), pf * pf, {{"trial", t}, {"size", n}});
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport schur_pfaffian_check(const std::vector<BigRat>& x) {
  json xs = json::array();
  for (const auto& v : x) xs.push_back(to_string(v));
  Check c("schur-pfaffian", "prod_{i<j} (x_i - x_j)/(x_i + x_j) = Pf((x_i - x_j)/(x_i + x_j))",
          {{"x", xs}});
  try {
    std::vector<BigRat> y = x;
    if (y.size() % 2) y.push_back(0);
    const std::size_t m = y.size();
    Matrix<Scalar> a(m, std::vector<Scalar>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (y[i] == 0 && y[j] == 0) {
          a[i][j] = Scalar(1);
        } else {
          if (y[i] + y[j] == 0) throw Error(ErrorCode::InvalidArgument, "x_i + x_j = 0");
          a[i][j] = Scalar(BigRat((y[i] - y[j]) / (y[i] + y[j])));
        }
        a[j][i] = -a[i][j];
      }
    Scalar prod(1);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) prod *= Scalar(BigRat((x[i] - x[j]) / (x[i] + x[j])));
    c.equal(prod, pfaffian(a), json::object());
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_schur_pfaffian_random(int trials, unsigned seed) {
  Check c("schur-pfaffian-random", "Schur's Pfaffian identity on random rational tuples",
          {{"trials", trials}, {"seed", seed}});
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(1, 40), den(1, 7), size(1, 7);
  try {
    for (int t = 0; t < trials; ++t) {
      const int n = size(rng);
      std::vector<BigRat> x;
      while (static_cast<int>(x.size()) < n) {
        BigRat v = rat(num(rng), den(rng));
        if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
      }
      // Every third tuple carries a zero, which exercises the 0/0 convention.
      if (t % 3 == 2) x.back() = 0;
      CheckReport r = schur_pfaffian_check(x);
      c.that(r.passed, {{"trial", t}, {"x", r.params["x"]}}, r.witness.dump());
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport minor_summation_check(const Matrix<Scalar>& b, const Matrix<Scalar>& a) {
  const int n = static_cast<int>(b.size());
  const int big_n = static_cast<int>(a.size());
  Check c("minor-summation", "sum_I det(B[:, I]) Pf(A[I, I]) = Pf(B A B^t)", {{"n", n}, {"N", big_n}});
  try {
    if (n % 2) throw Error(ErrorCode::OddSize, "minor summation needs an even number of rows");
    require_skew(a);
    std::vector<int> all_rows(n);
    for (int i = 0; i < n; ++i) all_rows[i] = i;
    Scalar sum;
    for (std::uint32_t mask = 0; mask < (1u << big_n); ++mask) {
      if (std::popcount(mask) != n) continue;
      std::vector<int> cols;
      for (int j = 0; j < big_n; ++j)
        if (mask & (1u << j)) cols.push_back(j);
      sum += determinant(submatrix(b, all_rows, cols)) * pfaffian(submatrix(a, cols, cols));
    }
    const Scalar rhs = pfaffian(mat_mul(mat_mul(b, a), transpose(b)));
    if (!c.equal(rhs, sum, json::object())) c.that(false, {{"B", matrix_json(b)}, {"A", matrix_json(a)}});
    if (n == big_n) c.equal(rhs, determinant(b) * pfaffian(a), {{"case", "square"}});
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_minor_summation_random(unsigned seed) {
  Check c("minor-summation-random", "minor summation for Pfaffians on random matrices", {{"seed", seed}});
  std::mt19937 rng(seed);
  const std::vector<std::pair<int, int>> shapes = {{2, 4}, {2, 5}, {4, 5}, {4, 4}, {2, 2}, {6, 6}, {8, 8}};
  try {
    for (auto [n, big_n] : shapes)
      for (int t = 0; t < 5; ++t) {
        CheckReport r = minor_summation_check(random_matrix(rng, n, big_n), random_skew(rng, big_n));
        c.that(r.passed, {{"n", n}, {"N", big_n}, {"trial", t}}, r.witness.dump());
      }
    Matrix<Scalar> id(4, std::vector<Scalar>(4));
    for (int i = 0; i < 4; ++i) id[i][i] = Scalar(1);
    Matrix<Scalar> a = random_skew(rng, 4);
    c.equal(pfaffian(a), pfaffian(mat_mul(mat_mul(id, a), transpose(id))), {{"case", "identity"}});
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport a_pfaffian_check(const Partition& lambda, int n) {
  Check c("a-pfaffian", "a_lambda(n) = prod_{k<n} (2k)! Pf(a_{lambda_i+n-i, lambda_j+n-j})",
          {{"lambda", partition_json(lambda)}, {"n", n}});
  try {
    const BigRat def = a_coeff_def(lambda).evaluate(Assignment().set(Var::N, BigRat(n)));
    c.equal(Scalar(def), Scalar(a_pfaffian(lambda, n)), json::object());
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_a_pfaffian_all(int max_size, int n_max) {
  Check c("a-pfaffian-all", "a_lambda(n) = prod_{k<n} (2k)! Pf(a_{lambda_i+n-i, lambda_j+n-j})",
          {{"max_size", max_size}, {"nmax", n_max}});
  try {
    for (int s = 0; s <= max_size; ++s)
      for (const auto& lambda : partitions_of(s))
        for (int n = lambda.length(); n <= n_max; ++n) {
          const BigRat def = a_coeff_def(lambda).evaluate(Assignment().set(Var::N, BigRat(n)));
          c.equal(Scalar(def), Scalar(a_pfaffian(lambda, n)), {{"lambda", partition_json(lambda)}, {"n", n}});
        }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_beta_ratios(int n_lo, int n_hi, int k_max) {
  Check c("beta-ratios",
          "beta_{N-1} beta_{N+k-1} / (beta_N beta_{N+k-2}) = R_k(N), "
          "beta_{N-2} beta_{N+k} / (beta_N beta_{N+k-2}) = S_k(N)",
          {{"N", {n_lo, n_hi}}, {"kmax", k_max}});
  try {
    for (int n = n_lo; n <= n_hi; ++n)
      for (int k = 1; k <= k_max; ++k) {
        const Assignment at = Assignment().set(Var::N, BigRat(n));
        json where = {{"N", n}, {"k", k}};
        where["ratio"] = "R";
        c.equal(Scalar(r_k(k).evaluate(at)),
                Scalar(BigRat(beta(n - 1) * beta(n + k - 1) / (beta(n) * beta(n + k - 2)))), where);
        where["ratio"] = "S";
        c.equal(Scalar(s_k(k).evaluate(at)),
                Scalar(BigRat(beta(n - 2) * beta(n + k) / (beta(n) * beta(n + k - 2)))), where);
      }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_trunc(int n_max) {
  Check c("trunc", "Trunc(tau, L) keeps l(mu) <= L and has no pole at integers N >= L",
          {{"nmax", n_max}});
  try {
    const GradedSeries tau = bkp_tau(n_max);
    GradedSeries one(n_max);
    one[0] = SymFun(Scalar(1));
    c.equal(one, trunc(tau, 0), {{"L", 0}});
    for (int n = 0; n <= n_max; ++n)
      c.equal(tau[n], from_schur(schur_expand(tau[n])), {{"degree", n}, {"property", "round trip"}});
    for (int l = 1; l <= n_max; ++l) {
      const GradedSeries t = trunc(tau, l);
      for (int n = 0; n <= n_max; ++n)
        for (const auto& [mu, x] : schur_expand(t[n])) {
          json where = {{"L", l}, {"mu", partition_json(mu)}};
          c.that(mu.length() <= l, where, "row bound");
          c.that(integer_roots_from(x.ratfun().den(), l).empty(), where, "pole at an integer N >= L");
          c.equal(a_coeff_def(mu), x, where);
        }
    }
    c.that(trunc(tau, 1).coeff(1, Partition{1}) == tau.coeff(1, Partition{1}), {{"L", 1}}, "s_(1) kept");
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

namespace {

// -F_{31} + F_{22} + F_{11}^2/2 + F_{1111}/12, multiplied by tau^2, minus
// S_2 tau(N-2) tau(N+2); all in degrees <= d.
SymFun bkp_residual(const SymFun& tau, const SymFun& f, const SymFun& tau_minus, const SymFun& tau_plus,
                    const Scalar& s2, int d) {
  const SymFun f11 = derive(derive(f, 1), 1);
  SymFun lhs = derive(derive(f, 2), 2) - derive(derive(f, 3), 1) +
               mul_truncated(f11, f11, d) * Scalar::ratio(1, 2) +
               derive(derive(f11, 1), 1) * Scalar::ratio(1, 12);
  lhs = lhs.truncated(d);
  return mul_truncated(lhs, mul_truncated(tau, tau, d), d) - mul_truncated(tau_minus, tau_plus, d) * s2;
}

}  // namespace

CheckReport bkp_equation_check(int max_degree, BkpMode mode, const std::vector<BigRat>& samples) {
  json sj = json::array();
  for (const auto& v : samples) sj.push_back(to_string(v));
  Check c("bkp-equation",
          "-F_{31} + F_{22} + F_{11}^2/2 + F_{1111}/12 = S_2(N) tau(N-2) tau(N+2) / tau(N)^2",
          {{"max_degree", max_degree}, {"mode", mode == BkpMode::Symbolic ? "symbolic" : "sample"}, {"samples", sj}});
  const int d = max_degree;
  const int e = max_degree + 4;
  try {
    if (mode == BkpMode::Symbolic) {
      const GradedSeries tau = bkp_tau(e);
      const SymFun f = collapse(series_log(tau), e);
      const SymFun t = collapse(tau, d);
      const Scalar n = var_n();
      const SymFun tm = t.substitute(Var::N, n - Scalar(2));
      const SymFun tp = t.substitute(Var::N, n + Scalar(2));
      const SymFun r = bkp_residual(t, f, tm, tp, s_k(2), d);
      for (int k = 0; k <= d; ++k) c.equal(SymFun(), r.degree_part(k), {{"degree", k}});
    } else {
      if (samples.size() < 5) throw Error(ErrorCode::ConfigError, "sampled BKP check needs at least 5 values of N");
      for (const auto& n0 : samples) {
        auto sampled = [&](const BigRat& nv, int deg) {
          const TauSeries s = expand_tau(deg, TauMode::Sampled, Scalar(1), BigRat(2 * nv));
          GradedSeries g = s.series.map_slices(double_p);
          return g;
        };
        const GradedSeries tau = sampled(n0, e);
        const SymFun f = collapse(series_log(tau), e);
        const SymFun t = collapse(tau, d);
        const SymFun tm = collapse(sampled(n0 - 2, d), d);
        const SymFun tp = collapse(sampled(n0 + 2, d), d);
        const Scalar s2(s_k(2).evaluate(Assignment().set(Var::N, n0)));
        const SymFun r = bkp_residual(t, f, tm, tp, s2, d);
        for (int k = 0; k <= d; ++k)
          c.equal(SymFun(), r.degree_part(k), {{"N", to_string(n0)}, {"degree", k}});
      }
    }
  } catch (const std::exception& ex) {
    c.error(ex, json::object());
  }
  return c.report();
}

}  // namespace hurwitz
