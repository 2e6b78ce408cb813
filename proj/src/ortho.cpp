#include "hurwitz/ortho.hpp"

#include <algorithm>

#include "hurwitz/tau.hpp"

namespace hurwitz {

namespace {

BigInt factorial(long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Scalar var_n() { return Scalar::variable(Var::N); }

Scalar int_scalar(const BigInt& z) { return Scalar(BigRat(z)); }

}  // namespace

Scalar OrthoDim::at(const Scalar& n) const {
  Scalar prod(1);
  for (long s : shifts) prod *= n + Scalar(s);
  return prod / int_scalar(hook);
}

BigRat OrthoDim::at(long n) const { return at(Scalar(n)).exact(); }

OrthoDim ortho_dim(const Partition& lambda) {
  OrthoDim d{lambda, lambda.hook_product(), {}};
  const Partition conj = lambda.conjugate();
  for (int x = 1; x <= lambda.length(); ++x)
    for (int y = 1; y <= lambda.part(x - 1); ++y) {
      if (x <= y)
        d.shifts.push_back(lambda.part(x - 1) + lambda.part(y - 1) - x - y);
      else
        d.shifts.push_back(-conj.part(x - 1) - conj.part(y - 1) + x + y - 2);
    }
  return d;
}

BigRat so_dim(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw Error(ErrorCode::InvalidArgument, "so(2n) needs l(lambda) <= n");
  BigRat prod(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      long ri = lambda.part(i - 1) - i, rj = lambda.part(j - 1) - j;
      prod *= rat((ri - rj) * (ri + rj + 2L * n), static_cast<long>(j - i) * (2L * n - i - j));
    }
  return prod;
}

Scalar sp_dim(const Partition& lambda, const Scalar& n) {
  Scalar v = ortho_dim(lambda.conjugate()).at(Scalar(-2) * n);
  return lambda.size() % 2 ? -v : v;
}

BigRat sp_dim_weyl(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw Error(ErrorCode::InvalidArgument, "sp(2n) needs l(lambda) <= n");
  std::vector<long> l(n);
  for (int i = 1; i <= n; ++i) l[i - 1] = lambda.part(i - 1) + n + 1 - i;
  BigRat prod(1);
  for (int i = 1; i <= n; ++i) {
    prod *= rat(l[i - 1], n + 1 - i);
    for (int j = i + 1; j <= n; ++j)
      prod *= rat((l[i - 1] - l[j - 1]) * (l[i - 1] + l[j - 1]),
                  static_cast<long>(j - i) * (2L * n + 2 - i - j));
  }
  return prod;
}

Scalar zonal_dim(const Partition& lambda) {
  Scalar prod(1);
  for (const auto& c : contents(lambda, Scalar(1))) prod *= var_n() + c;
  return prod;
}

Scalar a_coeff_def(const Partition& lambda) {
  const OrthoDim d = ortho_dim(lambda);
  return Scalar(1) / (int_scalar(d.hook * d.hook) * d.at(Scalar(2) * var_n()));
}

Scalar a_coeff_rho(const std::vector<long>& rho) {
  const long k = static_cast<long>(rho.size());
  const Scalar n = var_n();
  const Scalar two_n = Scalar(2) * n;
  Scalar prod(1);
  for (long i = 0; i < k; ++i)
    for (long j = i + 1; j < k; ++j) {
      if (rho[i] == rho[j]) return Scalar(0);
      prod *= Scalar(rho[i] - rho[j]) / (two_n + Scalar(rho[i] + rho[j]));
    }
  for (long i = 1; i <= k; ++i) {
    const long r = rho[i - 1];
    // 1/(r+k)! vanishes at negative arguments.
    if (r + k < 0) return Scalar(0);
    prod /= Scalar(2) * int_scalar(factorial(r + k)) * (n + Scalar(r));
    // (2n-2i)! / (2n+r-k-1)! as a finite product; the arguments differ by d.
    const long d = k + 1 - 2 * i - r;
    for (long j = 0; j < d; ++j) prod *= two_n - Scalar(2 * i + j);
    for (long j = 1; j <= -d; ++j) prod /= two_n - Scalar(2 * i - j);
  }
  return prod;
}

std::vector<long> rho_of(const Partition& lambda, int k) {
  if (k < lambda.length())
    throw Error(ErrorCode::InvalidPadding, "padding length " + std::to_string(k) +
                                               " is shorter than " + lambda.to_string());
  std::vector<long> rho(k);
  for (int i = 1; i <= k; ++i) rho[i - 1] = lambda.part(i - 1) - i;
  return rho;
}

Scalar a_coeff_closed(const Partition& lambda, int k) { return a_coeff_rho(rho_of(lambda, k)); }

Straightened straighten(const std::vector<long>& rho) {
  std::vector<long> r = rho;
  int sign = 1;
  // Insertion sort, counting transpositions.
  for (std::size_t i = 1; i < r.size(); ++i)
    for (std::size_t j = i; j > 0 && r[j - 1] <= r[j]; --j) {
      if (r[j - 1] == r[j]) return {};
      std::swap(r[j - 1], r[j]);
      sign = -sign;
    }
  std::vector<int> parts;
  for (std::size_t i = 0; i < r.size(); ++i) {
    long part = r[i] + static_cast<long>(i) + 1;
    if (part < 0) return {};
    if (part > 0) parts.push_back(static_cast<int>(part));
  }
  return {sign, Partition(parts)};
}

SymFun schur_scaled(const Partition& lambda, const BigRat& c) {
  return schur(lambda).rescale([&](int) { return Scalar(c); });
}

SymFun omega2(const SymFun& f) {
  return f.rescale([](int r) { return Scalar(r % 2 ? 2 : -2); });
}

BigRat zonal_spherical(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::InvalidArgument, "zonal spherical function needs |lambda| = |mu|");
  BigRat c = zonal(lambda).coeff(mu).exact();
  BigInt scale = BigInt(1) << static_cast<unsigned>(mu.length());
  return c * BigRat(scale * mu.z()) / BigRat(BigInt(1) << static_cast<unsigned>(mu.size()));
}

BigRat g_coeff(const Partition& lambda, const Partition& gamma) {
  if (lambda.size() != gamma.size())
    throw Error(ErrorCode::InvalidArgument, "G needs |lambda| = |gamma|");
  const int m = lambda.size();
  BigRat sum(0);
  for (const auto& mu : partitions_of(m))
    sum += rat(factorial(m), mu.z()) * zonal_spherical(lambda, mu) * BigRat(char_sym(gamma, mu));
  return sum;
}

CheckReport check_ortho_dims(int max_size) {
  Check c("orthogonal-dimensions",
          "o_lambda(1^{2n}) = so_lambda(1^{2n}), doubled when l(lambda) = n; sp by duality",
          {{"max_size", max_size}});
  try {
    for (int s = 0; s <= max_size; ++s)
      for (const auto& lambda : partitions_of(s)) {
        const OrthoDim d = ortho_dim(lambda);
        json where = {{"lambda", partition_json(lambda)}};
        c.that(static_cast<int>(d.shifts.size()) == s, where, "factor count");
        for (int n = std::max(1, lambda.length()); n <= lambda.length() + 3; ++n) {
          where["n"] = n;
          BigRat o = d.at(2L * n);
          BigRat so = so_dim(lambda, n);
          c.equal(Scalar(lambda.length() == n ? 2 * so : so), Scalar(o), where);
          c.that(o > 0, where, "positive dimension");
          c.equal(Scalar(sp_dim_weyl(lambda, n)), sp_dim(lambda, Scalar(n)), where);
        }
      }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_a_coeff(int max_size) {
  Check c("a-coefficient-closed-form", "closed form of 1/(hook^2 o_lambda(1^{2n})), any padding k",
          {{"max_size", max_size}});
  try {
    for (int s = 0; s <= max_size; ++s)
      for (const auto& lambda : partitions_of(s)) {
        const Scalar def = a_coeff_def(lambda);
        for (int k = lambda.length(); k <= lambda.length() + 2; ++k)
          c.equal(def, a_coeff_closed(lambda, k), {{"lambda", partition_json(lambda)}, {"k", k}});
      }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_a_antisymmetry(int max_size) {
  Check c("a-coefficient-antisymmetry", "a is antisymmetric in rho_i = lambda_i - i",
          {{"max_size", max_size}});
  try {
    for (int s = 0; s <= max_size; ++s)
      for (const auto& lambda : partitions_of(s)) {
        const auto rho = rho_of(lambda, lambda.length() + 1);
        const Scalar a = a_coeff_rho(rho);
        for (std::size_t i = 0; i < rho.size(); ++i)
          for (std::size_t j = i + 1; j < rho.size(); ++j) {
            json where = {{"lambda", partition_json(lambda)}, {"i", i + 1}, {"j", j + 1}};
            auto swapped = rho;
            std::swap(swapped[i], swapped[j]);
            c.equal(-a, a_coeff_rho(swapped), where);
            auto repeated = rho;
            repeated[j] = repeated[i];
            c.equal(Scalar(0), a_coeff_rho(repeated), where);
          }
      }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_key_identity(int max_size, int r_max) {
  Check c("a-coefficient-summation",
          "sum_i (n + rho_i + r) a_{lambda + r e_i} / a_lambda = delta_{r,1} / 2",
          {{"max_size", max_size}, {"rmax", r_max}});
  try {
    for (int s = 0; s <= max_size; ++s)
      for (const auto& lambda : partitions_of(s))
        for (int r = 1; r <= r_max; ++r)
          for (int k = lambda.length() + r; k <= lambda.length() + r + 1; ++k) {
            const auto rho = rho_of(lambda, k);
            const Scalar a = a_coeff_rho(rho);
            Scalar sum;
            for (int i = 0; i < k; ++i) {
              auto shifted = rho;
              shifted[i] += r;
              sum += (var_n() + Scalar(rho[i] + r)) * a_coeff_rho(shifted);
            }
            c.equal(r == 1 ? Scalar::ratio(1, 2) : Scalar(0), sum / a,
                    {{"lambda", partition_json(lambda)}, {"r", r}, {"k", k}});
          }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_virasoro_on_schur(int max_size, int r_max) {
  Check c("virasoro-on-schur",
          "L_r s^{(rho)}(p/2) = -(t/2) delta_{r,1} s^{(rho)}(p/2) + sum_i (n + rho_i) s^{(rho - r e_i)}(p/2)",
          {{"max_size", max_size}, {"rmax", r_max}});
  const Scalar n = var_n();
  const Scalar b(1);
  const Scalar inv_u = Scalar(2) * n;
  const BigRat half = rat(1, 2);
  try {
    for (int s = 0; s <= max_size; ++s)
      for (const auto& lambda : partitions_of(s))
        for (int r = 1; r <= r_max; ++r) {
          const int k = lambda.length() + r + 1;
          const auto rho = rho_of(lambda, k);
          GradedSeries f(s + 1);
          f[s] = schur_scaled(lambda, half);
          GradedSeries got = apply_virasoro(f, r, b, inv_u);
          GradedSeries expected(s + 1);
          if (r == 1) expected[s + 1] = f[s] * Scalar::ratio(-1, 2);
          json where = {{"lambda", partition_json(lambda)}, {"r", r}};
          // L_r keeps the t-degree; only the delta term raises it.
          for (int i = 0; i < k - r; ++i) {
            auto lowered = rho;
            lowered[i] -= r;
            const Straightened st = straighten(lowered);
            if (st.sign == 0) continue;
            expected[s] += schur_scaled(st.lambda, half) * (Scalar(st.sign) * (n + Scalar(rho[i])));
          }
          c.equal(expected, got, where);
        }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport schur_expansion_check(int n_max) {
  Check c("schur-expansion-b1", "tau_{b=1} = sum_lambda t^n s_lambda(p/2) / (hook^2 o_lambda(1^N))",
          {{"nmax", n_max}});
  try {
    const TauSeries tau = expand_tau(n_max, TauMode::SymbolicBN, Scalar(1));
    const BigRat half = rat(1, 2);
    GradedSeries rhs(n_max);
    for (int s = 0; s <= n_max; ++s)
      for (const auto& lambda : partitions_of(s)) {
        const OrthoDim d = ortho_dim(lambda);
        rhs[s] += schur_scaled(lambda, half) * (Scalar(1) / (int_scalar(d.hook * d.hook) * d.at(var_n())));
      }
    c.equal(rhs, tau.series, json::object());
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport symplectic_dual_check(int n_max, int omega_max, bool as_printed) {
  Check c("schur-expansion-symplectic",
          as_printed ? "tau_{b=-1/2} = sum (4t)^n s_lambda / (hook^2 o_{lambda^t}(1^{2N}))"
                     : "tau_{b=-1/2} = sum (4t)^n s_lambda / (hook^2 sp_lambda(1^{2N})) "
                       "= sum (-4t)^n s_lambda / (hook^2 o_{lambda^t}(1^{-2N}))",
          {{"nmax", n_max}, {"omega_max", omega_max}, {"as_printed", as_printed}});
  const BigRat minus_half = rat(-1, 2);
  const Scalar n = var_n();
  try {
    const TauSeries tau = expand_tau(n_max, TauMode::SymbolicBN, Scalar(minus_half));
    GradedSeries printed(n_max), symp(n_max), orth(n_max);
    for (int s = 0; s <= n_max; ++s)
      for (const auto& lambda : partitions_of(s)) {
        const Scalar h2 = int_scalar(lambda.hook_product() * lambda.hook_product());
        const SymFun sl = schur(lambda);
        const OrthoDim dual = ortho_dim(lambda.conjugate());
        printed[s] += sl * (Scalar(4).pow(s) / (h2 * dual.at(Scalar(2) * n)));
        symp[s] += sl * (Scalar(4).pow(s) / (h2 * sp_dim(lambda, n)));
        orth[s] += sl * (Scalar(-4).pow(s) / (h2 * dual.at(Scalar(-2) * n)));
      }
    if (as_printed) {
      c.equal(printed, tau.series, {{"form", "printed"}});
    } else {
      c.equal(symp, tau.series, {{"form", "symplectic"}});
      c.equal(orth, tau.series, {{"form", "orthogonal"}});
      // The printed form is the same sum with N -> -N; from t^2 on it differs.
      if (n_max >= 2) c.that(!(printed == tau.series), {{"form", "printed"}}, "printed form should differ");
    }

    JackTable& sym = jacks_for(Scalar(minus_half));
    for (int s = 1; s <= omega_max; ++s)
      for (const auto& lambda : partitions_of(s)) {
        const Partition conj = lambda.conjugate();
        json where = {{"lambda", partition_json(lambda)}};
        where["identity"] = "omega2 s(p/2)";
        c.equal(schur(conj), omega2(schur_scaled(lambda, rat(1, 2))), where);
        where["identity"] = "omega2 J^(1)";
        c.equal(sym.jack(conj) * Scalar(2).pow(s), omega2(zonal(lambda)), where);
        where["identity"] = "j^(1) = 4^n j^(-1/2)";
        c.equal(sym.hooks(conj).j * Scalar(4).pow(s), zonal_jacks().hooks(lambda).j, where);
        where["identity"] = "content weights";
        Scalar lhs(1), rhs(1);
        for (const auto& x : contents(lambda, Scalar(1))) lhs /= n + x;
        for (const auto& x : contents(conj, Scalar(minus_half)))
          rhs /= Scalar(2) * (n / Scalar(2) - x);
        c.equal(lhs, rhs, where);
      }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport oliveira_novaes_check(int m, bool as_printed) {
  Check c("oliveira-novaes",
          as_printed ? "sum_lambda chi_{2 lambda}(1^{2m}) G_{lambda,gamma} / [N]^{(2)}_lambda "
                       "= (2m)!/(2^m m!) chi_gamma(1^m) / {N}_gamma"
                     : "sum_lambda chi_{2 lambda}(1^{2m}) G_{lambda,gamma} / [N]^{(2)}_lambda "
                       "= (2m)!/2^m chi_gamma(1^m) / {N}_gamma",
          {{"m", m}, {"as_printed", as_printed}});
  try {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "{N}_gamma needs m >= 1");
    const auto& ps = partitions_of(m);
    const BigRat prefactor =
        rat(factorial(2 * m), factorial(m) * (BigInt(1) << static_cast<unsigned>(m)));
    for (const auto& gamma : ps) {
      Scalar lhs;
      for (const auto& lambda : ps) {
        std::vector<int> doubled;
        for (int part : lambda.parts()) doubled.push_back(2 * part);
        lhs += int_scalar(Partition(doubled).dim()) * Scalar(g_coeff(lambda, gamma)) /
               zonal_dim(lambda);
      }
      const BigInt chi = gamma.dim();
      const Scalar braces = Scalar(rat(factorial(m), chi)) * ortho_dim(gamma).at(var_n());
      // G sums over the m!/z_mu permutations of each class, so the
      // right-hand side carries (2m)!/2^m rather than (2m)!/(2^m m!).
      const Scalar printed = Scalar(prefactor) * int_scalar(chi) / braces;
      const Scalar rhs = printed * int_scalar(factorial(m));
      json where = {{"gamma", partition_json(gamma)}};
      if (as_printed) {
        c.equal(printed, lhs, where);
      } else {
        c.equal(rhs, lhs, where);
        if (m >= 2) c.that(!(printed == lhs), where, "printed normalization should differ");
      }
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

}  // namespace hurwitz
