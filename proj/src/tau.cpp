#include "hurwitz/tau.hpp"

#include <random>

namespace hurwitz {

const char* tau_mode_name(TauMode mode) {
  switch (mode) {
    case TauMode::SymbolicBU: return "symbolic-bu";
    case TauMode::SymbolicBN: return "symbolic-bN";
    case TauMode::Sampled: return "sampled";
  }
  return "?";
}

Scalar TauSeries::u() const { return Scalar(1) / inv_u(); }

Scalar TauSeries::inv_u() const {
  switch (mode) {
    case TauMode::SymbolicBU: return Scalar(1) / Scalar::variable(Var::U);
    case TauMode::SymbolicBN: return Scalar::variable(Var::N);
    case TauMode::Sampled: return Scalar(*n_value);
  }
  return {};
}

JackTable& jacks_for(const Scalar& b) {
  if (!b.is_exact()) {
    if (!(b == Scalar::variable(Var::B)))
      throw Error(ErrorCode::InvalidArgument, "b must be the formal symbol or a rational");
    return symbolic_jacks();
  }
  if (b == Scalar(1)) return zonal_jacks();
  static std::mutex m;
  static std::map<BigRat, std::unique_ptr<JackTable>> tables;
  std::lock_guard lock(m);
  auto& t = tables[b.exact()];
  if (!t) t = std::make_unique<JackTable>(b);
  return *t;
}

Scalar content_weight(const Partition& lambda, const Scalar& b, TauMode mode,
                      const std::optional<BigRat>& n_value) {
  const auto cs = contents(lambda, b);
  Scalar prod(1);
  switch (mode) {
    case TauMode::SymbolicBU: {
      // u^n / prod (1 + u c)
      const Scalar u = Scalar::variable(Var::U);
      for (const auto& c : cs) prod *= Scalar(1) + u * c;
      return u.pow(lambda.size()) / prod;
    }
    case TauMode::SymbolicBN: {
      const Scalar n = Scalar::variable(Var::N);
      for (const auto& c : cs) prod *= n + c;
      return Scalar(1) / prod;
    }
    case TauMode::Sampled: {
      if (!n_value) throw Error(ErrorCode::ConfigError, "sampled mode needs a value of N");
      const Scalar n(*n_value);
      for (const auto& c : cs) {
        Scalar f = n + c;
        if (f.is_zero())
          throw Error(ErrorCode::PoleAtAssignment,
                      "N = " + n_value->get_str() + " hits a content of " + lambda.to_string());
        prod *= f;
      }
      return Scalar(1) / prod;
    }
  }
  return {};
}

TauSeries expand_tau(int n_max, TauMode mode, const Scalar& b,
                     const std::optional<BigRat>& n_value) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "negative degree bound");
  if (mode == TauMode::Sampled && !b.is_exact())
    throw Error(ErrorCode::ConfigError, "sampled mode needs a rational b");
  TauSeries tau{mode, b, n_value, GradedSeries(n_max)};
  JackTable& jacks = jacks_for(b);
  tau.series[0] = SymFun(Scalar(1));
  for (int n = 1; n <= n_max; ++n) {
    std::map<Partition, Scalar> acc;
    for (const auto& lambda : partitions_of(n)) {
      Scalar w = content_weight(lambda, b, mode, n_value) / jacks.hooks(lambda).j;
      for (const auto& [mu, theta] : jacks.jack(lambda).coeffs()) acc[mu] += theta * w;
    }
    for (const auto& [mu, c] : acc) tau.series[n].add_term(mu, c);
  }
  return tau;
}

GradedSeries rescale_tilde(const TauSeries& tau) {
  if (tau.mode != TauMode::SymbolicBU)
    throw Error(ErrorCode::InvalidArgument, "rescaling needs a symbolic expansion in b and u");
  const Scalar u = Scalar::variable(Var::U);
  const Scalar minus_u = -u;
  GradedSeries out(tau.series.max_degree());
  for (int n = 0; n <= out.max_degree(); ++n) {
    // [t^n] tau(-t/u; p, -u) = (-1/u)^n tau_n(-u)
    Scalar f = (Scalar(-1) / u).pow(n);
    out[n] = tau.series[n].map_coeffs([&](const Scalar& c) { return c.substitute(Var::U, minus_u) * f; });
  }
  return out;
}

GradedSeries apply_Eb(const GradedSeries& s, const Scalar& b, const Scalar& u) {
  const Scalar one_b = Scalar(1) + b;
  GradedSeries out(s.max_degree());
  for (int n = 0; n <= s.max_degree(); ++n) {
    SymFun r = laplace_beltrami(s[n], b) * (Scalar(-2) * u);
    if (n > 0) r += mul_pk(s[n - 1], 1) * (u / one_b);
    out[n] = std::move(r);
  }
  return out;
}

GradedSeries evolution_residual(const TauSeries& tau) {
  return series_euler(tau.series) - apply_Eb(tau.series, tau.b, tau.u());
}

namespace {

// Solves A x = y over the scalars by Gaussian elimination.
std::vector<Scalar> solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> y) {
  const std::size_t n = y.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::SingularSystem, "singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(y[piv], y[col]);
    const Scalar inv = Scalar(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      Scalar f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      y[r] -= f * y[col];
    }
  }
  std::vector<Scalar> x(n);
  for (std::size_t r = n; r-- > 0;) {
    Scalar acc = y[r];
    for (std::size_t c = r + 1; c < n; ++c)
      if (!a[r][c].is_zero()) acc -= a[r][c] * x[c];
    x[r] = acc / a[r][r];
  }
  return x;
}

}  // namespace

GradedSeries tau_from_evolution(int n_max, const Scalar& b, const Scalar& u) {
  GradedSeries tau(n_max);
  tau[0] = SymFun(Scalar(1));
  const Scalar one_b = Scalar(1) + b;
  for (int n = 1; n <= n_max; ++n) {
    // (n + 2u D_b) tau_n = u p_1 tau_{n-1} / (1+b)
    const auto& ps = partitions_of(n);
    std::map<Partition, std::size_t> idx;
    for (std::size_t i = 0; i < ps.size(); ++i) idx.emplace(ps[i], i);
    std::vector<std::vector<Scalar>> a(ps.size(), std::vector<Scalar>(ps.size()));
    for (std::size_t j = 0; j < ps.size(); ++j) {
      SymFun col = laplace_beltrami(SymFun::p(ps[j]), b) * (Scalar(2) * u);
      col.add_term(ps[j], Scalar(n));
      for (const auto& [mu, c] : col.coeffs()) a[idx.at(mu)][j] = c;
    }
    SymFun rhs = mul_pk(tau[n - 1], 1) * (u / one_b);
    std::vector<Scalar> y(ps.size());
    for (const auto& [mu, c] : rhs.coeffs()) y[idx.at(mu)] = c;
    auto x = solve(std::move(a), std::move(y));
    for (std::size_t j = 0; j < ps.size(); ++j) tau[n].add_term(ps[j], x[j]);
  }
  return tau;
}

namespace {

SymFun virasoro_on(const SymFun& f, int i, const Scalar& b, const Scalar& inv_u) {
  const Scalar one_b = Scalar(1) + b;
  SymFun r = pk_star(f, i) * (inv_u + b * Scalar(i - 1));
  for (int m = 1; m < i; ++m) r += pk_star(pk_star(f, i - m), m) * one_b;
  const int d = f.max_degree();
  for (int n = 1; n + i <= d; ++n) r += mul_pk(pk_star(f, n + i), n);
  return r;
}

}  // namespace

GradedSeries apply_virasoro(const GradedSeries& s, int i, const Scalar& b, const Scalar& inv_u) {
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "Virasoro index must be positive");
  const Scalar one_b = Scalar(1) + b;
  GradedSeries out(s.max_degree());
  for (int n = 0; n <= s.max_degree(); ++n) {
    SymFun r = virasoro_on(s[n], i, b, inv_u);
    if (i == 1 && n > 0) r -= s[n - 1] * (Scalar(1) / one_b);
    out[n] = std::move(r);
  }
  return out;
}

GradedSeries virasoro_commutator_residual(int i, int j, const GradedSeries& f, const Scalar& b,
                                          const Scalar& inv_u) {
  GradedSeries lij = apply_virasoro(apply_virasoro(f, j, b, inv_u), i, b, inv_u);
  GradedSeries lji = apply_virasoro(apply_virasoro(f, i, b, inv_u), j, b, inv_u);
  return lij - lji - apply_virasoro(f, i + j, b, inv_u) * Scalar(i - j);
}

// ---------------------------------------------------------------------------
// Feray coefficients

FerayTable::FerayTable(int max_size, int max_k) : max_size_(max_size), max_k_(max_k) {
  TauSeries tau = expand_tau(max_size, TauMode::SymbolicBU);
  const Scalar one_b = Scalar(1) + Scalar::variable(Var::B);
  for (int n = 1; n <= max_size; ++n) {
    for (const auto& rho : partitions_of(n)) {
      Scalar c = tau.series[n].coeff(rho);
      std::vector<Scalar> vals(max_k + 1);
      Scalar norm = one_b.pow(rho.length()) * Scalar(BigRat(rho.z()));
      if (!c.is_zero()) {
        auto ser = c.ratfun().series(Var::U, static_cast<unsigned>(n + max_k));
        for (int k = 0; k <= max_k; ++k) {
          Scalar v = Scalar(ser[n + k]) * norm;
          vals[k] = k % 2 ? -v : v;
        }
      }
      values_.emplace(rho, std::move(vals));
    }
  }
}

Scalar FerayTable::a(int k, const Partition& rho) const {
  if (k < 0) return Scalar(0);
  if (rho.empty()) return Scalar(k == 0 ? 1 : 0);
  if (k > max_k_ || rho.size() > max_size_)
    throw Error(ErrorCode::InvalidArgument, "Feray coefficient outside the table");
  return values_.at(rho)[k];
}

// ---------------------------------------------------------------------------
// Checks

CheckReport check_jack_core(int n_max) {
  Check c("jack-core", "Jack orthogonality, norms, eigenvalues, p_{1^n} and p_{21^{n-2}} pairings, Cauchy sum",
          {{"nmax", n_max}});
  const Scalar b = Scalar::variable(Var::B);
  const Scalar one_b = Scalar(1) + b;
  JackTable& jacks = symbolic_jacks();
  try {
    BigInt fact = 1;
    for (int n = 1; n <= n_max; ++n) {
      fact *= n;
      const auto& ps = partitions_of(n);
      const Partition ones(std::vector<int>(n, 1));
      std::vector<int> two_ones(std::max(n - 1, 0), 1);
      if (n >= 2) two_ones[0] = 2;
      const Partition two_one(two_ones);
      BigInt fact2 = n >= 2 ? fact / (BigInt(n) * (n - 1)) : BigInt(0);
      SymFun cauchy;
      for (const auto& lambda : ps) {
        const SymFun& j = jacks.jack(lambda);
        const Hooks& h = jacks.hooks(lambda);
        json where = {{"lambda", partition_json(lambda)}};
        where["identity"] = "eigenvalue";
        c.equal(j * content_sum(lambda, b), laplace_beltrami(j, b), where);
        where["identity"] = "norm";
        c.equal(h.hook * h.hook_prime, inner_product(j, j, b), where);
        where["identity"] = "gram-schmidt";
        c.equal(jacks.jack_gram_schmidt(lambda), j, where);
        where["identity"] = "p_{1^n}";
        c.equal(one_b.pow(n) * Scalar(BigRat(fact)), inner_product(j, SymFun::p(ones), b), where);
        if (n >= 2) {
          where["identity"] = "p_{21^{n-2}}";
          c.equal(content_sum(lambda, b) * one_b.pow(n - 1) * Scalar(BigRat(2 * fact2)),
                  inner_product(j, SymFun::p(two_one), b), where);
        }
        for (const auto& mu : ps) {
          if (!(mu < lambda)) continue;
          where["identity"] = "orthogonality";
          where["mu"] = partition_json(mu);
          c.equal(Scalar(0), inner_product(j, jacks.jack(mu), b), where);
          where.erase("mu");
        }
        cauchy += j * (Scalar(1) / h.j);
      }
      c.equal(SymFun::p(ones, Scalar(1) / (one_b.pow(n) * Scalar(BigRat(fact)))), cauchy,
              {{"n", n}, {"identity", "cauchy"}});
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

namespace {

// Report parameters, with the sample point when there is one.
json tau_params(const TauSeries& tau, json p) {
  p["mode"] = tau_mode_name(tau.mode);
  if (tau.mode == TauMode::Sampled) {
    p["b"] = tau.b.to_string();
    if (tau.n_value) p["N"] = to_string(*tau.n_value);
  }
  return p;
}

}  // namespace

CheckReport check_evolution(const TauSeries& tau) {
  Check c("evolution", "(t d/dt - E_b) tau = 0",
          tau_params(tau, {{"nmax", tau.series.max_degree()}}));
  try {
    c.zero(evolution_residual(tau), json::object());
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_evolution_uniqueness(const TauSeries& tau) {
  Check c("evolution-uniqueness", "tau rebuilt from the evolution equation",
          tau_params(tau, {{"nmax", tau.series.max_degree()}}));
  try {
    c.equal(tau.series, tau_from_evolution(tau.series.max_degree(), tau.b, tau.u()), json::object());
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_virasoro(const TauSeries& tau, int i_max) {
  Check c("virasoro", "L_i tau = 0",
          tau_params(tau, {{"nmax", tau.series.max_degree()}, {"imax", i_max}}));
  try {
    for (int i = 1; i <= i_max; ++i)
      c.zero(apply_virasoro(tau.series, i, tau.b, tau.inv_u()), {{"i", i}});
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

namespace {

SymFun random_symfun(std::mt19937& rng, int max_degree, int terms) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-5, 5);
  SymFun f;
  for (int t = 0; t < terms; ++t) {
    const auto& ps = partitions_of(deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
    f.add_term(ps[pick(rng)], Scalar(coef(rng)));
  }
  return f;
}

}  // namespace

CheckReport check_virasoro_commutators(int pairs_max, int trials, int max_degree, unsigned seed) {
  Check c("virasoro-commutators", "[L_i, L_j] = (i-j) L_{i+j}",
          {{"imax", pairs_max}, {"trials", trials}, {"max_degree", max_degree}, {"seed", seed}});
  const Scalar b = Scalar::variable(Var::B);
  const Scalar inv_u = Scalar(1) / Scalar::variable(Var::U);
  std::mt19937 rng(seed);
  try {
    for (int trial = 0; trial < trials; ++trial) {
      GradedSeries f(2);
      f[0] = random_symfun(rng, max_degree, 4);
      for (int i = 1; i <= pairs_max; ++i) {
        for (int j = 1; j <= pairs_max; ++j) {
          if (i == j) continue;
          json where = {{"trial", trial}, {"i", i}, {"j", j}};
          c.zero(virasoro_commutator_residual(i, j, f, b, inv_u), where);
          GradedSeries ij = virasoro_commutator_residual(i, j, f, b, inv_u) +
                            apply_virasoro(f, i + j, b, inv_u) * Scalar(i - j);
          GradedSeries ji = virasoro_commutator_residual(j, i, f, b, inv_u) +
                            apply_virasoro(f, i + j, b, inv_u) * Scalar(j - i);
          c.zero(ij + ji, where);
        }
      }
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_virasoro_sum(int max_degree, unsigned seed) {
  Check c("virasoro-sum", "sum_i p_i L_i = u^{-1} (t d/dt - E_b) on homogeneous series",
          {{"max_degree", max_degree}, {"seed", seed}});
  const Scalar b = Scalar::variable(Var::B);
  const Scalar u = Scalar::variable(Var::U);
  const Scalar inv_u = Scalar(1) / u;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  try {
    for (int trial = 0; trial < 5; ++trial) {
      GradedSeries s(max_degree);
      s[0] = SymFun(Scalar(1));
      for (int n = 1; n <= max_degree; ++n)
        for (const auto& mu : partitions_of(n)) s[n].add_term(mu, Scalar(coef(rng)));
      GradedSeries lhs(max_degree);
      for (int i = 1; i <= max_degree; ++i)
        lhs += apply_virasoro(s, i, b, inv_u).map_slices([i](const SymFun& f) { return mul_pk(f, i); });
      GradedSeries rhs = (series_euler(s) - apply_Eb(s, b, u)) * inv_u;
      c.equal(rhs, lhs, {{"trial", trial}});
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_feray_recursion(const FerayTable& t) {
  Check c("feray-recursion", "linear recursion for a^k_rho",
          {{"max_size", t.max_size()}, {"kmax", t.max_k()}});
  const Scalar b = Scalar::variable(Var::B);
  const Scalar one_b = Scalar(1) + b;
  try {
    for (int size = 0; size < t.max_size(); ++size) {
      for (const auto& rho : partitions_of(size)) {
        for (int m = 1; size + m <= t.max_size(); ++m) {
          for (int k = 0; k <= t.max_k(); ++k) {
            Scalar rhs = m == 1 ? t.a(k, rho) : Scalar(0);
            for (int r = 1; r < m; ++r) rhs += t.a(k - 1, rho.with_part(r).with_part(m - r));
            for (int i = 0; i < rho.length(); ++i) {
              int ri = rho.part(i);
              rhs += one_b * Scalar(ri) * t.a(k - 1, rho.without_part(ri).with_part(ri + m));
            }
            rhs += b * Scalar(m - 1) * t.a(k - 1, rho.with_part(m));
            c.equal(rhs, t.a(k, rho.with_part(m)),
                    {{"rho", partition_json(rho)}, {"m", m}, {"k", k}});
          }
        }
      }
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_feray_hk(const FerayTable& t, int max_size, int max_k) {
  Check c("feray-hk", "h_k(contents) = sum_mu a^k_mu theta_mu",
          {{"max_size", max_size}, {"kmax", max_k}});
  const Scalar b = Scalar::variable(Var::B);
  JackTable& jacks = symbolic_jacks();
  try {
    for (int n = 1; n <= max_size; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        const auto cs = contents(lambda, b);
        const SymFun& j = jacks.jack(lambda);
        for (int k = 0; k <= max_k; ++k) {
          Scalar rhs;
          for (const auto& [mu, theta] : j.coeffs()) rhs += t.a(k, mu) * theta;
          c.equal(hk_of_multiset(k, cs), rhs, {{"lambda", partition_json(lambda)}, {"k", k}});
        }
      }
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

CheckReport check_feray_polynomial(const FerayTable& t) {
  Check c("feray-polynomial", "a^k_rho is a polynomial in b",
          {{"max_size", t.max_size()}, {"kmax", t.max_k()}});
  for (int n = 1; n <= t.max_size(); ++n)
    for (const auto& rho : partitions_of(n))
      for (int k = 0; k <= t.max_k(); ++k) {
        Scalar a = t.a(k, rho);
        c.that(a.is_exact() || a.ratfun().is_polynomial(),
               {{"rho", partition_json(rho)}, {"k", k}}, a.to_string());
      }
  return c.report();
}

CheckReport check_character_orthogonality(int n_max) {
  Check c("character-orthogonality",
          "sum_lambda theta_rho theta_mu / j_lambda = delta / (z_rho (1+b)^l)", {{"nmax", n_max}});
  const Scalar b = Scalar::variable(Var::B);
  JackTable& jacks = symbolic_jacks();
  try {
    for (int n = 1; n <= n_max; ++n) {
      const auto& ps = partitions_of(n);
      for (const auto& rho : ps) {
        for (const auto& mu : ps) {
          if (mu < rho) continue;
          Scalar sum;
          for (const auto& lambda : ps)
            sum += jacks.jack(lambda).coeff(rho) * jacks.jack(lambda).coeff(mu) / jacks.hooks(lambda).j;
          Scalar expected = rho == mu ? Scalar(1) / ((Scalar(1) + b).pow(rho.length()) *
                                                     Scalar(BigRat(rho.z())))
                                      : Scalar(0);
          c.equal(expected, sum, {{"rho", partition_json(rho)}, {"mu", partition_json(mu)}});
        }
      }
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

namespace {

bool in_nb(const RatFun& f, std::string& why) {
  if (!f.is_polynomial()) {
    why = "not a polynomial: " + f.to_string();
    return false;
  }
  MPoly p = f.num() * (1 / f.den().constant_value());
  for (const auto& [m, c] : p.terms()) {
    if (c < 0 || c.get_den() != 1) {
      why = "coefficient " + c.get_str() + " in " + p.to_string();
      return false;
    }
  }
  return true;
}

}  // namespace

CheckReport check_positivity(int n_max, int u_order) {
  Check c("positivity", "(1+b) t d/dt log tilde-tau in N[b]",
          {{"nmax", n_max}, {"u_order", u_order}});
  try {
    GradedSeries tilde = rescale_tilde(expand_tau(n_max, TauMode::SymbolicBU));
    GradedSeries g = series_euler(series_log(tilde)) * (Scalar(1) + Scalar::variable(Var::B));
    for (int n = 1; n <= n_max; ++n) {
      for (const auto& [mu, coef] : g[n].coeffs()) {
        auto ser = coef.ratfun().series(Var::U, static_cast<unsigned>(u_order));
        for (int r = 0; r <= u_order; ++r) {
          std::string why;
          c.that(in_nb(ser[r], why), {{"degree", n}, {"monomial", partition_json(mu)}, {"u", r}},
                 why);
        }
      }
    }
  } catch (const std::exception& e) {
    c.error(e, json::object());
  }
  return c.report();
}

}  // namespace hurwitz
