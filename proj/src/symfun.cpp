#include "hurwitz/symfun.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hurwitz {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw Error(ErrorCode::InvalidArgument, "negative part");
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  return a.parts_ <=> b.parts_;
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 1 : parts_[0] + 1, 0);
  for (int p : parts_) ++m[p];
  return m;
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

BigInt Partition::z() const {
  BigInt z = 1;
  auto m = multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i)
    for (int j = 1; j <= m[i]; ++j) z *= BigInt(static_cast<long>(i) * j);
  return z;
}

BigInt Partition::hook_product() const {
  Partition c = conjugate();
  BigInt h = 1;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts_[i]; ++j) h *= (parts_[i] - j - 1) + (c.parts_[j] - i - 1) + 1;
  return h;
}

BigInt Partition::dim() const {
  BigInt f = 1;
  for (int k = 2; k <= size_; ++k) f *= k;
  return f / hook_product();
}

bool Partition::dominated_by(const Partition& o) const {
  if (size_ != o.size_) return false;
  int a = 0, b = 0;
  for (int i = 0; i < std::max(length(), o.length()); ++i) {
    a += part(i);
    b += o.part(i);
    if (a > b) return false;
  }
  return true;
}

Partition Partition::with_part(int k) const {
  std::vector<int> p = parts_;
  p.insert(std::upper_bound(p.begin(), p.end(), k, std::greater<>()), k);
  return Partition(std::move(p));
}

Partition Partition::without_part(int k) const {
  std::vector<int> p = parts_;
  auto it = std::find(p.begin(), p.end(), k);
  if (it == p.end()) throw Error(ErrorCode::InvalidArgument, "part not present");
  p.erase(it);
  return Partition(std::move(p));
}

Partition Partition::merged(const Partition& o) const {
  std::vector<int> p;
  p.reserve(parts_.size() + o.parts_.size());
  std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(), std::back_inserter(p),
             std::greater<>());
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

namespace {

void gen_partitions(int n, int max, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex m;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) gen_partitions(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Box statistics

Scalar content(int row, int col, const Scalar& b) {
  return (Scalar(1) + b) * Scalar(col - 1) - Scalar(row - 1);
}

std::vector<Scalar> contents(const Partition& lambda, const Scalar& b) {
  std::vector<Scalar> out;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) out.push_back(content(i + 1, j + 1, b));
  return out;
}

Scalar content_sum(const Partition& lambda, const Scalar& b) {
  Scalar s;
  for (const auto& c : contents(lambda, b)) s += c;
  return s;
}

Hooks hooks(const Partition& lambda, const Scalar& b) {
  Partition c = lambda.conjugate();
  Scalar alpha = Scalar(1) + b;
  Scalar h(1), hp(1);
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      Scalar arm(lambda.part(i) - j - 1), leg(c.part(j) - i - 1);
      h *= alpha * arm + leg + Scalar(1);
      hp *= alpha * arm + leg + alpha;
    }
  }
  return {h, hp, h * hp};
}

Scalar hk_of_multiset(int k, const std::vector<Scalar>& xs) {
  if (k < 0) return Scalar(0);
  // row[j] = h_j(x_1..x_m), updated one variable at a time.
  std::vector<Scalar> row(k + 1, Scalar(0));
  row[0] = Scalar(1);
  for (const auto& x : xs)
    for (int j = 1; j <= k; ++j) row[j] = row[j] + x * row[j - 1];
  return row[k];
}

// ---------------------------------------------------------------------------
// SymFun

SymFun::SymFun(const Scalar& c) {
  if (!c.is_zero()) c_.emplace(Partition(), c);
}

SymFun SymFun::p(const Partition& mu, const Scalar& c) {
  SymFun f;
  if (!c.is_zero()) f.c_.emplace(mu, c);
  return f;
}

Scalar SymFun::coeff(const Partition& mu) const {
  auto it = c_.find(mu);
  return it == c_.end() ? Scalar(0) : it->second;
}

int SymFun::max_degree() const {
  int d = -1;
  for (const auto& [mu, c] : c_) d = std::max(d, mu.size());
  return d;
}

void SymFun::add_term(const Partition& mu, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

SymFun SymFun::degree_part(int n) const {
  SymFun f;
  for (const auto& [mu, c] : c_)
    if (mu.size() == n) f.c_.emplace_hint(f.c_.end(), mu, c);
  return f;
}

SymFun SymFun::truncated(int max_degree) const {
  SymFun f;
  for (const auto& [mu, c] : c_)
    if (mu.size() <= max_degree) f.c_.emplace_hint(f.c_.end(), mu, c);
  return f;
}

SymFun SymFun::operator-() const {
  SymFun f = *this;
  for (auto& [mu, c] : f.c_) c = -c;
  return f;
}

SymFun& SymFun::operator+=(const SymFun& o) {
  for (const auto& [mu, c] : o.c_) add_term(mu, c);
  return *this;
}

SymFun& SymFun::operator-=(const SymFun& o) {
  for (const auto& [mu, c] : o.c_) add_term(mu, -c);
  return *this;
}

SymFun& SymFun::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
  } else if (!(s == Scalar(1))) {
    for (auto& [mu, c] : c_) c *= s;
  }
  return *this;
}

SymFun operator*(const SymFun& a, const SymFun& b) {
  SymFun f;
  for (const auto& [mu, x] : a.c_)
    for (const auto& [nu, y] : b.c_) f.add_term(mu.merged(nu), x * y);
  return f;
}

SymFun mul_truncated(const SymFun& a, const SymFun& b, int max_degree) {
  SymFun f;
  for (const auto& [mu, x] : a.coeffs())
    for (const auto& [nu, y] : b.coeffs())
      if (mu.size() + nu.size() <= max_degree) f.add_term(mu.merged(nu), x * y);
  return f;
}

SymFun SymFun::map_coeffs(const std::function<Scalar(const Scalar&)>& fn) const {
  SymFun f;
  for (const auto& [mu, c] : c_) f.add_term(mu, fn(c));
  return f;
}

SymFun SymFun::specialize(Var v, const BigRat& value) const {
  return map_coeffs([&](const Scalar& c) { return c.specialize(v, value); });
}

SymFun SymFun::substitute(Var v, const Scalar& replacement) const {
  return map_coeffs([&](const Scalar& c) { return c.substitute(v, replacement); });
}

SymFun SymFun::rescale(const std::function<Scalar(int)>& factor) const {
  std::map<int, Scalar> cache;
  auto fac = [&](int i) -> const Scalar& {
    auto it = cache.find(i);
    if (it == cache.end()) it = cache.emplace(i, factor(i)).first;
    return it->second;
  };
  SymFun f;
  for (const auto& [mu, c] : c_) {
    Scalar s = c;
    for (int part : mu.parts()) s *= fac(part);
    f.add_term(mu, s);
  }
  return f;
}

std::string SymFun::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : c_) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")*p" << mu.to_string();
    first = false;
  }
  return os.str();
}

SymFun mul_pk(const SymFun& f, int k) {
  SymFun g;
  for (const auto& [mu, c] : f.coeffs()) g.add_term(mu.with_part(k), c);
  return g;
}

SymFun derive(const SymFun& f, int k) {
  SymFun g;
  for (const auto& [mu, c] : f.coeffs()) {
    int m = mu.multiplicity(k);
    if (m) g.add_term(mu.without_part(k), c * Scalar(m));
  }
  return g;
}

SymFun pk_star(const SymFun& f, int k) { return derive(f, k) * Scalar(k); }

Scalar inner_product(const SymFun& f, const SymFun& g, const Scalar& b) {
  Scalar alpha = Scalar(1) + b;
  Scalar sum;
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& big = f.size() <= g.size() ? g : f;
  for (const auto& [mu, c] : small.coeffs()) {
    Scalar d = big.coeff(mu);
    if (d.is_zero()) continue;
    sum += c * d * alpha.pow(mu.length()) * Scalar(BigRat(mu.z()));
  }
  return sum;
}

namespace {

// D_b p_mu = sum of (c0 + c1 b) p_nu.
struct LinTerm {
  Partition nu;
  BigRat c0, c1;
};

const std::vector<LinTerm>& lb_on_p(const Partition& mu) {
  static std::mutex m;
  static std::map<Partition, std::vector<LinTerm>> cache;
  std::lock_guard lock(m);
  auto it = cache.find(mu);
  if (it != cache.end()) return it->second;
  std::map<Partition, std::pair<BigRat, BigRat>> acc;
  const auto& parts = mu.parts();
  const int l = mu.length();
  // (1+b)/2 sum over ordered pairs of distinct positions: joins.
  for (int a = 0; a < l; ++a) {
    for (int c = a + 1; c < l; ++c) {
      std::vector<int> rest;
      for (int i = 0; i < l; ++i)
        if (i != a && i != c) rest.push_back(parts[i]);
      rest.push_back(parts[a] + parts[c]);
      auto& e = acc[Partition::from_unsorted(rest)];
      BigRat w(parts[a] * parts[c]);
      e.first += w;
      e.second += w;
    }
  }
  // 1/2 sum of splits.
  for (int a = 0; a < l; ++a) {
    for (int i = 1; i < parts[a]; ++i) {
      std::vector<int> rest;
      for (int j = 0; j < l; ++j)
        if (j != a) rest.push_back(parts[j]);
      rest.push_back(i);
      rest.push_back(parts[a] - i);
      acc[Partition::from_unsorted(rest)].first += rat(parts[a], 2);
    }
  }
  // b/2 sum (i-1) i.
  BigRat diag(0);
  for (int p : parts) diag += rat(p * (p - 1), 2);
  if (diag != 0) acc[mu].second += diag;
  std::vector<LinTerm> out;
  for (auto& [nu, c] : acc) {
    c.first.canonicalize();
    c.second.canonicalize();
    if (c.first != 0 || c.second != 0) out.push_back({nu, c.first, c.second});
  }
  return cache.emplace(mu, std::move(out)).first->second;
}

}  // namespace

SymFun laplace_beltrami(const SymFun& f, const Scalar& b) {
  SymFun g;
  for (const auto& [mu, c] : f.coeffs()) {
    for (const auto& t : lb_on_p(mu)) {
      Scalar w = Scalar(t.c0) + Scalar(t.c1) * b;
      g.add_term(t.nu, c * w);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Monomial functions and characters

namespace {

// Augmented monomial: prod m_i! * m_lambda, via
// p_k * aug(nu) = aug(nu + (k)) + sum_i aug(nu with nu_i += k).
const SymFun& augmented_monomial(const Partition& lambda) {
  static std::recursive_mutex m;
  static std::map<Partition, SymFun> cache;
  std::lock_guard lock(m);
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  SymFun out;
  if (lambda.empty()) {
    out = SymFun(Scalar(1));
  } else {
    int k = lambda.parts().front();
    std::vector<int> rest(lambda.parts().begin() + 1, lambda.parts().end());
    out = mul_pk(augmented_monomial(Partition(rest)), k);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      std::vector<int> r = rest;
      r[i] += k;
      out -= augmented_monomial(Partition::from_unsorted(r));
    }
  }
  return cache.emplace(lambda, std::move(out)).first->second;
}

}  // namespace

const SymFun& m_to_p(const Partition& lambda) {
  static std::mutex m;
  static std::map<Partition, SymFun> cache;
  {
    std::lock_guard lock(m);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  BigInt f = 1;
  for (int mult : lambda.multiplicities())
    for (int j = 2; j <= mult; ++j) f *= j;
  SymFun out = augmented_monomial(lambda) * Scalar(rat(1, f));
  std::lock_guard lock(m);
  return cache.emplace(lambda, std::move(out)).first->second;
}

namespace {

long mn_rec(const std::vector<int>& beta, const std::vector<int>& mu, std::size_t pos,
            std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
  if (pos == mu.size()) {
    // Empty shape iff beta = {0, 1, ..., l-1}.
    for (std::size_t i = 0; i < beta.size(); ++i)
      if (beta[i] != static_cast<int>(i)) return 0;
    return 1;
  }
  auto key = std::make_pair(beta, pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int k = mu[pos];
  long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - k;
    if (target < 0 || std::binary_search(beta.begin(), beta.end(), target)) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end());
    long v = mn_rec(nb, mu, pos + 1, memo);
    total += (between % 2 ? -v : v);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long char_sym(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::InvalidArgument, "character arguments of different sizes");
  static std::mutex m;
  static std::map<std::pair<Partition, Partition>, long> cache;
  std::lock_guard lock(m);
  auto key = std::make_pair(lambda, mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const int l = lambda.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda.part(i) + (l - 1 - i);
  std::sort(beta.begin(), beta.end());
  std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
  long v = mn_rec(beta, mu.parts(), 0, memo);
  cache.emplace(key, v);
  return v;
}

SymFun schur(const Partition& lambda) {
  SymFun f;
  for (const auto& mu : partitions_of(lambda.size())) {
    long chi = char_sym(lambda, mu);
    if (chi) f.add_term(mu, Scalar(rat(chi, mu.z())));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Jack functions

struct JackTable::Degree {
  std::vector<Partition> parts;  // decreasing lex
  std::map<Partition, std::size_t> index;
  std::vector<std::vector<BigRat>> m2p;  // m2p[mu][nu] = [p_nu] m_mu
  // D_b m_nu = sum_mu (d0[mu][nu] + b d1[mu][nu]) m_mu
  std::vector<std::vector<BigRat>> d0, d1;
};

JackTable::JackTable(Scalar b) : b_(std::move(b)) {}

const JackTable::Degree& JackTable::degree(int n) {
  std::lock_guard lock(mu_);
  auto it = degrees_.find(n);
  if (it != degrees_.end()) return *it->second;
  auto d = std::make_shared<Degree>();
  d->parts = partitions_of(n);
  const std::size_t s = d->parts.size();
  for (std::size_t i = 0; i < s; ++i) d->index.emplace(d->parts[i], i);
  d->m2p.assign(s, std::vector<BigRat>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (const auto& [nu, c] : m_to_p(d->parts[i]).coeffs()) d->m2p[i][d->index.at(nu)] = c.exact();

  // p2m = inverse of m2p by Gauss-Jordan.
  std::vector<std::vector<BigRat>> a = d->m2p, inv(s, std::vector<BigRat>(s));
  for (std::size_t i = 0; i < s; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t piv = col;
    while (piv < s && a[piv][col] == 0) ++piv;
    if (piv == s) throw Error(ErrorCode::SingularSystem, "monomial to power-sum matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    BigRat f = 1 / a[col][col];
    for (std::size_t j = 0; j < s; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t r = 0; r < s; ++r) {
      if (r == col || a[r][col] == 0) continue;
      BigRat g = a[r][col];
      for (std::size_t j = 0; j < s; ++j) {
        a[r][j] -= g * a[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  // inv = (m2p)^{-1}: p_sigma = sum_mu inv[sigma][mu] m_mu.
  d->d0.assign(s, std::vector<BigRat>(s));
  d->d1.assign(s, std::vector<BigRat>(s));
  for (std::size_t nu = 0; nu < s; ++nu) {
    std::vector<BigRat> q0(s), q1(s);
    for (std::size_t rho = 0; rho < s; ++rho) {
      if (d->m2p[nu][rho] == 0) continue;
      for (const auto& t : lb_on_p(d->parts[rho])) {
        std::size_t k = d->index.at(t.nu);
        q0[k] += d->m2p[nu][rho] * t.c0;
        q1[k] += d->m2p[nu][rho] * t.c1;
      }
    }
    for (std::size_t sig = 0; sig < s; ++sig) {
      if (q0[sig] == 0 && q1[sig] == 0) continue;
      for (std::size_t mu = 0; mu < s; ++mu) {
        if (inv[sig][mu] == 0) continue;
        d->d0[mu][nu] += q0[sig] * inv[sig][mu];
        d->d1[mu][nu] += q1[sig] * inv[sig][mu];
      }
    }
  }
  return *degrees_.emplace(n, std::move(d)).first->second;
}

const Hooks& JackTable::hooks(const Partition& lambda) {
  std::lock_guard lock(mu_);
  auto it = hooks_.find(lambda);
  if (it != hooks_.end()) return it->second;
  return hooks_.emplace(lambda, hurwitz::hooks(lambda, b_)).first->second;
}

const SymFun& JackTable::jack(const Partition& lambda) {
  std::lock_guard lock(mu_);
  auto it = jack_.find(lambda);
  if (it != jack_.end()) return it->second;
  const Degree& d = degree(lambda.size());
  const std::size_t s = d.parts.size();
  const std::size_t li = d.index.at(lambda);
  auto entry = [&](std::size_t mu, std::size_t nu) {
    return Scalar(d.d0[mu][nu]) + Scalar(d.d1[mu][nu]) * b_;
  };
  const Scalar e_lambda = entry(li, li);
  std::vector<Scalar> c(s);
  c[li] = hooks(lambda).hook;
  for (std::size_t mu = li + 1; mu < s; ++mu) {
    if (!d.parts[mu].dominated_by(lambda)) continue;
    Scalar acc;
    for (std::size_t nu = li; nu < mu; ++nu) {
      if (c[nu].is_zero() || (d.d0[mu][nu] == 0 && d.d1[mu][nu] == 0)) continue;
      acc += c[nu] * entry(mu, nu);
    }
    if (acc.is_zero()) continue;
    Scalar gap = e_lambda - entry(mu, mu);
    if (gap.is_zero())
      throw Error(ErrorCode::SingularSystem, "degenerate eigenvalue for " + lambda.to_string());
    c[mu] = acc / gap;
  }
  std::vector<Scalar> p(s);
  for (std::size_t mu = li; mu < s; ++mu) {
    if (c[mu].is_zero()) continue;
    for (std::size_t nu = 0; nu < s; ++nu)
      if (d.m2p[mu][nu] != 0) p[nu] += c[mu] * Scalar(d.m2p[mu][nu]);
  }
  SymFun out;
  for (std::size_t nu = 0; nu < s; ++nu) out.add_term(d.parts[nu], p[nu]);
  return jack_.emplace(lambda, std::move(out)).first->second;
}

const SymFun& JackTable::jack_gram_schmidt(const Partition& lambda) {
  std::lock_guard lock(mu_);
  auto it = gs_.find(lambda);
  if (it != gs_.end()) return it->second;
  const auto& parts = partitions_of(lambda.size());
  // Monic P_mu for all mu lexicographically below lambda, smallest first.
  SymFun p = m_to_p(lambda);
  const SymFun& ml = m_to_p(lambda);
  for (auto rit = parts.rbegin(); rit != parts.rend() && *rit != lambda; ++rit) {
    SymFun q = jack_gram_schmidt(*rit) * (Scalar(1) / hooks(*rit).hook);
    Scalar num = inner_product(ml, q, b_);
    if (num.is_zero()) continue;
    p -= q * (num / inner_product(q, q, b_));
  }
  p *= hooks(lambda).hook;
  return gs_.emplace(lambda, std::move(p)).first->second;
}

SymFun zonal(const Partition& lambda) { return zonal_jacks().jack(lambda); }

JackTable& symbolic_jacks() {
  static JackTable table(Scalar::variable(Var::B));
  return table;
}

JackTable& zonal_jacks() {
  static JackTable table(Scalar(1));
  return table;
}

}  // namespace hurwitz
