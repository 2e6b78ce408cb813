#include "hurwitz/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hurwitz {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::PoleAtAssignment: return "PoleAtAssignment";
    case ErrorCode::LogOfNonUnit: return "LogOfNonUnit";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::InvalidPadding: return "InvalidPadding";
    case ErrorCode::OddSize: return "OddSize";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::NonCancellingPole: return "NonCancellingPole";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const BigRat& q) { return q.get_str(); }

BigRat rat(const BigInt& n, const BigInt& d) {
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  BigRat q(n, d);
  q.canonicalize();
  return q;
}

BigRat parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  BigRat q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

const char* var_name(Var v) noexcept {
  switch (v) {
    case Var::B: return "b";
    case Var::U: return "u";
    case Var::N: return "N";
  }
  return "?";
}

bool Assignment::covers(VarMask mask) const {
  for (unsigned i = 0; i < kNumVars; ++i)
    if ((mask >> i & 1u) && !values_[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::make(unsigned eb, unsigned eu, unsigned en) {
  std::uint64_t d = eb + eu + en;
  return Monomial(d << 48 | std::uint64_t(en) << 32 | std::uint64_t(eu) << 16 | eb);
}

Monomial Monomial::of(Var v, unsigned e) {
  switch (v) {
    case Var::B: return make(e, 0, 0);
    case Var::U: return make(0, e, 0);
    case Var::N: return make(0, 0, e);
  }
  return {};
}

VarMask Monomial::vars() const {
  VarMask m = 0;
  for (unsigned i = 0; i < kNumVars; ++i)
    if (exponent(static_cast<Var>(i))) m |= 1u << i;
  return m;
}

Monomial Monomial::without(Var v) const {
  unsigned e[3] = {exponent(Var::B), exponent(Var::U), exponent(Var::N)};
  e[static_cast<unsigned>(v)] = 0;
  return make(e[0], e[1], e[2]);
}

bool Monomial::divides(Monomial other) const {
  for (unsigned i = 0; i < kNumVars; ++i)
    if (exponent(static_cast<Var>(i)) > other.exponent(static_cast<Var>(i))) return false;
  return true;
}

Monomial operator*(Monomial a, Monomial b) { return Monomial(a.key_ + b.key_); }
Monomial operator/(Monomial a, Monomial b) { return Monomial(a.key_ - b.key_); }

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, BigRat(c));
}

MPoly::MPoly(const BigRat& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MPoly MPoly::variable(Var v) { return monomial(BigRat(1), Monomial::of(v)); }

MPoly MPoly::monomial(const BigRat& c, Monomial m) {
  MPoly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void MPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Monomial m = terms_[i].first;
    BigRat c = std::move(terms_[i].second);
    std::size_t j = i + 1;
    for (; j < terms_.size() && terms_[j].first == m; ++j) c += terms_[j].second;
    if (c != 0) terms_[out++] = Term(m, std::move(c));
    i = j;
  }
  terms_.resize(out);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.key() == 0);
}

BigRat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.key() == 0) return terms_.back().second;
  return BigRat(0);
}

const BigRat& MPoly::constant_value() const {
  static const BigRat zero(0);
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "polynomial is not constant");
  return terms_.empty() ? zero : terms_[0].second;
}

const BigRat& MPoly::leading_coeff() const {
  static const BigRat zero(0);
  return terms_.empty() ? zero : terms_.front().second;
}

Monomial MPoly::leading_monomial() const {
  return terms_.empty() ? Monomial{} : terms_.front().first;
}

VarMask MPoly::vars() const {
  VarMask m = 0;
  for (const auto& t : terms_) m |= t.first.vars();
  return m;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
  return d;
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

MPoly MPoly::coeff_in(Var v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.first.exponent(v) == k) out.emplace_back(t.first.without(v), t.second);
  return from_terms(std::move(out));
}

std::vector<MPoly> MPoly::coeffs_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) buckets[t.first.exponent(v)].emplace_back(t.first.without(v), t.second);
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

template <class Combine>
std::vector<MPoly::Term> merge_terms(const std::vector<MPoly::Term>& a,
                                     const std::vector<MPoly::Term>& b, Combine sign) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, sign(b[j].second));
      ++j;
    } else {
      BigRat c = a[i].second + sign(b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const BigRat& c) { return c; });
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const BigRat& c) { return BigRat(-c); });
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].first) * b.terms_[0].second;
  if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].first) * a.terms_[0].second;
  std::vector<MPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.emplace_back(x.first * y.first, x.second * y.second);
  return MPoly::from_terms(std::move(out));
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

MPoly MPoly::mul_monomial(Monomial m) const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.first = t.first * m;
  return p;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

BigRat MPoly::evaluate(const Assignment& a) const {
  BigRat sum(0);
  for (const auto& t : terms_) {
    BigRat term = t.second;
    for (unsigned i = 0; i < kNumVars; ++i) {
      Var v = static_cast<Var>(i);
      unsigned e = t.first.exponent(v);
      if (!e) continue;
      const auto& val = a.get(v);
      if (!val)
        throw Error(ErrorCode::InvalidArgument,
                    std::string("assignment does not cover variable ") + var_name(v));
      BigRat p(1);
      for (unsigned k = 0; k < e; ++k) p *= *val;
      term *= p;
    }
    sum += term;
  }
  return sum;
}

MPoly MPoly::specialize(Var v, const BigRat& value) const {
  if (!(vars() & mask_of(v))) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<BigRat> powers{BigRat(1)};
  for (const auto& t : terms_) {
    unsigned e = t.first.exponent(v);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    out.emplace_back(t.first.without(v), t.second * powers[e]);
  }
  return from_terms(std::move(out));
}

MPoly MPoly::substitute(Var v, const MPoly& replacement) const {
  if (!(vars() & mask_of(v))) return *this;
  auto cs = coeffs_in(v);
  MPoly result;
  for (std::size_t k = cs.size(); k-- > 0;) {
    result = result * replacement + cs[k];
  }
  return result;
}

BigRat MPoly::content() const {
  if (terms_.empty()) return BigRat(1);
  BigInt g(0), l(1);
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  }
  BigRat c(g, l);
  c.canonicalize();
  if (terms_.front().second < 0) c = -c;
  return c;
}

MPoly MPoly::primitive() const {
  if (terms_.empty()) return {};
  BigRat c = content();
  if (c == 1) return *this;
  MPoly p = *this;
  BigRat inv = 1 / c;
  p *= inv;
  return p;
}

namespace {

void append_coeff(std::ostringstream& os, const BigRat& c, bool first, bool has_monomial) {
  BigRat a = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (!has_monomial) {
    os << a.get_str();
  } else if (a != 1) {
    os << a.get_str() << "*";
  }
}

}  // namespace

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    append_coeff(os, c, first, m.key() != 0);
    bool first_factor = true;
    for (unsigned i = 0; i < kNumVars; ++i) {
      Var v = static_cast<Var>(i);
      unsigned e = m.exponent(v);
      if (!e) continue;
      if (!first_factor) os << "*";
      os << var_name(v);
      if (e > 1) os << "^" << e;
      first_factor = false;
    }
    first = false;
  }
  return os.str();
}

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) return a * (1 / b.constant_value());
  const Monomial lm = b.leading_monomial();
  const BigRat lc_inv = 1 / b.leading_coeff();
  std::vector<MPoly::Term> q;
  MPoly r = a;
  while (!r.is_zero()) {
    Monomial rm = r.leading_monomial();
    if (!lm.divides(rm)) return std::nullopt;
    Monomial qm = rm / lm;
    BigRat qc = r.leading_coeff() * lc_inv;
    r -= b.mul_monomial(qm) * qc;
    q.emplace_back(qm, std::move(qc));
  }
  return MPoly::from_terms(std::move(q));
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  return *std::move(q);
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, Var v) {
  const unsigned db = b.degree(v);
  const MPoly lcb = b.coeff_in(v, db);
  MPoly r = a;
  while (!r.is_zero()) {
    unsigned dr = r.degree(v);
    if (dr < db) break;
    MPoly lcr = r.coeff_in(v, dr);
    r = r * lcb - b.mul_monomial(Monomial::of(v, dr - db)) * lcr;
  }
  return r;
}

namespace {

using Dense = std::vector<BigRat>;

Dense to_dense(const MPoly& p, Var v) {
  Dense d(p.degree(v) + 1);
  for (const auto& t : p.terms()) d[t.first.exponent(v)] = t.second;
  return d;
}

MPoly from_dense(const Dense& d, Var v) {
  std::vector<MPoly::Term> terms;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 0) terms.emplace_back(Monomial::of(v, static_cast<unsigned>(k)), d[k]);
  return MPoly::from_terms(std::move(terms));
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

// Euclid over Q[v] with monic remainders.
MPoly univariate_gcd(const MPoly& a, const MPoly& b, Var v) {
  Dense x = to_dense(a, v), y = to_dense(b, v);
  trim(x);
  trim(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    BigRat inv = 1 / y.back();
    for (auto& c : y) c *= inv;
    while (x.size() >= y.size()) {
      BigRat f = x.back();
      std::size_t shift = x.size() - y.size();
      for (std::size_t k = 0; k < y.size(); ++k) x[shift + k] -= f * y[k];
      trim(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return from_dense(x, v).primitive();
}

Var main_var(VarMask mask) {
  for (unsigned i = kNumVars; i-- > 0;)
    if (mask >> i & 1u) return static_cast<Var>(i);
  return Var::B;
}

MPoly content_in(const MPoly& p, Var v) {
  MPoly g;
  for (const auto& c : p.coeffs_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly primitive_in(const MPoly& p, Var v) {
  MPoly c = content_in(p, v);
  return (c.is_constant() ? p : divide_exact(p, c)).primitive();
}

// Primitive pseudo-remainder sequence in the main variable.
MPoly prs_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a == b) return a.primitive();
  const VarMask mask = a.vars() | b.vars();
  const Var v = main_var(mask);
  if ((mask & (mask - 1)) == 0) return univariate_gcd(a, b, v);

  MPoly ca = content_in(a, v);
  MPoly cb = content_in(b, v);
  MPoly c = gcd(ca, cb);
  MPoly pa = (ca.is_constant() ? a : divide_exact(a, ca)).primitive();
  MPoly pb = (cb.is_constant() ? b : divide_exact(b, cb)).primitive();
  MPoly g(1);
  if (pa.degree(v) > 0 && pb.degree(v) > 0) {
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (true) {
      MPoly r = pseudo_remainder(pa, pb, v);
      if (r.is_zero()) {
        g = primitive_in(pb, v);
        break;
      }
      if (r.degree(v) == 0) break;
      pa = std::move(pb);
      pb = primitive_in(r, v);
    }
  }
  return (c * g).primitive();
}

// Integer gcd of all coefficients; inputs have integer coefficients.
BigInt integer_content(const MPoly& p, BigInt g = 0) {
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt max_norm(const MPoly& p) {
  BigInt m = 0;
  for (const auto& t : p.terms()) {
    BigInt c = abs(t.second.get_num());
    if (c > m) m = c;
  }
  return m;
}

// Rebuilds sum_i g_i v^i from g = sum_i g_i xi^i using balanced digits.
MPoly xi_adic(MPoly g, const BigInt& xi, Var v) {
  std::vector<MPoly::Term> out;
  const BigInt half = xi / 2;
  for (unsigned i = 0; !g.is_zero(); ++i) {
    std::vector<MPoly::Term> digit;
    for (const auto& [m, c] : g.terms()) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_num_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        digit.emplace_back(m, BigRat(r));
        out.emplace_back(m * Monomial::of(v, i), BigRat(r));
      }
    }
    g -= MPoly::from_terms(std::move(digit));
    g *= BigRat(1) / BigRat(xi);
  }
  return MPoly::from_terms(std::move(out));
}

// Heuristic gcd of polynomials with integer coefficients: evaluate the main
// variable at a large integer, recurse, lift back and verify by division.
std::optional<MPoly> heuristic_gcd(const MPoly& a, const MPoly& b) {
  const VarMask mask = a.vars() | b.vars();
  const BigInt ic = integer_content(b, integer_content(a));
  if (mask == 0) return MPoly(BigRat(ic));
  const MPoly pa = a * (BigRat(1) / BigRat(ic)), pb = b * (BigRat(1) / BigRat(ic));
  const Var v = main_var(mask);
  BigInt xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  const unsigned deg = std::max(pa.degree(v), pb.degree(v));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (deg + 1) > 20000) break;
    MPoly ea = pa.specialize(v, BigRat(xi)), eb = pb.specialize(v, BigRat(xi));
    if (!ea.is_zero() && !eb.is_zero()) {
      auto g = heuristic_gcd(ea, eb);
      if (!g) return std::nullopt;
      MPoly h = xi_adic(*g, xi, v).primitive();
      if (!h.is_zero() && try_divide(pa, h) && try_divide(pb, h)) return h * BigRat(ic);
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return std::nullopt;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a == b) return a.primitive();
  if (auto g = heuristic_gcd(a.primitive(), b.primitive())) return g->primitive();
  return prs_gcd(a, b);
}

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = MPoly();
    den_ = MPoly(1);
    return;
  }
  if (den.is_constant()) {
    num_ = num * (1 / den.constant_value());
    den_ = MPoly(1);
    return;
  }
  MPoly g = num.is_constant() ? MPoly(1) : gcd(num, den);
  if (g.is_constant()) {
    num_ = num;
    den_ = den;
  } else {
    num_ = divide_exact(num, g);
    den_ = divide_exact(den, g);
  }
  fix_unit();
}

void RatFun::fix_unit() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  BigRat c = den_.content();
  if (c != 1) {
    BigRat inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

BigRat RatFun::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

RatFun RatFun::operator-() const { return RatFun(Reduced{}, -num_, den_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) return RatFun(a.num_ + b.num_);
    return RatFun(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_constant()) {
    return RatFun(RatFun::Reduced{}, a.num_ * b.den_ + b.num_, b.den_);
  }
  if (b.den_.is_constant()) {
    return RatFun(RatFun::Reduced{}, a.num_ + b.num_ * a.den_, a.den_);
  }
  MPoly g = gcd(a.den_, b.den_);
  if (g.is_constant()) {
    RatFun r(RatFun::Reduced{}, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    r.fix_unit();
    return r;
  }
  MPoly ad = divide_exact(a.den_, g);
  MPoly bd = divide_exact(b.den_, g);
  MPoly num = a.num_ * bd + b.num_ * ad;
  MPoly den = a.den_ * bd;
  if (num.is_zero()) return RatFun();
  MPoly h = gcd(num, g);
  if (!h.is_constant()) {
    num = divide_exact(num, h);
    den = divide_exact(den, h);
  }
  RatFun r(RatFun::Reduced{}, std::move(num), std::move(den));
  r.fix_unit();
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.den_.is_constant() && b.den_.is_constant()) return RatFun(a.num_ * b.num_);
  MPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!an.is_constant() && !bd.is_constant()) {
    MPoly g = gcd(an, bd);
    if (!g.is_constant()) {
      an = divide_exact(an, g);
      bd = divide_exact(bd, g);
    }
  }
  if (!bn.is_constant() && !ad.is_constant()) {
    MPoly g = gcd(bn, ad);
    if (!g.is_constant()) {
      bn = divide_exact(bn, g);
      ad = divide_exact(ad, g);
    }
  }
  RatFun r(RatFun::Reduced{}, an * bn, ad * bd);
  r.fix_unit();
  return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
  RatFun inv(RatFun::Reduced{}, b.den_, b.num_);
  inv.fix_unit();
  return a * inv;
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return RatFun(1) / pow(-e);
  RatFun r(Reduced{}, num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  r.fix_unit();
  return r;
}

BigRat RatFun::evaluate(const Assignment& a) const {
  BigRat d = den_.evaluate(a);
  if (d == 0) throw Error(ErrorCode::PoleAtAssignment, "denominator " + den_.to_string() + " vanishes");
  return num_.evaluate(a) / d;
}

RatFun RatFun::specialize(Var v, const BigRat& value) const {
  if (!(vars() & mask_of(v))) return *this;
  MPoly d = den_.specialize(v, value);
  if (d.is_zero())
    throw Error(ErrorCode::PoleAtAssignment, "denominator " + den_.to_string() + " vanishes at " +
                                                 var_name(v) + "=" + value.get_str());
  return RatFun(num_.specialize(v, value), d);
}

namespace {

RatFun substitute_poly(const MPoly& p, Var v, const RatFun& r) {
  if (!(p.vars() & mask_of(v))) return RatFun(p);
  auto cs = p.coeffs_in(v);
  RatFun result;
  for (std::size_t k = cs.size(); k-- > 0;) result = result * r + RatFun(cs[k]);
  return result;
}

}  // namespace

RatFun RatFun::substitute(Var v, const RatFun& replacement) const {
  if (!(vars() & mask_of(v))) return *this;
  if (replacement.is_polynomial()) {
    MPoly rp = replacement.num_ * (1 / replacement.den_.constant_value());
    return RatFun(num_.substitute(v, rp), den_.substitute(v, rp));
  }
  RatFun d = substitute_poly(den_, v, replacement);
  if (d.is_zero()) throw Error(ErrorCode::PoleAtAssignment, "substitution annihilates denominator");
  return substitute_poly(num_, v, replacement) / d;
}

RatFun RatFun::series_coeff(Var v, unsigned k) const { return series(v, k)[k]; }

std::vector<RatFun> RatFun::series(Var v, unsigned k) const {
  auto a = num_.coeffs_in(v);
  auto b = den_.coeffs_in(v);
  if (b[0].is_zero())
    throw Error(ErrorCode::PoleAtAssignment, std::string("pole at ") + var_name(v) + "=0");
  // s_j = (a_j - sum_{i=1..j} b_i s_{j-i}) / b_0
  std::vector<RatFun> s;
  s.reserve(k + 1);
  RatFun inv_b0 = RatFun(1) / RatFun(b[0]);
  for (unsigned j = 0; j <= k; ++j) {
    RatFun acc = j < a.size() ? RatFun(a[j]) : RatFun();
    for (unsigned i = 1; i <= j && i < b.size(); ++i)
      if (!b[i].is_zero()) acc -= RatFun(b[i]) * s[j - i];
    s.push_back(acc * inv_b0);
  }
  return s;
}

std::string RatFun::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

void check_mix(VarMask a, VarMask b) {
  VarMask m = a | b;
  if ((m & mask_of(Var::U)) && (m & mask_of(Var::N)))
    throw Error(ErrorCode::VariableMismatch, "u and N mixed in one expression");
}

}  // namespace

Scalar::Scalar(RatFun f) {
  if (f.is_constant()) {
    v_ = f.constant_value();
  } else {
    v_ = std::move(f);
  }
}

Scalar Scalar::ratio(long n, long d) {
  return Scalar(rat(n, d));
}

const BigRat& Scalar::exact() const {
  if (!is_exact()) throw Error(ErrorCode::InvalidArgument, "scalar is symbolic: " + to_string());
  return std::get<BigRat>(v_);
}

RatFun Scalar::ratfun() const {
  if (is_exact()) return RatFun(std::get<BigRat>(v_));
  return std::get<RatFun>(v_);
}

VarMask Scalar::vars() const { return is_exact() ? 0 : std::get<RatFun>(v_).vars(); }

bool Scalar::is_zero() const { return is_exact() && std::get<BigRat>(v_) == 0; }

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(BigRat(-std::get<BigRat>(v_)));
  return Scalar(-std::get<RatFun>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(BigRat(a.exact() + b.exact()));
  check_mix(a.vars(), b.vars());
  return Scalar(a.ratfun() + b.ratfun());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(BigRat(a.exact() - b.exact()));
  check_mix(a.vars(), b.vars());
  return Scalar(a.ratfun() - b.ratfun());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(BigRat(a.exact() * b.exact()));
  if (a.is_zero() || b.is_zero()) return Scalar();
  check_mix(a.vars(), b.vars());
  if (a.is_exact()) {
    RatFun f = b.ratfun();
    return Scalar(f * RatFun(a.exact()));
  }
  return Scalar(a.ratfun() * b.ratfun());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (a.is_exact() && b.is_exact()) return Scalar(BigRat(a.exact() / b.exact()));
  check_mix(a.vars(), b.vars());
  return Scalar(a.ratfun() / b.ratfun());
}

Scalar Scalar::pow(int e) const {
  if (is_exact()) {
    const BigRat& q = exact();
    if (e < 0 && q == 0) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
    BigRat r(1);
    for (int i = 0; i < std::abs(e); ++i) r *= q;
    return Scalar(e < 0 ? BigRat(1 / r) : r);
  }
  return Scalar(std::get<RatFun>(v_).pow(e));
}

BigRat Scalar::evaluate(const Assignment& a) const {
  if (is_exact()) return exact();
  return std::get<RatFun>(v_).evaluate(a);
}

Scalar Scalar::specialize(Var v, const BigRat& value) const {
  if (is_exact()) return *this;
  return Scalar(std::get<RatFun>(v_).specialize(v, value));
}

Scalar Scalar::specialize(const Assignment& a) const {
  Scalar s = *this;
  for (unsigned i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (a.get(v)) s = s.specialize(v, *a.get(v));
  }
  return s;
}

Scalar Scalar::substitute(Var v, const Scalar& replacement) const {
  if (is_exact() || !(vars() & mask_of(v))) return *this;
  return Scalar(std::get<RatFun>(v_).substitute(v, replacement.ratfun()));
}

std::string Scalar::to_string() const {
  if (is_exact()) return exact().get_str();
  return std::get<RatFun>(v_).to_string();
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "cannot parse scalar '" + std::string(s_) + "': " + why + " at offset " +
                    std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else return v;
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    Scalar base = primary();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      long e = integer();
      return base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Scalar primary() {
    skip();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      BigInt z(std::string(s_.substr(start, pos_ - start)));
      return Scalar(BigRat(z));
    }
    ++pos_;
    switch (c) {
      case 'b': return Scalar::variable(Var::B);
      case 'u': return Scalar::variable(Var::U);
      case 'N': return Scalar::variable(Var::N);
      default: --pos_; fail("unexpected character");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::Add: return a + b;
    case ScalarOp::Sub: return a - b;
    case ScalarOp::Mul: return a * b;
    case ScalarOp::Div: return a / b;
  }
  return {};
}

}  // namespace hurwitz
