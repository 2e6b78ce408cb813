#include "doctest.h"

#include "hurwitz/tau.hpp"

using namespace hurwitz;

namespace {

Scalar sym(const char* s) { return Scalar::parse(s); }
SymFun p(std::initializer_list<int> parts) { return SymFun::p(Partition(parts)); }

}  // namespace

TEST_CASE("series log and exp") {
  GradedSeries s(2);
  s[0] = SymFun(Scalar(1));
  s[1] = p({1});
  GradedSeries l = series_log(s);
  CHECK(l[1] == p({1}));
  CHECK(l[2] == p({1, 1}) * Scalar::ratio(-1, 2));
  CHECK(series_exp(l) == s);
  CHECK(derive(p({2, 1}), 2) == p({1}));
  GradedSeries bad(1);
  CHECK_THROWS_AS(series_log(bad), Error);
}

TEST_CASE("exp and log are inverse") {
  GradedSeries s(5);
  s[0] = SymFun(Scalar(1));
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) s[n].add_term(mu, Scalar::ratio(n * 7 % 5 - 2, mu.length()));
  CHECK(series_exp(series_log(s)) == s);
  GradedSeries l = series_log(s);
  CHECK(series_log(series_exp(l)) == l);
}

TEST_CASE("tau low degrees") {
  TauSeries t = expand_tau(2, TauMode::SymbolicBU);
  CHECK(t.series[0] == SymFun(Scalar(1)));
  CHECK(t.series[1] == p({1}) * sym("u/(1+b)"));
  Scalar c = t.series[2].coeff(Partition{2}).specialize(Var::B, 0);
  // j_(2) = j_(1,1) = 4 at b = 0
  CHECK(c == sym("u^2*(1/(4*(1+u)) - 1/(4*(1-u)))"));
  GradedSeries tilde = rescale_tilde(t);
  CHECK(tilde[0] == SymFun(Scalar(1)));
  CHECK(tilde[1] == p({1}) * sym("1/(1+b)"));
}

TEST_CASE("u and N coordinates agree") {
  TauSeries bu = expand_tau(4, TauMode::SymbolicBU);
  TauSeries bn = expand_tau(4, TauMode::SymbolicBN);
  for (int n = 0; n <= 4; ++n)
    CHECK(bu.series[n].substitute(Var::U, sym("1/N")) == bn.series[n]);
}

TEST_CASE("evolution and Virasoro at degree 4") {
  TauSeries t = expand_tau(4, TauMode::SymbolicBU);
  CHECK(check_evolution(t).passed);
  CHECK(check_evolution_uniqueness(t).passed);
  CHECK(check_virasoro(t, 4).passed);
  TauSeries s = expand_tau(4, TauMode::Sampled, Scalar::ratio(2, 7), BigRat(13, 3));
  CHECK(check_evolution(s).passed);
  CHECK(check_virasoro(s, 4).passed);
}

TEST_CASE("flipped content convention breaks the evolution equation") {
  // Rebuild degree 2 with contents (1+b)(row-1) - (col-1).
  const Scalar b = Scalar::variable(Var::B), u = Scalar::variable(Var::U);
  TauSeries t = expand_tau(2, TauMode::SymbolicBU);
  SymFun wrong;
  for (const auto& l : partitions_of(2)) {
    Scalar prod(1);
    Partition c = l.conjugate();
    for (const auto& x : contents(c, b)) prod *= Scalar(1) + u * x;
    Scalar w = u.pow(2) / prod / symbolic_jacks().hooks(l).j;
    wrong += symbolic_jacks().jack(l) * w;
  }
  t.series[2] = wrong;
  CHECK_FALSE(check_evolution(t).passed);
}

TEST_CASE("Virasoro commutators and operator sum") {
  CHECK(check_virasoro_commutators(3, 3, 5, 1).passed);
  CHECK(check_virasoro_sum(4, 2).passed);
  const Scalar b = Scalar::variable(Var::B), inv_u = Scalar(1) / Scalar::variable(Var::U);
  GradedSeries f(2);
  f[0] = p({3});
  CHECK(virasoro_commutator_residual(1, 2, f, b, inv_u).is_zero());
}

TEST_CASE("Feray coefficients") {
  FerayTable t(4, 3);
  CHECK(t.a(0, Partition{1}) == Scalar(1));
  CHECK(t.a(1, Partition{1}).is_zero());
  CHECK(t.a(1, Partition{2}) == Scalar(1));
  CHECK(check_feray_recursion(t).passed);
  CHECK(check_feray_hk(t, 4, 3).passed);
  CHECK(check_feray_polynomial(t).passed);
  CHECK(check_character_orthogonality(4).passed);
}

TEST_CASE("positivity at low degree") {
  CHECK(check_positivity(3, 4).passed);
}

TEST_CASE("Jack core identities") {
  const CheckReport r = check_jack_core(4);
  INFO(r.to_jsonl());
  CHECK(r.passed);
  CHECK(r.comparisons > 0);
}
