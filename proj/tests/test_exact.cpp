#include "doctest.h"

#include <random>

#include "hurwitz/exact.hpp"

using namespace hurwitz;

namespace {

Scalar sym(const char* s) { return Scalar::parse(s); }

Scalar random_ratfun(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), exp(0, 2);
  auto poly = [&] {
    MPoly p;
    for (int i = 0; i < 3; ++i)
      p += MPoly::monomial(BigRat(coef(rng)), Monomial::make(exp(rng), 0, 0));
    return p;
  };
  MPoly d = poly();
  while (d.is_zero()) d = poly();
  return Scalar(RatFun(poly(), d));
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Scalar::ratio(1, 2) + Scalar::ratio(1, 3) == Scalar::ratio(5, 6));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("cancellation") {
  Scalar f = sym("b/(1+b)") * sym("1+b");
  CHECK(f == Scalar::variable(Var::B));
  CHECK(sym("(b^2-1)/(b-1)") == sym("b+1"));
  CHECK(sym("(b^2*u - u)/(b*u + u)") == sym("b - 1"));
  CHECK(sym("1/(1+b) + b/(1+b)").is_exact());
}

TEST_CASE("evaluation and poles") {
  Scalar f = sym("1/(N-2)");
  CHECK(f.evaluate(Assignment().set(Var::N, 3)) == 1);
  try {
    (void)f.evaluate(Assignment().set(Var::N, 2));
    FAIL("expected pole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtAssignment);
  }
  Scalar g = sym("(2*N+2)*(2*N+1)*(2*N)*(2*N-1)*(2*N)*(2*N-1)*(2*N-2)*(2*N-3)");
  CHECK(g.evaluate(Assignment().set(Var::N, 3)) == 8 * 7 * 6 * 5 * 6 * 5 * 4 * 3);
}

TEST_CASE("variable mismatch") {
  try {
    (void)(sym("u") + sym("N"));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VariableMismatch);
  }
  CHECK(sym("b*u") * sym("1/b") == sym("u"));
}

TEST_CASE("canonical normalization") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Scalar f = random_ratfun(rng);
    if (f.is_exact()) continue;
    RatFun r = f.ratfun();
    for (long k : {2L, -3L, 7L}) {
      RatFun s(r.num() * BigRat(k) * MPoly(MPoly::variable(Var::B) + MPoly(1)),
               r.den() * BigRat(k) * MPoly(MPoly::variable(Var::B) + MPoly(1)));
      CHECK(s == r);
    }
  }
  CHECK(sym("(2*b+2)/(4*b-6)").to_string() == "(b + 1)/(2*b - 3)");
  CHECK(sym("3*b^2*N - 1").to_string() == "3*b^2*N - 1");
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  Assignment at;
  at.set(Var::B, BigRat(2, 7));
  for (int i = 0; i < 100; ++i) {
    Scalar f = random_ratfun(rng), g = random_ratfun(rng);
    try {
      BigRat ef = f.evaluate(at), eg = g.evaluate(at);
      CHECK((f + g).evaluate(at) == ef + eg);
      CHECK((f * g).evaluate(at) == ef * eg);
      CHECK((f - g).evaluate(at) == ef - eg);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PoleAtAssignment);
    }
  }
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("multivariate gcd") {
  MPoly b = MPoly::variable(Var::B), u = MPoly::variable(Var::U);
  MPoly g = b * u + MPoly(1) + b;
  MPoly p = g * (b - u) * (b - u), q = g * (u * u + b);
  CHECK(gcd(p, q) == g);
  CHECK(gcd(p, p * q) == p.primitive());
}

TEST_CASE("series coefficients and substitution") {
  RatFun f = sym("1/(1-u)").ratfun();
  for (unsigned k = 0; k < 5; ++k) CHECK(f.series_coeff(Var::U, k) == RatFun(1));
  RatFun g = sym("u/(1+b*u)").ratfun();
  CHECK(Scalar(g.series_coeff(Var::U, 3)) == sym("b^2"));
  CHECK(sym("1/(N-2)").substitute(Var::N, sym("N+2")) == sym("1/N"));
  CHECK(sym("u/(1+u)").substitute(Var::U, sym("-u")) == sym("u/(u-1)"));
}

TEST_CASE("gcd of products with a common factor") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> coef(-6, 6), e(0, 3);
  auto poly = [&] {
    std::vector<MPoly::Term> t;
    for (int i = 0; i < 4; ++i) t.emplace_back(Monomial::make(e(rng), e(rng), 0), BigRat(coef(rng)));
    return MPoly::from_terms(std::move(t));
  };
  for (int i = 0; i < 60; ++i) {
    MPoly a = poly(), b = poly(), c = poly();
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    MPoly g = gcd(a * c, b * c);
    CHECK(try_divide(g, c).has_value());
    CHECK(gcd(divide_exact(a * c, g), divide_exact(b * c, g)) == MPoly(1));
  }
}
