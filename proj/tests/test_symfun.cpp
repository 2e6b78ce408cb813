#include "doctest.h"

#include <random>

#include "hurwitz/symfun.hpp"

using namespace hurwitz;

namespace {

const Scalar b = Scalar::variable(Var::B);
Scalar sym(const char* s) { return Scalar::parse(s); }
SymFun p(std::initializer_list<int> parts) { return SymFun::p(Partition(parts)); }

SymFun random_symfun(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> coef(-3, 3);
  SymFun f;
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& mu : partitions_of(n)) f.add_term(mu, Scalar(coef(rng)));
  return f;
}

}  // namespace

TEST_CASE("partition basics") {
  Partition l{3, 1, 1};
  CHECK(l.size() == 5);
  CHECK(l.conjugate() == Partition{3, 1, 1});
  CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
  CHECK(Partition{2, 1}.z() == 2);
  CHECK(Partition{1, 1, 1}.z() == 6);
  CHECK(Partition{3, 2}.dim() == 5);
  CHECK(Partition{2, 2}.dominated_by(Partition{3, 1}));
  CHECK_FALSE(Partition{3, 1, 1, 1}.dominated_by(Partition{2, 2, 2}));
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(6).front() == Partition{6});
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  for (int n = 0; n <= 7; ++n)
    for (const auto& l2 : partitions_of(n)) CHECK(l2.conjugate().conjugate() == l2);
}

TEST_CASE("inner product") {
  CHECK(inner_product(p({1}), p({1}), b) == sym("1+b"));
  CHECK(inner_product(p({2}), p({1, 1}), b).is_zero());
  CHECK(inner_product(p({2, 1}), p({2, 1}), b) == sym("2*(1+b)^2"));
}

TEST_CASE("p_k^* and adjointness at b = 0") {
  CHECK(pk_star(p({2}), 2) == SymFun(Scalar(2)));
  CHECK(pk_star(p({1, 1}), 1) == p({1}) * Scalar(2));
  CHECK(derive(p({2, 1}), 2) == p({1}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    SymFun f = random_symfun(rng, 4), g = random_symfun(rng, 5);
    for (int k = 1; k <= 3; ++k)
      CHECK(inner_product(mul_pk(f, k), g, Scalar(0)) == inner_product(f, pk_star(g, k), Scalar(0)));
  }
}

TEST_CASE("Laplace-Beltrami examples") {
  CHECK(laplace_beltrami(p({1}), b).is_zero());
  SymFun j2 = p({1, 1}) + p({2}) * sym("1+b");
  CHECK(laplace_beltrami(j2, b) == j2 * sym("1+b"));
  SymFun j11 = p({1, 1}) - p({2});
  CHECK(laplace_beltrami(j11, b) == -j11);
}

TEST_CASE("Jack examples") {
  JackTable& t = symbolic_jacks();
  CHECK(t.jack(Partition{1}) == p({1}));
  CHECK(t.jack(Partition{2}) == p({1, 1}) + p({2}) * sym("1+b"));
  CHECK(t.jack(Partition{1, 1}) == p({1, 1}) - p({2}));
  CHECK(t.jack_gram_schmidt(Partition{2}) == t.jack(Partition{2}));
  CHECK(zonal(Partition{2}) == p({1, 1}) + p({2}) * Scalar(2));
  Hooks h = hooks(Partition{2}, b);
  CHECK(h.hook == sym("2+b"));
  CHECK(h.hook_prime == sym("2*(1+b)^2"));
  CHECK(h.j == sym("(2+b)*2*(1+b)^2"));
  CHECK(hk_of_multiset(2, {Scalar(0), sym("1+b")}) == sym("(1+b)^2"));
}

TEST_CASE("Jack invariants up to degree 5") {
  JackTable& t = symbolic_jacks();
  for (int n = 1; n <= 5; ++n) {
    const auto& ps = partitions_of(n);
    SymFun cauchy;
    for (const auto& l : ps) {
      const SymFun& j = t.jack(l);
      CHECK(laplace_beltrami(j, b) == j * content_sum(l, b));
      CHECK(inner_product(j, j, b) == t.hooks(l).j);
      CHECK(j == t.jack_gram_schmidt(l));
      for (const auto& m : ps)
        if (m < l) CHECK(inner_product(j, t.jack(m), b).is_zero());
      cauchy += j * (Scalar(1) / t.hooks(l).j);
    }
    std::vector<int> ones(n, 1);
    Scalar norm = sym("1+b").pow(n) * Scalar(BigRat(Partition(ones).z()));
    CHECK(cauchy == SymFun::p(Partition(ones), Scalar(1) / norm));
  }
}

TEST_CASE("Murnaghan-Nakayama") {
  CHECK(char_sym(Partition{2}, Partition{1, 1}) == 1);
  CHECK(char_sym(Partition{1, 1}, Partition{2}) == -1);
  CHECK(schur(Partition{2}) == p({1, 1}) * Scalar::ratio(1, 2) + p({2}) * Scalar::ratio(1, 2));
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n)) {
      std::vector<int> ones(n, 1);
      CHECK(BigInt(char_sym(l, Partition(ones))) == l.dim());
      CHECK(symbolic_jacks().jack(l).specialize(Var::B, 0) ==
            schur(l) * Scalar(BigRat(l.hook_product())));
    }
}

TEST_CASE("monomial to power sums") {
  CHECK(m_to_p(Partition{1, 1}) == (p({1, 1}) - p({2})) * Scalar::ratio(1, 2));
  CHECK(m_to_p(Partition{2, 1}) == p({2, 1}) - p({3}));
}
