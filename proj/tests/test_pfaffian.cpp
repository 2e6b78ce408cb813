#include "doctest.h"

#include "hurwitz/ortho.hpp"
#include "hurwitz/pfaffian.hpp"

using namespace hurwitz;

namespace {

void require_pass(const CheckReport& r) {
  INFO(r.to_jsonl());
  CHECK(r.passed);
  CHECK(r.comparisons > 0);
}

Scalar sym(const char* s) { return Scalar::parse(s); }

}  // namespace

TEST_CASE("Pfaffian examples") {
  Matrix<Scalar> a = {{0, sym("N")}, {-sym("N"), 0}};
  CHECK(pfaffian(a) == sym("N"));
  CHECK_THROWS_AS(pfaffian(Matrix<Scalar>(1, std::vector<Scalar>(1))), Error);
  Matrix<Scalar> id = {{1, 0}, {0, 1}};
  CHECK(determinant(id) == Scalar(1));
  require_pass(check_pfaffian_basics(12, 3));
  require_pass(check_pfaffian_det(20, 8, 11));
}

TEST_CASE("Schur Pfaffian identity") {
  CheckReport r = schur_pfaffian_check({3, 1});
  require_pass(r);
  require_pass(schur_pfaffian_check({3, 2, 1}));
  require_pass(schur_pfaffian_check({5}));
  require_pass(schur_pfaffian_check({rat(1, 2), 0, 3}));
  require_pass(check_schur_pfaffian_random(10, 5));
}

TEST_CASE("minor summation") {
  require_pass(check_minor_summation_random(17));
}

TEST_CASE("kernel and a_lambda(n) as a Pfaffian") {
  CHECK(a_kernel(0, -1) == 1);
  CHECK(a_kernel(-1, 0) == -1);
  CHECK(a_kernel(1, -1) == rat(1, 2));
  CHECK(a_kernel(-1, 2) == rat(-1, 8));
  CHECK(a_kernel(0, 0) == 0);
  CHECK(a_kernel(2, 1) == rat(1, 48));
  CHECK(a_kernel(1, 2) == rat(-1, 48));
  CHECK(a_pfaffian(Partition{}, 1) == 1);
  CHECK(a_pfaffian(Partition{1}, 1) == rat(1, 2));
  require_pass(a_pfaffian_check(Partition{2, 1}, 3));
  require_pass(check_a_pfaffian_all(4, 5));
}

TEST_CASE("beta and its ratios") {
  CHECK(beta(1) == 1);
  CHECK(beta(3) == rat(1, 48));
  CHECK(s_k(2).evaluate(Assignment().set(Var::N, 3)) == rat(1, 1680 * 360));
  for (int n = 2; n <= 6; ++n)
    CHECK(r_k(3).evaluate(Assignment().set(Var::N, n)) * beta(n) * beta(n + 1) == beta(n - 1) * beta(n + 2));
  require_pass(check_beta_ratios(2, 8, 4));
}

TEST_CASE("truncation") {
  CHECK(integer_roots_from(MPoly::variable(Var::N) * (MPoly::variable(Var::N) - MPoly(3)), 1) ==
        std::vector<long>{3});
  require_pass(check_trunc(4));
}

TEST_CASE("BKP equation") {
  require_pass(bkp_equation_check(2, BkpMode::Symbolic));
  require_pass(bkp_equation_check(2, BkpMode::Sampled, {rat(7, 3), rat(11, 5), rat(13, 2), rat(-5, 7), rat(19, 4)}));
  CheckReport few = bkp_equation_check(1, BkpMode::Sampled, {rat(7, 3)});
  CHECK_FALSE(few.passed);
}
