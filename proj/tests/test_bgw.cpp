#include "doctest.h"

#include "hurwitz/bgw.hpp"

using namespace hurwitz;

namespace {

void require_pass(const CheckReport& r) {
  INFO(r.to_jsonl());
  CHECK(r.passed);
  CHECK(r.comparisons > 0);
}

std::vector<BigRat> spectrum(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("truncated series arithmetic") {
  TSeries a({1, 1}, 3), b({0, 0, 1}, 3);
  TSeries ab = a * b;
  CHECK(ab.order() == 3);
  CHECK(ab.coeff(3) == 1);
  CHECK((TSeries(2) * TSeries(3)) == TSeries(6));
  CHECK_THROWS_AS(TSeries({0, 1}, 3).shift_down(2), Error);
  CHECK(TSeries({0, 0, 5}, 4).shift_down(2).coeff(0) == 5);
}

TEST_CASE("BGW kernel") { require_pass(check_bgw_kernel(6)); }

TEST_CASE("BGW orthogonal, n = 1") {
  const TSeries s = bgw_orthogonal(spectrum({1}), 3);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == rat(1, 2));
  CHECK(s.coeff(2) == rat(1, 8));
  CHECK(s.coeff(3) == rat(1, 72));
}

TEST_CASE("BGW orthogonal chain") {
  require_pass(bgw_orthogonal_check(spectrum({1}), 4));
  require_pass(bgw_orthogonal_check(spectrum({1, 2}), 4));
  require_pass(bgw_orthogonal_check({rat(1, 2), 3, -2}, 3));
}

TEST_CASE("BGW printed border") {
  require_pass(bgw_as_printed_check(spectrum({1}), 3));
  require_pass(bgw_as_printed_check(spectrum({1, 2, 3}), 3));
}

TEST_CASE("BGW unitary") {
  const TSeries s = bgw_unitary_det(spectrum({2}), 2);
  CHECK(s.coeff(1) == 2);
  require_pass(bgw_unitary_det_check(spectrum({1}), 4));
  require_pass(bgw_unitary_det_check(spectrum({1, 2}), 4));
  require_pass(bgw_unitary_det_check(spectrum({1, 2, 3}), 3));
}

TEST_CASE("BGW errors") {
  try {
    bgw_orthogonal(spectrum({1, 1}), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSpectrum);
  }
}
