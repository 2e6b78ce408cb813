#include "doctest.h"

#include "hurwitz/monotone.hpp"

using namespace hurwitz;

TEST_CASE("monotone enumeration examples") {
  auto c = enumerate_monotone(2, 1);
  CHECK(c.size() == 1);
  CHECK(c[Partition{2}] == 1);
  c = enumerate_monotone(2, 2);
  CHECK(c.size() == 1);
  CHECK(c[Partition{1, 1}] == 1);
  c = enumerate_monotone(3, 1);
  CHECK(c[Partition{2, 1}] == 3);
  c = enumerate_monotone(1, 0);
  CHECK(c[Partition{1}] == 1);
  CHECK(monotone_total(4, 2) == 25);
  CHECK_THROWS_AS(enumerate_monotone(7, 1), Error);
}

TEST_CASE("monotone totals and relabelling") {
  auto r = check_monotone_totals(5, 4);
  INFO(r.to_jsonl());
  CHECK(r.passed);
}

TEST_CASE("monotone counts match tilde-tau at b = 0") {
  auto r = compare_with_tau(4, 3);
  INFO(r.to_jsonl());
  CHECK(r.passed);
}
