#include "doctest.h"

#include "hurwitz/ortho.hpp"
#include "hurwitz/tau.hpp"

using namespace hurwitz;

namespace {

Scalar sym(const char* s) { return Scalar::parse(s); }
SymFun p(std::initializer_list<int> parts) { return SymFun::p(Partition(parts)); }

void require_pass(const CheckReport& r) {
  INFO(r.to_jsonl());
  CHECK(r.passed);
  CHECK(r.comparisons > 0);
}

}  // namespace

TEST_CASE("orthogonal dimensions") {
  const Scalar n = Scalar::variable(Var::N);
  CHECK(ortho_dim(Partition{1}).at(n) == n);
  CHECK(ortho_dim(Partition{2}).at(n) == sym("(N+2)*(N-1)/2"));
  CHECK(ortho_dim(Partition{1, 1}).at(n) == sym("N*(N-1)/2"));
  CHECK(ortho_dim(Partition{}).at(n) == Scalar(1));
  // Adjoint of SO(4) and SO(6).
  CHECK(so_dim(Partition{1, 1}, 2) == 3);
  CHECK(so_dim(Partition{1, 1}, 3) == 15);
  CHECK(sp_dim_weyl(Partition{1}, 2) == 4);
  CHECK(sp_dim_weyl(Partition{2}, 2) == 10);
  CHECK(zonal_dim(Partition{2}) == sym("N*(N+2)"));
  require_pass(check_ortho_dims(6));
}

TEST_CASE("a_lambda(n)") {
  CHECK(a_coeff_def(Partition{}) == Scalar(1));
  CHECK(a_coeff_def(Partition{1}) == sym("1/(2*N)"));
  CHECK(a_coeff_closed(Partition{1}, 1) == sym("1/(2*N)"));
  CHECK(a_coeff_closed(Partition{3, 1}, 4) == a_coeff_def(Partition{3, 1}));
  CHECK_THROWS_AS(a_coeff_closed(Partition{2, 1}, 1), Error);
  try {
    a_coeff_closed(Partition{2, 1}, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPadding);
  }
  require_pass(check_a_coeff(6));
  require_pass(check_a_antisymmetry(5));
  require_pass(check_key_identity(4, 3));
}

TEST_CASE("straightening") {
  Straightened s = straighten({-1, -2});
  CHECK(s.sign == 1);
  CHECK(s.lambda == Partition{});
  s = straighten({-2, -1});
  CHECK(s.sign == -1);
  CHECK(s.lambda == Partition{});
  CHECK(straighten({-1, -1}).sign == 0);
  s = straighten({-2, 0});
  CHECK(s.sign == -1);
  CHECK(s.lambda == Partition{1});
  CHECK(straighten({-3, 0}).sign == 0);
  CHECK(straighten({-4}).sign == 0);
  require_pass(check_virasoro_on_schur(5, 2));
}

TEST_CASE("b = 1 Schur expansion") {
  TauSeries t = expand_tau(1, TauMode::SymbolicBN, Scalar(1));
  CHECK(t.series[1] == p({1}) * sym("1/(2*N)"));
  require_pass(schur_expansion_check(4));
}

TEST_CASE("symplectic side") {
  CHECK(omega2(p({1})) == p({1}) * Scalar(2));
  CHECK(omega2(p({2})) == p({2}) * Scalar(-2));
  CHECK(omega2(schur_scaled(Partition{2}, rat(1, 2))) == schur(Partition{1, 1}));
  require_pass(symplectic_dual_check(3, 4));
}

TEST_CASE("Oliveira-Novaes") {
  CHECK(zonal_spherical(Partition{1}, Partition{1}) == 1);
  CHECK(g_coeff(Partition{1}, Partition{1}) == 1);
  for (int m = 1; m <= 3; ++m) require_pass(oliveira_novaes_check(m));
}
