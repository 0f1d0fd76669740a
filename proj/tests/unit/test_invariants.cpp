#include "support.hpp"

using namespace gk;
using namespace gk::test;

TEST_CASE("gk examples") {
  CHECK(gk::gk(diag(2, {1, 1})) == ExponentSeq{0, 1});
  CHECK(gk::gk(F(2, {{"1", "1"}, {"1", "0"}})) == ExponentSeq{0, 2});
  CHECK(gk::gk(diag(3, {1, 3, 9})) == ExponentSeq{0, 1, 2});
  CHECK(gk::gk(H(2)) == ExponentSeq{0, 0});
  CHECK(gk::gk(Y()) == ExponentSeq{0, 0});
  CHECK(gk::gk(diag(2, {1, 1, 1})) == ExponentSeq{0, 1, 1});
  CHECK_THROWS_AS(gk::gk(F(3, {{"1", "1"}, {"1", "1"}})), InvalidInput);
}

TEST_CASE("xi and eta") {
  CHECK(xi(H(2)) == 1);
  CHECK(xi(Y()) == -1);
  CHECK(xi(diag(2, {1, 1})) == 0);
  CHECK_FALSE(xi_defined_for(3));
  CHECK(eta(diag(2, {1})) == 1);
  CHECK(eta(H(2)) == 1);
  CHECK(eta(diag(2, {1, 1, 1})) == -1);
  CHECK(eta(H(3)) == 1);
  auto d = field_diagonalization(H(2));
  REQUIRE(d.size() == 2);
  CHECK(d[0] * d[1] == H(2).det());
}

TEST_CASE("binary classification") {
  BinaryClass h = classify_binary(H(2));
  CHECK(h.ext.kind == ExtKind::split);
  CHECK(h.f == 0);
  CHECK_FALSE(h.decomposable);
  CHECK(h.predicted == ExponentSeq{0, 0});
  BinaryClass d = classify_binary(diag(2, {1, 1}));
  CHECK(d.ext == QuadExtKind{ExtKind::ramified, 2});
  CHECK(d.f == 0);
  CHECK(d.decomposable);
  CHECK(d.predicted == ExponentSeq{0, 1});
  BinaryClass s = classify_binary(F(2, {{"1", "1"}, {"1", "0"}}));
  CHECK(s.ext.kind == ExtKind::split);
  CHECK(s.f == 1);
  CHECK(s.predicted == ExponentSeq{0, 2});
  BinaryClass scaled = classify_binary(diag(3, {3, 9}));
  CHECK(scaled.scale == 1);
  CHECK(scaled.predicted == ExponentSeq{1, 2});
}

TEST_CASE("binary optimality criterion") {
  CHECK(is_optimal_binary(F(2, {{"1", "1"}, {"1", "2"}}), {0, 1}));
  CHECK_FALSE(is_optimal_binary(diag(2, {1, 1}), {0, 0}));
  CHECK(is_optimal_binary(F(2, {{"1", "1"}, {"1", "0"}}), {0, 2}));
}

TEST_CASE("egk_of examples") {
  CHECK(egk_of(diag(2, {1, 1})) == EGKDatum{{1, 1}, {0, 1}, {1, 0}});
  CHECK(egk_of(H(2)) == EGKDatum{{2}, {0}, {1}});
  CHECK(egk_of(diag(3, {1, 3})) == EGKDatum{{1, 1}, {0, 1}, {1, 0}});
  CHECK(egk_of(Y()) == EGKDatum{{2}, {0}, {-1}});
}

TEST_CASE("inverse bounds") {
  CHECK(check_inverse_bounds(diag(2, {1, 2}), GKType{{0, 1}, Involution::identity(2)}));
  CHECK(check_inverse_bounds(F(2, {{"1", "1"}, {"1", "2"}}), GKType{{0, 1}, Involution::identity(2)}));
  CHECK_THROWS_AS(check_inverse_bounds(diag(2, {1, 2, 4}), GKType{{0, 1, 2}, Involution::identity(3)}), InvalidInput);
  CHECK_THROWS_AS(check_inverse_bounds(diag(3, {1, 3}), GKType{{0, 1}, Involution::identity(2)}), InvalidInput);
}

TEST_CASE("invariant properties") {
  for (const char* name : {"binary_classification", "binary_optimality_criterion", "egk_of_validates", "eta_last_step",
                           "eta_unramified_summand", "eta_constant_exponents", "even_rank_parity",
                           "eta_recursion_reduced", "inverse_bounds"})
    property(name);
}
