#include "gk/oracle.hpp"
#include "support.hpp"

using namespace gk;
using namespace gk::test;

TEST_CASE("lower search") {
  SearchBudget thousand;
  thousand.max_transforms = 1000;
  CHECK(gk_lower_search(diag(2, {1, 1}), thousand) == ExponentSeq{0, 1});
  SearchBudget one;
  one.max_transforms = 1;
  CHECK(gk_lower_search(H(2), one) == ExponentSeq{0, 0});
  CHECK(gk_lower_search(diag(5, {1, 5}), one) == ExponentSeq{0, 1});
}

TEST_CASE("exhaustive binary GK") {
  CHECK(exhaustive_gk_binary(diag(2, {1, 1})) == ExponentSeq{0, 1});
  CHECK(exhaustive_gk_binary(Y()) == ExponentSeq{0, 0});
  // 2 is a unit at 3, so diag(2,6) has the same exponents as diag(1,3).
  CHECK(exhaustive_gk_binary(diag(3, {2, 6})) == ExponentSeq{0, 1});
  CHECK(exhaustive_gk_binary(diag(3, {3, 9})) == ExponentSeq{1, 2});
  CHECK(exhaustive_gk_binary(F(2, {{"1", "1"}, {"1", "0"}})) == ExponentSeq{0, 2});
  CHECK_THROWS_AS(exhaustive_gk_binary(diag(2, {1, 1, 1})), InvalidInput);
}

TEST_CASE("hilbert by solvability search") {
  PrimeContext two(2);
  CHECK(hilbert_brute(Rational(1), Rational(1), two, 8) == 1);
  CHECK(hilbert_brute(Rational(-1), Rational(-1), two, 8) == -1);
  CHECK(hilbert_brute(Rational(2), Rational(5), two, 8) == -1);
  CHECK(hilbert_brute(Rational(2), Rational(7), two, 8) == 1);
}

TEST_CASE("oracle properties") { property("lower_search_bracket", 60); }
