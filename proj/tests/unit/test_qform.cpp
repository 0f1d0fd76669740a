#include "support.hpp"

using namespace gk;
using namespace gk::test;

namespace {

std::string reason_of(const Matrix& m, long p) {
  try {
    HalfIntegralForm::validate(m, PrimeContext(p));
  } catch (const InvalidInput& e) {
    return e.reason();
  }
  return "accepted";
}

}  // namespace

TEST_CASE("validate_form") {
  CHECK_NOTHROW(F(2, {{"1", "1/2"}, {"1/2", "3"}}));
  Rational half(1, 2), third(1, 3);
  CHECK(reason_of(Matrix{{half, 0}, {0, 1}}, 2) == "diagonal_not_integral");
  CHECK(reason_of(Matrix{{1, third}, {third, 1}}, 3) == "offdiagonal_not_half_integral");
  CHECK(reason_of(Matrix{{1, 1}, {0, 1}}, 2) == "asymmetric");
  CHECK(reason_of(Matrix{{1, third}, {third, 1}}, 2) == "accepted");
  CHECK(reason_of(Matrix{{1, half}, {half, 1}}, 3) == "accepted");
  CHECK(reason_of(Matrix(2, 3), 2) == "not_square");
}

TEST_CASE("transform") {
  PrimeContext two(2);
  HalfIntegralForm b = diag(2, {1, 1});
  CHECK(transform(b, UnimodularTransform::identity(2)) == b);
  UnimodularTransform u = UnimodularTransform::validate(Matrix{{1, 1}, {0, 1}}, two);
  CHECK(transform(b, u) == F(2, {{"1", "1"}, {"1", "2"}}));
  HalfIntegralForm c = diag(3, {1, 3, 9});
  CHECK(transform(c, UnimodularTransform::permutation({2, 0, 1})) == diag(3, {9, 1, 3}));
  CHECK_THROWS_AS(UnimodularTransform::validate(Matrix{{2, 0}, {0, 1}}, two), InvalidInput);
  CHECK_NOTHROW(UnimodularTransform::validate(Matrix{{3, 0}, {0, 1}}, two));
}

TEST_CASE("leading and direct sums") {
  HalfIntegralForm b1 = F(2, {{"1", "1", "0"}, {"1", "0", "0"}, {"0", "0", "4"}});
  CHECK(leading(b1, 3) == b1);
  CHECK(leading(b1, 2) == F(2, {{"1", "1"}, {"1", "0"}}));
  CHECK(leading(diag(3, {1, 3, 9}), 1) == diag(3, {1}));
  CHECK(direct_sum(diag(2, {1}), diag(2, {3})) == diag(2, {1, 3}));
  HalfIntegralForm big = direct_sum(H(2), scale(Y(), 2));
  CHECK(big == F(2, {{"0", "1/2", "0", "0"}, {"1/2", "0", "0", "0"}, {"0", "0", "2", "1"}, {"0", "0", "1", "2"}}));
  HalfIntegralForm empty = trusted_form(Matrix(0, 0), PrimeContext(2));
  CHECK(direct_sum(diag(2, {7}), empty) == diag(2, {7}));
}

TEST_CASE("discriminant, delta and norm ideal") {
  CHECK(disc_D(diag(2, {1, 1})) == -4);
  CHECK(disc_D(H(2)) == 1);
  CHECK(disc_D(F(2, {{"1", "1", "0"}, {"1", "0", "0"}, {"0", "0", "4"}})) == 16);
  CHECK(delta(diag(2, {1, 1})) == 1);
  CHECK(delta(H(2)) == 0);
  CHECK(delta(diag(3, {1, 3, 9})) == 3);
  CHECK(norm_ideal_ord(diag(2, {1, 1})) == 0);
  CHECK(norm_ideal_ord(F(2, {{"0", "1"}, {"1", "0"}})) == 1);
  CHECK(norm_ideal_ord(diag(2, {4, 8})) == 2);
}

TEST_CASE("membership") {
  CHECK(membership(diag(2, {1, 1}), {0, 0}));
  CHECK_FALSE(membership(diag(2, {1, 1}), {0, 1}));
  CHECK(membership(F(2, {{"1", "1"}, {"1", "2"}}), {0, 1}));
  CHECK_FALSE(membership(F(2, {{"1", "1"}, {"1", "2"}}), {0, 1}, Strictness::strict));
  CHECK(membership(diag(2, {2, 4}), {0, 1}, Strictness::strict));
  CHECK(greatest_in_S(F(2, {{"1", "1"}, {"1", "2"}})) == ExponentSeq{0, 1});
  CHECK(greatest_in_S(H(2)) == ExponentSeq{0, 0});
}

TEST_CASE("G_ua membership") {
  PrimeContext two(2);
  CHECK(in_G_ua(UnimodularTransform::identity(3), {0, 1, 5}, two).in_G);
  auto low = in_G_ua(UnimodularTransform::validate(Matrix{{1, 0}, {1, 1}}, two), {0, 2}, two);
  CHECK(low.in_G);
  CHECK(low.lower);
  CHECK(low.unipotent_lower);
  CHECK_FALSE(low.upper);
  CHECK_FALSE(in_G_ua(UnimodularTransform::validate(Matrix{{1, 1}, {0, 1}}, two), {0, 2}, two).in_G);
  CHECK(in_G_ua(UnimodularTransform::validate(Matrix{{1, 2}, {0, 1}}, two), {0, 2}, two).upper);
}

TEST_CASE("form properties") {
  for (const char* name : {"transform_composition", "invariants_under_equivalence", "strict_implies_lax",
                           "gk_length_bound", "G_ua_preserves_optimality"})
    property(name);
}
