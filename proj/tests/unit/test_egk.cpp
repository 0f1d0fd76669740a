#include "support.hpp"

using namespace gk;
using namespace gk::test;

TEST_CASE("naive datum axioms") {
  CHECK(validate_naive({{0, 1}, {1, 0}}).ok());
  CHECK(validate_naive({{0, 0}, {1, 1}}).ok());
  CHECK_FALSE(validate_naive({{1, 0}, {1, 1}}).ok());
}

TEST_CASE("EGK datum axioms") {
  CHECK(validate_egk({{1, 1}, {0, 1}, {1, 0}}).ok());
  CHECK(validate_egk({{2}, {0}, {-1}}).ok());
  CHECK_FALSE(validate_egk({{1}, {0}, {-1}}).ok());
  CHECK_FALSE(validate_egk({{1, 1}, {1, 0}, {1, 0}}).ok());
}

TEST_CASE("upsilon and lift") {
  CHECK(upsilon({{0, 1}, {1, 0}}) == EGKDatum{{1, 1}, {0, 1}, {1, 0}});
  CHECK(upsilon({{0, 0}, {1, -1}}) == EGKDatum{{2}, {0}, {-1}});
  CHECK(upsilon({{3}, {1}}) == EGKDatum{{1}, {3}, {1}});
  CHECK(lift({{1, 1}, {0, 1}, {1, 0}}) == NaiveEGK{{0, 1}, {1, 0}});
  CHECK(lift({{2}, {0}, {1}}) == NaiveEGK{{0, 0}, {1, 1}});
  CHECK(lift({{3}, {0}, {1}}) == NaiveEGK{{0, 0, 0}, {1, 1, 1}});
  CHECK(lift({{3}, {1}, {1}}) == NaiveEGK{{1, 1, 1}, {1, 1, 1}});
  CHECK_THROWS_AS(lift({{1}, {0}, {-1}}), InvalidInput);
}

TEST_CASE("non-dyadic synthesis") {
  PrimeContext three(3);
  CHECK(synthesize_nondyadic({{0, 1}, {1, 0}}, three) == diag(3, {1, 3}));
  HalfIntegralForm t = synthesize_nondyadic({{0, 0}, {1, -1}}, three);
  CHECK(t(0, 1) == 0);
  CHECK(valuation(t(1, 1), three) == 0);
  CHECK(xi(t) == -1);
  CHECK(synthesize_nondyadic({{2}, {1}}, PrimeContext(5)) == diag(5, {25}));
  CHECK_THROWS_AS(synthesize_nondyadic({{0}, {1}}, PrimeContext(2)), InvalidInput);
}

TEST_CASE("dyadic synthesis") {
  PrimeContext two(2);
  HalfIntegralForm h = synthesize_reduced({{2}, {0}, {1}}, std::nullopt, two);
  CHECK(xi(h) == 1);
  CHECK(egk_of(h) == EGKDatum{{2}, {0}, {1}});
  CHECK(synthesize_reduced({{1, 1}, {0, 1}, {1, 0}}, std::nullopt, two) == diag(2, {1, 2}));
  CHECK(synthesize_reduced({{1}, {4}, {1}}, std::nullopt, two) == diag(2, {16}));
  EGKDatum g{{1, 2}, {0, 2}, {1, 1}};
  for (const Involution& s : standard_involutions(g.exponents())) {
    HalfIntegralForm b = synthesize_reduced(g, s, two);
    CHECK(is_reduced(b, GKType{g.exponents(), s}));
    CHECK(egk_of(b) == g);
  }
  CHECK_THROWS_AS(synthesize_reduced({{1}, {0}, {-1}}, std::nullopt, two), InvalidInput);
  CHECK_THROWS_AS(synthesize_reduced({{2}, {0}, {1}}, Involution::identity(2), two), InvalidInput);
}

TEST_CASE("EGK properties") {
  for (const char* name : {"upsilon_lift_identity", "synthesis_round_trip"}) property(name);
}
