#include "gk/oracle.hpp"
#include "support.hpp"

using namespace gk;
using namespace gk::test;

namespace {

// Square test by search: y^2 = x mod p^k for the unit part, after checking the valuation is even.
bool square_by_search(long x, long p) {
  long v = 0;
  while (x % p == 0) x /= p, ++v;
  if (v % 2) return false;
  long mod = p == 2 ? 64 : p * p * p;
  long r = ((x % mod) + mod) % mod;
  for (long y = 0; y < mod; ++y)
    if (y * y % mod == r) return true;
  return false;
}

}  // namespace

TEST_CASE("valuation") {
  PrimeContext two(2), five(5);
  CHECK(valuation(Rational(12), two) == 2);
  CHECK(valuation(Q("3/4"), two) == -2);
  CHECK(valuation(Rational(0), five).is_infinite());
  CHECK(valuation(Q("-50/3"), five) == 2);
  CHECK(unit_part(Q("3/4"), two) == 3);
}

TEST_CASE("prime context") {
  CHECK_THROWS_AS(PrimeContext(9), InvalidInput);
  CHECK_THROWS_AS(PrimeContext(1), InvalidInput);
  CHECK(PrimeContext(2).e() == 1);
  CHECK(PrimeContext(7).e() == 0);
  CHECK(PrimeContext(7).nonresidue() == 3);
}

TEST_CASE("is_square") {
  PrimeContext two(2);
  CHECK(is_square(Rational(9), two));
  CHECK_FALSE(is_square(Rational(5), two));
  CHECK(is_square(Rational(1), PrimeContext(7)));
  CHECK(is_square(Q("1/4"), two));
  for (long p : {2L, 3L, 5L, 7L})
    for (long x = 1; x < 200; ++x) {
      INFO("p=" << p << " x=" << x);
      CHECK(is_square(Rational(x), PrimeContext(p)) == square_by_search(x, p));
      CHECK(is_square(Rational(-x), PrimeContext(p)) == square_by_search(-x, p));
    }
}

TEST_CASE("hilbert symbol examples") {
  PrimeContext two(2), three(3);
  for (long b : {2L, 3L, -7L, 10L}) CHECK(hilbert_symbol(Rational(1), Rational(b), two) == 1);
  CHECK(hilbert_symbol(Rational(-1), Rational(-1), two) == -1);
  CHECK(hilbert_symbol(Rational(3), Rational(2), three) == -1);
  CHECK(hilbert_symbol(Rational(5), Rational(2), PrimeContext(5)) == -1);
  CHECK_THROWS_AS(hilbert_symbol(Rational(0), Rational(1), two), InvalidInput);
}

TEST_CASE("hilbert symbol matches solvability search on square classes") {
  for (long p : {2L, 3L, 5L}) {
    PrimeContext ctx(p);
    auto reps = square_class_representatives(ctx);
    CHECK(reps.size() == (p == 2 ? 8u : 4u));
    for (const Rational& a : reps)
      for (const Rational& b : reps) {
        INFO("p=" << p << " a=" << a.get_str() << " b=" << b.get_str());
        CHECK(hilbert_symbol(a, b, ctx) == hilbert_brute(a, b, ctx));
      }
  }
}

TEST_CASE("quadratic extensions") {
  PrimeContext two(2);
  CHECK(quad_ext(Rational(5), two) == QuadExtKind{ExtKind::inert, 0});
  CHECK(quad_ext(Rational(3), two) == QuadExtKind{ExtKind::ramified, 2});
  CHECK(quad_ext(Rational(3), PrimeContext(3)) == QuadExtKind{ExtKind::ramified, 1});
  CHECK(quad_ext(Rational(2), two) == QuadExtKind{ExtKind::ramified, 3});
  CHECK(quad_ext(Rational(17), two) == QuadExtKind{ExtKind::split, 0});
  CHECK(xi_code(Rational(1), two) == 1);
  CHECK(xi_code(Rational(5), two) == -1);
  CHECK(xi_code(Rational(2), two) == 0);
  CHECK_THROWS_AS(xi_code(Rational(0), two), InvalidInput);
}

TEST_CASE("p-adic properties") {
  for (const char* name : {"hilbert_symmetric", "hilbert_bimultiplicative", "hilbert_a_minus_a",
                           "hilbert_square_class_invariant", "hilbert_matches_brute", "quad_ext_consistent"})
    property(name, 300);
}
