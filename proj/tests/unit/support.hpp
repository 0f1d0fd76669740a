#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "gk/invariants.hpp"
#include "gk/selftest.hpp"

namespace gk::test {

// Form from rational strings, e.g. F(2, {{"1", "1/2"}, {"1/2", "3"}}).
inline HalfIntegralForm F(long p, const std::vector<std::vector<std::string>>& rows) {
  Matrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(i, j) = Rational(rows[i][j]);
      m(i, j).canonicalize();
    }
  return HalfIntegralForm::validate(m, PrimeContext(p));
}

inline HalfIntegralForm diag(long p, const std::vector<long>& d) {
  std::vector<Rational> v;
  for (long x : d) v.emplace_back(x);
  return HalfIntegralForm::validate(Matrix::diagonal(v), PrimeContext(p));
}

inline HalfIntegralForm H(long p) { return F(p, {{"0", "1/2"}, {"1/2", "0"}}); }
inline HalfIntegralForm Y() { return F(2, {{"1", "1/2"}, {"1/2", "1"}}); }

inline Rational Q(const char* s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

inline void property(const std::string& name, int trials = 150) {
  CheckResult r = run_check(name, trials, 20261015);
  INFO(name << ": " << r.first_failure);
  CHECK(r.cases > 0);
  CHECK(r.failures == 0);
}

}  // namespace gk::test
