#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gk/involutions.hpp"
#include "gk/qform.hpp"

namespace gk {

struct NaiveEGK {
  std::vector<int> a;
  std::vector<int> eps;
  bool operator==(const NaiveEGK&) const = default;
};

struct EGKDatum {
  std::vector<int> n;
  std::vector<int> m;
  std::vector<int> zeta;
  bool operator==(const EGKDatum&) const = default;
  std::size_t total() const;
  ExponentSeq exponents() const;
  std::string str() const;
};

struct Validation {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

Validation validate_naive(const NaiveEGK& h);
Validation validate_egk(const EGKDatum& g);

EGKDatum upsilon(const NaiveEGK& h);
NaiveEGK lift(const EGKDatum& g);

// Diagonal form realizing a naive datum over an odd prime.
HalfIntegralForm synthesize_nondyadic(const NaiveEGK& h, const PrimeContext& ctx);
// Naive datum of a diagonal form: (ord t_i, xi or eta of the leading blocks).
NaiveEGK naive_of_diagonal(const HalfIntegralForm& t);

// Reduced dyadic form of GK type (ua, sigma) with the given EGK datum.
HalfIntegralForm synthesize_reduced(const EGKDatum& g, const std::optional<Involution>& sigma,
                                    const PrimeContext& ctx);

}  // namespace gk
