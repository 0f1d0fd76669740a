#pragma once

#include <cstdint>

#include "gk/qform.hpp"

namespace gk {

// Independent lower/exact bounds for GK computed without the reducer.

struct SearchBudget {
  long max_transforms = 10000;
  std::uint64_t seed = 1;
  int residue_precision = 0;  // 0: chosen from delta
};

// Lexicographic max of the greatest element of S(B[U]) over random unimodular U; always <= GK(B).
ExponentSeq gk_lower_search(const HalfIntegralForm& b, const SearchBudget& budget);

// Exact GK of a binary form by scanning every second basis vector mod p^N (N = 0: from delta).
ExponentSeq exhaustive_gk_binary(const HalfIntegralForm& b, int N = 0);

// Hilbert symbol from solvability of z^2 = a x^2 + b y^2 modulo p^N (N = 0: 8 for p = 2, 4 otherwise).
int hilbert_brute(const Rational& a, const Rational& b, const PrimeContext& ctx, int N = 0);

}  // namespace gk
