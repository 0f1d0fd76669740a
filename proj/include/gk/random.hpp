#pragma once

#include <random>

#include "gk/egk.hpp"
#include "gk/involutions.hpp"
#include "gk/qform.hpp"

namespace gk {

using Rng = std::mt19937_64;

// 2 b_ij uniform in [-p^k, p^k] (diagonal 2 b_ii even when p = 2), resampled until det != 0.
HalfIntegralForm random_form(std::size_t n, const PrimeContext& ctx, Rng& rng, int k = 4);
// Binary form with norm ideal Z_p.
HalfIntegralForm random_primitive_binary(const PrimeContext& ctx, Rng& rng, int k = 4);

// Product of swaps, unit scalings and integer shears.
UnimodularTransform random_unimodular(std::size_t n, const PrimeContext& ctx, Rng& rng, int k = 3);
// Random element of G_ua (products of generators respecting the order bounds).
UnimodularTransform random_in_G_ua(const ExponentSeq& ua, const PrimeContext& ctx, Rng& rng, int k = 3);
// Random element of N_ua^down: identity on blocks, arbitrary below, zero above.
UnimodularTransform random_in_N_lower(const ExponentSeq& ua, const PrimeContext& ctx, Rng& rng, int k = 3);

// Random valid EGK datum of length n with exponents in [0, max_m].
EGKDatum random_egk(std::size_t n, int max_m, Rng& rng);

Rational random_nonzero_rational(const PrimeContext& ctx, Rng& rng, int k = 3);

}  // namespace gk
