#include "gk/random.hpp"

#include <algorithm>

namespace gk {

namespace {

long ipow(long p, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long random_unit(const PrimeContext& ctx, Rng& rng, long bound) {
  for (;;) {
    long u = uniform(rng, -bound, bound);
    if (u % ctx.p() != 0) return u;
  }
}

}  // namespace

HalfIntegralForm random_form(std::size_t n, const PrimeContext& ctx, Rng& rng, int k) {
  long h = ipow(ctx.p(), k);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        long v = uniform(rng, -h, h);
        if (i == j && ctx.dyadic()) v &= ~1L;
        m(i, j) = m(j, i) = Rational(Integer(v), Integer(2));
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j).canonicalize();
    HalfIntegralForm f = HalfIntegralForm::validate(m, ctx);
    if (!f.degenerate()) return f;
  }
}

HalfIntegralForm random_primitive_binary(const PrimeContext& ctx, Rng& rng, int k) {
  for (;;) {
    HalfIntegralForm f = random_form(2, ctx, rng, k);
    if (norm_ideal_ord(f) == 0) return f;
  }
}

UnimodularTransform random_unimodular(std::size_t n, const PrimeContext& ctx, Rng& rng, int k) {
  Matrix U = Matrix::identity(n);
  long h = ipow(ctx.p(), k);
  for (std::size_t step = 0; step < 3 * n + 2 && n > 1; ++step) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (i == j) continue;
    switch (uniform(rng, 0, 2)) {
      case 0: U.swap_cols(i, j); break;
      case 1: {
        Rational s(random_unit(ctx, rng, h));
        for (std::size_t r = 0; r < n; ++r) U(r, i) *= s;
        break;
      }
      default: {
        Rational x(uniform(rng, -h, h));
        for (std::size_t r = 0; r < n; ++r) U(r, j) += x * U(r, i);
      }
    }
  }
  if (n == 1) U(0, 0) = random_unit(ctx, rng, h);
  return UnimodularTransform::validate(U, ctx);
}

namespace {

UnimodularTransform random_structured(const ExponentSeq& ua, const PrimeContext& ctx, Rng& rng, int k, bool lower_only) {
  std::size_t n = ua.size();
  Matrix U = Matrix::identity(n);
  long h = ipow(ctx.p(), k);
  for (std::size_t step = 0; step < 3 * n + 2; ++step) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    long kind = lower_only ? 2 : uniform(rng, 0, 2);
    if (kind == 0 && ua[i] == ua[j]) {
      U.swap_cols(i, j);
    } else if (kind == 1) {
      Rational s(random_unit(ctx, rng, h));
      for (std::size_t r = 0; r < n; ++r) U(r, i) *= s;
    } else if (i != j) {
      // col_j += x col_i puts x at position (i, j).
      if (lower_only && ua[i] <= ua[j]) continue;
      Rational x(uniform(rng, -h, h));
      if (ua[i] < ua[j]) x *= pow_p(ctx, (ua[j] - ua[i] + 1) / 2);
      for (std::size_t r = 0; r < n; ++r) U(r, j) += x * U(r, i);
    }
  }
  return UnimodularTransform::validate(U, ctx);
}

}  // namespace

UnimodularTransform random_in_G_ua(const ExponentSeq& ua, const PrimeContext& ctx, Rng& rng, int k) {
  return random_structured(ua, ctx, rng, k, false);
}

UnimodularTransform random_in_N_lower(const ExponentSeq& ua, const PrimeContext& ctx, Rng& rng, int k) {
  return random_structured(ua, ctx, rng, k, true);
}

EGKDatum random_egk(std::size_t n, int max_m, Rng& rng) {
  for (;;) {
    long rmax = std::min<long>(static_cast<long>(n), max_m + 1);
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, rmax));
    std::vector<int> cuts;
    for (std::size_t i = 1; i < n; ++i) cuts.push_back(static_cast<int>(i));
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(r - 1);
    cuts.push_back(0);
    cuts.push_back(static_cast<int>(n));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> vals;
    for (int v = 0; v <= max_m; ++v) vals.push_back(v);
    std::shuffle(vals.begin(), vals.end(), rng);
    vals.resize(r);
    std::sort(vals.begin(), vals.end());
    EGKDatum g;
    for (std::size_t s = 0; s < r; ++s) {
      g.n.push_back(cuts[s + 1] - cuts[s]);
      g.m.push_back(vals[s]);
      g.zeta.push_back(0);
    }
    // Fill signs left to right, taking forced values when the axioms impose one.
    for (std::size_t s = 0; s < r; ++s) {
      int pick = uniform(rng, 0, 1) ? 1 : -1;
      bool set = false;
      for (int z : {pick, -pick, 0}) {
        EGKDatum t = g;
        t.n.resize(s + 1);
        t.m.resize(s + 1);
        t.zeta.resize(s + 1);
        t.zeta[s] = z;
        if (validate_egk(t).ok()) {
          g.zeta[s] = z;
          set = true;
          break;
        }
      }
      if (!set) break;
    }
    if (validate_egk(g).ok()) return g;
  }
}

Rational random_nonzero_rational(const PrimeContext& ctx, Rng& rng, int k) {
  long h = ipow(ctx.p(), k);
  for (;;) {
    long num = uniform(rng, -h * h, h * h), den = uniform(rng, 1, h);
    if (num == 0) continue;
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
  }
}

}  // namespace gk
