#include "gk/oracle.hpp"

#include <algorithm>
#include <random>

namespace gk {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Arithmetic in Z/p^N with the order of an element capped at N.
struct Residues {
  long p;
  int N;
  u64 M;

  Residues(long p_, int N_) : p(p_), N(N_), M(1) {
    for (int i = 0; i < N; ++i) {
      if (M > (u64(1) << 62) / static_cast<u64>(p)) throw InvalidInput("precision", "p^N exceeds 2^62");
      M *= static_cast<u64>(p);
    }
  }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % M); }
  u64 add(u64 a, u64 b) const { return (a + b) % M; }
  int ord(u64 a) const {
    if (a == 0) return N;
    int v = 0;
    while (a % static_cast<u64>(p) == 0) {
      a /= static_cast<u64>(p);
      ++v;
    }
    return v;
  }
  // Image of a p-integral rational.
  u64 of(const Rational& x, const PrimeContext& ctx) const {
    if (x == 0) return 0;
    long v = valuation(x, ctx).value();
    if (v < 0) throw InvalidInput("not_integral", "residue of a non-integral value");
    if (v >= N) return 0;
    u64 pv = 1;
    for (long i = 0; i < v; ++i) pv *= static_cast<u64>(p);
    return mul(pv, static_cast<u64>(residue_mod(unit_part(x, ctx), static_cast<long>(M))));
  }
};

// Form stored as residues of b_ii and 2 b_ij.
struct ResidueForm {
  std::size_t n;
  std::vector<u64> e;  // e[i*n+j]: b_ii on the diagonal, 2 b_ij off it
  u64 at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
};

ResidueForm residue_form(const HalfIntegralForm& b, const Residues& R) {
  ResidueForm f{b.size(), std::vector<u64>(b.size() * b.size())};
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.n; ++j)
      f.e[i * f.n + j] = R.of(i == j ? b(i, i) : Rational(2 * b(i, j)), b.ctx());
  return f;
}

ResidueForm transform_residues(const ResidueForm& f, const std::vector<u64>& U, const Residues& R) {
  std::size_t n = f.n;
  ResidueForm g{n, std::vector<u64>(n * n)};
  auto u = [&](std::size_t k, std::size_t i) { return U[k * n + i]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      u64 s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        u64 d = R.mul(f.at(k, k), R.mul(u(k, i), u(k, j)));
        s = R.add(s, i == j ? d : R.add(d, d));
        for (std::size_t l = k + 1; l < n; ++l) {
          u64 c = i == j ? R.mul(u(k, i), u(l, i)) : R.add(R.mul(u(k, i), u(l, j)), R.mul(u(l, i), u(k, j)));
          s = R.add(s, R.mul(f.at(k, l), c));
        }
      }
      g.e[i * n + j] = g.e[j * n + i] = s;
    }
  return g;
}

std::vector<int> greatest_residue(const ResidueForm& f, const Residues& R) {
  std::size_t n = f.n;
  std::vector<int> a;
  for (std::size_t k = 0; k < n; ++k) {
    int y = R.N;
    for (std::size_t j = k; j < n; ++j) {
      y = std::min(y, R.ord(f.at(j, j)));
      for (std::size_t i = 0; i < k; ++i) y = std::min(y, 2 * R.ord(f.at(i, j)) - a[i]);
      for (std::size_t i = k; i < j; ++i) y = std::min(y, R.ord(f.at(i, j)));
    }
    a.push_back(y);
  }
  return a;
}

int precision_for(const HalfIntegralForm& b, int requested) {
  if (requested > 0) return requested;
  Rational d = b.det();
  for (std::size_t i = 0; i < b.size(); ++i) d *= 2;
  return static_cast<int>(valuation(d, b.ctx()).value()) + 2 * b.ctx().e() + 4;
}

}  // namespace

ExponentSeq gk_lower_search(const HalfIntegralForm& b, const SearchBudget& budget) {
  if (b.degenerate()) throw InvalidInput("degenerate", "form is degenerate");
  std::size_t n = b.size();
  Residues R(b.ctx().p(), precision_for(b, budget.residue_precision));
  ResidueForm f = residue_form(b, R);
  std::vector<int> best = greatest_residue(f, R);
  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<u64> coeff(0, R.M - 1);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> op(0, 2);
  u64 p = static_cast<u64>(R.p);
  for (long t = 1; t < budget.max_transforms; ++t) {
    std::vector<u64> U(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) U[i * n + i] = 1;
    for (std::size_t step = 0; step < 3 * n && n > 1; ++step) {
      std::size_t i = idx(rng), j = idx(rng);
      if (i == j) continue;
      switch (op(rng)) {
        case 0:  // swap columns
          for (std::size_t k = 0; k < n; ++k) std::swap(U[k * n + i], U[k * n + j]);
          break;
        case 1: {  // scale a column by a unit
          u64 s = coeff(rng);
          if (s % p == 0) s = R.add(s, 1);
          for (std::size_t k = 0; k < n; ++k) U[k * n + i] = R.mul(U[k * n + i], s);
          break;
        }
        default: {  // col_j += x col_i
          u64 x = coeff(rng);
          for (std::size_t k = 0; k < n; ++k) U[k * n + j] = R.add(U[k * n + j], R.mul(x, U[k * n + i]));
        }
      }
    }
    std::vector<int> a = greatest_residue(transform_residues(f, U, R), R);
    if (a > best) best = a;
  }
  return ExponentSeq(best);
}

ExponentSeq exhaustive_gk_binary(const HalfIntegralForm& b, int N) {
  if (b.size() != 2) throw InvalidInput("shape", "binary form expected");
  if (b.degenerate()) throw InvalidInput("degenerate", "form is degenerate");
  const PrimeContext& ctx = b.ctx();
  Residues R(ctx.p(), precision_for(b, N));
  u64 b11 = R.of(b(0, 0), ctx), b22 = R.of(b(1, 1), ctx), c12 = R.of(Rational(2 * b(0, 1)), ctx);
  u64 two = R.of(Rational(2), ctx);
  int a1 = std::min({R.ord(b11), R.ord(b22), R.ord(c12)});
  int a2 = a1;
  // Second basis vector v = (x, y) runs over P^1(Z/p^N); c completes it to a basis.
  auto consider = [&](u64 x, u64 y, u64 c1, u64 c2) {
    u64 q = R.add(R.add(R.mul(b11, R.mul(x, x)), R.mul(c12, R.mul(x, y))), R.mul(b22, R.mul(y, y)));
    u64 alpha = R.add(R.add(R.mul(R.mul(two, b11), R.mul(c1, x)), R.mul(c12, R.add(R.mul(c1, y), R.mul(c2, x)))),
                      R.mul(R.mul(two, b22), R.mul(c2, y)));
    int oq = R.ord(q), oa = R.ord(alpha), ob = std::min(R.N, oq + ctx.e());
    int yv = oa < ob ? std::min(oq, 2 * oa - a1) : oq;
    a2 = std::max(a2, yv);
  };
  for (u64 y = 0; y < R.M; ++y) consider(1, y, 0, 1);
  u64 p = static_cast<u64>(R.p);
  for (u64 x = 0; x < R.M; x += p) consider(x, 1, 1, 0);
  return ExponentSeq{a1, a2};
}

int hilbert_brute(const Rational& a, const Rational& b, const PrimeContext& ctx, int N) {
  if (a == 0 || b == 0) throw InvalidInput("zero_input", "Hilbert symbol of zero");
  if (N <= 0) N = ctx.dyadic() ? 8 : 4;
  Residues R(ctx.p(), N);
  // Scale by even powers of p so both valuations are 0 or 1.
  auto normalize = [&](const Rational& x) {
    long v = valuation(x, ctx).value();
    return R.of(x * pow_p(ctx, -2 * (v >= 0 ? v / 2 : (v - 1) / 2)), ctx);
  };
  u64 ra = normalize(a), rb = normalize(b);
  std::vector<bool> square(R.M, false);
  for (u64 z = 0; z < R.M; ++z) square[R.mul(z, z)] = true;
  u64 p = static_cast<u64>(R.p);
  for (u64 x = 0; x < R.M; ++x) {
    u64 ax = R.mul(ra, R.mul(x, x));
    for (u64 y = 0; y < R.M; ++y) {
      if (x % p == 0 && y % p == 0) continue;
      if (square[R.add(ax, R.mul(rb, R.mul(y, y)))]) return 1;
    }
  }
  return -1;
}

}  // namespace gk
