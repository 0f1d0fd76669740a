#include "gk/invariants.hpp"

namespace gk {

ExponentSeq gk(const HalfIntegralForm& b, const ReduceOptions& opt) {
  ReductionCertificate c = reduce(b, opt);
  if (static_cast<long>(c.type.ua.sum()) != delta(b))
    throw InternalFailure("GK length " + std::to_string(c.type.ua.sum()) + " differs from delta " +
                          std::to_string(delta(b)));
  return c.type.ua;
}

int xi(const HalfIntegralForm& b) {
  if (b.degenerate()) throw InvalidInput("degenerate", "xi of a degenerate form");
  return xi_code(disc_D(b), b.ctx());
}

std::vector<Rational> field_diagonalization(const HalfIntegralForm& b) {
  std::size_t n = b.size();
  Matrix M = b.matrix();
  auto add = [&](std::size_t j, std::size_t i, const Rational& x) {  // e_j += x e_i
    for (std::size_t k = 0; k < n; ++k) M(j, k) += x * M(i, k);
    for (std::size_t k = 0; k < n; ++k) M(k, j) += x * M(k, i);
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (M(s, s) == 0) {
      std::size_t j = s + 1;
      while (j < n && M(j, j) == 0) ++j;
      if (j < n) {
        M.swap_rows(s, j);
        M.swap_cols(s, j);
      } else {
        j = s + 1;
        while (j < n && M(s, j) == 0) ++j;
        if (j == n) throw InvalidInput("degenerate", "form is degenerate");
        add(s, j, 1);
      }
    }
    for (std::size_t j = s + 1; j < n; ++j)
      if (M(s, j) != 0) add(j, s, -M(s, j) / M(s, s));
  }
  std::vector<Rational> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = M(i, i);
  return d;
}

int eta(const HalfIntegralForm& b) {
  const PrimeContext& ctx = b.ctx();
  std::size_t n = b.size();
  if (n == 0) return 1;
  std::vector<Rational> d = field_diagonalization(b);
  int r = 1;
  if (((n + 1) / 4) % 2 == 1) r *= hilbert_symbol(-1, -1, ctx);
  if (((n - 1) / 2) % 2 == 1) r *= hilbert_symbol(-1, b.det(), ctx);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) r *= hilbert_symbol(d[i], d[j], ctx);
  return r;
}

BinaryClass classify_binary(const HalfIntegralForm& b) {
  if (b.size() != 2) throw InvalidInput("shape", "binary form expected");
  if (b.degenerate()) throw InvalidInput("degenerate", "form is degenerate");
  const PrimeContext& ctx = b.ctx();
  BinaryClass c;
  c.scale = static_cast<int>(norm_ideal_ord(b).value());
  HalfIntegralForm prim = scale(b, pow_p(ctx, -c.scale));
  Rational D = disc_D(prim);
  c.ext = quad_ext(D, ctx);
  long o = valuation(D, ctx).value();
  c.f = static_cast<int>((o - c.ext.d) / 2);
  c.decomposable = o >= 2 * ctx.e();
  int second = c.ext.kind == ExtKind::ramified ? 2 * c.f + 1 : 2 * c.f;
  c.predicted = ExponentSeq{c.scale, c.scale + second};
  return c;
}

ExponentSeq binary_gk(const Rational& b11, const Rational& b12, const Rational& b22, const PrimeContext& ctx) {
  return classify_binary(HalfIntegralForm::validate(Matrix{{b11, b12}, {b12, b22}}, ctx)).predicted;
}

bool is_optimal_binary(const HalfIntegralForm& b, const ExponentSeq& ua) {
  if (!b.ctx().dyadic()) throw InvalidInput("not_dyadic", "criterion is for p = 2");
  if (b.size() != 2 || ua.size() != 2 || ua[0] > ua[1]) throw InvalidInput("shape", "binary form and a1 <= a2 expected");
  if (!membership(b, ua)) return false;
  const PrimeContext& ctx = b.ctx();
  Ord o11 = valuation(b(0, 0), ctx), o22 = valuation(b(1, 1), ctx), o12 = valuation(Rational(2 * b(0, 1)), ctx);
  int a1 = ua[0], a2 = ua[1];
  if (a1 == a2) return o12 == a1;
  if ((a2 - a1) % 2 == 0) return o11 == a1 && o12 == a1 + (a2 - a1) / 2;
  return o11 == a1 && o22 == a2;
}

EGKDatum egk_of_reduced(const HalfIntegralForm& r, const ExponentSeq& ua) {
  BlockStructure bs = blocks(ua);
  EGKDatum g;
  for (std::size_t s = 0; s < bs.count(); ++s) {
    std::size_t k = static_cast<std::size_t>(bs.ends[s]);
    HalfIntegralForm lead = leading(r, k);
    g.n.push_back(bs.sizes[s]);
    g.m.push_back(bs.values[s]);
    g.zeta.push_back(k % 2 == 0 ? xi(lead) : eta(lead));
  }
  return g;
}

EGKDatum egk_of(const HalfIntegralForm& b, const ReduceOptions& opt) {
  ReductionCertificate c = reduce(b, opt);
  EGKDatum g = egk_of_reduced(c.R, c.type.ua);
  Validation v = validate_egk(g);
  if (!v.ok()) throw InternalFailure("EGK datum " + g.str() + " violates " + v.violations.front());
  return g;
}

bool check_inverse_bounds(const HalfIntegralForm& b, const GKType& t) {
  const PrimeContext& ctx = b.ctx();
  std::size_t n = b.size();
  if (!ctx.dyadic()) throw InvalidInput("not_dyadic", "bounds are for p = 2");
  if (n % 2 != 0) throw InvalidInput("odd_size", "n must be even");
  if (t.ua.sum() % 2 == 0) throw InvalidInput("even_weight", "|ua| must be odd");
  if (!is_reduced(b, t)) throw InvalidInput("not_reduced", "form is not reduced of the given type");
  long d = quad_ext(disc_D(b), ctx).d;
  long base = 2 * ctx.e() + 1 - d;
  Matrix inv = *b.matrix().inverse();
  auto fixed = [&](std::size_t i) { return t.sigma(i) == static_cast<int>(i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Ord o = valuation(inv(i, j), ctx);
      long a = t.ua[i], c = t.ua[j];
      if (i == j) {
        if (fixed(i) ? o != base - a : !(o > base - a)) return false;
      } else if (fixed(i) && fixed(j)) {
        if (!twice_at_least(o, base - a - c)) return false;
      } else if (!twice_above(o, base - a - c)) {
        return false;
      }
    }
  return true;
}

}  // namespace gk
