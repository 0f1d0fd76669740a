#include "gk/padic.hpp"

namespace gk {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int legendre_unit(const Rational& u, long p) {
  Integer pp(p);
  int a = mpz_legendre(u.get_num_mpz_t(), pp.get_mpz_t());
  int b = mpz_legendre(u.get_den_mpz_t(), pp.get_mpz_t());
  return a * b;
}

}  // namespace

PrimeContext::PrimeContext(long p) : p_(p), nonresidue_(5) {
  if (!is_prime(p)) throw InvalidInput("bad_prime", std::to_string(p) + " is not prime");
  if (p != 2) {
    for (long u = 2;; ++u) {
      Integer base(u), ex((p - 1) / 2), mod(p), r;
      mpz_powm(r.get_mpz_t(), base.get_mpz_t(), ex.get_mpz_t(), mod.get_mpz_t());
      if (r != 1) {
        nonresidue_ = u;
        break;
      }
    }
  }
}

Ord valuation(const Integer& x, const PrimeContext& ctx) {
  if (x == 0) return Ord::infinity();
  Integer pp(ctx.p()), t = x;
  long v = 0;
  if (ctx.p() == 2) return Ord(static_cast<long>(mpz_scan1(x.get_mpz_t(), 0)));
  while (mpz_divisible_p(t.get_mpz_t(), pp.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t());
    ++v;
  }
  return Ord(v);
}

Ord valuation(const Rational& x, const PrimeContext& ctx) {
  if (x == 0) return Ord::infinity();
  return Ord(valuation(Integer(x.get_num()), ctx).value() - valuation(Integer(x.get_den()), ctx).value());
}

Rational pow_p(const PrimeContext& ctx, long k) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(ctx.p()), static_cast<unsigned long>(k < 0 ? -k : k));
  Rational r(q);
  if (k < 0) r = 1 / r;
  return r;
}

Rational unit_part(const Rational& x, const PrimeContext& ctx) {
  if (x == 0) throw InvalidInput("zero_input", "unit part of zero");
  Rational u = x / pow_p(ctx, valuation(x, ctx).value());
  u.canonicalize();
  return u;
}

long residue_mod(const Rational& unit, long m) {
  Integer mod(m), inv, num = unit.get_num(), den = unit.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw InternalFailure("residue_mod: denominator not invertible");
  Integer r = num * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r.get_si();
}

bool is_integral(const Rational& x, const PrimeContext& ctx) { return valuation(x, ctx) >= 0; }

bool is_unit(const Rational& x, const PrimeContext& ctx) { return x != 0 && valuation(x, ctx) == 0; }

bool is_square(const Rational& x, const PrimeContext& ctx) {
  if (x == 0) throw InvalidInput("zero_input", "is_square of zero");
  if (valuation(x, ctx).value() % 2 != 0) return false;
  Rational u = unit_part(x, ctx);
  if (ctx.dyadic()) return residue_mod(u, 8) == 1;
  return legendre_unit(u, ctx.p()) == 1;
}

int hilbert_symbol(const Rational& a, const Rational& b, const PrimeContext& ctx) {
  if (a == 0 || b == 0) throw InvalidInput("zero_input", "Hilbert symbol of zero");
  long alpha = valuation(a, ctx).value(), beta = valuation(b, ctx).value();
  Rational u = unit_part(a, ctx), v = unit_part(b, ctx);
  if (!ctx.dyadic()) {
    int s = 1;
    if ((alpha & 1) && (beta & 1) && ((ctx.p() - 1) / 2) % 2 == 1) s = -s;
    if (beta & 1) s *= legendre_unit(u, ctx.p());
    if (alpha & 1) s *= legendre_unit(v, ctx.p());
    return s;
  }
  long u8 = residue_mod(u, 8), v8 = residue_mod(v, 8);
  auto eps = [](long w) { return ((w - 1) / 2) & 1; };
  auto omega = [](long w) { return ((w * w - 1) / 8) & 1; };
  long t = eps(u8) * eps(v8) + (alpha & 1) * omega(v8) + (beta & 1) * omega(u8);
  return (t & 1) ? -1 : 1;
}

const char* to_string(ExtKind k) {
  switch (k) {
    case ExtKind::split: return "split";
    case ExtKind::inert: return "inert";
    case ExtKind::ramified: return "ramified";
  }
  return "?";
}

QuadExtKind quad_ext(const Rational& xi, const PrimeContext& ctx) {
  if (xi == 0) throw InvalidInput("zero_input", "quadratic extension of zero");
  if (is_square(xi, ctx)) return {ExtKind::split, 0};
  bool odd = valuation(xi, ctx).value() % 2 != 0;
  if (!ctx.dyadic()) return odd ? QuadExtKind{ExtKind::ramified, 1} : QuadExtKind{ExtKind::inert, 0};
  if (odd) return {ExtKind::ramified, 3};
  long u8 = residue_mod(unit_part(xi, ctx), 8);
  if (u8 % 4 == 1) return {ExtKind::inert, 0};
  return {ExtKind::ramified, 2};
}

int xi_code(const Rational& xi, const PrimeContext& ctx) {
  switch (quad_ext(xi, ctx).kind) {
    case ExtKind::split: return 1;
    case ExtKind::inert: return -1;
    case ExtKind::ramified: return 0;
  }
  return 0;
}

std::vector<Rational> square_class_representatives(const PrimeContext& ctx) {
  if (ctx.dyadic()) return {1, -1, 2, -2, 5, -5, 10, -10};
  Rational p(ctx.p()), u(ctx.nonresidue());
  return {1, u, p, u * p};
}

}  // namespace gk
