#include "gk/egk.hpp"

#include <sstream>

#include "gk/invariants.hpp"

namespace gk {

namespace {

// z^k with 0^0 = 1.
int zpow(int z, long k) {
  if (k == 0) return 1;
  if (z == 0) return 0;
  return (z == -1 && k % 2 != 0) ? -1 : 1;
}

bool even(long x) { return x % 2 == 0; }

std::string fmt(const char* rule, std::size_t i, const std::string& what) {
  return std::string(rule) + " at " + std::to_string(i + 1) + ": " + what;
}

// Sign forced on an odd-length prefix ending at block s (0-based), if the axioms force one.
std::optional<int> forced_odd_zeta(const EGKDatum& g, std::size_t s) {
  std::vector<long> nstar;
  long acc = 0;
  for (int x : g.n) nstar.push_back(acc += x);
  std::optional<std::size_t> t;
  for (std::size_t i = 0; i < s; ++i)
    if (!even(nstar[i])) t = i;
  if (!t) {
    int z = 1;
    for (std::size_t i = 0; i < s; ++i) z *= zpow(g.zeta[i], g.m[i] + g.m[i + 1]);
    return z;
  }
  long w = 0;
  for (std::size_t u = 0; u < s; ++u) w += static_cast<long>(g.m[u]) * g.n[u];
  w += static_cast<long>(g.m[s]) * (g.n[s] - 1);
  if (!even(w)) return std::nullopt;
  int z = g.zeta[*t];
  for (std::size_t i = *t + 1; i < s; ++i) z *= zpow(g.zeta[i], g.m[i] + g.m[i + 1]);
  return z;
}

}  // namespace

std::size_t EGKDatum::total() const {
  std::size_t t = 0;
  for (int x : n) t += static_cast<std::size_t>(x);
  return t;
}

ExponentSeq EGKDatum::exponents() const {
  std::vector<int> a;
  for (std::size_t s = 0; s < n.size(); ++s) a.insert(a.end(), static_cast<std::size_t>(n[s]), m[s]);
  return ExponentSeq(std::move(a));
}

std::string EGKDatum::str() const {
  std::ostringstream os;
  auto list = [&](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  };
  os << '(';
  list(n);
  os << ';';
  list(m);
  os << ';';
  list(zeta);
  os << ')';
  return os.str();
}

Validation validate_naive(const NaiveEGK& h) {
  Validation v;
  std::size_t n = h.a.size();
  if (h.eps.size() != n || n == 0) {
    v.violations.push_back("shape: a and eps must have the same positive length");
    return v;
  }
  long sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (h.a[i] < 0) v.violations.push_back(fmt("order", i, "negative exponent"));
    if (i > 0 && h.a[i] < h.a[i - 1]) v.violations.push_back(fmt("order", i, "exponents decrease"));
    if (h.eps[i] < -1 || h.eps[i] > 1) v.violations.push_back(fmt("range", i, "eps outside {-1,0,1}"));
    long prev = sum;
    sum += h.a[i];
    std::size_t k = i + 1;  // 1-based index
    if (even(static_cast<long>(k))) {
      if ((h.eps[i] != 0) != even(sum)) v.violations.push_back(fmt("parity", i, "eps vanishing does not match parity"));
    } else {
      if (h.eps[i] == 0) v.violations.push_back(fmt("sign", i, "eps must be nonzero"));
      if (k >= 3 && even(prev) && h.eps[i] != h.eps[i - 2] * zpow(h.eps[i - 1], h.a[i] + h.a[i - 1]))
        v.violations.push_back(fmt("recursion", i, "recursion fails"));
    }
  }
  if (h.eps[0] != 1) v.violations.push_back("first: eps_1 must be 1");
  return v;
}

Validation validate_egk(const EGKDatum& g) {
  Validation v;
  std::size_t r = g.n.size();
  if (g.m.size() != r || g.zeta.size() != r || r == 0) {
    v.violations.push_back("shape: n, m, zeta must have the same positive length");
    return v;
  }
  long nstar = 0, w = 0;
  for (std::size_t s = 0; s < r; ++s) {
    if (g.n[s] <= 0) v.violations.push_back(fmt("order", s, "block size must be positive"));
    if (g.m[s] < 0) v.violations.push_back(fmt("order", s, "negative exponent"));
    if (s > 0 && g.m[s] <= g.m[s - 1]) v.violations.push_back(fmt("order", s, "exponents must increase strictly"));
    if (g.zeta[s] < -1 || g.zeta[s] > 1) v.violations.push_back(fmt("range", s, "zeta outside {-1,0,1}"));
  }
  if (!v.ok()) return v;
  for (std::size_t s = 0; s < r; ++s) {
    nstar += g.n[s];
    w += static_cast<long>(g.m[s]) * g.n[s];
    if (even(nstar)) {
      if ((g.zeta[s] != 0) != even(w)) v.violations.push_back(fmt("parity", s, "zeta vanishing does not match parity"));
    } else {
      if (g.zeta[s] == 0) v.violations.push_back(fmt("sign", s, "zeta must be nonzero"));
      else if (auto f = forced_odd_zeta(g, s); f && *f != g.zeta[s])
        v.violations.push_back(fmt("recursion", s, "zeta differs from the forced value " + std::to_string(*f)));
    }
  }
  return v;
}

EGKDatum upsilon(const NaiveEGK& h) {
  Validation v = validate_naive(h);
  if (!v.ok()) throw InvalidInput("invalid_naive_egk", v.violations.front());
  BlockStructure b = blocks(ExponentSeq(h.a));
  EGKDatum g;
  for (std::size_t s = 0; s < b.count(); ++s) {
    g.n.push_back(b.sizes[s]);
    g.m.push_back(b.values[s]);
    g.zeta.push_back(h.eps[static_cast<std::size_t>(b.ends[s] - 1)]);
  }
  return g;
}

namespace {

NaiveEGK lift_rec(const EGKDatum& g) {
  std::size_t r = g.n.size();
  long n = static_cast<long>(g.total());
  if (n == 1) return {{g.m[0]}, {g.zeta[0]}};
  EGKDatum gp = g;
  if (g.n[r - 1] == 1) {
    gp.n.pop_back();
    gp.m.pop_back();
    gp.zeta.pop_back();
  } else {
    gp.n[r - 1] -= 1;
    long w = 0;
    for (std::size_t u = 0; u < r; ++u) w += static_cast<long>(g.m[u]) * g.n[u];
    long w_minus = w - g.m[r - 1];  // m_1 n_1 + ... + m_r (n_r - 1)
    int z = 1;
    if (!even(n) && !even(w_minus)) {
      z = 0;
    } else if (even(n) && even(w)) {
      // Length n-1 is odd, so the shortened last block may carry a forced sign.
      if (auto f = forced_odd_zeta(gp, r - 1)) z = *f;
    }
    gp.zeta[r - 1] = z;
  }
  NaiveEGK h = lift_rec(gp);
  h.a.push_back(g.m[r - 1]);
  h.eps.push_back(g.zeta[r - 1]);
  return h;
}

}  // namespace

NaiveEGK lift(const EGKDatum& g) {
  Validation v = validate_egk(g);
  if (!v.ok()) throw InvalidInput("invalid_egk", v.violations.front());
  NaiveEGK h = lift_rec(g);
  Validation hv = validate_naive(h);
  if (!hv.ok()) throw InternalFailure("lift produced an invalid naive datum: " + hv.violations.front());
  return h;
}

NaiveEGK naive_of_diagonal(const HalfIntegralForm& t) {
  NaiveEGK h;
  for (std::size_t i = 0; i < t.size(); ++i) {
    h.a.push_back(static_cast<int>(valuation(t(i, i), t.ctx()).value()));
    HalfIntegralForm lead = leading(t, i + 1);
    h.eps.push_back((i + 1) % 2 == 0 ? xi(lead) : eta(lead));
  }
  return h;
}

HalfIntegralForm synthesize_nondyadic(const NaiveEGK& h, const PrimeContext& ctx) {
  if (ctx.dyadic()) throw InvalidInput("dyadic", "diagonal synthesis is for odd p");
  Validation v = validate_naive(h);
  if (!v.ok()) throw InvalidInput("invalid_naive_egk", v.violations.front());
  std::size_t n = h.a.size();
  Rational u(ctx.nonresidue());
  std::vector<Rational> t;
  long prefix = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = i + 1;
    Rational base = pow_p(ctx, h.a[i]);
    std::vector<Rational> candidates;
    if (k == 1) {
      candidates = {base};
    } else if (k % 2 == 0) {
      if (!even(prefix + h.a[i])) {
        candidates = {base};
      } else {
        Rational D = disc_D(trusted_form(Matrix::diagonal(t), ctx));
        Rational tn = -D * pow_p(ctx, h.a[i] - prefix);
        candidates = {h.eps[i] == 1 ? tn : tn * u};
      }
    } else {
      // Odd length: when a_1+..+a_{k-1} is odd one of the two unit classes matches.
      candidates = even(prefix) ? std::vector<Rational>{base} : std::vector<Rational>{base, base * u};
    }
    bool placed = false;
    for (const Rational& c : candidates) {
      std::vector<Rational> trial = t;
      trial.push_back(c);
      HalfIntegralForm T = trusted_form(Matrix::diagonal(trial), ctx);
      int e = k % 2 == 0 ? xi(T) : eta(T);
      if (e == h.eps[i]) {
        t = std::move(trial);
        placed = true;
        break;
      }
    }
    if (!placed) throw InternalFailure("no diagonal entry realizes eps_" + std::to_string(k));
    prefix += h.a[i];
  }
  return trusted_form(Matrix::diagonal(t), ctx);
}

namespace {

HalfIntegralForm unary(const Rational& x, const PrimeContext& ctx) { return trusted_form(Matrix{{x}}, ctx); }

HalfIntegralForm binary_unramified(int scale, int xi_target, const PrimeContext& ctx) {
  Rational s = pow_p(ctx, scale), half(1, 2);
  if (xi_target == -1) return trusted_form(Matrix{{s, s * half}, {s * half, s}}, ctx);
  return trusted_form(Matrix{{0, s * half}, {s * half, 0}}, ctx);
}

// Valid EGK datum of length n-1 whose last block lost one member, preferring +1 for a free sign.
EGKDatum shrink_last(const EGKDatum& g) {
  EGKDatum gp = g;
  std::size_t r = g.n.size();
  if (g.n[r - 1] == 1) {
    gp.n.pop_back();
    gp.m.pop_back();
    gp.zeta.pop_back();
    return gp;
  }
  gp.n[r - 1] -= 1;
  for (int z : {1, -1, 0}) {
    gp.zeta[r - 1] = z;
    if (validate_egk(gp).ok()) return gp;
  }
  throw InternalFailure("no sign makes the shortened datum valid");
}

EGKDatum drop_last_block(const EGKDatum& g) {
  EGKDatum gp = g;
  gp.n.pop_back();
  gp.m.pop_back();
  gp.zeta.pop_back();
  return gp;
}

HalfIntegralForm synth_rec(const EGKDatum& g, const Involution& sigma, const PrimeContext& ctx) {
  std::size_t n = g.total(), r = g.n.size();
  ExponentSeq ua = g.exponents();
  int mr = g.m[r - 1], zr = g.zeta[r - 1];
  if (n == 1) return unary(pow_p(ctx, mr), ctx);
  std::size_t last = n - 1;
  GKType type{ua, sigma};
  Role rl = role(ua, sigma, last);

  if (rl == Role::fixed) {
    auto sub = restrict_type(type, n - 1);
    if (!sub) throw InternalFailure("restriction of a standard type is not admissible");
    HalfIntegralForm bp = synth_rec(shrink_last(g), sub->sigma, ctx);
    return direct_sum(bp, unary(pow_p(ctx, mr), ctx));
  }

  if (rl == Role::plus) {
    std::size_t i0 = static_cast<std::size_t>(sigma(last));
    auto sub = restrict_type(type, n - 1);
    if (!sub) throw InternalFailure("restriction of a standard type is not admissible");
    HalfIntegralForm bp = synth_rec(drop_last_block(g), sub->sigma, ctx);
    HalfIntegralForm rest = delete_index(bp, i0);
    int target = zr * (n % 2 == 0 ? xi(rest) : eta(rest));
    int a1 = ua[i0], a2 = mr, f = (a2 - a1) / 2;
    Rational b11 = bp(i0, i0), b12 = pow_p(ctx, a1 + f) / 2;
    for (const Rational& b22 : {Rational(0), pow_p(ctx, a2)}) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = 0; j < n - 1; ++j) m(i, j) = bp(i, j);
      m(i0, last) = m(last, i0) = b12;
      m(last, last) = b22;
      HalfIntegralForm pair = trusted_form(Matrix{{b11, b12}, {b12, b22}}, ctx);
      if (xi(pair) == target) return trusted_form(m, ctx);
    }
    throw InternalFailure("no binary completion has the required xi");
  }

  // last is paired with last-1 at equal exponent.
  if (n == 2) return binary_unramified(mr, zr, ctx);
  auto sub = restrict_type(type, n - 2);
  if (!sub) throw InternalFailure("restriction of a standard type is not admissible");
  if (g.n[r - 1] >= 3) {
    EGKDatum gp = g;
    gp.n[r - 1] -= 2;
    return direct_sum(synth_rec(gp, sub->sigma, ctx), binary_unramified(mr, 1, ctx));
  }
  EGKDatum gp = drop_last_block(g);
  HalfIntegralForm bp = synth_rec(gp, sub->sigma, ctx);
  int zprev = gp.zeta.back();
  int xiK = 1;
  long w_minus = 0;
  for (std::size_t u = 0; u < r; ++u) w_minus += static_cast<long>(g.m[u]) * g.n[u];
  w_minus -= mr;
  if (n % 2 == 0 ? zprev != 0 : !even(w_minus)) xiK = zr * zprev;
  return direct_sum(bp, binary_unramified(mr, xiK, ctx));
}

}  // namespace

HalfIntegralForm synthesize_reduced(const EGKDatum& g, const std::optional<Involution>& sigma,
                                    const PrimeContext& ctx) {
  if (!ctx.dyadic()) throw InvalidInput("not_dyadic", "reduced-form synthesis is for p = 2");
  Validation v = validate_egk(g);
  if (!v.ok()) throw InvalidInput("invalid_egk", v.violations.front());
  ExponentSeq ua = g.exponents();
  Involution s = sigma ? *sigma : standard_involutions(ua).front();
  if (!is_standard(ua, s)) throw InvalidInput("not_standard", "involution " + s.str() + " is not standard for " + ua.str());
  HalfIntegralForm b = synth_rec(g, s, ctx);
  if (!is_reduced(b, GKType{ua, s})) throw InternalFailure("synthesized form is not reduced");
  return b;
}

}  // namespace gk
