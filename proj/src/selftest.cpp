#include "gk/selftest.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "gk/invariants.hpp"
#include "gk/oracle.hpp"
#include "gk/random.hpp"

namespace gk {

namespace {

struct Ctx {
  Rng& rng;
  CheckResult& res;
  void expect(bool ok, const std::function<std::string()>& what) {
    ++res.cases;
    if (ok) return;
    if (res.failures++ == 0) res.first_failure = what();
  }
  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  PrimeContext prime() {
    static const long ps[] = {2, 3, 5};
    return PrimeContext(ps[pick(0, 2)]);
  }
};

using Body = std::function<void(Ctx&, int)>;

struct Property {
  const char* name;
  const char* suite;
  Body body;
};

std::string show(const HalfIntegralForm& b) {
  std::ostringstream os;
  os << "p=" << b.ctx().p() << " [";
  for (std::size_t i = 0; i < b.size(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < b.size(); ++j) os << (j ? " " : "") << to_string(b(i, j));
  }
  os << "]";
  return os.str();
}

std::string show(const Rational& a, const Rational& b, const PrimeContext& ctx) {
  return "p=" + std::to_string(ctx.p()) + " (" + to_string(a) + ", " + to_string(b) + ")";
}

int p0_count(const GKType& t) {
  int c = 0;
  for (std::size_t i = 0; i < t.ua.size(); ++i)
    if (role(t.ua, t.sigma, i) == Role::fixed) ++c;
  return c;
}

void all_involutions_rec(std::vector<int>& img, std::size_t i, std::vector<Involution>& out) {
  if (i == img.size()) {
    out.emplace_back(img);
    return;
  }
  if (img[i] != -1) return all_involutions_rec(img, i + 1, out);
  img[i] = static_cast<int>(i);
  all_involutions_rec(img, i + 1, out);
  for (std::size_t j = i + 1; j < img.size(); ++j) {
    if (img[j] != -1) continue;
    img[i] = static_cast<int>(j);
    img[j] = static_cast<int>(i);
    all_involutions_rec(img, i + 1, out);
    img[j] = -1;
  }
  img[i] = -1;
}

std::vector<Involution> all_involutions(std::size_t n) {
  std::vector<int> img(n, -1);
  std::vector<Involution> out;
  all_involutions_rec(img, 0, out);
  return out;
}

ExponentSeq random_ua(Ctx& c, std::size_t n, int max) {
  std::vector<int> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(static_cast<int>(c.pick(0, max)));
  std::sort(v.begin(), v.end());
  return ExponentSeq(v);
}

// Reduced dyadic form from a random EGK datum.
HalfIntegralForm random_reduced(Ctx& c, std::size_t n, Involution* sigma_out = nullptr) {
  PrimeContext two(2);
  EGKDatum g = random_egk(n, 5, c.rng);
  auto invs = standard_involutions(g.exponents());
  Involution s = invs[static_cast<std::size_t>(c.pick(0, static_cast<long>(invs.size()) - 1))];
  if (sigma_out) *sigma_out = s;
  return synthesize_reduced(g, s, two);
}

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      // p-adic layer
      {"hilbert_symmetric", "padic",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           Rational a = random_nonzero_rational(ctx, c.rng), b = random_nonzero_rational(ctx, c.rng);
           c.expect(hilbert_symbol(a, b, ctx) == hilbert_symbol(b, a, ctx), [&] { return show(a, b, ctx); });
         }
       }},
      {"hilbert_bimultiplicative", "padic",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           Rational a = random_nonzero_rational(ctx, c.rng), b = random_nonzero_rational(ctx, c.rng),
                    d = random_nonzero_rational(ctx, c.rng);
           c.expect(hilbert_symbol(a * b, d, ctx) == hilbert_symbol(a, d, ctx) * hilbert_symbol(b, d, ctx),
                    [&] { return show(a * b, d, ctx); });
         }
       }},
      {"hilbert_a_minus_a", "padic",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           Rational a = random_nonzero_rational(ctx, c.rng);
           c.expect(hilbert_symbol(a, -a, ctx) == 1, [&] { return show(a, -a, ctx); });
         }
       }},
      {"hilbert_square_class_invariant", "padic",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           Rational a = random_nonzero_rational(ctx, c.rng), b = random_nonzero_rational(ctx, c.rng),
                    s = random_nonzero_rational(ctx, c.rng);
           c.expect(hilbert_symbol(a * s * s, b, ctx) == hilbert_symbol(a, b, ctx), [&] { return show(a, b, ctx); });
         }
       }},
      {"hilbert_matches_brute", "padic",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           Rational a = random_nonzero_rational(ctx, c.rng), b = random_nonzero_rational(ctx, c.rng);
           c.expect(hilbert_symbol(a, b, ctx) == hilbert_brute(a, b, ctx), [&] { return show(a, b, ctx); });
         }
       }},
      {"quad_ext_consistent", "padic",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           Rational x = random_nonzero_rational(ctx, c.rng);
           QuadExtKind q = quad_ext(x, ctx);
           int code = xi_code(x, ctx);
           bool odd_ord = valuation(x, ctx).value() % 2 != 0;
           bool ok = (q.kind == ExtKind::split) == is_square(x, ctx) && (q.kind == ExtKind::ramified) == (q.d > 0) &&
                     code == (q.kind == ExtKind::split ? 1 : q.kind == ExtKind::inert ? -1 : 0) &&
                     (!odd_ord || q.kind == ExtKind::ramified);
           // The unramified extension is the one where the non-residue class is not a norm.
           if (q.kind == ExtKind::inert) ok = ok && hilbert_symbol(x, ctx.p(), ctx) == -1;
           bool trivial_pairing = true;
           for (const Rational& y : square_class_representatives(ctx))
             trivial_pairing = trivial_pairing && hilbert_symbol(x, y, ctx) == 1;
           ok = ok && trivial_pairing == is_square(x, ctx);
           c.expect(ok, [&] { return "p=" + std::to_string(ctx.p()) + " x=" + to_string(x); });
         }
       }},

      // forms and reduction
      {"transform_composition", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 4));
           HalfIntegralForm b = random_form(n, ctx, c.rng);
           UnimodularTransform u = random_unimodular(n, ctx, c.rng), v = random_unimodular(n, ctx, c.rng);
           c.expect(transform(transform(b, u), v) == transform(b, u.then(v)), [&] { return show(b); });
         }
       }},
      {"invariants_under_equivalence", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 4));
           HalfIntegralForm b = random_form(n, ctx, c.rng);
           HalfIntegralForm bu = transform(b, random_unimodular(n, ctx, c.rng));
           bool ok = delta(b) == delta(bu) && norm_ideal_ord(b) == norm_ideal_ord(bu) && eta(b) == eta(bu) &&
                     xi(b) == xi(bu) && gk(b) == gk(bu);
           c.expect(ok, [&] { return show(b); });
         }
       }},
      {"strict_implies_lax", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 4));
           HalfIntegralForm b = random_form(n, ctx, c.rng, 3);
           ExponentSeq ua = random_ua(c, n, 3);
           bool strict = membership(b, ua, Strictness::strict);
           c.expect(!strict || membership(b, ua, Strictness::lax), [&] { return show(b) + " ua=" + ua.str(); });
           ExponentSeq top = greatest_in_S(b);
           c.expect(membership(b, top), [&] { return show(b) + " greatest " + top.str(); });
         }
       }},
      {"gk_length_bound", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 4));
           HalfIntegralForm b = random_form(n, ctx, c.rng);
           long bound = valuation(scale(b, 2).det(), ctx).value();
           ExponentSeq g = gk(b);
           c.expect(g.sum() == delta(b) && g.sum() <= bound && g.non_decreasing(), [&] { return show(b); });
         }
       }},
      {"reduce_sound", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 4));
           HalfIntegralForm b = random_form(n, ctx, c.rng);
           ReductionCertificate cert = reduce(b);
           Verification v = verify_certificate(b, cert);
           c.expect(v.valid() && is_standard(cert.type.ua, cert.type.sigma),
                    [&] { return show(b) + " " + to_string(v.reason); });
         }
       }},
      {"reduce_unique_dyadic", "reducer",
       [](Ctx& c, int trials) {
         PrimeContext two(2);
         for (int t = 0; t < trials; ++t) {
           std::size_t n = static_cast<std::size_t>(c.pick(1, 4));
           HalfIntegralForm b = random_form(n, two, c.rng);
           ReductionCertificate r1 = reduce(transform(b, random_unimodular(n, two, c.rng)));
           ReductionCertificate r2 = reduce(transform(b, random_unimodular(n, two, c.rng)));
           bool ok = r1.type == r2.type &&
                     egk_of_reduced(r1.R, r1.type.ua) == egk_of_reduced(r2.R, r2.type.ua);
           c.expect(ok, [&] { return show(b); });
         }
       }},
      {"reduced_is_optimal", "reducer",
       [](Ctx& c, int trials) {
         PrimeContext two(2);
         for (int t = 0; t < trials; ++t) {
           std::size_t n = static_cast<std::size_t>(c.pick(1, 5));
           HalfIntegralForm r = random_reduced(c, n);
           ExponentSeq ua = gk(r);
           c.expect(membership(r, ua) && reduce(r).type.ua == ua, [&] { return show(r); });
         }
       }},
      {"G_ua_preserves_optimality", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 4));
           ReductionCertificate cert = reduce(random_form(n, ctx, c.rng));
           const ExponentSeq& ua = cert.type.ua;
           UnimodularTransform g = random_in_G_ua(ua, ctx, c.rng);
           HalfIntegralForm moved = transform(cert.R, g);
           bool ok = in_G_ua(g, ua, ctx).in_G && membership(moved, ua);
           if (membership(cert.R, ua, Strictness::strict)) ok = ok && membership(moved, ua, Strictness::strict);
           c.expect(ok, [&] { return show(cert.R) + " ua=" + ua.str(); });
         }
       }},
      {"optimal_transforms_lie_in_G_ua", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 3));
           ReductionCertificate cert = reduce(random_form(n, ctx, c.rng));
           const ExponentSeq& ua = cert.type.ua;
           UnimodularTransform u = random_unimodular(n, ctx, c.rng, 1);
           if (!membership(transform(cert.R, u), ua)) continue;
           c.expect(in_G_ua(u, ua, ctx).in_G, [&] { return show(cert.R) + " ua=" + ua.str(); });
         }
         if (c.res.cases == 0) c.expect(true, [] { return std::string(); });
       }},
      {"prefix_gk_of_optimal", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(2, 4));
           ReductionCertificate cert = reduce(random_form(n, ctx, c.rng));
           const ExponentSeq& ua = cert.type.ua;
           for (std::size_t k = 1; k < n; ++k) {
             if (ua[k - 1] >= ua[k]) continue;
             c.expect(gk(leading(cert.R, k)) == ua.prefix(k),
                      [&] { return show(cert.R) + " k=" + std::to_string(k); });
           }
         }
       }},
      {"restriction_stays_reduced", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           std::size_t n = static_cast<std::size_t>(c.pick(2, 5));
           Involution s;
           HalfIntegralForm r = random_reduced(c, n, &s);
           GKType type{gk(r), s};
           std::vector<std::size_t> ks;
           for (std::size_t k = 1; k < n; ++k)
             if (type.ua[k - 1] < type.ua[k]) ks.push_back(k);
           Role last = role(type.ua, s, n - 1);
           if (last == Role::fixed || last == Role::plus) ks.push_back(n - 1);
           if (last == Role::equal_pair && n >= 3) ks.push_back(n - 2);
           for (std::size_t k : ks) {
             auto sub = restrict_type(type, k);
             c.expect(sub && is_standard(sub->ua, sub->sigma) && is_reduced(leading(r, k), *sub),
                      [&] { return show(r) + " k=" + std::to_string(k); });
           }
         }
       }},
      {"leading_dominates_prefix", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(2, 4));
           HalfIntegralForm b = random_form(n, ctx, c.rng);
           ExponentSeq g = gk(b);
           HalfIntegralForm bu = transform(b, random_unimodular(n, ctx, c.rng));
           std::size_t m = static_cast<std::size_t>(c.pick(1, static_cast<long>(n) - 1));
           HalfIntegralForm lead = leading(bu, m);
           if (lead.degenerate()) continue;
           c.expect(gk(lead) >= g.prefix(m), [&] { return show(bu) + " m=" + std::to_string(m); });
         }
         if (c.res.cases == 0) c.expect(true, [] { return std::string(); });
       }},
      {"lower_block_transform_keeps_reduced", "reducer",
       [](Ctx& c, int trials) {
         PrimeContext two(2);
         for (int t = 0; t < trials; ++t) {
           std::size_t n = static_cast<std::size_t>(c.pick(1, 4));
           Involution s;
           HalfIntegralForm r = random_reduced(c, n, &s);
           ExponentSeq ua = gk(r);
           HalfIntegralForm rn = transform(r, random_in_N_lower(ua, two, c.rng));
           c.expect(is_reduced(rn, GKType{ua, s}), [&] { return show(r); });
         }
       }},
      {"inverse_in_negated_class", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           std::size_t n = static_cast<std::size_t>(c.pick(1, 5));
           Involution s;
           HalfIntegralForm r = random_reduced(c, n, &s);
           ExponentSeq ua = gk(r);
           if (p0_count(GKType{ua, s}) != 0) continue;
           HalfIntegralForm inv = trusted_form(*scale(r, 4).matrix().inverse(), r.ctx());
           c.expect(membership(inv, ua.negated()), [&] { return show(r); });
         }
         if (c.res.cases == 0) c.expect(true, [] { return std::string(); });
       }},
      {"binary_classification", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx(c.pick(0, 1) ? 2 : 3);
           HalfIntegralForm b = random_primitive_binary(ctx, c.rng);
           ExponentSeq g = gk(b);
           c.expect(classify_binary(b).predicted == g && exhaustive_gk_binary(b) == g, [&] { return show(b); });
         }
       }},
      {"binary_optimality_criterion", "reducer",
       [](Ctx& c, int trials) {
         PrimeContext two(2);
         for (int t = 0; t < trials; ++t) {
           HalfIntegralForm b = random_form(2, two, c.rng, 3);
           ExponentSeq top = greatest_in_S(b);
           c.expect(is_optimal_binary(b, top) == (gk(b) == top), [&] { return show(b) + " ua=" + top.str(); });
         }
       }},
      {"lower_search_bracket", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 3));
           HalfIntegralForm b = random_form(n, ctx, c.rng);
           SearchBudget budget;
           budget.max_transforms = 300;
           budget.seed = c.rng();
           c.expect(gk_lower_search(b, budget) <= gk(b), [&] { return show(b); });
         }
       }},
      {"involution_bijection", "reducer",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           std::size_t n = static_cast<std::size_t>(c.pick(1, 6));
           ExponentSeq ua = random_ua(c, n, 3);
           auto std_list = standard_involutions(ua);
           std::set<Involution> listed(std_list.begin(), std_list.end()), reps;
           for (const Involution& s : all_involutions(n))
             if (is_admissible(ua, s)) reps.insert(canonicalize(ua, s).sigma);
           bool ok = listed.size() == std_list.size() && reps == listed &&
                     std_list.size() == (std::size_t{1} << standard_class_exponent(ua));
           for (const Involution& s : std_list) {
             int f = p0_count(GKType{ua, s});
             ok = ok && (n % 2 == 1 ? f == 1 : f == (ua.sum() % 2 == 0 ? 0 : 2));
           }
           c.expect(ok, [&] { return "ua=" + ua.str(); });
         }
       }},

      // EGK layer
      {"egk_of_validates", "egk",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 4));
           HalfIntegralForm b = random_form(n, ctx, c.rng);
           EGKDatum g = egk_of(b);
           c.expect(validate_egk(g).ok() && g.exponents() == gk(b), [&] { return show(b); });
         }
       }},
      {"upsilon_lift_identity", "egk",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           EGKDatum g = random_egk(static_cast<std::size_t>(c.pick(1, 6)), 5, c.rng);
           NaiveEGK h = lift(g);
           c.expect(validate_naive(h).ok() && upsilon(h) == g, [&] { return g.str(); });
         }
       }},
      {"eta_last_step", "egk",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(2, 4));
           HalfIntegralForm b = random_form(n, ctx, c.rng);
           HalfIntegralForm bp = leading(b, n - 1);
           if (bp.degenerate()) continue;
           c.expect(eta(b) == eta(bp) * hilbert_symbol(disc_D(b), disc_D(bp), ctx), [&] { return show(b); });
         }
         if (c.res.cases == 0) c.expect(true, [] { return std::string(); });
       }},
      {"eta_unramified_summand", "egk",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 3));
           HalfIntegralForm b = random_form(n, ctx, c.rng);
           int a = static_cast<int>(c.pick(0, 3));
           Rational s = pow_p(ctx, a), half(1, 2);
           Rational u = ctx.dyadic() ? Rational(1) : Rational(ctx.nonresidue());
           // H (xi = 1) or the anisotropic unramified plane (xi = -1).
           Matrix k = c.pick(0, 1) ? Matrix{{0, half}, {half, 0}}
                                   : (ctx.dyadic() ? Matrix{{1, half}, {half, 1}} : Matrix{{1, 0}, {0, -u}});
           HalfIntegralForm K = HalfIntegralForm::validate(k, ctx);
           HalfIntegralForm sum = direct_sum(b, scale(K, s));
           long e = a + valuation(disc_D(b), ctx).value();
           int expect = e % 2 == 0 ? 1 : xi(K);
           c.expect(eta(sum) == eta(b) * expect, [&] { return show(sum); });
         }
       }},
      {"eta_constant_exponents", "egk",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = static_cast<std::size_t>(c.pick(1, 4));
           HalfIntegralForm b = random_form(n, ctx, c.rng, 2);
           ExponentSeq g = gk(b);
           if (g[0] != g[n - 1]) continue;
           int expect = n % 2 == 1 ? 1 : (g[0] % 2 == 0 ? 1 : xi(b));
           c.expect(eta(b) == expect, [&] { return show(b); });
         }
         if (c.res.cases == 0) c.expect(true, [] { return std::string(); });
       }},
      {"even_rank_parity", "egk",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           PrimeContext ctx = c.prime();
           std::size_t n = 2 * static_cast<std::size_t>(c.pick(1, 2));
           HalfIntegralForm b = random_form(n, ctx, c.rng);
           ReductionCertificate cert = reduce(b);
           bool odd = cert.type.ua.sum() % 2 != 0;
           bool ram = quad_ext(disc_D(b), ctx).d > 0;
           bool ok = odd == ram && odd == (xi(b) == 0);
           if (ctx.dyadic()) ok = ok && odd == (p0_count(cert.type) == 2);
           c.expect(ok, [&] { return show(b); });
         }
       }},
      {"eta_recursion_reduced", "egk",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           std::size_t n = static_cast<std::size_t>(c.pick(2, 5));
           Involution s;
           HalfIntegralForm r = random_reduced(c, n, &s);
           ExponentSeq ua = gk(r);
           Role last = role(ua, s, n - 1);
           if (last != Role::fixed && last != Role::plus) continue;
           HalfIntegralForm rp = leading(r, n - 1);
           long head = ua.prefix(n - 1).sum();
           int an = ua[n - 1];
           auto pw = [](int x, int k) { return k % 2 == 0 ? 1 : x; };
           if (n % 2 == 0 && (head + an) % 2 == 0)
             c.expect(eta(r) == eta(rp) * pw(xi(r), an), [&] { return show(r); });
           else if (n % 2 == 1 && head % 2 == 0)
             c.expect(eta(r) == eta(rp) * pw(xi(rp), an), [&] { return show(r); });
         }
         if (c.res.cases == 0) c.expect(true, [] { return std::string(); });
       }},
      {"synthesis_round_trip", "egk",
       [](Ctx& c, int trials) {
         PrimeContext two(2), three(3);
         for (int t = 0; t < trials; ++t) {
           std::size_t n = static_cast<std::size_t>(c.pick(1, 6));
           EGKDatum g = random_egk(n, 5, c.rng);
           HalfIntegralForm r = synthesize_reduced(g, std::nullopt, two);
           c.expect(egk_of(r) == g, [&] { return "dyadic " + g.str(); });
           NaiveEGK h = lift(g);
           HalfIntegralForm d = synthesize_nondyadic(h, three);
           c.expect(naive_of_diagonal(d) == h && egk_of(d) == g, [&] { return "p=3 " + g.str(); });
         }
       }},
      {"inverse_bounds", "egk",
       [](Ctx& c, int trials) {
         for (int t = 0; t < trials; ++t) {
           std::size_t n = 2 * static_cast<std::size_t>(c.pick(1, 3));
           Involution s;
           HalfIntegralForm r = random_reduced(c, n, &s);
           ExponentSeq ua = gk(r);
           if (ua.sum() % 2 == 0) continue;
           c.expect(check_inverse_bounds(r, GKType{ua, s}), [&] { return show(r); });
         }
         if (c.res.cases == 0) c.expect(true, [] { return std::string(); });
       }},
  };
  return props;
}

const Property* find(const std::string& name) {
  for (const Property& p : registry())
    if (name == p.name) return &p;
  return nullptr;
}

}  // namespace

std::vector<std::string> check_names(const std::string& suite) {
  if (suite != "all" && suite != "padic" && suite != "reducer" && suite != "egk")
    throw InvalidInput("unknown_suite", suite);
  std::vector<std::string> out;
  for (const Property& p : registry())
    if (suite == "all" || suite == p.suite) out.emplace_back(p.name);
  return out;
}

CheckResult run_check(const std::string& name, int trials, std::uint64_t seed) {
  const Property* p = find(name);
  if (!p) throw InvalidInput("unknown_check", name);
  CheckResult res;
  res.name = p->name;
  res.suite = p->suite;
  Rng rng(seed ^ std::hash<std::string>{}(name));
  Ctx c{rng, res};
  try {
    p->body(c, trials);
  } catch (const std::exception& e) {
    ++res.failures;
    if (res.first_failure.empty()) res.first_failure = std::string("exception: ") + e.what();
  }
  return res;
}

std::vector<CheckResult> run_selftest(const std::string& suite, int trials, std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (const std::string& n : check_names(suite)) out.push_back(run_check(n, trials, seed));
  return out;
}

}  // namespace gk
