// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "gk/invariants.hpp"
#include "gk/io.hpp"
#include "gk/oracle.hpp"
#include "gk/random.hpp"

using namespace gk;

namespace {

struct Tally {
  long cases = 0, failures = 0;
  std::string first;
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what();
  }
};

std::string show(const HalfIntegralForm& b) { return form_json(b).dump(); }

std::vector<HalfIntegralForm> load_corpus() {
  std::ifstream in(GK_CORPUS_PATH);
  if (!in) throw std::runtime_error("cannot open corpus " GK_CORPUS_PATH);
  json doc = json::parse(in);
  std::vector<HalfIntegralForm> out;
  for (const json& j : doc) out.push_back(parse_form(j));
  return out;
}

HalfIntegralForm mk(long p, const Matrix& m) { return HalfIntegralForm::validate(m, PrimeContext(p)); }

Involution transposition(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i);
  std::swap(img[a], img[b]);
  return Involution(img);
}

void all_involutions(std::vector<int>& img, std::size_t i, std::vector<Involution>& out) {
  if (i == img.size()) {
    out.emplace_back(img);
    return;
  }
  if (img[i] != -1) return all_involutions(img, i + 1, out);
  img[i] = static_cast<int>(i);
  all_involutions(img, i + 1, out);
  for (std::size_t j = i + 1; j < img.size(); ++j) {
    if (img[j] != -1) continue;
    img[i] = static_cast<int>(j);
    img[j] = static_cast<int>(i);
    all_involutions(img, i + 1, out);
    img[j] = -1;
  }
  img[i] = -1;
}

void non_decreasing(std::size_t n, int max, std::vector<int>& cur, std::vector<ExponentSeq>& out) {
  if (cur.size() == n) {
    out.emplace_back(cur);
    return;
  }
  for (int v = cur.empty() ? 0 : cur.back(); v <= max; ++v) {
    cur.push_back(v);
    non_decreasing(n, max, cur, out);
    cur.pop_back();
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no time limit
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<HalfIntegralForm> corpus = load_corpus();
  Rng rng(20261015);
  PrimeContext two(2), three(3);
  Rational half(1, 2);

  std::vector<Criterion> criteria = {
      {1, "worked binary example: gk(diag(1,1)) over Q_2 with certificate", 1.0,
       [&](Tally& t) {
         HalfIntegralForm b = mk(2, Matrix{{1, 0}, {0, 1}});
         ReductionCertificate c = reduce(b);
         t.check(c.type.ua == ExponentSeq{0, 1}, [&] { return "ua " + c.type.ua.str(); });
         t.check(verify_certificate(b, c).valid(), [] { return std::string("certificate rejected"); });
         t.check(c.R == mk(2, Matrix{{1, 1}, {1, 2}}), [&] { return "R " + show(c.R); });
         t.check(gk::gk(b) == ExponentSeq{0, 1}, [] { return std::string("gk"); });
       }},
      {2, "3x3 reduced examples and their restrictions", 0,
       [&](Tally& t) {
         HalfIntegralForm b1 = mk(2, Matrix{{1, 1, 0}, {1, 0, 0}, {0, 0, 4}});
         HalfIntegralForm b2 = mk(2, Matrix{{1, 0, 0}, {0, 0, 2}, {0, 2, 0}});
         GKType t1{{0, 2, 2}, transposition(3, 0, 1)}, t2{{0, 2, 2}, transposition(3, 1, 2)};
         t.check(is_reduced(b1, t1), [] { return std::string("B1 not reduced"); });
         t.check(is_reduced(b2, t2), [] { return std::string("B2 not reduced"); });
         auto r1 = restrict_type(t1, 2);
         t.check(r1 && is_reduced(leading(b1, 2), *r1), [] { return std::string("B1 restriction rejected"); });
         t.check(!restrict_type(t2, 2), [] { return std::string("B2 restriction accepted"); });
       }},
      {3, "|gk| = delta on 600 random forms, n <= 4, p in {2,3,5}", 120.0,
       [&](Tally& t) {
         for (long p : {2L, 3L, 5L}) {
           PrimeContext ctx(p);
           for (int i = 0; i < 200; ++i) {
             HalfIntegralForm b = random_form(static_cast<std::size_t>(1 + i % 4), ctx, rng, 4);
             ReductionCertificate c = reduce(b);
             t.check(c.type.ua.sum() == delta(b) && verify_certificate(b, c).valid(), [&] { return show(b); });
           }
         }
       }},
      {4, "binary ground truth on 200 primitive forms each over Q_2 and Q_3", 0,
       [&](Tally& t) {
         for (const PrimeContext& ctx : {two, three})
           for (int i = 0; i < 200; ++i) {
             HalfIntegralForm b = random_primitive_binary(ctx, rng, 4);
             ExponentSeq g = gk::gk(b);
             t.check(exhaustive_gk_binary(b) == g && classify_binary(b).predicted == g, [&] { return show(b); });
           }
       }},
      {5, "dyadic reduction is independent of the starting basis (150 triples)", 0,
       [&](Tally& t) {
         for (int i = 0; i < 150; ++i) {
           std::size_t n = static_cast<std::size_t>(1 + i % 5);
           HalfIntegralForm b = random_form(n, two, rng, 4);
           ReductionCertificate c1 = reduce(transform(b, random_unimodular(n, two, rng)));
           ReductionCertificate c2 = reduce(transform(b, random_unimodular(n, two, rng)));
           bool ok = c1.type == c2.type && is_standard(c1.type.ua, c1.type.sigma) &&
                     egk_of_reduced(c1.R, c1.type.ua) == egk_of_reduced(c2.R, c2.type.ua);
           t.check(ok, [&] { return show(b); });
         }
       }},
      {6, "egk_of validates on the corpus; synthesis round trip on 200 data, n <= 6", 0,
       [&](Tally& t) {
         for (const HalfIntegralForm& b : corpus) {
           EGKDatum g = egk_of(b);
           t.check(validate_egk(g).ok(), [&] { return show(b); });
         }
         for (int i = 0; i < 200; ++i) {
           EGKDatum g = random_egk(static_cast<std::size_t>(1 + i % 6), 6, rng);
           t.check(egk_of(synthesize_reduced(g, std::nullopt, two)) == g, [&] { return g.str(); });
         }
       }},
      {7, "upsilon(lift(G)) = G for every EGK datum with r <= 3, m_s <= 4, n <= 6", 0,
       [&](Tally& t) {
         for (int r = 1; r <= 3; ++r) {
           std::vector<std::vector<int>> sizes, exps;
           std::function<void(std::vector<int>&, int)> comp = [&](std::vector<int>& cur, int left) {
             if (static_cast<int>(cur.size()) == r) {
               sizes.push_back(cur);
               return;
             }
             for (int k = 1; k <= left; ++k) {
               cur.push_back(k);
               comp(cur, left - k);
               cur.pop_back();
             }
           };
           std::vector<int> cur;
           comp(cur, 6);
           for (int mask = 0; mask < 32; ++mask)
             if (__builtin_popcount(static_cast<unsigned>(mask)) == r) {
               std::vector<int> m;
               for (int v = 0; v <= 4; ++v)
                 if (mask >> v & 1) m.push_back(v);
               exps.push_back(m);
             }
           int zcount = 1;
           for (int i = 0; i < r; ++i) zcount *= 3;
           for (const auto& n : sizes)
             for (const auto& m : exps)
               for (int z = 0; z < zcount; ++z) {
                 EGKDatum g{n, m, {}};
                 for (int i = 0, zz = z; i < r; ++i, zz /= 3) g.zeta.push_back(zz % 3 - 1);
                 if (!validate_egk(g).ok()) continue;
                 NaiveEGK h = lift(g);
                 t.check(validate_naive(h).ok() && upsilon(h) == g, [&] { return g.str(); });
               }
         }
       }},
      {8, "Hilbert symbol against solvability search; bimultiplicativity; <a,-a> = 1", 0,
       [&](Tally& t) {
         for (long p : {2L, 3L, 5L}) {
           PrimeContext ctx(p);
           auto reps = square_class_representatives(ctx);
           for (const Rational& a : reps)
             for (const Rational& b : reps)
               t.check(hilbert_symbol(a, b, ctx) == hilbert_brute(a, b, ctx),
                       [&] { return "p=" + std::to_string(p) + " " + a.get_str() + "," + b.get_str(); });
           for (int i = 0; i < 500; ++i) {
             Rational a = random_nonzero_rational(ctx, rng), b = random_nonzero_rational(ctx, rng);
             t.check(hilbert_symbol(a, b, ctx) == hilbert_brute(a, b, ctx),
                     [&] { return "p=" + std::to_string(p) + " " + a.get_str() + "," + b.get_str(); });
           }
           for (int i = 0; i < 1000; ++i) {
             Rational a = random_nonzero_rational(ctx, rng), b = random_nonzero_rational(ctx, rng),
                      c = random_nonzero_rational(ctx, rng);
             t.check(hilbert_symbol(a, b * c, ctx) == hilbert_symbol(a, b, ctx) * hilbert_symbol(a, c, ctx) &&
                         hilbert_symbol(a, -a, ctx) == 1,
                     [&] { return "p=" + std::to_string(p) + " " + a.get_str(); });
           }
         }
       }},
      {9, "lower search (budget 10^4) <= gk <= ord det 2B bound on the corpus", 0,
       [&](Tally& t) {
         SearchBudget budget;
         budget.max_transforms = 10000;
         for (const HalfIntegralForm& b : corpus) {
           ExponentSeq g = gk::gk(b);
           budget.seed = rng();
           long bound = valuation(scale(b, 2).det(), b.ctx()).value();
           t.check(gk_lower_search(b, budget) <= g && g.sum() <= bound, [&] { return show(b); });
         }
       }},
      {10, "inverse valuation bounds on 80 synthesized even-rank forms with odd |ua|", 0,
       [&](Tally& t) {
         int done = 0;
         while (done < 80) {
           std::size_t n = static_cast<std::size_t>(2 * (1 + rng() % 3));
           EGKDatum g = random_egk(n, 6, rng);
           if (g.exponents().sum() % 2 == 0) continue;
           auto invs = standard_involutions(g.exponents());
           Involution s = invs[rng() % invs.size()];
           HalfIntegralForm b = synthesize_reduced(g, s, two);
           t.check(check_inverse_bounds(b, GKType{g.exponents(), s}), [&] { return show(b); });
           ++done;
         }
       }},
      {11, "standard involution census for every non-decreasing ua, n <= 8, entries <= 4", 60.0,
       [&](Tally& t) {
         for (std::size_t n = 1; n <= 8; ++n) {
           std::vector<int> img(n, -1), cur;
           std::vector<Involution> invs;
           all_involutions(img, 0, invs);
           std::vector<ExponentSeq> uas;
           non_decreasing(n, 4, cur, uas);
           for (const ExponentSeq& ua : uas) {
             std::vector<Involution> listed = standard_involutions(ua);
             std::set<Involution> listed_set(listed.begin(), listed.end()), standard, classes;
             for (const Involution& s : invs) {
               if (!is_admissible(ua, s)) continue;
               if (is_standard(ua, s)) standard.insert(s);
               classes.insert(canonicalize(ua, s).sigma);
             }
             bool ok = listed.size() == (std::size_t{1} << standard_class_exponent(ua)) &&
                       listed_set.size() == listed.size() && standard == listed_set && classes == listed_set;
             t.check(ok, [&] { return "ua=" + ua.str(); });
           }
         }
       }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      ++t.failures;
      if (t.first.empty()) t.first = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool slow = c.limit_s > 0 && secs > c.limit_s;
    bool ok = t.failures == 0 && t.cases > 0 && !slow;
    if (!ok) ++failed;
    std::printf("%s [%d] %s: %ld cases, %ld failures, %.2fs%s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, t.cases,
                t.failures, secs, slow ? " (over time limit)" : "", t.first.empty() ? "" : "; first: ",
                t.first.c_str());
  }
  return failed == 0 ? 0 : 1;
}
