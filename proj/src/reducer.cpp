#include "gk/reducer.hpp"

#include <algorithm>

#include "gk/invariants.hpp"

namespace gk {

bool is_reduced(const HalfIntegralForm& b, const GKType& t) {
  std::size_t n = b.size();
  const ExponentSeq& ua = t.ua;
  if (ua.size() != n || t.sigma.size() != n) return false;
  if (!is_admissible(ua, t.sigma) || !membership(b, ua)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = static_cast<std::size_t>(t.sigma(i));
    Role r = role(ua, t.sigma, i);
    if (r == Role::fixed) {
      if (valuation(b(i, i), b.ctx()) != ua[i]) return false;
    } else if (r == Role::minus || (r == Role::equal_pair && i < j)) {
      if (b(i, i) * b(j, j) == b(i, j) * b(i, j)) return false;
      if (binary_gk(b(i, i), b(i, j), b(j, j), b.ctx()) != ExponentSeq{ua[i], ua[j]}) return false;
    }
    for (std::size_t k = i + 1; k < n; ++k)
      if (k != j && !twice_above(entry_ord(b, i, k), ua[i] + ua[k])) return false;
  }
  return true;
}

namespace {

// Working state for elementary basis changes: M = tU B U.
struct Work {
  Matrix M, U;
  std::size_t n;

  explicit Work(const HalfIntegralForm& b) : M(b.matrix()), U(Matrix::identity(b.size())), n(b.size()) {}

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    M.swap_rows(i, j);
    M.swap_cols(i, j);
    U.swap_cols(i, j);
  }
  // e_j <- e_j + x e_i
  void add(std::size_t j, std::size_t i, const Rational& x) {
    if (x == 0) return;
    for (std::size_t k = 0; k < n; ++k) U(k, j) += x * U(k, i);
    for (std::size_t k = 0; k < n; ++k) M(j, k) += x * M(i, k);
    for (std::size_t k = 0; k < n; ++k) M(k, j) += x * M(k, i);
  }
  void apply(const Matrix& E) {
    U = U * E;
    M = E.transpose() * M * E;
  }
};

Matrix clearing_matrix(const Matrix& M, std::size_t n, const GKType& prefix, const PrimeContext& ctx) {
  std::size_t m = prefix.ua.size();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m; ++i)
    if (prefix.sigma(i) != static_cast<int>(i)) keep.push_back(i);
  Matrix E = Matrix::identity(n);
  if (keep.empty() || m == n) return E;
  Matrix P(keep.size(), keep.size()), C(keep.size(), n - m);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t c = 0; c < keep.size(); ++c) P(a, c) = M(keep[a], keep[c]);
    for (std::size_t t = m; t < n; ++t) C(a, t - m) = M(keep[a], t);
  }
  auto inv = P.inverse();
  if (!inv) throw InvalidInput("prefix_not_reduced", "paired part of the leading block is singular");
  Matrix X = *inv * C;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t t = 0; t < n - m; ++t) {
      if (!is_integral(X(a, t), ctx))
        throw InvalidInput("not_in_M_ua", "clearing coefficient " + to_string(X(a, t)) + " is not integral");
      E(keep[a], m + t) = -X(a, t);
    }
  return E;
}

}  // namespace

ClearResult clear_rows(const HalfIntegralForm& b, const GKType& prefix) {
  std::size_t m = prefix.ua.size();
  if (m > b.size()) throw InvalidInput("shape", "prefix longer than form");
  if (!is_reduced(leading(b, m), prefix)) throw InvalidInput("prefix_not_reduced", "leading block is not reduced");
  Matrix E = clearing_matrix(b.matrix(), b.size(), prefix, b.ctx());
  UnimodularTransform U = trusted_transform(E);
  return {U, transform(b, U)};
}

Rational complete_square(const Rational& b11, const Rational& b12, const Rational& b22, int a1, int a2,
                         const PrimeContext& ctx) {
  if (!ctx.dyadic()) throw InvalidInput("not_dyadic", "complete_square is for p = 2");
  if (a2 < a1 || (a2 - a1) % 2 != 0) throw InvalidInput("bad_exponents", "need a1 <= a2 of equal parity");
  if (valuation(b11, ctx) != a1 || valuation(b22, ctx) < a2 || !twice_above(valuation(Rational(2 * b12), ctx), a1 + a2))
    throw InvalidInput("precondition", "complete_square preconditions fail");
  // Residues of x mod 2^{k+3} with ord x >= k, smallest first.
  int k = (a2 - a1) / 2;
  Rational step = pow_p(ctx, k);
  for (int t = 1; t < 8; ++t) {
    Rational x = step * t;
    if (valuation(Rational(b22 + 2 * b12 * x + b11 * x * x), ctx) > a2) return x;
  }
  throw InternalFailure("complete_square: no residue class works");
}

ReductionCertificate jordan_nondyadic(const HalfIntegralForm& b) {
  const PrimeContext& ctx = b.ctx();
  if (ctx.dyadic()) throw InvalidInput("dyadic", "Jordan splitting route is for odd p");
  if (b.degenerate()) throw InvalidInput("degenerate", "form is degenerate");
  std::size_t n = b.size();
  Work w(b);
  for (std::size_t s = 0; s < n; ++s) {
    Ord best = Ord::infinity();
    std::size_t bi = s, bj = s;
    for (std::size_t i = s; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Ord o = valuation(w.M(i, j), ctx);
        if (o < best || (o == best && i == j && bi != bj)) {
          best = o;
          bi = i;
          bj = j;
        }
      }
    if (best.is_infinite()) throw InternalFailure("zero block in non-degenerate form");
    if (bi != bj) w.add(bi, bj, 1);  // b_ii + 2 b_ij + b_jj has the order of b_ij
    w.swap(s, bi);
    for (std::size_t j = s + 1; j < n; ++j) w.add(j, s, -w.M(s, j) / w.M(s, s));
  }
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    return valuation(w.M(static_cast<std::size_t>(x), static_cast<std::size_t>(x)), ctx) <
           valuation(w.M(static_cast<std::size_t>(y), static_cast<std::size_t>(y)), ctx);
  });
  w.apply(permutation_matrix(perm));
  std::vector<int> ua(n);
  for (std::size_t i = 0; i < n; ++i) ua[i] = static_cast<int>(valuation(w.M(i, i), ctx).value());
  ExponentSeq e(ua);
  GKType type{e, standard_involutions(e).front()};
  return {trusted_transform(w.U), trusted_form(w.M, ctx), type};
}

namespace {

ReductionCertificate reduce_dyadic(const HalfIntegralForm& b, const ReduceOptions& opt) {
  const PrimeContext& ctx = b.ctx();
  std::size_t n = b.size();
  Work w(b);
  std::vector<int> ua;
  std::vector<int> sigma;
  long moves = 0;
  auto prefix_type = [&]() { return GKType{ExponentSeq(ua), Involution(sigma)}; };
  auto ord2 = [&](std::size_t i, std::size_t j) {
    return i == j ? valuation(w.M(i, i), ctx) : valuation(Rational(2 * w.M(i, j)), ctx);
  };

  while (ua.size() < n) {
    if (++moves > opt.budget) throw BudgetExhausted("reduction budget exhausted");
    std::size_t m = ua.size();
    if (m > 0) w.apply(clearing_matrix(w.M, n, prefix_type(), ctx));

    std::vector<std::size_t> fixed;
    for (std::size_t i = 0; i < m; ++i)
      if (sigma[i] == static_cast<int>(i)) fixed.push_back(i);

    Ord cD = Ord::infinity();
    for (std::size_t i = m; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) cD = std::min(cD, ord2(i, j));
    Ord c = cD;
    for (std::size_t h : fixed)
      for (std::size_t t = m; t < n; ++t) {
        Ord o = ord2(h, t);
        if (!o.is_infinite()) c = std::min(c, Ord(2 * o.value() - ua[h]));
      }
    if (c.is_infinite()) throw InvalidInput("degenerate", "form is degenerate");
    int cv = static_cast<int>(c.value());
    if (m > 0 && cv < ua.back()) throw InternalFailure("next exponent decreased during reduction");

    // Pair a fixed point of the prefix with a tail vector.
    bool done = false;
    for (std::size_t h : fixed) {
      for (std::size_t t = m; t < n && !done; ++t) {
        Ord o = ord2(h, t);
        if (!o.is_infinite() && 2 * o.value() - ua[h] == cv) {
          w.swap(t, m);
          sigma[h] = static_cast<int>(m);
          sigma.push_back(static_cast<int>(h));
          ua.push_back(cv);
          done = true;
        }
      }
      if (done) break;
    }
    if (done) continue;

    // Split a primitive unramified pair off the tail.
    for (std::size_t i = m; i < n && !done; ++i)
      for (std::size_t j = i + 1; j < n && !done; ++j)
        if (ord2(i, j) == cv) {
          w.swap(i, m);
          w.swap(j == m ? i : j, m + 1);
          sigma.push_back(static_cast<int>(m + 1));
          sigma.push_back(static_cast<int>(m));
          ua.push_back(cv);
          ua.push_back(cv);
          done = true;
        }
    if (done) continue;

    std::vector<std::size_t> diag;
    for (std::size_t i = m; i < n; ++i)
      if (ord2(i, i) == cv) diag.push_back(i);
    if (diag.empty()) throw InternalFailure("no entry attains the next exponent");
    if (diag.size() >= 2) {
      std::size_t i = diag[0], j = diag[1];
      w.add(j, i, complete_square(w.M(i, i), w.M(i, j), w.M(j, j), cv, cv, ctx));
      continue;
    }
    std::size_t i = diag[0];
    auto clash = std::find_if(fixed.begin(), fixed.end(), [&](std::size_t h) { return (ua[h] - cv) % 2 == 0; });
    if (clash != fixed.end()) {
      std::size_t h = *clash;
      w.add(i, h, complete_square(w.M(h, h), w.M(h, i), w.M(i, i), ua[h], cv, ctx));
      continue;
    }
    w.swap(i, m);
    sigma.push_back(static_cast<int>(m));
    ua.push_back(cv);
  }

  ExponentSeq e(ua);
  Canonical can = canonicalize(e, Involution(sigma));
  w.apply(permutation_matrix(can.perm));
  return {trusted_transform(w.U), trusted_form(w.M, ctx), GKType{e, can.sigma}};
}

}  // namespace

ReductionCertificate reduce(const HalfIntegralForm& b, const ReduceOptions& opt) {
  if (b.degenerate()) throw InvalidInput("degenerate", "form is degenerate");
  ReductionCertificate c = b.ctx().dyadic() ? reduce_dyadic(b, opt) : jordan_nondyadic(b);
  Verification v = verify_certificate(b, c);
  if (!v.valid()) throw InternalFailure(std::string("reduction rejected by verifier: ") + to_string(v.reason));
  return c;
}

const char* to_string(VerifyReason r) {
  switch (r) {
    case VerifyReason::ok: return "ok";
    case VerifyReason::size_mismatch: return "size_mismatch";
    case VerifyReason::not_unimodular: return "not_unimodular";
    case VerifyReason::transform_mismatch: return "transform_mismatch";
    case VerifyReason::not_admissible: return "not_admissible";
    case VerifyReason::not_reduced: return "not_reduced";
    case VerifyReason::not_standard: return "not_standard";
  }
  return "?";
}

Verification verify_certificate(const HalfIntegralForm& b, const ReductionCertificate& c) {
  std::size_t n = b.size();
  if (c.U.size() != n || c.R.size() != n || c.type.ua.size() != n || c.type.sigma.size() != n)
    return {VerifyReason::size_mismatch};
  if (!is_unimodular(c.U.matrix(), b.ctx())) return {VerifyReason::not_unimodular};
  if (!(c.U.matrix().transpose() * b.matrix() * c.U.matrix() == c.R.matrix())) return {VerifyReason::transform_mismatch};
  if (!c.type.ua.non_decreasing() || !is_admissible(c.type.ua, c.type.sigma)) return {VerifyReason::not_admissible};
  if (!is_reduced(c.R, c.type)) return {VerifyReason::not_reduced};
  if (!is_standard(c.type.ua, c.type.sigma)) return {VerifyReason::not_standard};
  return {};
}

}  // namespace gk
