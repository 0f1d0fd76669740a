#include "gk/qform.hpp"

#include <algorithm>
#include <sstream>

namespace gk {

long ExponentSeq::sum() const {
  long s = 0;
  for (int x : v_) s += x;
  return s;
}

bool ExponentSeq::non_decreasing() const { return std::is_sorted(v_.begin(), v_.end()); }

ExponentSeq ExponentSeq::prefix(std::size_t m) const {
  return ExponentSeq(std::vector<int>(v_.begin(), v_.begin() + static_cast<long>(m)));
}

ExponentSeq ExponentSeq::negated() const {
  std::vector<int> w(v_);
  for (int& x : w) x = -x;
  return ExponentSeq(std::move(w));
}

std::string ExponentSeq::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

std::string to_string(const Rational& x) { return x.get_str(); }

HalfIntegralForm trusted_form(const Matrix& m, const PrimeContext& ctx) {
  HalfIntegralForm f(ctx);
  f.m_ = m;
  f.det_ = m.rows() ? m.determinant() : Rational(1);
  return f;
}

HalfIntegralForm HalfIntegralForm::validate(const Matrix& m, const PrimeContext& ctx) {
  if (!m.square()) throw InvalidInput("not_square", "matrix must be square");
  if (!m.is_symmetric()) throw InvalidInput("asymmetric", "matrix is not symmetric");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (valuation(m(i, i), ctx) < 0)
      throw InvalidInput("diagonal_not_integral", "entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                                                      ") = " + to_string(m(i, i)));
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (valuation(Rational(2 * m(i, j)), ctx) < 0)
        throw InvalidInput("offdiagonal_not_half_integral", "entry (" + std::to_string(i + 1) + "," +
                                                                std::to_string(j + 1) + ") = " + to_string(m(i, j)));
  }
  return trusted_form(m, ctx);
}

UnimodularTransform trusted_transform(Matrix m) { return UnimodularTransform(std::move(m)); }

bool is_unimodular(const Matrix& m, const PrimeContext& ctx) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integral(m(i, j), ctx)) return false;
  return m.rows() == 0 || is_unit(m.determinant(), ctx);
}

UnimodularTransform UnimodularTransform::validate(const Matrix& m, const PrimeContext& ctx) {
  if (!is_unimodular(m, ctx)) throw InvalidInput("not_unimodular", "transform is not in GL_n(Z_p)");
  return UnimodularTransform(m);
}

HalfIntegralForm transform(const HalfIntegralForm& b, const UnimodularTransform& u) {
  if (u.size() != b.size()) throw InvalidInput("shape", "transform size mismatch");
  return trusted_form(u.matrix().transpose() * b.matrix() * u.matrix(), b.ctx());
}

HalfIntegralForm leading(const HalfIntegralForm& b, std::size_t m) {
  if (m > b.size()) throw InvalidInput("shape", "leading block larger than form");
  return trusted_form(b.matrix().block(0, 0, m, m), b.ctx());
}

HalfIntegralForm direct_sum(const HalfIntegralForm& a, const HalfIntegralForm& b) {
  if (!(a.ctx() == b.ctx())) throw InvalidInput("context_mismatch", "direct sum over different primes");
  std::size_t n = a.size(), m = b.size();
  Matrix s(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = b(i, j);
  return trusted_form(s, a.ctx());
}

HalfIntegralForm scale(const HalfIntegralForm& b, const Rational& c) {
  Matrix m = b.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= c;
  return HalfIntegralForm::validate(m, b.ctx());
}

HalfIntegralForm delete_index(const HalfIntegralForm& b, std::size_t i) {
  return trusted_form(b.matrix().minor_matrix(i), b.ctx());
}

Rational disc_D(const HalfIntegralForm& b) {
  Rational d = b.det();
  for (std::size_t k = 0; k < b.size() / 2; ++k) d *= -4;
  return d;
}

int delta(const HalfIntegralForm& b) {
  if (b.degenerate()) throw InvalidInput("degenerate", "delta of a degenerate form");
  Rational D = disc_D(b);
  long o = valuation(D, b.ctx()).value();
  if (b.size() % 2 == 1) return static_cast<int>(o);
  QuadExtKind q = quad_ext(D, b.ctx());
  int xi = xi_code(D, b.ctx());
  return static_cast<int>(o - q.d + 1 - xi * xi);
}

Ord entry_ord(const HalfIntegralForm& b, std::size_t i, std::size_t j) {
  if (i == j) return valuation(b(i, i), b.ctx());
  return valuation(Rational(2 * b(i, j)), b.ctx());
}

Ord norm_ideal_ord(const HalfIntegralForm& b) {
  Ord best = Ord::infinity();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) best = std::min(best, entry_ord(b, i, j));
  return best;
}

bool membership(const HalfIntegralForm& b, const ExponentSeq& ua, Strictness s) {
  if (ua.size() != b.size()) throw InvalidInput("shape", "exponent sequence length differs from form size");
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) {
      Ord o = entry_ord(b, i, j);
      long bound = ua[i] + ua[j];  // compare 2*ord against a_i + a_j (2 a_i on the diagonal)
      bool ok = s == Strictness::lax ? twice_at_least(o, bound) : twice_above(o, bound);
      if (!ok) return false;
    }
  return true;
}

GMembership in_G_ua(const UnimodularTransform& u, const ExponentSeq& ua, const PrimeContext& ctx) {
  const Matrix& g = u.matrix();
  if (g.rows() != ua.size()) throw InvalidInput("shape", "transform size differs from exponent length");
  GMembership r;
  r.in_G = is_unimodular(g, ctx);
  bool zero_below = true, zero_above = true, id_blocks = true;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Rational& x = g(i, j);
      if (ua[i] < ua[j] && !twice_at_least(valuation(x, ctx), ua[j] - ua[i])) r.in_G = false;
      if (ua[i] > ua[j] && x != 0) zero_below = false;
      if (ua[i] < ua[j] && x != 0) zero_above = false;
      if (ua[i] == ua[j] && x != (i == j ? 1 : 0)) id_blocks = false;
    }
  r.upper = r.in_G && zero_below;
  r.lower = r.in_G && zero_above;
  r.unipotent_upper = r.upper && id_blocks;
  r.unipotent_lower = r.lower && id_blocks;
  return r;
}

ExponentSeq greatest_in_S(const HalfIntegralForm& b) {
  std::size_t n = b.size();
  std::vector<int> a;
  for (std::size_t k = 0; k < n; ++k) {
    // Largest y with (a_1..a_{k-1}, y, ..., y) in S(B).
    Ord y = Ord::infinity();
    for (std::size_t j = k; j < n; ++j) {
      y = std::min(y, entry_ord(b, j, j));
      for (std::size_t i = 0; i < k; ++i) {
        Ord o = entry_ord(b, i, j);
        if (!o.is_infinite()) y = std::min(y, Ord(2 * o.value() - a[i]));
      }
      for (std::size_t i = k; i < j; ++i) y = std::min(y, entry_ord(b, i, j));
    }
    if (y.is_infinite()) throw InvalidInput("degenerate", "S(B) is unbounded for a degenerate form");
    a.push_back(static_cast<int>(y.value()));
  }
  return ExponentSeq(std::move(a));
}

}  // namespace gk
