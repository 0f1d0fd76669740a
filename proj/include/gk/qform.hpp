#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gk/matrix.hpp"
#include "gk/padic.hpp"

namespace gk {

// Finite sequence of integers ordered lexicographically (GK candidates).
class ExponentSeq {
 public:
  ExponentSeq() = default;
  ExponentSeq(std::initializer_list<int> v) : v_(v) {}
  explicit ExponentSeq(std::vector<int> v) : v_(std::move(v)) {}

  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  const std::vector<int>& values() const { return v_; }
  long sum() const;
  bool non_decreasing() const;
  ExponentSeq prefix(std::size_t m) const;
  ExponentSeq negated() const;

  auto operator<=>(const ExponentSeq&) const = default;
  bool operator==(const ExponentSeq&) const = default;
  std::string str() const;

 private:
  std::vector<int> v_;
};

// Symmetric matrix with b_ii in Z_p and 2 b_ij in Z_p; immutable once validated.
class HalfIntegralForm {
 public:
  HalfIntegralForm(const PrimeContext& ctx) : ctx_(ctx) {}

  // Throws InvalidInput with reason asymmetric / diagonal_not_integral / offdiagonal_not_half_integral.
  static HalfIntegralForm validate(const Matrix& m, const PrimeContext& ctx);

  const PrimeContext& ctx() const { return ctx_; }
  std::size_t size() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Rational& det() const { return det_; }
  bool degenerate() const { return det_ == 0; }

  bool operator==(const HalfIntegralForm& o) const { return ctx_ == o.ctx_ && m_ == o.m_; }

 private:
  friend HalfIntegralForm trusted_form(const Matrix& m, const PrimeContext& ctx);
  PrimeContext ctx_;
  Matrix m_;
  Rational det_ = 1;
};

// Builds a form from a matrix already known to be half-integral (internal use).
HalfIntegralForm trusted_form(const Matrix& m, const PrimeContext& ctx);

// Matrix in GL_n(Z_p).
class UnimodularTransform {
 public:
  static UnimodularTransform validate(const Matrix& m, const PrimeContext& ctx);
  static UnimodularTransform identity(std::size_t n) { return UnimodularTransform(Matrix::identity(n)); }
  static UnimodularTransform permutation(const std::vector<int>& perm) {
    return UnimodularTransform(permutation_matrix(perm));
  }
  const Matrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  UnimodularTransform then(const UnimodularTransform& next) const { return UnimodularTransform(m_ * next.m_); }

 private:
  explicit UnimodularTransform(Matrix m) : m_(std::move(m)) {}
  friend UnimodularTransform trusted_transform(Matrix m);
  Matrix m_;
};

UnimodularTransform trusted_transform(Matrix m);
bool is_unimodular(const Matrix& m, const PrimeContext& ctx);

// tU B U
HalfIntegralForm transform(const HalfIntegralForm& b, const UnimodularTransform& u);
HalfIntegralForm leading(const HalfIntegralForm& b, std::size_t m);
HalfIntegralForm direct_sum(const HalfIntegralForm& a, const HalfIntegralForm& b);
HalfIntegralForm scale(const HalfIntegralForm& b, const Rational& c);
// Remove row and column i.
HalfIntegralForm delete_index(const HalfIntegralForm& b, std::size_t i);

// (-4)^[n/2] det B
Rational disc_D(const HalfIntegralForm& b);
// Expected length of the GK invariant.
int delta(const HalfIntegralForm& b);
// min(ord b_ii, ord 2 b_ij); infinite for the zero matrix.
Ord norm_ideal_ord(const HalfIntegralForm& b);
// Order of the entry that the membership conditions use: b_ii on the diagonal, 2 b_ij off it.
Ord entry_ord(const HalfIntegralForm& b, std::size_t i, std::size_t j);

enum class Strictness { lax, strict };
// B in M(ua) (lax) or M^0(ua) (strict).
bool membership(const HalfIntegralForm& b, const ExponentSeq& ua, Strictness s = Strictness::lax);

struct GMembership {
  bool in_G = false;
  bool upper = false;       // G^up: g_ij = 0 when a_i > a_j
  bool lower = false;       // G^down: g_ij = 0 when a_i < a_j
  bool unipotent_upper = false;
  bool unipotent_lower = false;
};
GMembership in_G_ua(const UnimodularTransform& u, const ExponentSeq& ua, const PrimeContext& ctx);

// Greatest element of S(B) for this fixed basis.
ExponentSeq greatest_in_S(const HalfIntegralForm& b);

std::string to_string(const Rational& x);

}  // namespace gk
