#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown for malformed user data; the message starts with a stable reason tag.
class InvalidInput : public std::invalid_argument {
 public:
  InvalidInput(const std::string& reason, const std::string& detail)
      : std::invalid_argument(reason + ": " + detail), reason_(reason) {}
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

// Thrown when an algorithm cannot finish; never used for bad input.
class InternalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExhausted : public InternalFailure {
 public:
  using InternalFailure::InternalFailure;
};

// p-adic order; infinity sorts above every finite value.
class Ord {
 public:
  constexpr Ord() = default;
  constexpr explicit Ord(long v) : v_(v) {}
  static constexpr Ord infinity() { return Ord(kInf); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  long value() const {
    if (is_infinite()) throw InternalFailure("finite value of infinite order requested");
    return v_;
  }
  constexpr auto operator<=>(const Ord&) const = default;
  constexpr bool operator==(const Ord&) const = default;
  constexpr bool operator==(long v) const { return v_ == v; }
  constexpr auto operator<=>(long v) const { return v_ <=> v; }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr long kInf = std::numeric_limits<long>::max();
  long v_ = 0;
};

// 2*o >= bound, with infinity satisfying every bound.
inline bool twice_at_least(Ord o, long bound) { return o.is_infinite() || 2 * o.value() >= bound; }
inline bool twice_above(Ord o, long bound) { return o.is_infinite() || 2 * o.value() > bound; }

class PrimeContext {
 public:
  explicit PrimeContext(long p);
  long p() const { return p_; }
  // Ramification index of 2 in Q_p: 1 for p = 2, else 0.
  int e() const { return p_ == 2 ? 1 : 0; }
  bool dyadic() const { return p_ == 2; }
  // Smallest positive quadratic non-residue (p odd); 5 for p = 2.
  long nonresidue() const { return nonresidue_; }
  bool operator==(const PrimeContext& o) const { return p_ == o.p_; }

 private:
  long p_;
  long nonresidue_;
};

Ord valuation(const Integer& x, const PrimeContext& ctx);
Ord valuation(const Rational& x, const PrimeContext& ctx);

// x / p^ord(x); x must be nonzero.
Rational unit_part(const Rational& x, const PrimeContext& ctx);
Rational pow_p(const PrimeContext& ctx, long k);

// Image of a p-adic unit (rational with numerator and denominator prime to p) in Z/m.
long residue_mod(const Rational& unit, long m);

bool is_integral(const Rational& x, const PrimeContext& ctx);
bool is_unit(const Rational& x, const PrimeContext& ctx);
bool is_square(const Rational& x, const PrimeContext& ctx);

int hilbert_symbol(const Rational& a, const Rational& b, const PrimeContext& ctx);

enum class ExtKind { split, inert, ramified };

struct QuadExtKind {
  ExtKind kind;
  int d;  // order of the relative discriminant
  bool operator==(const QuadExtKind&) const = default;
};

const char* to_string(ExtKind k);

QuadExtKind quad_ext(const Rational& xi, const PrimeContext& ctx);
// 1 split, -1 inert, 0 ramified.
int xi_code(const Rational& xi, const PrimeContext& ctx);

// Representatives of Q_p^x / (Q_p^x)^2: {1,u,p,up} for odd p, {+-1,+-2,+-5,+-10} for p = 2.
std::vector<Rational> square_class_representatives(const PrimeContext& ctx);

}  // namespace gk
