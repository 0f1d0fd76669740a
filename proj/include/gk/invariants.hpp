#pragma once

#include <vector>

#include "gk/egk.hpp"
#include "gk/involutions.hpp"
#include "gk/qform.hpp"
#include "gk/reducer.hpp"

namespace gk {

ExponentSeq gk(const HalfIntegralForm& b, const ReduceOptions& opt = {});

// xi_B = xi_code(D_B). Only meaningful for even n; odd n is accepted and evaluated the same way.
int xi(const HalfIntegralForm& b);
inline bool xi_defined_for(std::size_t n) { return n % 2 == 0; }

// Diagonal entries of a Q_p-diagonalization of B.
std::vector<Rational> field_diagonalization(const HalfIntegralForm& b);
int eta(const HalfIntegralForm& b);

struct BinaryClass {
  QuadExtKind ext;
  int f = 0;
  bool decomposable = false;
  int scale = 0;  // ord of the norm ideal
  ExponentSeq predicted;
};
BinaryClass classify_binary(const HalfIntegralForm& b);
// GK of [[b11,b12],[b12,b22]].
ExponentSeq binary_gk(const Rational& b11, const Rational& b12, const Rational& b22, const PrimeContext& ctx);
bool is_optimal_binary(const HalfIntegralForm& b, const ExponentSeq& ua);

EGKDatum egk_of(const HalfIntegralForm& b, const ReduceOptions& opt = {});
// Same, from an already reduced form of known type.
EGKDatum egk_of_reduced(const HalfIntegralForm& r, const ExponentSeq& ua);

// Order bounds on entries of the inverse of a dyadic reduced form with n even and |ua| odd.
bool check_inverse_bounds(const HalfIntegralForm& b, const GKType& t);

}  // namespace gk
