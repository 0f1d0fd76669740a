#pragma once

#include <string>

#include "gk/involutions.hpp"
#include "gk/qform.hpp"

namespace gk {

struct ReductionCertificate {
  UnimodularTransform U;
  HalfIntegralForm R;
  GKType type;
};

bool is_reduced(const HalfIntegralForm& b, const GKType& t);

struct ClearResult {
  UnimodularTransform U;
  HalfIntegralForm form;
};
// Zero the off-diagonal block rows of the leading m x m block outside its fixed points.
// `prefix` is the GK type of that block, which must be reduced.
ClearResult clear_rows(const HalfIntegralForm& b, const GKType& prefix);

// x with ord x >= (a2-a1)/2 and ord(b22 + 2 b12 x + b11 x^2) > a2 (p = 2).
Rational complete_square(const Rational& b11, const Rational& b12, const Rational& b22, int a1, int a2,
                         const PrimeContext& ctx);

ReductionCertificate jordan_nondyadic(const HalfIntegralForm& b);

struct ReduceOptions {
  long budget = 100000;  // maximum number of elementary moves
};

ReductionCertificate reduce(const HalfIntegralForm& b, const ReduceOptions& opt = {});

enum class VerifyReason { ok, size_mismatch, not_unimodular, transform_mismatch, not_admissible, not_reduced, not_standard };
const char* to_string(VerifyReason r);

struct Verification {
  VerifyReason reason = VerifyReason::ok;
  bool valid() const { return reason == VerifyReason::ok; }
};

Verification verify_certificate(const HalfIntegralForm& b, const ReductionCertificate& c);

}  // namespace gk
