#pragma once

#include <array>

#include "qaw/monomial.hpp"
#include "qaw/rational.hpp"

namespace qaw {

// Concrete evaluation point: rational q outside {0, 1, -1}, a nonnegative
// degree n, and a nonzero rational value per frame variable. Immutable value
// type, safe to share across threads.
struct PointEnv {
  Frame frame{FrameKind::BCDEF};
  Rational q;
  int n = 0;
  std::array<Rational, kMaxVars> values{};

  void validate() const {
    if (q.is_zero() || q == Rational(1) || q == Rational(-1))
      throw Error(ErrorCode::ConstraintViolated, "q must avoid {0,1,-1}");
    if (n < 0) throw Error(ErrorCode::ConstraintViolated, "n must be nonnegative");
    for (int i = 0; i < frame.size(); ++i)
      if (values[static_cast<std::size_t>(i)].is_zero())
        throw Error(ErrorCode::ConstraintViolated, "frame values must be nonzero");
  }

  std::uint64_t fingerprint() const;
};

// sign * q^{alpha+beta*n} * prod v^e, exactly. Half-integer exponents demand
// exact square roots of the bases and throw NonsquareValue otherwise.
Rational eval_monomial(const ParamMonomial& m, const PointEnv& env);

}  // namespace qaw
