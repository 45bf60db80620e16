#pragma once

#include <cstdint>
#include <vector>

#include "qaw/point_env.hpp"
#include "qaw/poch.hpp"

namespace qaw {

// A sampling/evaluation side condition on one monomial.
//   Omega:    value must avoid Omega_q^len u {0} = {q^-k : 0 <= k < len} u {0}
//   SpecialB: value must avoid {q^-2k : 0 <= k <= n} (so in particular 1)
struct Guard {
  enum class Kind : std::uint8_t { Omega, SpecialB };
  ParamMonomial m;
  Kind kind = Kind::Omega;
  PochLength len = PochLength::n();

  static Guard omega(ParamMonomial mono, PochLength l = PochLength::n()) {
    return Guard{std::move(mono), Kind::Omega, l};
  }
  static Guard special_b(ParamMonomial mono) {
    return Guard{std::move(mono), Kind::SpecialB, PochLength::n()};
  }

  bool satisfied(const PointEnv& env) const;
};

bool guards_satisfied(const std::vector<Guard>& guards, const PointEnv& env);

// Deterministic rejection sampler. Values are small rationals (numerator and
// denominator magnitudes <= 32), q in (0,1), frame values nonzero, pairwise
// distinct and distinct from q. Throws SamplingExhausted when the guards
// reject a bounded number of candidates.
PointEnv sample_point(const Frame& frame, int n, std::uint64_t seed,
                      const std::vector<Guard>& guards);

}  // namespace qaw
