#pragma once

#include <optional>
#include <vector>

#include "qaw/point_env.hpp"
#include "qaw/poch.hpp"

namespace qaw {

// Terminating basic hypergeometric series, symbolically specified. One upper
// parameter is flagged as the terminating slot and must be the monomial
// q^{-n}. zero_pad counts extra zero entries (negative: upper, positive:
// lower); together with the list lengths it fixes the exponent of the
// (-1)^k q^{binom(k,2)} term factor.
struct PhiSpec {
  std::vector<ParamMonomial> upper;
  std::vector<ParamMonomial> lower;
  ParamMonomial argument;
  int term_slot = 0;  // index into upper
  int zero_pad = 0;

  void validate() const;
  // 1 + s - r counted after zero padding.
  int term_factor_exponent() const {
    int r = static_cast<int>(upper.size()) + (zero_pad < 0 ? -zero_pad : 0);
    int s = static_cast<int>(lower.size()) + (zero_pad > 0 ? zero_pad : 0);
    return 1 + s - r;
  }
  const ParamMonomial& terminating() const { return upper[static_cast<std::size_t>(term_slot)]; }
};

// Terminating very-well-poised series at the r=7 arity the catalog needs
// (the evaluator itself is arity-generic over `numer`; widening `numer`
// is the extension point for general r).
struct WSpec {
  ParamMonomial special;  // the b slot
  std::vector<ParamMonomial> numer;  // exactly 5 entries for 8W7, one flagged terminating
  ParamMonomial argument;
  int term_slot = 0;  // index into numer

  void validate() const;
  const ParamMonomial& terminating() const { return numer[static_cast<std::size_t>(term_slot)]; }

  // Literal expansion with the +-q*sqrt(b) / +-sqrt(b) parameter pairs.
  // Requires integer exponents on the b slot.
  PhiSpec expand() const;
};

// Exact finite sum of n+1 terms. Throws DivergentDenominator (naming the
// offending lower parameter and the k at which its Pochhammer vanishes) when
// a lower parameter lies in Omega_q^n u {0}.
Rational eval_phi(const PhiSpec& spec, const PointEnv& env);

// Exact evaluation through the (1-b q^{2k})/(1-b) very-well-poised factor;
// algebraically identical to the defining series but free of sqrt(b).
// Throws SpecialPointB when b = 1 or b = q^{-2k}, 0 <= k <= n.
Rational eval_w(const WSpec& spec, const PointEnv& env);

// l such that q^l * (product of uppers) = product of lowers as monomials;
// nullopt when no integer l works. Ignores the argument and zero padding.
std::optional<int> balance_level(const PhiSpec& spec);

// Well-poised relations q a_1 = b_j a_{j+1} hold for some pairing and the
// two very-well-poised slots +-q*sqrt(a_1) are present.
bool is_very_well_poised(const PhiSpec& spec);

}  // namespace qaw
