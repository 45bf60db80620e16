#include "qaw/poch.hpp"

namespace qaw {

Rational q_pochhammer(const Rational& a, const Rational& q, int k) {
  Rational r = Rational::one();
  Rational aq = a;
  for (int j = 0; j < k; ++j) {
    r *= Rational::one() - aq;
    aq *= q;
  }
  return r;
}

Rational poch_base_invert(const Rational& a, const Rational& q, int k) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroBase, "base inversion needs a nonzero base");
  Rational r = q_pochhammer(a.inverse(), q, k);
  r *= (-a).pow(k);
  r *= q.pow(-binom2(k));
  return r;
}

}  // namespace qaw
