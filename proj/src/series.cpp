#include "qaw/series.hpp"

#include <algorithm>
#include <sstream>

namespace qaw {

void PhiSpec::validate() const {
  if (upper.empty() || term_slot < 0 || term_slot >= static_cast<int>(upper.size()))
    throw Error(ErrorCode::NoTerminatingSlot, "terminating slot index out of range");
  if (!terminating().is_q_minus_n())
    throw Error(ErrorCode::NoTerminatingSlot, "terminating slot must be the monomial q^-n");
  int hits = 0;
  for (const auto& u : upper)
    if (u.is_q_minus_n()) ++hits;
  if (hits != 1)
    throw Error(ErrorCode::NoTerminatingSlot, "exactly one terminating parameter expected");
}

void WSpec::validate() const {
  if (numer.empty() || term_slot < 0 || term_slot >= static_cast<int>(numer.size()))
    throw Error(ErrorCode::NoTerminatingSlot, "terminating slot index out of range");
  if (!terminating().is_q_minus_n())
    throw Error(ErrorCode::NoTerminatingSlot, "terminating slot must be the monomial q^-n");
  int hits = 0;
  for (const auto& a : numer)
    if (a.is_q_minus_n()) ++hits;
  if (hits != 1)
    throw Error(ErrorCode::NoTerminatingSlot, "exactly one terminating parameter expected");
}

PhiSpec WSpec::expand() const {
  validate();
  if (!special.integral())
    throw Error(ErrorCode::NonsquareValue, "expansion needs integer exponents on the b slot");
  ParamMonomial root = special.sqrt();
  ParamMonomial q1 = ParamMonomial::qpow(1);
  PhiSpec phi;
  phi.upper.push_back(special);
  phi.upper.push_back(q1 * root);
  phi.upper.push_back(-(q1 * root));
  for (const auto& a : numer) phi.upper.push_back(a);
  phi.term_slot = 3 + term_slot;
  phi.lower.push_back(root);
  phi.lower.push_back(-root);
  for (const auto& a : numer) phi.lower.push_back(q1 * special / a);
  phi.argument = argument;
  phi.zero_pad = 0;
  return phi;
}

namespace {

[[noreturn]] void divergent(const ParamMonomial& p, const Frame& frame, int k) {
  std::ostringstream os;
  os << "lower parameter " << p.str(frame) << " lies in Omega_q^n: (a;q)_k vanishes at k=" << k;
  throw Error(ErrorCode::DivergentDenominator, os.str());
}

// Vanishing index of (value;q)_k over k<=n: smallest k with value*q^{k-1}=1,
// or 0 when none.
int poch_vanish_index(const Rational& value, const Rational& q, int n) {
  Rational v = value;
  for (int m = 0; m < n; ++m) {
    if (v == Rational::one()) return m + 1;
    v *= q;
  }
  return 0;
}

}  // namespace

Rational eval_phi(const PhiSpec& spec, const PointEnv& env) {
  spec.validate();
  const int n = env.n;
  const Rational& q = env.q;

  std::vector<Rational> uppers, lowers;
  uppers.reserve(spec.upper.size());
  for (const auto& u : spec.upper) uppers.push_back(eval_monomial(u, env));
  lowers.reserve(spec.lower.size());
  for (std::size_t j = 0; j < spec.lower.size(); ++j) {
    Rational v = eval_monomial(spec.lower[j], env);
    if (int k = poch_vanish_index(v, q, n); k != 0) divergent(spec.lower[j], env.frame, k);
    lowers.push_back(v);
  }
  Rational z = eval_monomial(spec.argument, env);
  const int ex = spec.term_factor_exponent();

  Rational sum = Rational::one();  // k = 0 term
  Rational term = Rational::one();
  Rational qk = Rational::one();        // q^{k-1} while stepping to term k
  Rational qpow = Rational::one();      // q^k running power for (q;q)_k
  for (int k = 1; k <= n; ++k) {
    // term_k / term_{k-1} = z * ((-1) q^{k-1})^ex * prod(1-u q^{k-1}) / ((1-q^k) prod(1-l q^{k-1}))
    Rational ratio = z;
    for (const auto& u : uppers) ratio *= Rational::one() - u * qk;
    qpow *= q;
    Rational denom = Rational::one() - qpow;
    for (const auto& l : lowers) denom *= Rational::one() - l * qk;
    ratio /= denom;
    if (ex != 0) {
      Rational f = qk.pow(ex);
      if (ex % 2 != 0) f = -f;
      ratio *= f;
    }
    term *= ratio;
    sum += term;
    qk *= q;
  }
  return sum;
}

Rational eval_w(const WSpec& spec, const PointEnv& env) {
  spec.validate();
  const int n = env.n;
  const Rational& q = env.q;

  Rational b = eval_monomial(spec.special, env);
  // Special points of the very-well-poised factor: b=1, or b=q^{-2k}, k<=n.
  {
    Rational v = b;
    for (int k = 0; k <= n; ++k) {
      if (v == Rational::one())
        throw Error(ErrorCode::SpecialPointB,
                    "b slot " + spec.special.str(env.frame) + " hits q^{-2k} with k=" + std::to_string(k));
      v *= q * q;
    }
  }

  std::vector<Rational> numers, denoms;
  for (std::size_t j = 0; j < spec.numer.size(); ++j) {
    Rational a = eval_monomial(spec.numer[j], env);
    numers.push_back(a);
    Rational d = q * b / a;
    if (int k = poch_vanish_index(d, q, n); k != 0) {
      ParamMonomial dm = ParamMonomial::qpow(1) * spec.special / spec.numer[j];
      divergent(dm, env.frame, k);
    }
    denoms.push_back(d);
  }
  Rational z = eval_monomial(spec.argument, env);

  Rational one = Rational::one();
  Rational sum = one;  // k = 0
  Rational poch = one;     // running prod (b,numers;q)_k / ((q,denoms;q)_k)
  Rational zk = one;
  Rational qk = one;       // q^{k-1} when stepping
  Rational qpow = one;     // q^k
  Rational q2k = one;      // q^{2k}
  for (int k = 1; k <= n; ++k) {
    Rational num = one - b * qk;
    for (const auto& a : numers) num *= one - a * qk;
    qpow *= q;
    Rational den = one - qpow;
    for (const auto& d : denoms) den *= one - d * qk;
    poch *= num / den;
    zk *= z;
    q2k *= q * q;
    sum += (one - b * q2k) / (one - b) * poch * zk;
    qk *= q;
  }
  return sum;
}

std::optional<int> balance_level(const PhiSpec& spec) {
  ParamMonomial pu = ParamMonomial::one(), pl = ParamMonomial::one();
  for (const auto& u : spec.upper) pu *= u;
  for (const auto& l : spec.lower) pl *= l;
  ParamMonomial ratio = pl / pu;  // should be q^l
  if (ratio.sign != 1 || ratio.n2 != 0 || !ratio.vars_trivial()) return std::nullopt;
  if (ratio.q2 % 2 != 0) return std::nullopt;
  return ratio.q2 / 2;
}

bool is_very_well_poised(const PhiSpec& spec) {
  if (spec.upper.size() != spec.lower.size() + 1) return false;
  const ParamMonomial q1 = ParamMonomial::qpow(1);
  for (std::size_t i = 0; i < spec.upper.size(); ++i) {
    const ParamMonomial& a1 = spec.upper[i];
    // Well-poised: the remaining uppers pair with the lowers via q a1 = u*l.
    std::vector<ParamMonomial> rest;
    for (std::size_t j = 0; j < spec.upper.size(); ++j)
      if (j != i) rest.push_back(spec.upper[j]);
    std::vector<bool> used(spec.lower.size(), false);
    bool ok = true;
    for (const auto& u : rest) {
      ParamMonomial want = q1 * a1 / u;
      bool found = false;
      for (std::size_t j = 0; j < spec.lower.size(); ++j) {
        if (!used[j] && spec.lower[j] == want) {
          used[j] = true;
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // Very-well-poised: some pair {u2,u3} = {+q sqrt(a1), -q sqrt(a1)};
    // checked as u2^2 = q^2 a1 with u3 = -u2, no root extraction needed.
    for (std::size_t j = 0; j < rest.size(); ++j) {
      const ParamMonomial& u2 = rest[j];
      if (u2.sign != 1) continue;
      if (u2.pow(2) != q1.pow(2) * a1) continue;
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (k != j && rest[k] == -u2) return true;
    }
  }
  return false;
}

}  // namespace qaw
