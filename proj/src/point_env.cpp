#include "qaw/point_env.hpp"

namespace qaw {

namespace {
// base^(e2/2) with e2 in half-units.
Rational half_pow(const Rational& base, int e2, const char* what) {
  if (e2 % 2 == 0) return base.pow(e2 / 2);
  auto root = base.sqrt_exact();
  if (!root)
    throw Error(ErrorCode::NonsquareValue,
                std::string("half-integer exponent needs an exact square root of ") + base.str() +
                    " in " + what);
  return root->pow(e2);
}
}  // namespace

Rational eval_monomial(const ParamMonomial& m, const PointEnv& env) {
  Rational r = half_pow(env.q, m.q2 + m.n2 * env.n, "the q part");
  for (int i = 0; i < kMaxVars; ++i) {
    int e = m.e2[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    r *= half_pow(env.values[static_cast<std::size_t>(i)], e, "a frame value");
  }
  if (m.sign < 0) r = -r;
  return r;
}

std::uint64_t PointEnv::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(frame.kind));
  mix(static_cast<std::uint64_t>(n));
  mix(q.fnv1a());
  for (int i = 0; i < frame.size(); ++i) mix(values[static_cast<std::size_t>(i)].fnv1a());
  return h;
}

}  // namespace qaw
