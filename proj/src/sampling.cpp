#include "qaw/sampling.hpp"

#include <random>

namespace qaw {

bool Guard::satisfied(const PointEnv& env) const {
  Rational v;
  try {
    v = eval_monomial(m, env);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NonsquareValue) return false;
    throw;
  }
  if (v.is_zero()) return false;
  if (kind == Kind::Omega) {
    int horizon = len.resolve(env.n);
    for (int k = 0; k < horizon; ++k) {
      if (v == Rational::one()) return false;
      v *= env.q;
    }
    return true;
  }
  // SpecialB
  for (int k = 0; k <= env.n; ++k) {
    if (v == Rational::one()) return false;
    v *= env.q * env.q;
  }
  return true;
}

bool guards_satisfied(const std::vector<Guard>& guards, const PointEnv& env) {
  for (const auto& g : guards)
    if (!g.satisfied(env)) return false;
  return true;
}

namespace {
// Raw engine draws only; std distributions are implementation-defined and
// would break the same-seed-same-env contract across toolchains.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}
}  // namespace

PointEnv sample_point(const Frame& frame, int n, std::uint64_t seed,
                      const std::vector<Guard>& guards) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  constexpr int kMaxAttempts = 20000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    PointEnv env;
    env.frame = frame;
    env.n = n;
    long den = static_cast<long>(draw(rng, 31)) + 2;   // 2..32
    long num = static_cast<long>(draw(rng, static_cast<std::uint64_t>(den - 1))) + 1;  // 1..den-1
    env.q = Rational(num, den);

    bool ok = true;
    for (int i = 0; i < frame.size() && ok; ++i) {
      long vn = static_cast<long>(draw(rng, 32)) + 1;
      long vd = static_cast<long>(draw(rng, 32)) + 1;
      bool neg = draw(rng, 2) == 1;
      Rational v(neg ? -vn : vn, vd);
      if (v == env.q) {
        ok = false;
        break;
      }
      for (int j = 0; j < i; ++j)
        if (env.values[static_cast<std::size_t>(j)] == v) {
          ok = false;
          break;
        }
      env.values[static_cast<std::size_t>(i)] = v;
    }
    if (!ok) continue;
    if (!guards_satisfied(guards, env)) continue;
    return env;
  }
  throw Error(ErrorCode::SamplingExhausted,
              "no admissible point after bounded retries; guards look over-constrained");
}

}  // namespace qaw
