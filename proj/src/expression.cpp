#include "qaw/expression.hpp"

#include <algorithm>
#include <set>

namespace qaw {

Prefactor& Prefactor::normalize() {
  if (power.n2 != 0) {
    if (power.n2 % 2 != 0)
      throw Error(ErrorCode::ConstraintViolated, "power base with half-integer n coefficient");
    qbinom_exp += power.n2;      // 2*beta
    power.q2 = static_cast<std::int16_t>(power.q2 + power.n2);
    power.n2 = 0;
  }
  if (power.sign < 0) {
    sign_exp += 1;
    power.sign = 1;
  }
  return *this;
}

Rational eval_prefactor(const Prefactor& p, const PointEnv& env) {
  Prefactor c = p;
  c.normalize();
  const int n = env.n;
  Rational r = env.q.pow(static_cast<long>(c.qbinom_exp) * binom2(n));
  if ((c.sign_exp % 2 != 0) && (n % 2 != 0)) r = -r;
  if (!c.power.is_one()) r *= eval_monomial(c.power, env).pow(n);
  for (const auto& f : c.poch) {
    Rational base = eval_monomial(f.base, env);
    Rational v = q_pochhammer(base, env.q, f.len.resolve(n));
    if (f.exp >= 0) {
      for (int i = 0; i < f.exp; ++i) r *= v;
    } else {
      if (v.is_zero())
        throw Error(ErrorCode::DivergentDenominator,
                    "prefactor base " + f.base.str(env.frame) + " lies in Omega_q^len");
      for (int i = 0; i < -f.exp; ++i) r /= v;
    }
  }
  return r;
}

Rational eval_series(const SeriesSpec& s, const PointEnv& env) {
  if (std::holds_alternative<PhiSpec>(s)) return eval_phi(std::get<PhiSpec>(s), env);
  return eval_w(std::get<WSpec>(s), env);
}

Rational eval_expression(const Expression& e, const PointEnv& env) {
  return eval_prefactor(e.prefactor, env) * eval_series(e.series, env);
}

std::vector<Guard> series_guards(const SeriesSpec& s) {
  std::vector<Guard> g;
  if (std::holds_alternative<PhiSpec>(s)) {
    const auto& phi = std::get<PhiSpec>(s);
    for (const auto& l : phi.lower) g.push_back(Guard::omega(l));
    for (std::size_t i = 0; i < phi.upper.size(); ++i)
      if (static_cast<int>(i) != phi.term_slot) g.push_back(Guard::omega(phi.upper[i]));
  } else {
    const auto& w = std::get<WSpec>(s);
    g.push_back(Guard::special_b(w.special));
    const ParamMonomial q1 = ParamMonomial::qpow(1);
    for (std::size_t i = 0; i < w.numer.size(); ++i) {
      g.push_back(Guard::omega(q1 * w.special / w.numer[i]));
      if (static_cast<int>(i) != w.term_slot) g.push_back(Guard::omega(w.numer[i]));
    }
  }
  return g;
}

std::vector<Guard> expression_guards(const Expression& e) {
  std::vector<Guard> g = series_guards(e.series);
  for (const auto& f : e.prefactor.poch) g.push_back(Guard::omega(f.base, f.len));
  dedupe_guards(g);
  return g;
}

void dedupe_guards(std::vector<Guard>& guards) {
  std::set<std::string> seen;
  std::vector<Guard> out;
  for (const auto& g : guards) {
    std::string key;
    key.push_back(static_cast<char>(g.kind));
    key.push_back(static_cast<char>(g.len.kind));
    key.push_back(static_cast<char>(g.len.fixed));
    g.m.encode(key);
    if (seen.insert(key).second) out.push_back(g);
  }
  guards.swap(out);
}

namespace {
std::vector<ParamMonomial> sorted(std::vector<ParamMonomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

bool series_equal_canonical(const SeriesSpec& a, const SeriesSpec& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<PhiSpec>(a)) {
    const auto &x = std::get<PhiSpec>(a), &y = std::get<PhiSpec>(b);
    return x.zero_pad == y.zero_pad && x.argument == y.argument &&
           sorted(x.upper) == sorted(y.upper) && sorted(x.lower) == sorted(y.lower);
  }
  const auto &x = std::get<WSpec>(a), &y = std::get<WSpec>(b);
  return x.special == y.special && x.argument == y.argument && sorted(x.numer) == sorted(y.numer);
}

}  // namespace qaw
