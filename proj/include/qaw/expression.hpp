#pragma once

#include <variant>
#include <vector>

#include "qaw/sampling.hpp"
#include "qaw/series.hpp"

namespace qaw {

// One Pochhammer factor of a prefactor: (base;q)_len to the power exp.
struct PochFactor {
  ParamMonomial base;
  PochLength len = PochLength::n();
  int exp = 1;
};

// q^{u*binom(n,2)} * (-1)^{v*n} * M^n * prod (base;q)_len^exp.
// Canonical form keeps M with positive sign and no n-dependence; normalize()
// folds M's sign into v and an n-coefficient beta into u (q^{beta n^2} =
// q^{2 beta binom(n,2)} q^{beta n}).
struct Prefactor {
  int qbinom_exp = 0;           // u
  int sign_exp = 0;             // v, mod 2 meaningful
  ParamMonomial power = ParamMonomial::one();  // M
  std::vector<PochFactor> poch;

  Prefactor& normalize();
  Prefactor& mul_poch(ParamMonomial base, PochLength len, int exp) {
    poch.push_back({std::move(base), len, exp});
    return *this;
  }
  bool trivial() const {
    return qbinom_exp == 0 && sign_exp % 2 == 0 && power.is_one() && poch.empty();
  }
};

Rational eval_prefactor(const Prefactor& p, const PointEnv& env);

using SeriesSpec = std::variant<PhiSpec, WSpec>;

// Prefactor times a series: the shape of every right-hand side in scope.
struct Expression {
  Prefactor prefactor;
  SeriesSpec series;

  static Expression bare(PhiSpec s) { return {Prefactor{}, SeriesSpec(std::move(s))}; }
  static Expression bare(WSpec s) { return {Prefactor{}, SeriesSpec(std::move(s))}; }
};

Rational eval_series(const SeriesSpec& s, const PointEnv& env);
Rational eval_expression(const Expression& e, const PointEnv& env);

// Mechanically derived admissibility guards: every Pochhammer base of the
// prefactor, every series denominator parameter (with the special-b condition
// for W series), and the non-terminating numerator parameters (keeps sampled
// points generic, no early truncation).
std::vector<Guard> series_guards(const SeriesSpec& s);
std::vector<Guard> expression_guards(const Expression& e);
void dedupe_guards(std::vector<Guard>& guards);

// Canonical comparison of series specs: parameter lists sorted by the total
// monomial order; arguments and zero padding must match exactly.
bool series_equal_canonical(const SeriesSpec& a, const SeriesSpec& b);

}  // namespace qaw
