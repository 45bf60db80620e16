#include "qaw/transform.hpp"

namespace qaw {

namespace {
const ParamMonomial kQ = ParamMonomial::qpow(1);
const ParamMonomial kQmn = ParamMonomial::qpow(0, -1);  // q^{-n}

ParamMonomial q1mn() { return ParamMonomial::qpow(1, -1); }  // q^{1-n}
}  // namespace

Expression invert_phi(const PhiSpec& spec) {
  spec.validate();
  if (spec.zero_pad != 0)
    throw Error(ErrorCode::TemplateMismatch, "inversion of padded series not needed in scope");
  std::vector<ParamMonomial> a;  // non-terminating uppers
  for (std::size_t i = 0; i < spec.upper.size(); ++i)
    if (static_cast<int>(i) != spec.term_slot) a.push_back(spec.upper[i]);
  const auto& b = spec.lower;
  const int r = static_cast<int>(a.size());
  const int s = static_cast<int>(b.size());

  Prefactor pref;
  pref.qbinom_exp = s - r - 1;
  pref.sign_exp = s - r - 1;
  pref.power = spec.argument / kQ;
  for (const auto& m : a) pref.mul_poch(m, PochLength::n(), +1);
  for (const auto& m : b) pref.mul_poch(m, PochLength::n(), -1);
  pref.normalize();

  PhiSpec out;
  out.upper.push_back(kQmn);
  out.term_slot = 0;
  ParamMonomial prod_b = ParamMonomial::one(), prod_a = ParamMonomial::one();
  for (const auto& m : b) {
    out.upper.push_back(q1mn() / m);
    prod_b *= m;
  }
  for (const auto& m : a) {
    out.lower.push_back(q1mn() / m);
    prod_a *= m;
  }
  out.argument = ParamMonomial::qpow(1, 1) / spec.argument * prod_b / prod_a;
  out.zero_pad = s - r;
  return {pref, SeriesSpec(std::move(out))};
}

Expression invert_w(const WSpec& spec) {
  spec.validate();
  const ParamMonomial& b = spec.special;
  const ParamMonomial& z = spec.argument;
  std::vector<ParamMonomial> rest;
  for (std::size_t i = 0; i < spec.numer.size(); ++i)
    if (static_cast<int>(i) != spec.term_slot) rest.push_back(spec.numer[i]);

  Prefactor pref;
  pref.qbinom_exp = -1;
  pref.sign_exp = 1;
  pref.power = z / kQ;
  pref.mul_poch(kQ * b, PochLength::n(), +1);
  pref.mul_poch(b, PochLength::n(), +1);
  pref.mul_poch(b, PochLength::two_n(), -1);
  ParamMonomial prod = ParamMonomial::one();
  for (const auto& m : rest) {
    pref.mul_poch(m, PochLength::n(), +1);
    pref.mul_poch(kQ * b / m, PochLength::n(), -1);
    prod *= m;
  }
  pref.normalize();

  WSpec out;
  out.special = ParamMonomial::qpow(0, -2) / b;  // q^{-2n}/b
  out.numer.push_back(kQmn);
  out.term_slot = 0;
  for (const auto& m : rest) out.numer.push_back(kQmn * m / b);
  out.argument = ParamMonomial::qpow(4, 2) * b.pow(4) / (z * prod.pow(2));
  return {pref, SeriesSpec(std::move(out))};
}

std::vector<Expression> watson_forms(const WSpec& w) {
  w.validate();
  const ParamMonomial& b = w.special;
  std::vector<ParamMonomial> cdef;
  for (std::size_t i = 0; i < w.numer.size(); ++i)
    if (static_cast<int>(i) != w.term_slot) cdef.push_back(w.numer[i]);
  if (cdef.size() != 4)
    throw Error(ErrorCode::TemplateMismatch, "Watson rewrite needs an 8W7");
  const ParamMonomial &c = cdef[0], &d = cdef[1], &e = cdef[2], &f = cdef[3];
  ParamMonomial want = ParamMonomial::qpow(2, 1) * b.pow(2) / (c * d * e * f);
  if (w.argument != want)
    throw Error(ErrorCode::TemplateMismatch,
                "argument is not q^{n+2} b^2/(cdef); Watson's template does not apply");

  auto N = PochLength::n();
  std::vector<Expression> out;

  {  // q^{-n}, qb/(cd), e, f ; q^{-n}ef/b, qb/c, qb/d
    Prefactor p;
    p.mul_poch(kQ * b, N, +1).mul_poch(kQ * b / (e * f), N, +1);
    p.mul_poch(kQ * b / e, N, -1).mul_poch(kQ * b / f, N, -1);
    PhiSpec s;
    s.upper = {kQmn, kQ * b / (c * d), e, f};
    s.lower = {kQmn * e * f / b, kQ * b / c, kQ * b / d};
    s.argument = kQ;
    s.term_slot = 0;
    out.push_back({p.normalize(), SeriesSpec(std::move(s))});
  }
  {  // q^{-n}, q^{-n}e/b, q^{-n}f/b, qb/(cd) ; q^{-n}ef/b, q^{1-n}/c, q^{1-n}/d
    Prefactor p;
    p.power = kQ * b / (c * d);
    p.mul_poch(kQ * b / (e * f), N, +1).mul_poch(kQ * b, N, +1);
    p.mul_poch(c, N, +1).mul_poch(d, N, +1);
    p.mul_poch(kQ * b / c, N, -1).mul_poch(kQ * b / d, N, -1);
    p.mul_poch(kQ * b / e, N, -1).mul_poch(kQ * b / f, N, -1);
    PhiSpec s;
    s.upper = {kQmn, kQmn * e / b, kQmn * f / b, kQ * b / (c * d)};
    s.lower = {kQmn * e * f / b, q1mn() / c, q1mn() / d};
    s.argument = kQ;
    s.term_slot = 0;
    out.push_back({p.normalize(), SeriesSpec(std::move(s))});
  }
  {  // q^{-n}, qb/(ec), qb/(ed), qb/(ef) ; q^2b^2/(cdef), q^{1-n}/e, qb/e
    Prefactor p;
    p.mul_poch(ParamMonomial::qpow(2) * b.pow(2) / (c * d * e * f), N, +1);
    p.mul_poch(kQ * b, N, +1).mul_poch(e, N, +1);
    p.mul_poch(kQ * b / c, N, -1).mul_poch(kQ * b / d, N, -1).mul_poch(kQ * b / f, N, -1);
    PhiSpec s;
    s.upper = {kQmn, kQ * b / (e * c), kQ * b / (e * d), kQ * b / (e * f)};
    s.lower = {ParamMonomial::qpow(2) * b.pow(2) / (c * d * e * f), q1mn() / e, kQ * b / e};
    s.argument = kQ;
    s.term_slot = 0;
    out.push_back({p.normalize(), SeriesSpec(std::move(s))});
  }
  {  // q^{-n}, q^{-n-1}cdef/b^2, q^{-n}e/b, e ; q^{-n}ec/b, q^{-n}ed/b, q^{-n}ef/b
    Prefactor p;
    p.power = e;
    p.mul_poch(kQ * b / (e * c), N, +1).mul_poch(kQ * b / (e * d), N, +1);
    p.mul_poch(kQ * b / (e * f), N, +1).mul_poch(kQ * b, N, +1);
    p.mul_poch(kQ * b / c, N, -1).mul_poch(kQ * b / d, N, -1);
    p.mul_poch(kQ * b / e, N, -1).mul_poch(kQ * b / f, N, -1);
    PhiSpec s;
    s.upper = {kQmn, ParamMonomial::qpow(-1, -1) * c * d * e * f / b.pow(2), kQmn * e / b, e};
    s.lower = {kQmn * e * c / b, kQmn * e * d / b, kQmn * e * f / b};
    s.argument = kQ;
    s.term_slot = 0;
    out.push_back({p.normalize(), SeriesSpec(std::move(s))});
  }
  return out;
}

ConverseForms watson_converse(const PhiSpec& phi) {
  phi.validate();
  if (phi.upper.size() != 4 || phi.lower.size() != 3)
    throw Error(ErrorCode::NotBalanced, "converse rewrite needs a 4phi3");
  if (phi.argument != kQ)
    throw Error(ErrorCode::NotBalanced, "converse rewrite needs argument q");
  std::vector<ParamMonomial> abc;
  for (std::size_t i = 0; i < phi.upper.size(); ++i)
    if (static_cast<int>(i) != phi.term_slot) abc.push_back(phi.upper[i]);
  const ParamMonomial &a = abc[0], &b = abc[1], &c = abc[2];
  const ParamMonomial &d = phi.lower[0], &e = phi.lower[1], &f = phi.lower[2];
  if (q1mn() * a * b * c != d * e * f)
    throw Error(ErrorCode::NotBalanced, "balancing condition q^{1-n}abc = def fails symbolically");

  auto N = PochLength::n();
  ConverseForms out;

  {  // (f/b, f/c;)_n/(f/(bc), f;)_n * W(q^{-n}bc/f; q^{-n}, e/a, d/a, b, c; qa/f)
    Prefactor p;
    p.mul_poch(f / b, N, +1).mul_poch(f / c, N, +1);
    p.mul_poch(f / (b * c), N, -1).mul_poch(f, N, -1);
    WSpec s;
    s.special = kQmn * b * c / f;
    s.numer = {kQmn, e / a, d / a, b, c};
    s.term_slot = 0;
    s.argument = kQ * a / f;
    out.primary.push_back({p.normalize(), SeriesSpec(std::move(s))});
  }
  {  // (ef/(bc), e/a, b, c;)_n/(ef/(abc), bc/f, e, f;)_n * W(q^{-n}f/(bc); q^{-n}, q^{1-n}/d, q^{1-n}/e, f/b, f/c; qa/f)
    Prefactor p;
    p.mul_poch(e * f / (b * c), N, +1).mul_poch(e / a, N, +1).mul_poch(b, N, +1).mul_poch(c, N, +1);
    p.mul_poch(e * f / (a * b * c), N, -1).mul_poch(b * c / f, N, -1).mul_poch(e, N, -1).mul_poch(f, N, -1);
    WSpec s;
    s.special = kQmn * f / (b * c);
    s.numer = {kQmn, q1mn() / d, q1mn() / e, f / b, f / c};
    s.term_slot = 0;
    s.argument = kQ * a / f;
    out.primary.push_back({p.normalize(), SeriesSpec(std::move(s))});
  }
  {  // c^n (d/c, e/c, f/c, b;)_n/(b/c, d, e, f;)_n * W(q^{-n}c/b; q^{-n}, d/b, e/b, f/b, c; q/a)
    Prefactor p;
    p.power = c;
    p.mul_poch(d / c, N, +1).mul_poch(e / c, N, +1).mul_poch(f / c, N, +1).mul_poch(b, N, +1);
    p.mul_poch(b / c, N, -1).mul_poch(d, N, -1).mul_poch(e, N, -1).mul_poch(f, N, -1);
    WSpec s;
    s.special = kQmn * c / b;
    s.numer = {kQmn, d / b, e / b, f / b, c};
    s.term_slot = 0;
    s.argument = kQ / a;
    out.primary.push_back({p.normalize(), SeriesSpec(std::move(s))});
  }
  {  // (e/a, e/b, e/c;)_n/(de/(abc), e/d, e;)_n * W(q^{-n}d/e; q^{-n}, q^{1-n}/e, d/a, d/b, d/c; q^n f)
    Prefactor p;
    p.mul_poch(e / a, N, +1).mul_poch(e / b, N, +1).mul_poch(e / c, N, +1);
    p.mul_poch(d * e / (a * b * c), N, -1).mul_poch(e / d, N, -1).mul_poch(e, N, -1);
    WSpec s;
    s.special = kQmn * d / e;
    s.numer = {kQmn, q1mn() / e, d / a, d / b, d / c};
    s.term_slot = 0;
    s.argument = ParamMonomial::qpow(0, 1) * f;
    out.primary.push_back({p.normalize(), SeriesSpec(std::move(s))});
  }

  {  // (de/(ab), de/(ac);)_n/(de/a, de/(abc);)_n * W(de/(qa); q^{-n}, d/a, e/a, b, c; qa/f)
    Prefactor p;
    p.mul_poch(d * e / (a * b), N, +1).mul_poch(d * e / (a * c), N, +1);
    p.mul_poch(d * e / a, N, -1).mul_poch(d * e / (a * b * c), N, -1);
    WSpec s;
    s.special = d * e / (kQ * a);
    s.numer = {kQmn, d / a, e / a, b, c};
    s.term_slot = 0;
    s.argument = kQ * a / f;
    out.secondary.push_back({p.normalize(), SeriesSpec(std::move(s))});
  }
  {  // q^{binom} (-de/(bc))^n (de/(qa), d/a, e/a, b, c;)_n / ((de/(qa);)_{2n} (de/(abc), e, d;)_n)
    Prefactor p;
    p.qbinom_exp = 1;
    p.power = -(d * e / (b * c));
    p.mul_poch(d * e / (kQ * a), N, +1).mul_poch(d / a, N, +1).mul_poch(e / a, N, +1);
    p.mul_poch(b, N, +1).mul_poch(c, N, +1);
    p.mul_poch(d * e / (kQ * a), PochLength::two_n(), -1);
    p.mul_poch(d * e / (a * b * c), N, -1).mul_poch(e, N, -1).mul_poch(d, N, -1);
    WSpec s;
    s.special = ParamMonomial::qpow(1, -2) * a / (d * e);
    s.numer = {kQmn, q1mn() / d, q1mn() / e, q1mn() * a * b / (d * e), q1mn() * a * c / (d * e)};
    s.term_slot = 0;
    s.argument = kQ * a / f;
    out.secondary.push_back({p.normalize(), SeriesSpec(std::move(s))});
  }
  return out;
}

}  // namespace qaw
