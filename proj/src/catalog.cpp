#include "qaw/catalog.hpp"

#include <chrono>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace qaw {

namespace {

using nlohmann::json;

const ParamMonomial Q = ParamMonomial::qpow(1);
const ParamMonomial QMN = ParamMonomial::qpow(0, -1);
ParamMonomial qp(int a, int bn = 0) { return ParamMonomial::qpow(a, bn); }

// BCDEF frame variables.
const ParamMonomial B = ParamMonomial::var(0);
const ParamMonomial C = ParamMonomial::var(1);
const ParamMonomial D = ParamMonomial::var(2);
const ParamMonomial E = ParamMonomial::var(3);
const ParamMonomial F = ParamMonomial::var(4);

WSpec make_w(ParamMonomial special, std::vector<ParamMonomial> numer, ParamMonomial arg) {
  WSpec w;
  w.special = std::move(special);
  w.numer = std::move(numer);
  w.argument = std::move(arg);
  w.term_slot = 0;
  for (std::size_t i = 0; i < w.numer.size(); ++i)
    if (w.numer[i].is_q_minus_n()) w.term_slot = static_cast<int>(i);
  w.validate();
  return w;
}

PhiSpec make_phi(std::vector<ParamMonomial> upper, std::vector<ParamMonomial> lower,
                 ParamMonomial arg) {
  PhiSpec s;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  s.argument = std::move(arg);
  s.term_slot = 0;
  for (std::size_t i = 0; i < s.upper.size(); ++i)
    if (s.upper[i].is_q_minus_n()) s.term_slot = static_cast<int>(i);
  s.validate();
  return s;
}

Prefactor pf(std::vector<ParamMonomial> plus, std::vector<ParamMonomial> minus,
             ParamMonomial power = ParamMonomial::one(), int qbinom = 0) {
  Prefactor p;
  p.qbinom_exp = qbinom;
  p.power = std::move(power);
  for (auto& m : plus) p.mul_poch(std::move(m), PochLength::n(), +1);
  for (auto& m : minus) p.mul_poch(std::move(m), PochLength::n(), -1);
  p.normalize();
  return p;
}

IdentitySpec make_identity(std::string id, std::string anchor, Expression lhs, Expression rhs) {
  IdentitySpec s;
  s.id = std::move(id);
  s.anchor = std::move(anchor);
  s.frame = kFrameBCDEF;
  s.lhs = std::move(lhs);
  s.rhs = std::move(rhs);
  s.guards = expression_guards(s.lhs);
  auto more = expression_guards(s.rhs);
  s.guards.insert(s.guards.end(), more.begin(), more.end());
  dedupe_guards(s.guards);
  return s;
}

Expression w0_lhs() {
  return Expression::bare(
      make_w(B, {QMN, C, D, E, F}, qp(2, 1) * B.pow(2) / (C * D * E * F)));
}

std::vector<IdentitySpec> build_catalog() {
  std::vector<IdentitySpec> cat;
  auto N2 = PochLength::two_n();

  // Terminating 8W7 -> 8W7 family, all equal to the shared left-hand side.
  {
    Prefactor p = pf({Q * B, B, C, D, E, F}, {Q * B / C, Q * B / D, Q * B / E, Q * B / F},
                     -(qp(2) * B.pow(2) / (C * D * E * F)), +1);
    p.mul_poch(B, N2, -1);
    p.normalize();
    Expression rhs{p, SeriesSpec(make_w(qp(0, -2) / B,
                                        {QMN, QMN * C / B, QMN * D / B, QMN * E / B, QMN * F / B},
                                        qp(2, 1) * B.pow(2) / (C * D * E * F)))};
    cat.push_back(make_identity("C3.3/4to5=1", "cor3.5a.1", w0_lhs(), rhs));
  }
  {
    Expression rhs{pf({Q * B / (C * E), Q * B / (C * F), Q * B, D},
                      {Q * B / C, Q * B / E, Q * B / F, D / C}),
                   SeriesSpec(make_w(QMN * C / D, {QMN, QMN * C / B, Q * B / (D * E), Q * B / (D * F), C},
                                     E * F / B))};
    cat.push_back(make_identity("C3.3/4to5=2", "cor3.5a.2", w0_lhs(), rhs));
  }
  {
    Expression rhs{pf({Q * B / (D * E), Q * B / (D * F), Q * B / (E * F), Q * B},
                      {Q * B / (D * E * F), Q * B / D, Q * B / E, Q * B / F}),
                   SeriesSpec(make_w(qp(-1, -1) * D * E * F / B,
                                     {QMN, D, E, F, qp(-1, -1) * C * D * E * F / B.pow(2)}, Q / C))};
    cat.push_back(make_identity("C3.3/4to5=7", "cor3.5a.7", w0_lhs(), rhs));
  }
  {
    Expression rhs{pf({qp(2) * B.pow(2) / (C * D * E * F), Q * B, D, E, F},
                      {D * E * F / (Q * B), Q * B / C, Q * B / D, Q * B / E, Q * B / F}),
                   SeriesSpec(make_w(qp(1, -1) * B / (D * E * F),
                                     {QMN, QMN * C / B, Q * B / (D * E), Q * B / (D * F), Q * B / (E * F)},
                                     Q / C))};
    cat.push_back(make_identity("C3.3/4to5=7b", "cor3.5a.7b", w0_lhs(), rhs));
  }
  {
    Expression rhs{pf({qp(2) * B.pow(2) / (C * D * E * F), Q * B},
                      {Q * B / C, qp(2) * B.pow(2) / (D * E * F)}),
                   SeriesSpec(make_w(Q * B.pow(2) / (D * E * F),
                                     {QMN, Q * B / (D * E), Q * B / (D * F), Q * B / (E * F), C},
                                     qp(1, 1) * B / C))};
    cat.push_back(make_identity("C3.3/4to5=6", "cor3.5a.6", w0_lhs(), rhs));
  }
  {
    Prefactor p = pf({Q * B.pow(2) / (D * E * F), Q * B / (E * F), Q * B / (D * E), Q * B / (D * F),
                      Q * B, C},
                     {Q * B / C, Q * B / D, Q * B / E, Q * B / F}, -(Q * B / C), +1);
    p.mul_poch(Q * B.pow(2) / (D * E * F), N2, -1);
    p.normalize();
    Expression rhs{p, SeriesSpec(make_w(qp(-1, -2) * D * E * F / B.pow(2),
                                        {QMN, QMN * D / B, QMN * E / B, QMN * F / B,
                                         qp(-1, -1) * C * D * E * F / B.pow(2)},
                                        qp(1, 1) * B / C))};
    cat.push_back(make_identity("C3.3/4to5=7c", "cor3.5a.7c", w0_lhs(), rhs));
  }

  // Watson's q-analog of Whipple's theorem: four balanced 4phi3 forms.
  {
    Expression rhs{pf({Q * B, Q * B / (E * F)}, {Q * B / E, Q * B / F}),
                   SeriesSpec(make_phi({QMN, Q * B / (C * D), E, F},
                                       {QMN * E * F / B, Q * B / C, Q * B / D}, Q))};
    cat.push_back(make_identity("W/4to5=3", "cor3.5a.3", w0_lhs(), rhs));
  }
  {
    Expression rhs{pf({Q * B / (E * F), Q * B, C, D},
                      {Q * B / C, Q * B / D, Q * B / E, Q * B / F}, Q * B / (C * D)),
                   SeriesSpec(make_phi({QMN, QMN * E / B, QMN * F / B, Q * B / (C * D)},
                                       {QMN * E * F / B, qp(1, -1) / C, qp(1, -1) / D}, Q))};
    cat.push_back(make_identity("W/4to5=4", "cor3.5a.4", w0_lhs(), rhs));
  }
  {
    Expression rhs{pf({qp(2) * B.pow(2) / (C * D * E * F), Q * B, E},
                      {Q * B / C, Q * B / D, Q * B / F}),
                   SeriesSpec(make_phi({QMN, Q * B / (E * C), Q * B / (E * D), Q * B / (E * F)},
                                       {qp(2) * B.pow(2) / (C * D * E * F), qp(1, -1) / E, Q * B / E},
                                       Q))};
    cat.push_back(make_identity("W/4to5=5", "cor3.5a.5", w0_lhs(), rhs));
  }
  {
    Expression rhs{pf({Q * B / (E * C), Q * B / (E * D), Q * B / (E * F), Q * B},
                      {Q * B / C, Q * B / D, Q * B / E, Q * B / F}, E),
                   SeriesSpec(make_phi({QMN, qp(-1, -1) * C * D * E * F / B.pow(2), QMN * E / B, E},
                                       {QMN * E * C / B, QMN * E * D / B, QMN * E * F / B}, Q))};
    cat.push_back(make_identity("W/4to5=6b", "cor3.5a.6b", w0_lhs(), rhs));
  }

  // Converse of Watson's theorem, on the frame with a = q^{n-1}def/(bc)
  // eliminated through the balancing condition.
  {
    const ParamMonomial A = qp(-1, 1) * D * E * F / (B * C);
    Expression lhs = Expression::bare(make_phi({QMN, A, B, C}, {D, E, F}, Q));
    {
      Expression rhs{pf({F / B, F / C}, {F / (B * C), F}),
                     SeriesSpec(make_w(QMN * B * C / F, {QMN, E / A, D / A, B, C}, Q * A / F))};
      cat.push_back(make_identity("cW/phi=1", "cWqW:1", lhs, rhs));
    }
    {
      Expression rhs{pf({E * F / (B * C), E / A, B, C}, {E * F / (A * B * C), B * C / F, E, F}),
                     SeriesSpec(make_w(QMN * F / (B * C),
                                       {QMN, qp(1, -1) / D, qp(1, -1) / E, F / B, F / C}, Q * A / F))};
      cat.push_back(make_identity("cW/phi=2", "cWqW:2", lhs, rhs));
    }
    {
      Expression rhs{pf({D / C, E / C, F / C, B}, {B / C, D, E, F}, C),
                     SeriesSpec(make_w(QMN * C / B, {QMN, D / B, E / B, F / B, C}, Q / A))};
      cat.push_back(make_identity("cW/phi=3", "cWqW:3", lhs, rhs));
    }
    {
      Expression rhs{pf({E / A, E / B, E / C}, {D * E / (A * B * C), E / D, E}),
                     SeriesSpec(make_w(QMN * D / E, {QMN, qp(1, -1) / E, D / A, D / B, D / C},
                                       qp(0, 1) * F))};
      cat.push_back(make_identity("cW/phi=4", "cWqW:4", lhs, rhs));
    }
  }

  // Appendix: parameter interchange transformations for the 8W7 with
  // argument ef/b (eleven equalities against the first display).
  {
    Expression lhs = Expression::bare(
        make_w(QMN * C / D, {QMN, QMN * C / B, Q * B / (D * E), Q * B / (D * F), C}, E * F / B));
    auto add = [&](const char* id, const char* anchor, Prefactor p, WSpec w) {
      cat.push_back(make_identity(id, anchor, lhs, Expression{std::move(p), SeriesSpec(std::move(w))}));
    };
    add("A3.5/r1=r2", "cor3.5:r2",
        pf({Q * B / (D * E), Q * B / (D * F), Q * B / C, D / C, C},
           {Q * B / (C * E), Q * B / (C * F), Q * B / D, C / D, D}),
        make_w(QMN * D / C, {QMN, QMN * D / B, Q * B / (C * E), Q * B / (C * F), D}, E * F / B));
    add("A3.5/r1=r3", "cor3.5:r3",
        pf({Q * B / (C * D), Q * B / E, D / C, E}, {Q * B / (C * E), Q * B / D, E / C, D}),
        make_w(QMN * C / E, {QMN, QMN * C / B, Q * B / (E * D), Q * B / (E * F), C}, D * F / B));
    add("A3.5/r1=r4", "cor3.5:r4",
        pf({Q * B / (E * D), Q * B / (E * F), Q * B / C, D / C, C},
           {Q * B / (C * E), Q * B / (C * F), Q * B / D, C / E, D}),
        make_w(QMN * E / C, {QMN, QMN * E / B, Q * B / (C * D), Q * B / (C * F), E}, D * F / B));
    add("A3.5/r1=r5", "cor3.5:r5",
        pf({Q * B / (C * D), Q * B / F, D / C, F}, {Q * B / (C * F), Q * B / D, F / C, D}),
        make_w(QMN * C / F, {QMN, QMN * C / B, Q * B / (E * F), Q * B / (D * F), C}, D * E / B));
    add("A3.5/r1=r6", "cor3.5:r6",
        pf({Q * B / (F * D), Q * B / (F * E), Q * B / C, D / C, C},
           {Q * B / (C * E), Q * B / (C * F), Q * B / D, C / F, D}),
        make_w(QMN * F / C, {QMN, QMN * F / B, Q * B / (C * D), Q * B / (C * E), F}, D * E / B));
    add("A3.5/r1=r7", "cor3.5:r7",
        pf({Q * B / (E * F), D / C}, {Q * B / (C * F), D / E}),
        make_w(QMN * E / D, {QMN, QMN * E / B, Q * B / (D * C), Q * B / (D * F), E}, C * F / B));
    add("A3.5/r1=r8", "cor3.5:r8",
        pf({Q * B / (D * C), Q * B / (D * F), Q * B / E, D / C, E},
           {Q * B / (C * E), Q * B / (C * F), Q * B / D, E / D, D}),
        make_w(QMN * D / E, {QMN, QMN * D / B, Q * B / (E * C), Q * B / (E * F), D}, C * F / B));
    add("A3.5/r1=r9", "cor3.5:r9",
        pf({Q * B / (E * F), D / C}, {Q * B / (C * E), D / F}),
        make_w(QMN * F / D, {QMN, QMN * F / B, Q * B / (D * C), Q * B / (D * E), F}, C * E / B));
    add("A3.5/r1=r10", "cor3.5:r10",
        pf({Q * B / (D * E), Q * B / (D * C), Q * B / F, D / C, F},
           {Q * B / (C * E), Q * B / (C * F), Q * B / D, F / D, D}),
        make_w(QMN * D / F, {QMN, QMN * D / B, Q * B / (F * C), Q * B / (F * E), D}, C * E / B));
    add("A3.5/r1=r11", "cor3.5:r11",
        pf({Q * B / (E * D), Q * B / F, D / C, F}, {Q * B / (C * F), Q * B / D, F / E, D}),
        make_w(QMN * E / F, {QMN, QMN * E / B, Q * B / (F * C), Q * B / (F * D), E}, C * D / B));
    add("A3.5/r1=r12", "cor3.5:r12",
        pf({Q * B / (D * F), Q * B / E, D / C, E}, {Q * B / (C * E), Q * B / D, E / F, D}),
        make_w(QMN * F / E, {QMN, QMN * F / B, Q * B / (E * C), Q * B / (E * D), F}, C * D / B));
  }

  // Appendix: interchanges for the 8W7 with argument q^{n+1}b/c.
  {
    Expression lhs = Expression::bare(make_w(
        Q * B.pow(2) / (D * E * F),
        {QMN, Q * B / (D * E), Q * B / (D * F), Q * B / (E * F), C}, qp(1, 1) * B / C));
    auto add = [&](const char* id, const char* anchor, Prefactor p, WSpec w) {
      cat.push_back(make_identity(id, anchor, lhs, Expression{std::move(p), SeriesSpec(std::move(w))}));
    };
    add("A3.6/r1=r2", "cor3.6:r2",
        pf({Q * B / C, qp(2) * B.pow(2) / (D * E * F)}, {Q * B / D, qp(2) * B.pow(2) / (C * E * F)}),
        make_w(Q * B.pow(2) / (C * E * F),
               {QMN, Q * B / (C * E), Q * B / (C * F), Q * B / (E * F), D}, qp(1, 1) * B / D));
    add("A3.6/r1=r3", "cor3.6:r3",
        pf({Q * B / C, qp(2) * B.pow(2) / (D * E * F)}, {Q * B / E, qp(2) * B.pow(2) / (C * D * F)}),
        make_w(Q * B.pow(2) / (C * D * F),
               {QMN, Q * B / (C * D), Q * B / (C * F), Q * B / (D * F), E}, qp(1, 1) * B / E));
    add("A3.6/r1=r4", "cor3.6:r4",
        pf({Q * B / C, qp(2) * B.pow(2) / (D * E * F)}, {Q * B / F, qp(2) * B.pow(2) / (C * D * E)}),
        make_w(Q * B.pow(2) / (C * D * E),
               {QMN, Q * B / (C * D), Q * B / (C * E), Q * B / (D * E), F}, qp(1, 1) * B / F));
  }

  // Appendix: interchanges for the balanced 4phi3 with lower q^{-n}cd/b.
  {
    Expression lhs = Expression::bare(make_phi(
        {QMN, Q * B / (E * F), C, D}, {QMN * C * D / B, Q * B / E, Q * B / F}, Q));
    auto add = [&](const char* id, const char* anchor, Prefactor p, PhiSpec s) {
      cat.push_back(make_identity(id, anchor, lhs, Expression{std::move(p), SeriesSpec(std::move(s))}));
    };
    add("A3.8/r1=r2", "cor3.8:r2", pf({Q * B / (D * E), Q * B / C}, {Q * B / (C * D), Q * B / E}),
        make_phi({QMN, Q * B / (C * F), D, E}, {QMN * D * E / B, Q * B / C, Q * B / F}, Q));
    add("A3.8/r1=r3", "cor3.8:r3", pf({Q * B / (D * F), Q * B / C}, {Q * B / (C * D), Q * B / F}),
        make_phi({QMN, Q * B / (C * E), D, F}, {QMN * D * F / B, Q * B / C, Q * B / E}, Q));
    add("A3.8/r1=r4", "cor3.8:r4", pf({Q * B / (C * E), Q * B / D}, {Q * B / (C * D), Q * B / E}),
        make_phi({QMN, Q * B / (D * F), C, E}, {QMN * C * E / B, Q * B / D, Q * B / F}, Q));
    add("A3.8/r1=r5", "cor3.8:r5", pf({Q * B / (C * F), Q * B / D}, {Q * B / (C * D), Q * B / F}),
        make_phi({QMN, Q * B / (D * E), C, F}, {QMN * C * F / B, Q * B / D, Q * B / E}, Q));
    add("A3.8/r1=r6", "cor3.8:r6",
        pf({Q * B / (E * F), Q * B / C, Q * B / D}, {Q * B / (C * D), Q * B / E, Q * B / F}),
        make_phi({QMN, Q * B / (C * D), E, F}, {QMN * E * F / B, Q * B / C, Q * B / D}, Q));
  }

  // Appendix: interchanges for the balanced 4phi3 with lower q^2b^2/(cdef).
  {
    Expression lhs = Expression::bare(
        make_phi({QMN, Q * B / (C * D), Q * B / (C * E), Q * B / (C * F)},
                 {qp(2) * B.pow(2) / (C * D * E * F), qp(1, -1) / C, Q * B / C}, Q));
    auto add = [&](const char* id, const char* anchor, Prefactor p, PhiSpec s) {
      cat.push_back(make_identity(id, anchor, lhs, Expression{std::move(p), SeriesSpec(std::move(s))}));
    };
    add("A3.10/r1=r2", "cor3.10:r2", pf({Q * B / D, D}, {Q * B / C, C}),
        make_phi({QMN, Q * B / (D * C), Q * B / (D * E), Q * B / (D * F)},
                 {qp(2) * B.pow(2) / (C * D * E * F), qp(1, -1) / D, Q * B / D}, Q));
    add("A3.10/r1=r3", "cor3.10:r3", pf({Q * B / E, E}, {Q * B / C, C}),
        make_phi({QMN, Q * B / (E * C), Q * B / (E * D), Q * B / (E * F)},
                 {qp(2) * B.pow(2) / (C * D * E * F), qp(1, -1) / E, Q * B / E}, Q));
    add("A3.10/r1=r4", "cor3.10:r4", pf({Q * B / F, F}, {Q * B / C, C}),
        make_phi({QMN, Q * B / (F * C), Q * B / (F * D), Q * B / (F * E)},
                 {qp(2) * B.pow(2) / (C * D * E * F), qp(1, -1) / F, Q * B / F}, Q));
  }

  return cat;
}

}  // namespace

const std::vector<IdentitySpec>& catalog() {
  static const std::vector<IdentitySpec> cat = build_catalog();
  return cat;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& key, std::uint64_t k) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  h += k * 0xbf58476d1ce4e5b9ull;
  h ^= h >> 31;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 27;
  return h;
}

std::vector<PointEnv> identity_envs(const IdentitySpec& spec, std::uint64_t seed, int n_max,
                                    int count) {
  std::vector<PointEnv> envs;
  envs.reserve(static_cast<std::size_t>(count));
  for (int e = 0; e < count; ++e) {
    int n = (n_max <= 0) ? 0 : e % (n_max + 1);
    envs.push_back(sample_point(spec.frame, n, mix_seed(seed, spec.id, static_cast<std::uint64_t>(e)),
                                spec.guards));
  }
  return envs;
}

VerificationReport verify_identity(const IdentitySpec& spec, const std::vector<PointEnv>& envs) {
  VerificationReport rep;
  rep.id = spec.id;
  auto start = std::chrono::steady_clock::now();
  for (const auto& env : envs) {
    EnvCheck chk;
    chk.fingerprint = env.fingerprint();
    chk.n = env.n;
    try {
      Rational residual = eval_expression(spec.lhs, env) - eval_expression(spec.rhs, env);
      chk.zero_residual = residual.is_zero();
      ++rep.checked;
      if (!chk.zero_residual) ++rep.failures;
    } catch (const Error& err) {
      chk.skipped = true;
      chk.skip_reason = std::string(error_code_name(err.code())) + ": " + err.what();
      ++rep.skipped;
    }
    rep.envs.push_back(std::move(chk));
  }
  rep.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

IdentitySpec mutate_rhs(const IdentitySpec& spec) {
  IdentitySpec m = spec;
  m.id += "~mutated";
  if (std::holds_alternative<PhiSpec>(m.rhs.series))
    std::get<PhiSpec>(m.rhs.series).argument *= ParamMonomial::qpow(1);
  else
    std::get<WSpec>(m.rhs.series).argument *= ParamMonomial::qpow(1);
  return m;
}

VerifySummary verify_all(std::uint64_t seed, int n_max, int envs_per_identity, ExecMode mode) {
  return verify_all(catalog(), seed, n_max, envs_per_identity, mode);
}

VerifySummary verify_all(const std::vector<IdentitySpec>& identities, std::uint64_t seed,
                         int n_max, int envs_per_identity, ExecMode mode) {
  VerifySummary summary;
  summary.seed = seed;
  summary.n_max = n_max;
  summary.envs_per_identity = envs_per_identity;
  summary.reports.resize(identities.size());
  for_each_index(identities.size(), mode, [&](std::size_t i) {
    const auto& spec = identities[i];
    auto envs = identity_envs(spec, seed, n_max, envs_per_identity);
    summary.reports[i] = verify_identity(spec, envs);
  });
  return summary;
}

namespace {

json mono_json(const ParamMonomial& m) {
  json j;
  j["s"] = static_cast<int>(m.sign);
  j["q2"] = m.q2;
  j["n2"] = m.n2;
  j["e2"] = m.e2;
  return j;
}

ParamMonomial mono_from(const json& j) {
  ParamMonomial m;
  int s = j.at("s").get<int>();
  if (s != 1 && s != -1) throw Error(ErrorCode::ParseError, "monomial sign must be +-1");
  m.sign = static_cast<std::int8_t>(s);
  m.q2 = j.at("q2").get<std::int16_t>();
  m.n2 = j.at("n2").get<std::int16_t>();
  auto e = j.at("e2").get<std::vector<int>>();
  if (e.size() != kMaxVars) throw Error(ErrorCode::ParseError, "bad exponent table width");
  for (int i = 0; i < kMaxVars; ++i) m.e2[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(e[static_cast<std::size_t>(i)]);
  return m;
}

json len_json(const PochLength& l) {
  switch (l.kind) {
    case PochLength::Kind::N: return "n";
    case PochLength::Kind::TwoN: return "2n";
    case PochLength::Kind::Fixed: return l.fixed;
  }
  return "n";
}

PochLength len_from(const json& j) {
  if (j.is_number_integer()) return PochLength::k(j.get<int>());
  std::string s = j.get<std::string>();
  if (s == "n") return PochLength::n();
  if (s == "2n") return PochLength::two_n();
  throw Error(ErrorCode::ParseError, "bad Pochhammer length: " + s);
}

json prefactor_json(const Prefactor& p) {
  json j;
  j["u"] = p.qbinom_exp;
  j["v"] = p.sign_exp;
  j["M"] = mono_json(p.power);
  json arr = json::array();
  for (const auto& f : p.poch)
    arr.push_back(json{{"base", mono_json(f.base)}, {"len", len_json(f.len)}, {"exp", f.exp}});
  j["poch"] = arr;
  return j;
}

Prefactor prefactor_from(const json& j) {
  Prefactor p;
  p.qbinom_exp = j.at("u").get<int>();
  p.sign_exp = j.at("v").get<int>();
  p.power = mono_from(j.at("M"));
  for (const auto& f : j.at("poch"))
    p.poch.push_back({mono_from(f.at("base")), len_from(f.at("len")), f.at("exp").get<int>()});
  return p;
}

json series_json(const SeriesSpec& s) {
  json j;
  if (std::holds_alternative<PhiSpec>(s)) {
    const auto& phi = std::get<PhiSpec>(s);
    j["kind"] = "phi";
    json up = json::array(), lo = json::array();
    for (const auto& m : phi.upper) up.push_back(mono_json(m));
    for (const auto& m : phi.lower) lo.push_back(mono_json(m));
    j["upper"] = up;
    j["lower"] = lo;
    j["term"] = phi.term_slot;
    j["arg"] = mono_json(phi.argument);
    j["pad"] = phi.zero_pad;
  } else {
    const auto& w = std::get<WSpec>(s);
    j["kind"] = "w";
    json nu = json::array();
    for (const auto& m : w.numer) nu.push_back(mono_json(m));
    j["special"] = mono_json(w.special);
    j["numer"] = nu;
    j["term"] = w.term_slot;
    j["arg"] = mono_json(w.argument);
  }
  return j;
}

SeriesSpec series_from(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "phi") {
    PhiSpec s;
    for (const auto& m : j.at("upper")) s.upper.push_back(mono_from(m));
    for (const auto& m : j.at("lower")) s.lower.push_back(mono_from(m));
    s.term_slot = j.at("term").get<int>();
    s.argument = mono_from(j.at("arg"));
    s.zero_pad = j.at("pad").get<int>();
    s.validate();
    return SeriesSpec(std::move(s));
  }
  if (kind == "w") {
    WSpec w;
    for (const auto& m : j.at("numer")) w.numer.push_back(mono_from(m));
    w.special = mono_from(j.at("special"));
    w.term_slot = j.at("term").get<int>();
    w.argument = mono_from(j.at("arg"));
    w.validate();
    return SeriesSpec(std::move(w));
  }
  throw Error(ErrorCode::ParseError, "unknown series kind: " + kind);
}

json expression_json(const Expression& e) {
  return json{{"pref", prefactor_json(e.prefactor)}, {"series", series_json(e.series)}};
}

Expression expression_from(const json& j) {
  return Expression{prefactor_from(j.at("pref")), series_from(j.at("series"))};
}

const char* frame_name(const Frame& f) {
  switch (f.kind) {
    case FrameKind::BCDEF: return "BCDEF";
    case FrameKind::AW: return "AW";
    case FrameKind::Orbit: return "Orbit";
  }
  return "?";
}

Frame frame_from(const std::string& s) {
  if (s == "BCDEF") return kFrameBCDEF;
  if (s == "AW") return kFrameAW;
  if (s == "Orbit") return kFrameOrbit;
  throw Error(ErrorCode::ParseError, "unknown frame: " + s);
}

}  // namespace

void export_catalog(const std::vector<IdentitySpec>& identities, std::ostream& os) {
  for (const auto& spec : identities) {
    json j;
    j["id"] = spec.id;
    j["anchor"] = spec.anchor;
    j["frame"] = frame_name(spec.frame);
    j["lhs"] = expression_json(spec.lhs);
    j["rhs"] = expression_json(spec.rhs);
    os << j.dump() << "\n";
  }
}

std::vector<IdentitySpec> import_catalog(std::istream& is) {
  std::vector<IdentitySpec> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError,
                  "catalog line " + std::to_string(lineno) + ": " + e.what());
    }
    try {
      IdentitySpec spec;
      spec.id = j.at("id").get<std::string>();
      spec.anchor = j.at("anchor").get<std::string>();
      spec.frame = frame_from(j.at("frame").get<std::string>());
      spec.lhs = expression_from(j.at("lhs"));
      spec.rhs = expression_from(j.at("rhs"));
      spec.guards = expression_guards(spec.lhs);
      auto more = expression_guards(spec.rhs);
      spec.guards.insert(spec.guards.end(), more.begin(), more.end());
      dedupe_guards(spec.guards);
      out.push_back(std::move(spec));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError,
                  "catalog line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace qaw
