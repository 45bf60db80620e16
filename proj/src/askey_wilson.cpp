#include "qaw/askey_wilson.hpp"

#include <sstream>

namespace qaw {

namespace {
const ParamMonomial kQ = ParamMonomial::qpow(1);
const ParamMonomial kQmn = ParamMonomial::qpow(0, -1);

ParamMonomial av(int i) { return ParamMonomial::var(i - 1); }  // a_i, i in 1..4
ParamMonomial tv() { return ParamMonomial::var(4); }
ParamMonomial a1234() { return av(1) * av(2) * av(3) * av(4); }
ParamMonomial q1mn() { return ParamMonomial::qpow(1, -1); }
}  // namespace

PointEnv AWPoint::env() const {
  PointEnv e;
  e.frame = kFrameAW;
  e.q = q;
  e.n = n;
  for (int i = 0; i < 4; ++i) e.values[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
  e.values[4] = t;
  e.validate();
  return e;
}

void RepId::validate() const {
  if (rep < 1 || rep > 7) throw Error(ErrorCode::ParseError, "representation index must be 1..7");
  if (p < 1 || p > 4) throw Error(ErrorCode::ParseError, "p must be 1..4");
  std::array<bool, 5> seen{};
  seen[static_cast<std::size_t>(p)] = true;
  for (int v : rtu) {
    if (v < 1 || v > 4 || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::ParseError, "p and the rtu ordering must be distinct indices in 1..4");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

std::string RepId::str() const {
  std::ostringstream os;
  os << "D" << rep << "(p=" << p;
  if (uses_rtu()) os << ",rtu=" << rtu[0] << rtu[1] << rtu[2];
  os << ")";
  return os.str();
}

Expression aw_rep_expression(const RepId& id) {
  id.validate();
  const int p = id.p;
  const int r = id.rtu[0], t = id.rtu[1], u = id.rtu[2];
  auto N = PochLength::n();
  auto N2 = PochLength::two_n();
  std::array<int, 3> others{};
  {
    int k = 0;
    for (int s = 1; s <= 4; ++s)
      if (s != p) others[static_cast<std::size_t>(k++)] = s;
  }

  switch (id.rep) {
    case 1: {
      Prefactor pf;
      pf.power = av(p).inverse();
      for (int s : others) pf.mul_poch(av(p) * av(s), N, +1);
      PhiSpec s;
      s.upper = {kQmn, ParamMonomial::qpow(-1, 1) * a1234(), av(p) * tv(), av(p) / tv()};
      for (int j : others) s.lower.push_back(av(p) * av(j));
      s.argument = kQ;
      s.term_slot = 0;
      return {pf.normalize(), SeriesSpec(std::move(s))};
    }
    case 2: {
      Prefactor pf;
      pf.qbinom_exp = -1;
      pf.sign_exp = 1;
      pf.power = av(p).inverse();
      pf.mul_poch(a1234() / kQ, N2, +1);
      pf.mul_poch(av(p) * tv(), N, +1);
      pf.mul_poch(av(p) / tv(), N, +1);
      pf.mul_poch(a1234() / kQ, N, -1);
      PhiSpec s;
      s.upper = {kQmn};
      for (int j : others) s.upper.push_back(q1mn() / (av(p) * av(j)));
      s.lower = {ParamMonomial::qpow(2, -2) / a1234(), q1mn() * tv() / av(p), q1mn() / (av(p) * tv())};
      s.argument = kQ;
      s.term_slot = 0;
      return {pf.normalize(), SeriesSpec(std::move(s))};
    }
    case 3: {
      Prefactor pf;
      pf.power = tv();
      pf.mul_poch(av(p) * av(r), N, +1);
      pf.mul_poch(av(t) / tv(), N, +1);
      pf.mul_poch(av(u) / tv(), N, +1);
      PhiSpec s;
      s.upper = {kQmn, av(p) * tv(), av(r) * tv(), q1mn() / (av(t) * av(u))};
      s.lower = {av(p) * av(r), q1mn() * tv() / av(t), q1mn() * tv() / av(u)};
      s.argument = kQ;
      s.term_slot = 0;
      return {pf.normalize(), SeriesSpec(std::move(s))};
    }
    case 4: {
      Prefactor pf;
      pf.power = tv();
      for (int s = 1; s <= 4; ++s) pf.mul_poch(av(s) / tv(), N, +1);
      pf.mul_poch(tv().pow(-2), N, -1);
      WSpec w;
      w.special = kQmn * tv().pow(2);
      w.numer = {kQmn};
      for (int s = 1; s <= 4; ++s) w.numer.push_back(av(s) * tv());
      w.term_slot = 0;
      w.argument = ParamMonomial::qpow(2, -1) / a1234();
      return {pf.normalize(), SeriesSpec(std::move(w))};
    }
    case 5: {
      Prefactor pf;
      pf.power = tv();
      pf.mul_poch(a1234() / kQ, N2, +1);
      for (int s : others) pf.mul_poch(av(s) / tv(), N, +1);
      pf.mul_poch(a1234() / (kQ * av(p) * tv()), N, +1);
      pf.mul_poch(a1234() / kQ, N, -1);
      pf.mul_poch(a1234() / (kQ * av(p) * tv()), N2, -1);
      WSpec w;
      w.special = ParamMonomial::qpow(1, -2) * av(p) * tv() / a1234();
      w.numer = {kQmn};
      for (int s : others) w.numer.push_back(q1mn() * av(p) * av(s) / a1234());
      w.numer.push_back(av(p) * tv());
      w.term_slot = 0;
      w.argument = kQ * tv() / av(p);
      return {pf.normalize(), SeriesSpec(std::move(w))};
    }
    case 6: {
      Prefactor pf;
      pf.power = tv();
      pf.mul_poch(av(p) / tv(), N, +1);
      for (int s : others) pf.mul_poch(a1234() / (av(p) * av(s)), N, +1);
      pf.mul_poch(a1234() * tv() / av(p), N, -1);
      WSpec w;
      w.special = a1234() * tv() / (kQ * av(p));
      w.numer = {kQmn};
      for (int s : others) w.numer.push_back(av(s) * tv());
      w.numer.push_back(ParamMonomial::qpow(-1, 1) * a1234());
      w.term_slot = 0;
      w.argument = kQ / (av(p) * tv());
      return {pf.normalize(), SeriesSpec(std::move(w))};
    }
    case 7: {
      Prefactor pf;
      pf.power = av(p).inverse();
      pf.mul_poch(av(p) * av(t), N, +1);
      pf.mul_poch(av(p) * av(u), N, +1);
      pf.mul_poch(av(r) * tv(), N, +1);
      pf.mul_poch(av(r) / tv(), N, +1);
      pf.mul_poch(av(r) / av(p), N, -1);
      WSpec w;
      w.special = kQmn * av(p) / av(r);
      w.numer = {kQmn, q1mn() / (av(r) * av(t)), q1mn() / (av(r) * av(u)), av(p) * tv(), av(p) / tv()};
      w.term_slot = 0;
      w.argument = ParamMonomial::qpow(0, 1) * av(t) * av(u);
      return {pf.normalize(), SeriesSpec(std::move(w))};
    }
  }
  throw Error(ErrorCode::ParseError, "unreachable representation index");
}

Rational aw_reference(const AWPoint& pt) { return aw_eval_rep(RepId{1, 1, {2, 3, 4}}, pt); }

Rational aw_eval_rep(const RepId& id, const AWPoint& pt) {
  Expression e = aw_rep_expression(id);
  try {
    return eval_expression(e, pt.env());
  } catch (const Error& err) {
    if (err.code() == ErrorCode::DivergentDenominator || err.code() == ErrorCode::SpecialPointB)
      throw Error(err.code(), id.str() + ": " + err.what());
    throw;
  }
}

namespace {
Substitution flip_subst() {
  Substitution s;
  s.image[4] = ParamMonomial::var(4).inverse();
  return s;
}
}  // namespace

SeriesSpec aw_flip_t(const SeriesSpec& s) {
  Substitution f = flip_subst();
  if (std::holds_alternative<PhiSpec>(s)) {
    PhiSpec phi = std::get<PhiSpec>(s);
    for (auto& m : phi.upper) m = f.apply(m);
    for (auto& m : phi.lower) m = f.apply(m);
    phi.argument = f.apply(phi.argument);
    return SeriesSpec(std::move(phi));
  }
  WSpec w = std::get<WSpec>(s);
  w.special = f.apply(w.special);
  for (auto& m : w.numer) m = f.apply(m);
  w.argument = f.apply(w.argument);
  return SeriesSpec(std::move(w));
}

Expression aw_flip_t(const Expression& e) {
  Substitution f = flip_subst();
  Expression out = e;
  out.prefactor.power = f.apply(out.prefactor.power);
  for (auto& pf : out.prefactor.poch) pf.base = f.apply(pf.base);
  out.series = aw_flip_t(e.series);
  return out;
}

AWSymmetryReport aw_symmetry_check(const AWPoint& pt) {
  AWSymmetryReport rep;
  std::ostringstream detail;
  Rational ref = aw_reference(pt);

  rep.perm_invariant = true;
  std::array<int, 4> perm{1, 2, 3, 4};
  std::sort(perm.begin(), perm.end());
  do {
    AWPoint moved = pt;
    for (int i = 0; i < 4; ++i)
      moved.a[static_cast<std::size_t>(i)] = pt.a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)];
    if (aw_reference(moved) != ref) {
      rep.perm_invariant = false;
      detail << "parameter permutation " << perm[0] << perm[1] << perm[2] << perm[3] << " changes the value; ";
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  rep.flip_invariant = true;
  AWPoint flipped = pt;
  flipped.t = pt.t.inverse();
  for (int r = 1; r <= 7 && rep.flip_invariant; ++r) {
    RepId id{r, 1, {2, 3, 4}};
    if (aw_eval_rep(id, pt) != ref || aw_eval_rep(id, flipped) != ref) {
      rep.flip_invariant = false;
      detail << id.str() << " not invariant under t -> 1/t; ";
    }
  }

  {
    RepId d1{1, 2, {1, 3, 4}}, d2{2, 2, {1, 3, 4}};
    Expression inv = invert_phi(std::get<PhiSpec>(aw_rep_expression(d1).series));
    rep.d1_d2_inversion = series_equal_canonical(inv.series, aw_rep_expression(d2).series);
    if (!rep.d1_d2_inversion) detail << "inversion of the D1 series does not give D2; ";
  }
  {
    RepId d3{3, 1, {2, 3, 4}};
    Expression inv = invert_phi(std::get<PhiSpec>(aw_rep_expression(d3).series));
    RepId swapped{3, 3, {4, 1, 2}};  // pr <-> tu
    SeriesSpec expect = aw_flip_t(aw_rep_expression(swapped).series);
    rep.d3_self_inversion = series_equal_canonical(inv.series, expect);
    if (!rep.d3_self_inversion) detail << "inversion of the D3 series is not its own flipped form; ";
  }
  rep.detail = detail.str();
  return rep;
}

}  // namespace qaw
