#include "qaw/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qaw/askey_wilson.hpp"

namespace qaw {

namespace {
const ParamMonomial Q = ParamMonomial::qpow(1);
const ParamMonomial QMN = ParamMonomial::qpow(0, -1);
}  // namespace

const char* class_name(ClassId c) {
  switch (c) {
    case ClassId::C3: return "C3";
    case ClassId::C4: return "C4";
    case ClassId::C5: return "C5";
    case ClassId::C6b: return "C6b";
    case ClassId::W0: return "W0";
    case ClassId::W1: return "W1";
    case ClassId::W2: return "W2";
    case ClassId::W7: return "W7";
    case ClassId::W7b: return "W7b";
    case ClassId::W6: return "W6";
    case ClassId::W7c: return "W7c";
    case ClassId::CW1: return "cWqW:1";
    case ClassId::CW2: return "cWqW:2";
    case ClassId::CW3: return "cWqW:3";
    case ClassId::CW4: return "cWqW:4";
    case ClassId::D1: return "D1";
    case ClassId::D2: return "D2";
    case ClassId::D3: return "D3";
    case ClassId::D4: return "D4";
    case ClassId::D5: return "D5";
    case ClassId::D6: return "D6";
    case ClassId::D7: return "D7";
    case ClassId::Unclassified: return "Unclassified";
    case ClassId::Nonterminating: return "Nonterminating";
  }
  return "?";
}

const std::vector<ClassId>& phi_classes() {
  static const std::vector<ClassId> v{ClassId::C3, ClassId::C4, ClassId::C5, ClassId::C6b};
  return v;
}
const std::vector<ClassId>& w_classes() {
  static const std::vector<ClassId> v{ClassId::W0, ClassId::W1, ClassId::W2, ClassId::W7,
                                      ClassId::W7b, ClassId::W6, ClassId::W7c};
  return v;
}
const std::vector<ClassId>& converse_classes() {
  static const std::vector<ClassId> v{ClassId::CW1, ClassId::CW2, ClassId::CW3, ClassId::CW4};
  return v;
}

// ---- templates, shared with the catalog transcription ----

namespace {

const IdentitySpec& find_identity(const char* id) {
  for (const auto& spec : catalog())
    if (spec.id == id) return spec;
  throw Error(ErrorCode::ParseError, std::string("unknown catalog id: ") + id);
}

const SeriesSpec& template_series(ClassId c) {
  switch (c) {
    case ClassId::W0: return find_identity("C3.3/4to5=1").lhs.series;
    case ClassId::W1: return find_identity("C3.3/4to5=1").rhs.series;
    case ClassId::W2: return find_identity("C3.3/4to5=2").rhs.series;
    case ClassId::W7: return find_identity("C3.3/4to5=7").rhs.series;
    case ClassId::W7b: return find_identity("C3.3/4to5=7b").rhs.series;
    case ClassId::W6: return find_identity("C3.3/4to5=6").rhs.series;
    case ClassId::W7c: return find_identity("C3.3/4to5=7c").rhs.series;
    case ClassId::C3: return find_identity("W/4to5=3").rhs.series;
    case ClassId::C4: return find_identity("W/4to5=4").rhs.series;
    case ClassId::C5: return find_identity("W/4to5=5").rhs.series;
    case ClassId::C6b: return find_identity("W/4to5=6b").rhs.series;
    case ClassId::CW1: return find_identity("cW/phi=1").rhs.series;
    case ClassId::CW2: return find_identity("cW/phi=2").rhs.series;
    case ClassId::CW3: return find_identity("cW/phi=3").rhs.series;
    case ClassId::CW4: return find_identity("cW/phi=4").rhs.series;
    default:
      throw Error(ErrorCode::ParseError, "no template for this class");
  }
}

}  // namespace

const SeriesSpec& class_template(ClassId c) { return template_series(c); }

WConfig w_class_config(ClassId c) {
  const SeriesSpec& s = template_series(c);
  if (!std::holds_alternative<WSpec>(s))
    throw Error(ErrorCode::TemplateMismatch, "class template is not a W series");
  const WSpec& w = std::get<WSpec>(s);
  WConfig cfg;
  cfg.special = w.special;
  for (int i = 0; i < 5; ++i) cfg.numer[static_cast<std::size_t>(i)] = w.numer[static_cast<std::size_t>(i)];
  ParamMonomial arg = cfg.argument();
  if (arg != w.argument)
    throw Error(ErrorCode::TemplateMismatch, "class template is not in w-form");
  return cfg;
}

// ---- relabelings ----

namespace {

std::vector<Substitution> permuting(const std::array<int, kMaxVars>& movable_init) {
  // Permute the listed variable indices, fix the rest.
  std::vector<int> movable;
  for (int i = 0; i < kMaxVars; ++i)
    if (movable_init[static_cast<std::size_t>(i)]) movable.push_back(i);
  std::vector<Substitution> out;
  std::vector<int> perm = movable;
  std::sort(perm.begin(), perm.end());
  do {
    Substitution s;
    for (std::size_t i = 0; i < movable.size(); ++i)
      s.image[static_cast<std::size_t>(movable[i])] = ParamMonomial::var(perm[i]);
    out.push_back(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

const std::vector<Substitution>& cdef_relabelings() {
  static const std::vector<Substitution> subs = permuting({0, 1, 1, 1, 1, 0});
  return subs;
}

const std::vector<Substitution>& aw_relabelings() {
  static const std::vector<Substitution> subs = permuting({1, 1, 1, 1, 0, 0});
  return subs;
}

const std::vector<Substitution>& converse_relabelings() {
  static const std::vector<Substitution> subs = [] {
    const ParamMonomial B = ParamMonomial::var(0), C = ParamMonomial::var(1),
                        D = ParamMonomial::var(2), E = ParamMonomial::var(3),
                        F = ParamMonomial::var(4);
    const ParamMonomial A = ParamMonomial::qpow(-1, 1) * D * E * F / (B * C);
    std::array<ParamMonomial, 3> abc{A, B, C};
    std::array<ParamMonomial, 3> def{D, E, F};
    std::vector<Substitution> out;
    std::array<int, 3> p{0, 1, 2};
    do {
      std::array<int, 3> r{0, 1, 2};
      do {
        Substitution s;
        // Positions (a,b,c): frame vars exist for b (slot 1) and c (slot 2).
        s.image[0] = abc[static_cast<std::size_t>(p[1])];
        s.image[1] = abc[static_cast<std::size_t>(p[2])];
        s.image[2] = def[static_cast<std::size_t>(r[0])];
        s.image[3] = def[static_cast<std::size_t>(r[1])];
        s.image[4] = def[static_cast<std::size_t>(r[2])];
        out.push_back(s);
      } while (std::next_permutation(r.begin(), r.end()));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return subs;
}

// ---- canonical signatures ----

namespace {

void encode_sorted(std::string& out, std::vector<ParamMonomial> v) {
  std::sort(v.begin(), v.end());
  for (const auto& m : v) {
    m.encode(out);
    out.push_back('\x01');
  }
}

Signature encode_series(const SeriesSpec& s) {
  std::string out;
  if (std::holds_alternative<PhiSpec>(s)) {
    const auto& phi = std::get<PhiSpec>(s);
    out.push_back('P');
    out.push_back(static_cast<char>(phi.zero_pad + 64));
    encode_sorted(out, phi.upper);
    out.push_back('\x02');
    encode_sorted(out, phi.lower);
    out.push_back('\x02');
    phi.argument.encode(out);
  } else {
    const auto& w = std::get<WSpec>(s);
    out.push_back('W');
    w.special.encode(out);
    out.push_back('\x02');
    encode_sorted(out, w.numer);
    out.push_back('\x02');
    w.argument.encode(out);
  }
  return out;
}

SeriesSpec apply_series(const Substitution& sub, const SeriesSpec& s) {
  if (std::holds_alternative<PhiSpec>(s)) {
    PhiSpec phi = std::get<PhiSpec>(s);
    for (auto& m : phi.upper) m = sub.apply(m);
    for (auto& m : phi.lower) m = sub.apply(m);
    phi.argument = sub.apply(phi.argument);
    return SeriesSpec(std::move(phi));
  }
  WSpec w = std::get<WSpec>(s);
  w.special = sub.apply(w.special);
  for (auto& m : w.numer) m = sub.apply(m);
  w.argument = sub.apply(w.argument);
  return SeriesSpec(std::move(w));
}

}  // namespace

Signature canonical_signature(const SeriesSpec& series, const std::vector<Substitution>& relabel) {
  Signature best;
  bool first = true;
  for (const auto& sub : relabel) {
    Signature sig = encode_series(apply_series(sub, series));
    if (first || sig < best) {
      best = std::move(sig);
      first = false;
    }
  }
  return best;
}

namespace {

const std::map<Signature, ClassId>& bcdef_class_map() {
  static const std::map<Signature, ClassId> map = [] {
    std::map<Signature, ClassId> m;
    for (ClassId c : phi_classes())
      m[canonical_signature(template_series(c), cdef_relabelings())] = c;
    for (ClassId c : w_classes())
      m[canonical_signature(template_series(c), cdef_relabelings())] = c;
    return m;
  }();
  return map;
}

const std::map<Signature, ClassId>& converse_class_map() {
  static const std::map<Signature, ClassId> map = [] {
    std::map<Signature, ClassId> m;
    for (ClassId c : converse_classes())
      m[canonical_signature(template_series(c), converse_relabelings())] = c;
    return m;
  }();
  return map;
}

}  // namespace

ClassId classify(const SeriesSpec& series) {
  Signature sig = canonical_signature(series, cdef_relabelings());
  auto it = bcdef_class_map().find(sig);
  return it == bcdef_class_map().end() ? ClassId::Unclassified : it->second;
}

ClassId classify_converse(const SeriesSpec& series) {
  Signature sig = canonical_signature(series, converse_relabelings());
  auto it = converse_class_map().find(sig);
  return it == converse_class_map().end() ? ClassId::Unclassified : it->second;
}

std::string template_signature_hash() {
  static const std::string hash = [] {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
      }
    };
    for (ClassId c : phi_classes()) {
      mix(class_name(c));
      mix(canonical_signature(template_series(c), cdef_relabelings()));
    }
    for (ClassId c : w_classes()) {
      mix(class_name(c));
      mix(canonical_signature(template_series(c), cdef_relabelings()));
    }
    for (ClassId c : converse_classes()) {
      mix(class_name(c));
      mix(canonical_signature(template_series(c), converse_relabelings()));
    }
    for (int r = 1; r <= 7; ++r) {
      RepId id{r, 1, {2, 3, 4}};
      mix(id.str());
      mix(canonical_signature(aw_rep_expression(id).series, aw_relabelings()));
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
  }();
  return hash;
}

// ---- the six-parameter orbit ----

void X6Config::validate() const {
  ParamMonomial prod = ParamMonomial::one();
  for (const auto& m : x) prod *= m;
  if (prod != ParamMonomial::qpow(1, -1))
    throw Error(ErrorCode::ConstraintViolated, "x1..x6 must multiply to q^{1-n}");
}

X6Config orbit_base_config() {
  X6Config cfg;
  for (int i = 0; i < 5; ++i) cfg.x[static_cast<std::size_t>(i)] = ParamMonomial::var(i);
  ParamMonomial prod = ParamMonomial::one();
  for (int i = 0; i < 5; ++i) prod *= cfg.x[static_cast<std::size_t>(i)];
  cfg.x[5] = ParamMonomial::qpow(1, -1) / prod;
  cfg.validate();
  return cfg;
}

const Substitution& orbit_to_bcdef() {
  static const Substitution sub = [] {
    // Half-exponent images (stored exponents are already doubled): the
    // Watson C3 instantiation with chi = sqrt(q b e f/(c d)).
    auto make = [](int q2, int n2, int b, int c, int d, int e, int f) {
      ParamMonomial m;
      m.q2 = static_cast<std::int16_t>(q2);
      m.n2 = static_cast<std::int16_t>(n2);
      m.e2 = {static_cast<std::int16_t>(b), static_cast<std::int16_t>(c),
              static_cast<std::int16_t>(d), static_cast<std::int16_t>(e),
              static_cast<std::int16_t>(f)};
      return m;
    };
    Substitution s;
    s.image[0] = make(-1, 0, -1, 1, 1, 1, 1);   // x1
    s.image[1] = make(1, 0, 1, -1, -1, -1, 1);  // x2
    s.image[2] = make(1, 0, 1, -1, -1, 1, -1);  // x3
    s.image[3] = make(-1, -2, -3, 1, 1, 1, 1);  // x4
    s.image[4] = make(1, 0, 1, -1, 1, -1, -1);  // x5
    return s;
  }();
  return sub;
}

const std::vector<S6Element>& s6_elements() {
  static const std::vector<S6Element> elems = [] {
    std::vector<S6Element> out;
    std::array<int, 6> p{0, 1, 2, 3, 4, 5};
    do {
      out.push_back(S6Element{p});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return elems;
}

Expression s6_apply(const S6Element& g, const X6Config& base) {
  base.validate();
  std::array<ParamMonomial, 6> y;
  for (int k = 0; k < 6; ++k) y[static_cast<std::size_t>(k)] = base.x[static_cast<std::size_t>(g.slot[static_cast<std::size_t>(k)])];
  ParamMonomial y012 = y[0] * y[1] * y[2];

  Prefactor pref;
  pref.qbinom_exp = 1;
  pref.power = y012.inverse();
  pref.mul_poch(y012 * y[3], PochLength::n(), +1);
  pref.mul_poch(y012 * y[4], PochLength::n(), +1);
  pref.mul_poch(y012 * y[5], PochLength::n(), +1);
  pref.normalize();

  PhiSpec s;
  s.upper = {QMN, y[1] * y[2], y[0] * y[2], y[0] * y[1]};
  s.lower = {y012 * y[3], y012 * y[4], y012 * y[5]};
  s.argument = Q;
  s.term_slot = 0;
  return {pref, SeriesSpec(std::move(s))};
}

// ---- the signed-permutation action on w-parameters ----

const std::vector<SignedPerm>& wd5_elements() {
  static const std::vector<SignedPerm> elems = [] {
    std::vector<SignedPerm> out;
    std::array<int, 5> p{0, 1, 2, 3, 4};
    do {
      for (unsigned mask = 0; mask < 32; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        out.push_back(SignedPerm{p, mask});
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return elems;
}

ParamMonomial WConfig::argument() const {
  ParamMonomial prod = ParamMonomial::one();
  for (const auto& a : numer) prod *= a;
  return ParamMonomial::qpow(2) * special.pow(2) / prod;
}

bool WConfig::terminating() const {
  for (const auto& a : numer)
    if (a.is_q_minus_n()) return true;
  return false;
}

WSpec WConfig::spec() const {
  WSpec w;
  w.special = special;
  w.numer.assign(numer.begin(), numer.end());
  w.argument = argument();
  w.term_slot = 0;
  for (std::size_t i = 0; i < w.numer.size(); ++i)
    if (w.numer[i].is_q_minus_n()) w.term_slot = static_cast<int>(i);
  w.validate();
  return w;
}

WD5Image wd5_apply(const SignedPerm& g, const WConfig& base) {
  if (g.parity() != 0)
    throw Error(ErrorCode::OddParity, "only even sign counts act on the very-well-poised form");
  ParamMonomial prodA = ParamMonomial::one();
  for (const auto& a : base.numer) prodA *= a;
  ParamMonomial qb_over_prod = Q * base.special / prodA;

  int half = __builtin_popcount(g.flips) / 2;
  ParamMonomial r = qb_over_prod.pow(half);
  for (int j = 0; j < 5; ++j)
    if (g.flips & (1u << j)) r *= base.numer[static_cast<std::size_t>(j)];

  WD5Image img;
  img.config.special = r * base.special;
  for (int k = 0; k < 5; ++k) {
    int j = g.slot[static_cast<std::size_t>(k)];
    const ParamMonomial& aj = base.numer[static_cast<std::size_t>(j)];
    if (g.flips & (1u << j))
      img.config.numer[static_cast<std::size_t>(k)] = r / (aj * qb_over_prod);
    else
      img.config.numer[static_cast<std::size_t>(k)] = r * aj;
  }
  img.terminating = img.config.terminating();
  return img;
}

Rational wd5_prefactor_ratio(const WConfig& base, const WConfig& image, const PointEnv& env) {
  auto args = [](const WConfig& c) {
    std::vector<ParamMonomial> v;
    v.push_back(c.argument());
    for (const auto& a : c.numer) v.push_back(Q * c.special / a);
    return v;
  };
  std::vector<ParamMonomial> up = args(image);
  up.push_back(Q * base.special);
  std::vector<ParamMonomial> down = args(base);
  down.push_back(Q * image.special);

  auto key = [](const ParamMonomial& m) {
    std::string k;
    k.push_back(static_cast<char>(m.sign));
    for (auto e : m.e2) {
      k.push_back(static_cast<char>((e >> 8) & 0xff));
      k.push_back(static_cast<char>(e & 0xff));
    }
    return k;
  };
  std::map<std::string, std::pair<std::vector<ParamMonomial>, std::vector<ParamMonomial>>> groups;
  for (const auto& m : up) groups[key(m)].first.push_back(m);
  for (const auto& m : down) groups[key(m)].second.push_back(m);

  Rational ratio = Rational::one();
  for (auto& [k, uv] : groups) {
    auto& [us, ds] = uv;
    if (us.size() != ds.size())
      throw Error(ErrorCode::ConstraintViolated,
                  "w-form prefactor arguments do not pair between base and image");
    std::sort(us.begin(), us.end());
    std::sort(ds.begin(), ds.end());
    for (std::size_t i = 0; i < us.size(); ++i) {
      const ParamMonomial &u = us[i], &v = ds[i];
      int dq2 = u.q2 - v.q2, dn2 = u.n2 - v.n2;
      if (dq2 % 2 || dn2 % 2)
        throw Error(ErrorCode::ConstraintViolated, "half-integer pair offset in prefactor ratio");
      long delta = dq2 / 2 + static_cast<long>(dn2 / 2) * env.n;
      if (delta == 0) continue;
      if (delta > 0) {
        Rational p = q_pochhammer(eval_monomial(v, env), env.q, static_cast<int>(delta));
        if (p.is_zero())
          throw Error(ErrorCode::DivergentDenominator,
                      "prefactor ratio base " + v.str(env.frame) + " lies in Omega_q");
        ratio /= p;
      } else {
        ratio *= q_pochhammer(eval_monomial(u, env), env.q, static_cast<int>(-delta));
      }
    }
  }
  return ratio;
}

// ---- censuses ----

namespace {

std::vector<PointEnv> orbit_value_envs(const X6Config& base, std::uint64_t seed, int count) {
  std::vector<Guard> guards;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      guards.push_back(Guard::omega(base.x[static_cast<std::size_t>(i)] * base.x[static_cast<std::size_t>(j)]));
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        for (int l = k + 1; l < 6; ++l)
          guards.push_back(Guard::omega(base.x[static_cast<std::size_t>(i)] * base.x[static_cast<std::size_t>(j)] *
                                        base.x[static_cast<std::size_t>(k)] * base.x[static_cast<std::size_t>(l)]));
  dedupe_guards(guards);
  std::vector<PointEnv> envs;
  for (int e = 0; e < count; ++e)
    envs.push_back(sample_point(kFrameOrbit, e % 7, mix_seed(seed, "s6", static_cast<std::uint64_t>(e)), guards));
  return envs;
}

std::string ordered_image_key(const PhiSpec& s) {
  std::string k;
  for (const auto& m : s.upper) {
    m.encode(k);
    k.push_back('\x01');
  }
  k.push_back('\x02');
  for (const auto& m : s.lower) {
    m.encode(k);
    k.push_back('\x01');
  }
  return k;
}

}  // namespace

OrbitCensus s6_census(const X6Config& base, std::uint64_t seed, int value_envs, ExecMode mode) {
  base.validate();
  const auto& elems = s6_elements();
  OrbitCensus census;
  census.total = static_cast<long>(elems.size());

  std::vector<PointEnv> envs = value_envs > 0 ? orbit_value_envs(base, seed, value_envs)
                                              : std::vector<PointEnv>{};
  std::vector<Rational> base_vals;
  Expression base_expr = s6_apply(S6Element{{0, 1, 2, 3, 4, 5}}, base);
  for (const auto& env : envs) base_vals.push_back(eval_expression(base_expr, env));

  census.source = [&] {
    PhiSpec pulled = std::get<PhiSpec>(apply_series(orbit_to_bcdef(), base_expr.series));
    return classify(SeriesSpec(std::move(pulled)));
  }();

  std::vector<ClassId> cls(elems.size(), ClassId::Unclassified);
  std::vector<std::string> ordered_keys(elems.size());
  std::vector<char> value_ok(elems.size(), 1);
  for_each_index(elems.size(), mode, [&](std::size_t i) {
    Expression img = s6_apply(elems[i], base);
    const PhiSpec& phi = std::get<PhiSpec>(img.series);
    ordered_keys[i] = ordered_image_key(phi);
    SeriesSpec pulled = apply_series(orbit_to_bcdef(), img.series);
    cls[i] = classify(pulled);
    for (std::size_t e = 0; e < envs.size(); ++e) {
      if (eval_expression(img, envs[e]) != base_vals[e]) {
        value_ok[i] = 0;
        break;
      }
    }
  });

  std::set<std::string> distinct;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    distinct.insert(ordered_keys[i]);
    if (cls[i] == ClassId::Unclassified) census.all_classified = false;
    ++census.counts[cls[i]];
    if (!value_ok[i]) {
      census.values_ok = false;
      if (census.failure.empty()) census.failure = "image value mismatch at element " + std::to_string(i);
    }
  }
  census.distinct_images = static_cast<long>(distinct.size());
  return census;
}

namespace {

OrbitCensus signed_census(const WConfig& base, ClassId source, bool converse_frame,
                          std::uint64_t seed, int value_envs, ExecMode mode) {
  const auto& elems = wd5_elements();
  OrbitCensus census;
  census.source = source;
  census.total = static_cast<long>(elems.size());

  // Shared env pool; per-image guard violations skip to the next env.
  std::vector<PointEnv> pool;
  std::vector<Rational> base_vals;
  if (value_envs > 0) {
    WSpec base_spec = base.spec();
    std::vector<Guard> guards = series_guards(SeriesSpec(base_spec));
    int pool_size = value_envs * 4;
    for (int e = 0; e < pool_size; ++e) {
      PointEnv env = sample_point(kFrameBCDEF, e % 7,
                                  mix_seed(seed, class_name(source), static_cast<std::uint64_t>(e)), guards);
      pool.push_back(env);
      base_vals.push_back(eval_w(base_spec, env));
    }
  }

  std::vector<ClassId> cls(elems.size(), ClassId::Nonterminating);
  std::vector<char> value_ok(elems.size(), 1);
  for_each_index(elems.size(), mode, [&](std::size_t i) {
    WD5Image img = wd5_apply(elems[i], base);
    if (!img.terminating) return;
    SeriesSpec s(img.config.spec());
    cls[i] = converse_frame ? classify_converse(s) : classify(s);
    if (value_envs > 0) {
      const WSpec& ispec = std::get<WSpec>(s);
      int good = 0;
      for (std::size_t e = 0; e < pool.size() && good < value_envs; ++e) {
        try {
          Rational ratio = wd5_prefactor_ratio(base, img.config, pool[e]);
          Rational iv = eval_w(ispec, pool[e]);
          if (base_vals[e] != ratio * iv) {
            value_ok[i] = 0;
            return;
          }
          ++good;
        } catch (const Error&) {
          continue;  // inadmissible env for this image
        }
      }
      if (good < value_envs) value_ok[i] = 0;
    }
  });

  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (cls[i] == ClassId::Nonterminating) {
      ++census.nonterminating;
      continue;
    }
    if (cls[i] == ClassId::Unclassified) census.all_classified = false;
    ++census.counts[cls[i]];
    if (!value_ok[i]) {
      census.values_ok = false;
      if (census.failure.empty())
        census.failure = "terminating image value mismatch at element " + std::to_string(i);
    }
  }
  return census;
}

}  // namespace

OrbitCensus wd5_census(ClassId base_class, std::uint64_t seed, int value_envs, ExecMode mode) {
  return signed_census(w_class_config(base_class), base_class, false, seed, value_envs, mode);
}

OrbitCensus converse_census_row(ClassId base_class, std::uint64_t seed, int value_envs, ExecMode mode) {
  return signed_census(w_class_config(base_class), base_class, true, seed, value_envs, mode);
}

std::vector<OrbitCensus> converse_census(std::uint64_t seed, int value_envs, ExecMode mode) {
  std::vector<OrbitCensus> rows;
  for (ClassId c : converse_classes()) rows.push_back(converse_census_row(c, seed, value_envs, mode));
  return rows;
}

// ---- Watson permutation censuses ----

namespace {

std::map<ClassId, std::map<ClassId, long>> reported_phi_to_w() {
  using M = std::map<ClassId, long>;
  M c34{{ClassId::W0, 4}, {ClassId::W1, 4}, {ClassId::W2, 56}, {ClassId::W7, 20},
        {ClassId::W7b, 20}, {ClassId::W6, 20}, {ClassId::W7c, 20}};
  M c56{{ClassId::W0, 6}, {ClassId::W1, 6}, {ClassId::W2, 60}, {ClassId::W7, 18},
        {ClassId::W7b, 18}, {ClassId::W6, 18}, {ClassId::W7c, 18}};
  return {{ClassId::C3, c34}, {ClassId::C4, c34}, {ClassId::C5, c56}, {ClassId::C6b, c56}};
}

std::map<ClassId, std::map<ClassId, long>> reported_w_to_phi() {
  using M = std::map<ClassId, long>;
  M w01{{ClassId::C3, 24}, {ClassId::C4, 24}, {ClassId::C5, 24}, {ClassId::C6b, 24}};
  M w2{{ClassId::C3, 28}, {ClassId::C4, 28}, {ClassId::C5, 20}, {ClassId::C6b, 20}};
  M rest{{ClassId::C3, 30}, {ClassId::C4, 30}, {ClassId::C5, 16}, {ClassId::C6b, 16}};
  return {{ClassId::W0, w01}, {ClassId::W1, w01},  {ClassId::W2, w2},  {ClassId::W7, rest},
          {ClassId::W7b, rest}, {ClassId::W6, rest}, {ClassId::W7c, rest}};
}

}  // namespace

WatsonCensus watson_permutation_census(WatsonDirection dir) {
  WatsonCensus census;
  census.direction = dir;
  if (dir == WatsonDirection::PhiToW) {
    census.sources = phi_classes();
    census.targets = w_classes();
    census.reported = reported_phi_to_w();
    census.convention =
        "3!*3! = 36 orderings of the (a,b,c)/(d,e,f) assignment, 4 converse forms each (144 tallies per row)";
    for (ClassId src : census.sources) {
      const PhiSpec& tmpl = std::get<PhiSpec>(template_series(src));
      std::vector<ParamMonomial> abc;
      for (std::size_t i = 0; i < tmpl.upper.size(); ++i)
        if (static_cast<int>(i) != tmpl.term_slot) abc.push_back(tmpl.upper[i]);
      std::array<int, 3> p{0, 1, 2};
      auto& row = census.ours[src];
      for (ClassId t : census.targets) row[t] = 0;
      do {
        std::array<int, 3> r{0, 1, 2};
        do {
          PhiSpec spec;
          spec.upper = {QMN, abc[static_cast<std::size_t>(p[0])], abc[static_cast<std::size_t>(p[1])],
                        abc[static_cast<std::size_t>(p[2])]};
          spec.lower = {tmpl.lower[static_cast<std::size_t>(r[0])], tmpl.lower[static_cast<std::size_t>(r[1])],
                        tmpl.lower[static_cast<std::size_t>(r[2])]};
          spec.argument = Q;
          spec.term_slot = 0;
          for (const Expression& e : watson_converse(spec).primary) ++row[classify(e.series)];
        } while (std::next_permutation(r.begin(), r.end()));
      } while (std::next_permutation(p.begin(), p.end()));
    }
  } else {
    census.sources = w_classes();
    census.targets = phi_classes();
    census.reported = reported_w_to_phi();
    census.convention =
        "4! = 24 orderings of the (c,d,e,f) assignment, 4 Watson forms each (96 tallies per row)";
    for (ClassId src : census.sources) {
      WConfig cfg = w_class_config(src);
      std::vector<ParamMonomial> cdef;
      for (const auto& a : cfg.numer)
        if (!a.is_q_minus_n()) cdef.push_back(a);
      std::array<int, 4> p{0, 1, 2, 3};
      auto& row = census.ours[src];
      for (ClassId t : census.targets) row[t] = 0;
      do {
        WSpec w;
        w.special = cfg.special;
        w.numer = {QMN, cdef[static_cast<std::size_t>(p[0])], cdef[static_cast<std::size_t>(p[1])],
                   cdef[static_cast<std::size_t>(p[2])], cdef[static_cast<std::size_t>(p[3])]};
        w.term_slot = 0;
        w.argument = cfg.argument();
        for (const Expression& e : watson_forms(w)) ++row[classify(e.series)];
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
  return census;
}

// ---- inversion pairings and the standard map ----

std::map<ClassId, ClassId> inversion_pairings() {
  std::map<ClassId, ClassId> out;
  auto invert_series = [](const SeriesSpec& s) {
    if (std::holds_alternative<PhiSpec>(s)) return invert_phi(std::get<PhiSpec>(s)).series;
    return invert_w(std::get<WSpec>(s)).series;
  };
  for (ClassId c : phi_classes()) out[c] = classify(invert_series(template_series(c)));
  for (ClassId c : w_classes()) out[c] = classify(invert_series(template_series(c)));
  for (ClassId c : converse_classes()) out[c] = classify_converse(invert_series(template_series(c)));
  return out;
}

namespace {

Substitution standard_map_substitution() {
  Substitution s;
  s.image[0] = ParamMonomial::qpow(0, -1) * ParamMonomial::var(4).pow(2);  // b -> q^{-n} t^2
  for (int k = 0; k < 4; ++k) s.image[static_cast<std::size_t>(1 + k)] = ParamMonomial::var(k) * ParamMonomial::var(4);
  return s;
}

}  // namespace

std::vector<StandardMapEdge> standard_map_edges() {
  std::vector<StandardMapEdge> edges;
  Substitution stand = standard_map_substitution();

  struct RepSig {
    ClassId rep;
    Signature plain, flipped;
  };
  std::vector<RepSig> reps;
  for (int r = 1; r <= 7; ++r) {
    RepId id{r, 1, {2, 3, 4}};
    SeriesSpec s = aw_rep_expression(id).series;
    reps.push_back({static_cast<ClassId>(static_cast<int>(ClassId::D1) + r - 1),
                    canonical_signature(s, aw_relabelings()),
                    canonical_signature(aw_flip_t(s), aw_relabelings())});
  }

  std::vector<ClassId> all;
  for (ClassId c : w_classes()) all.push_back(c);
  for (ClassId c : phi_classes()) all.push_back(c);
  for (ClassId c : all) {
    SeriesSpec image = apply_series(stand, template_series(c));
    Signature sig = canonical_signature(image, aw_relabelings());
    bool found = false;
    for (const auto& rs : reps) {
      if (sig == rs.plain) {
        edges.push_back({c, rs.rep, false});
        found = true;
        break;
      }
      if (sig == rs.flipped) {
        edges.push_back({c, rs.rep, true});
        found = true;
        break;
      }
    }
    if (!found) edges.push_back({c, ClassId::Unclassified, false});
  }
  return edges;
}

// ---- graphs ----

namespace {

void emit_inversion_edges(std::ostringstream& os, const std::map<ClassId, ClassId>& inv,
                          const std::vector<ClassId>& nodes) {
  std::set<ClassId> done;
  for (ClassId c : nodes) {
    if (done.count(c)) continue;
    ClassId to = inv.at(c);
    if (to == c) {
      os << "  \"" << class_name(c) << "\" -> \"" << class_name(c)
         << "\" [penwidth=2.2,class=\"inversion\"];\n";
      done.insert(c);
    } else {
      os << "  \"" << class_name(c) << "\" -> \"" << class_name(to)
         << "\" [dir=both,penwidth=2.2,class=\"inversion\"];\n";
      done.insert(c);
      done.insert(to);
    }
  }
}

std::vector<std::vector<ClassId>> blocks_from_rows(const std::vector<OrbitCensus>& rows,
                                                   const std::vector<ClassId>& nodes) {
  std::map<ClassId, std::set<ClassId>> adj;
  for (const auto& row : rows)
    for (const auto& [target, count] : row.counts)
      if (count > 0) {
        adj[row.source].insert(target);
        adj[target].insert(row.source);
      }
  std::vector<std::vector<ClassId>> blocks;
  std::set<ClassId> seen;
  for (ClassId c : nodes) {
    if (seen.count(c)) continue;
    std::vector<ClassId> block, stack{c};
    seen.insert(c);
    while (!stack.empty()) {
      ClassId cur = stack.back();
      stack.pop_back();
      block.push_back(cur);
      for (ClassId nb : adj[cur])
        if (!seen.count(nb)) {
          seen.insert(nb);
          stack.push_back(nb);
        }
    }
    std::sort(block.begin(), block.end(),
              [](ClassId a, ClassId b) { return std::string(class_name(a)) < class_name(b); });
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return std::string(class_name(a.front())) < class_name(b.front());
  });
  return blocks;
}

void emit_census_graph(std::ostringstream& os, const std::vector<OrbitCensus>& rows,
                       const std::vector<ClassId>& nodes,
                       const std::map<ClassId, ClassId>& inv) {
  auto blocks = blocks_from_rows(rows, nodes);
  int bi = 0;
  for (const auto& block : blocks) {
    os << "  subgraph cluster_" << bi++ << " {\n    style=filled;\n    color=gray90;\n";
    for (ClassId c : block) os << "    \"" << class_name(c) << "\";\n";
    os << "  }\n";
  }
  emit_inversion_edges(os, inv, nodes);
  for (const auto& row : rows)
    for (const auto& [target, count] : row.counts)
      if (count > 0 && target != row.source)
        os << "  \"" << class_name(row.source) << "\" -> \"" << class_name(target)
           << "\" [penwidth=0.8,label=\"" << count << "\",class=\"group-action\"];\n";
}

}  // namespace

std::string emit_graph(FigureId which, std::uint64_t seed) {
  std::ostringstream os;
  std::map<ClassId, ClassId> inv = inversion_pairings();
  switch (which) {
    case FigureId::Fig1: {
      os << "digraph fig1 {\n  rankdir=LR;\n";
      std::vector<ClassId> nodes;
      for (ClassId c : w_classes()) nodes.push_back(c);
      for (ClassId c : phi_classes()) nodes.push_back(c);
      for (ClassId c : nodes) os << "  \"" << class_name(c) << "\" [shape=ellipse];\n";
      for (int r = 1; r <= 7; ++r)
        os << "  \"D" << r << "\" [shape=doublecircle];\n";
      emit_inversion_edges(os, inv, nodes);
      for (const auto& e : standard_map_edges()) {
        os << "  \"" << class_name(e.cls) << "\" -> \"" << class_name(e.rep)
           << "\" [style=dashed,arrowhead=open,class=\"standard-map\"";
        if (e.flip) os << ",label=\"t->1/t\"";
        os << "];\n";
      }
      os << "}\n";
      break;
    }
    case FigureId::Fig2: {
      os << "digraph fig2 {\n  rankdir=LR;\n";
      std::vector<OrbitCensus> rows;
      for (ClassId c : w_classes()) rows.push_back(wd5_census(c, seed, 0));
      emit_census_graph(os, rows, w_classes(), inv);
      os << "}\n";
      break;
    }
    case FigureId::Fig3: {
      os << "digraph fig3 {\n  rankdir=LR;\n";
      std::vector<OrbitCensus> rows = converse_census(seed, 0);
      emit_census_graph(os, rows, converse_classes(), inv);
      os << "}\n";
      break;
    }
  }
  return os.str();
}

// ---- frozen expectations ----

const std::map<ClassId, long>& expected_s6_counts() {
  static const std::map<ClassId, long> m{
      {ClassId::C3, 216}, {ClassId::C4, 216}, {ClassId::C5, 144}, {ClassId::C6b, 144}};
  return m;
}

const std::map<ClassId, long>& expected_wd5_row(ClassId base) {
  static const std::map<ClassId, long> block06{{ClassId::W0, 120}, {ClassId::W6, 480}};
  static const std::map<ClassId, long> block17b{{ClassId::W1, 120}, {ClassId::W7b, 480}};
  static const std::map<ClassId, long> block277c{
      {ClassId::W2, 120}, {ClassId::W7, 360}, {ClassId::W7c, 120}};
  switch (base) {
    case ClassId::W0:
    case ClassId::W6: return block06;
    case ClassId::W1:
    case ClassId::W7b: return block17b;
    case ClassId::W2:
    case ClassId::W7:
    case ClassId::W7c: return block277c;
    default: throw Error(ErrorCode::ParseError, "not a W class");
  }
}

const std::map<ClassId, long>& expected_converse_row(ClassId base) {
  static const std::map<ClassId, long> block14{{ClassId::CW1, 360}, {ClassId::CW4, 240}};
  static const std::map<ClassId, long> block23{{ClassId::CW2, 360}, {ClassId::CW3, 240}};
  switch (base) {
    case ClassId::CW1:
    case ClassId::CW4: return block14;
    case ClassId::CW2:
    case ClassId::CW3: return block23;
    default: throw Error(ErrorCode::ParseError, "not a converse class");
  }
}

const std::map<ClassId, std::map<ClassId, long>>& expected_watson_rows(WatsonDirection dir) {
  static const auto phi_to_w = reported_phi_to_w();
  static const auto w_to_phi = reported_w_to_phi();
  return dir == WatsonDirection::PhiToW ? phi_to_w : w_to_phi;
}

const std::vector<StandardMapEdge>& expected_standard_map_edges() {
  static const std::vector<StandardMapEdge> edges{
      {ClassId::W0, ClassId::D4, false}, {ClassId::W1, ClassId::D4, true},
      {ClassId::W2, ClassId::D7, false}, {ClassId::W7, ClassId::D6, false},
      {ClassId::W7b, ClassId::D5, true}, {ClassId::W6, ClassId::D5, false},
      {ClassId::W7c, ClassId::D6, true}, {ClassId::C3, ClassId::D3, false},
      {ClassId::C4, ClassId::D3, true},  {ClassId::C5, ClassId::D2, false},
      {ClassId::C6b, ClassId::D1, false}};
  return edges;
}

const std::map<ClassId, ClassId>& expected_inversion_pairings() {
  static const std::map<ClassId, ClassId> m{
      {ClassId::C3, ClassId::C4},  {ClassId::C4, ClassId::C3},  {ClassId::C5, ClassId::C6b},
      {ClassId::C6b, ClassId::C5}, {ClassId::W0, ClassId::W1},  {ClassId::W1, ClassId::W0},
      {ClassId::W2, ClassId::W2},  {ClassId::W7, ClassId::W7b}, {ClassId::W7b, ClassId::W7},
      {ClassId::W6, ClassId::W7c}, {ClassId::W7c, ClassId::W6}, {ClassId::CW1, ClassId::CW2},
      {ClassId::CW2, ClassId::CW1}, {ClassId::CW3, ClassId::CW3}, {ClassId::CW4, ClassId::CW4}};
  return m;
}

}  // namespace qaw
