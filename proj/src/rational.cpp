#include "qaw/rational.hpp"

#include <ostream>

namespace qaw {

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s);
      return Rational(n);
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (ns.empty() || ds.empty())
      throw Error(ErrorCode::ParseError, "malformed rational: " + text);
    mpz_class n(ns), d(ds);
    if (d == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator: " + text);
    mpq_class q(n, d);
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: " + text);
  }
}

const Rational& Rational::zero() {
  static const Rational z;
  return z;
}

const Rational& Rational::one() {
  static const Rational o(1);
  return o;
}

Rational Rational::pow(long e) const {
  if (e == 0) return one();
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  if (is_zero()) {
    if (inv) throw Error(ErrorCode::ZeroDenominator, "0 to a negative power");
    return zero();
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  mpq_class r(inv ? d : n, inv ? n : d);
  r.canonicalize();
  return Rational(r, NoCanon{});
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return zero();
  mpz_class n = v_.get_num(), d = v_.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(sn, sd), NoCanon{});
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

std::uint64_t Rational::fnv1a() const {
  std::string s = v_.get_str();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qaw
