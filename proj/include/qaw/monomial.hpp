#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qaw/errors.hpp"

namespace qaw {

inline constexpr int kMaxVars = 6;

// The frames the series live on. BCDEF carries the transformation variables
// b,c,d,e,f; AW carries a1..a4 and t (the exact stand-in for e^{i*theta},
// with e^{-i*theta} = 1/t); Orbit carries the five free x-variables of the
// six-parameter symmetric form, x6 being eliminated through the product
// constraint.
enum class FrameKind : std::uint8_t { BCDEF, AW, Orbit };

struct Frame {
  FrameKind kind;
  int size() const {
    switch (kind) {
      case FrameKind::BCDEF: return 5;
      case FrameKind::AW: return 5;
      case FrameKind::Orbit: return 5;
    }
    return 0;
  }
  const char* var_name(int i) const;
  friend bool operator==(const Frame& a, const Frame& b) { return a.kind == b.kind; }
};

inline constexpr Frame kFrameBCDEF{FrameKind::BCDEF};
inline constexpr Frame kFrameAW{FrameKind::AW};
inline constexpr Frame kFrameOrbit{FrameKind::Orbit};

// Signed Laurent monomial  sign * q^{alpha + beta*n} * prod v_i^{e_i}.
// All exponents are stored doubled (half-integer lattice) so that square
// roots of integer-exponent monomials and the orbit pull-backs stay exact;
// every catalog monomial has even stored exponents.
struct ParamMonomial {
  std::int8_t sign = 1;  // +1 or -1
  std::int16_t q2 = 0;   // 2*alpha
  std::int16_t n2 = 0;   // 2*beta
  std::array<std::int16_t, kMaxVars> e2{};  // 2*e_i

  static ParamMonomial one() { return {}; }
  static ParamMonomial qpow(int alpha, int beta = 0) {
    ParamMonomial m;
    m.q2 = static_cast<std::int16_t>(2 * alpha);
    m.n2 = static_cast<std::int16_t>(2 * beta);
    return m;
  }
  static ParamMonomial var(int v, int e = 1) {
    ParamMonomial m;
    m.e2[static_cast<std::size_t>(v)] = static_cast<std::int16_t>(2 * e);
    return m;
  }

  bool is_one() const { return *this == one(); }

  // Exactly the monomial q^{-n}: the terminating slot pattern.
  bool is_q_minus_n() const {
    return sign == 1 && q2 == 0 && n2 == -2 && vars_trivial();
  }
  bool vars_trivial() const {
    for (auto e : e2)
      if (e != 0) return false;
    return true;
  }

  ParamMonomial& operator*=(const ParamMonomial& o) {
    sign = static_cast<std::int8_t>(sign * o.sign);
    q2 = static_cast<std::int16_t>(q2 + o.q2);
    n2 = static_cast<std::int16_t>(n2 + o.n2);
    for (int i = 0; i < kMaxVars; ++i) e2[i] = static_cast<std::int16_t>(e2[i] + o.e2[i]);
    return *this;
  }
  friend ParamMonomial operator*(ParamMonomial a, const ParamMonomial& b) { return a *= b; }

  ParamMonomial inverse() const {
    ParamMonomial m = *this;
    m.q2 = static_cast<std::int16_t>(-m.q2);
    m.n2 = static_cast<std::int16_t>(-m.n2);
    for (auto& e : m.e2) e = static_cast<std::int16_t>(-e);
    return m;  // sign is its own inverse
  }
  friend ParamMonomial operator/(ParamMonomial a, const ParamMonomial& b) { return a *= b.inverse(); }

  ParamMonomial operator-() const {
    ParamMonomial m = *this;
    m.sign = static_cast<std::int8_t>(-m.sign);
    return m;
  }

  ParamMonomial pow(int k) const {
    ParamMonomial m;
    m.sign = (k % 2 == 0) ? std::int8_t{1} : sign;
    m.q2 = static_cast<std::int16_t>(q2 * k);
    m.n2 = static_cast<std::int16_t>(n2 * k);
    for (int i = 0; i < kMaxVars; ++i) m.e2[i] = static_cast<std::int16_t>(e2[i] * k);
    return m;
  }

  // Square root on the half-integer lattice; requires a positive sign.
  ParamMonomial sqrt() const {
    if (sign != 1) throw Error(ErrorCode::NonsquareValue, "sqrt of a negative monomial");
    ParamMonomial m = *this;
    m.q2 = static_cast<std::int16_t>(m.q2 / 2);
    m.n2 = static_cast<std::int16_t>(m.n2 / 2);
    for (auto& e : m.e2) e = static_cast<std::int16_t>(e / 2);
    if (m.q2 * 2 != q2 || m.n2 * 2 != n2) throw Error(ErrorCode::NonsquareValue, "sqrt leaves the half-integer lattice");
    for (int i = 0; i < kMaxVars; ++i)
      if (m.e2[i] * 2 != e2[i]) throw Error(ErrorCode::NonsquareValue, "sqrt leaves the half-integer lattice");
    return m;
  }

  friend bool operator==(const ParamMonomial& a, const ParamMonomial& b) {
    return a.sign == b.sign && a.q2 == b.q2 && a.n2 == b.n2 && a.e2 == b.e2;
  }
  friend bool operator!=(const ParamMonomial& a, const ParamMonomial& b) { return !(a == b); }
  friend std::strong_ordering operator<=>(const ParamMonomial& a, const ParamMonomial& b) {
    if (auto c = a.sign <=> b.sign; c != 0) return c;
    if (auto c = a.q2 <=> b.q2; c != 0) return c;
    if (auto c = a.n2 <=> b.n2; c != 0) return c;
    return a.e2 <=> b.e2;
  }

  // True when every exponent is an integer (even in half-units).
  bool integral() const {
    if (q2 % 2 || n2 % 2) return false;
    for (auto e : e2)
      if (e % 2) return false;
    return true;
  }

  std::string str(const Frame& frame) const;

  // Stable byte encoding used by canonical signatures and dedup keys.
  void encode(std::string& out) const;
};

// Variable substitution: each frame variable maps to a monomial (possibly in
// another frame). Used for the c,d,e,f relabelings, the converse-frame
// permutations, the orbit pull-back and the standard map.
struct Substitution {
  std::array<ParamMonomial, kMaxVars> image;
  Substitution() {
    for (int i = 0; i < kMaxVars; ++i) image[static_cast<std::size_t>(i)] = ParamMonomial::var(i);
  }
  ParamMonomial apply(const ParamMonomial& m) const;
};

}  // namespace qaw
