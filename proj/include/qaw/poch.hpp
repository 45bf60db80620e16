#pragma once

#include "qaw/rational.hpp"

namespace qaw {

// Length of a Pochhammer factor: a fixed k, n, or 2n.
struct PochLength {
  enum class Kind : std::uint8_t { Fixed, N, TwoN };
  Kind kind = Kind::N;
  int fixed = 0;

  static PochLength k(int v) { return {Kind::Fixed, v}; }
  static PochLength n() { return {Kind::N, 0}; }
  static PochLength two_n() { return {Kind::TwoN, 0}; }

  int resolve(int n) const {
    switch (kind) {
      case Kind::Fixed: return fixed;
      case Kind::N: return n;
      case Kind::TwoN: return 2 * n;
    }
    return 0;
  }
  friend bool operator==(const PochLength& a, const PochLength& b) {
    return a.kind == b.kind && (a.kind != Kind::Fixed || a.fixed == b.fixed);
  }
};

// (a;q)_k = (1-a)(1-aq)...(1-aq^{k-1}); empty product is 1.
Rational q_pochhammer(const Rational& a, const Rational& q, int k);

// (a;q^{-1})_k computed through (a^{-1};q)_k (-a)^k q^{-binom(k,2)}.
Rational poch_base_invert(const Rational& a, const Rational& q, int k);

inline long binom2(long n) { return n * (n - 1) / 2; }

}  // namespace qaw
