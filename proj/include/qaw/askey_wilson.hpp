#pragma once

#include <array>
#include <string>

#include "qaw/transform.hpp"

namespace qaw {

// Evaluation point for the four-parameter symmetric family: n, a1..a4, q and
// t standing in for e^{i*theta} (so x = (t + 1/t)/2; t -> 1/t is the
// theta -> -theta flip). Identities hold as rational functions, so any
// nonzero rational t is an admissible verification point.
struct AWPoint {
  int n = 0;
  std::array<Rational, 4> a;
  Rational t;
  Rational q;

  PointEnv env() const;
};

// One of the seven series representations. D1..D3 are the balanced 4phi3
// forms (D1 the defining one), D4 the fully symmetric 8W7, D5..D7 the
// remaining 8W7 forms. p picks the distinguished parameter; rtu orders the
// rest where the representation needs it (D3, D7).
struct RepId {
  int rep = 1;            // 1..7
  int p = 1;              // 1..4
  std::array<int, 3> rtu{2, 3, 4};

  void validate() const;
  bool uses_rtu() const { return rep == 3 || rep == 7; }
  std::string str() const;
};

// The representation as a prefactor times a series over the AW frame.
Expression aw_rep_expression(const RepId& id);

// Defining evaluation (D1 with p = 1).
Rational aw_reference(const AWPoint& pt);

Rational aw_eval_rep(const RepId& id, const AWPoint& pt);

// t -> 1/t on an AW-frame expression.
Expression aw_flip_t(const Expression& e);
SeriesSpec aw_flip_t(const SeriesSpec& s);

struct AWSymmetryReport {
  bool perm_invariant = false;      // all 4! parameter permutations agree
  bool flip_invariant = false;      // every representation at t and 1/t
  bool d1_d2_inversion = false;     // inversion sends the D1 series to D2
  bool d3_self_inversion = false;   // D3 inverts to itself, flipped, pr<->tu
  std::string detail;
  bool pass() const {
    return perm_invariant && flip_invariant && d1_d2_inversion && d3_self_inversion;
  }
};

AWSymmetryReport aw_symmetry_check(const AWPoint& pt);

}  // namespace qaw
