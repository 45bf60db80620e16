#pragma once

#include "qaw/expression.hpp"

namespace qaw {

// Inversion of a terminating series: parameters q^{1-n}/b_j up, q^{1-n}/a_j
// down, argument q^{n+1}/z * (b_1..b_s)/(a_1..a_r), with the matching
// prefactor. Value equality with the input holds at every admissible env.
// Requires an unpadded spec; the padded case is the extension point.
Expression invert_phi(const PhiSpec& spec);

// The r=7 inversion of a terminating very-well-poised series. The +-sqrt(b)
// Pochhammer pairs of the general statement collapse into the rational
// factors (qb,b;q)_n/(b;q)_{2n}, so everything stays in the field.
Expression invert_w(const WSpec& spec);

// The four balanced 4phi3 right-hand sides of Watson's q-analog of Whipple's
// theorem, for a W matching 8W7(b; q^-n, c,d,e,f; q, q^{n+2}b^2/(cdef)).
// (c,d,e,f) are read from the non-terminating numerator slots in list order.
std::vector<Expression> watson_forms(const WSpec& w);

struct ConverseForms {
  std::vector<Expression> primary;    // the four displayed 8W7 forms
  std::vector<Expression> secondary;  // the two balance-equivalent forms
};

// Converse rewrite: a terminating balanced 4phi3 with argument q and
// q^{1-n}abc = def becomes four very-well-poised 8W7 expressions, plus the
// two equivalent forms obtained through the balancing condition.
ConverseForms watson_converse(const PhiSpec& phi);

}  // namespace qaw
