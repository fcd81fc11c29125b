#ifndef FOURFOLD_ADMISSIBILITY_HPP
#define FOURFOLD_ADMISSIBILITY_HPP

#include "fourfold/manifold.hpp"

namespace fourfold {

/// The three admissibility axioms, decided separately:
///   cond1 - a spin-c structure with odd SW on a canonical-type class
///           (certificate SWOddCanonical; never computable here),
///   cond2 - b+ > 1 and b+ - b1 == 3 (mod 4), computed exactly,
///   cond3 - the half-pairings S^ij are all even (certificate SijEven;
///           vacuous when b1 = 0).
/// overall is Holds iff all three hold, Fails iff any fails, else
/// Undetermined.
struct BFVerdict {
  Verdict cond1;
  Verdict cond2;
  Verdict cond3;
  Verdict overall;
};

BFVerdict check_bf(const ManifoldDescriptor& d);

}  // namespace fourfold

#endif
