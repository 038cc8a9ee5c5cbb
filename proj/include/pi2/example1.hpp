#ifndef PI2_EXAMPLE1_HPP_
#define PI2_EXAMPLE1_HPP_

#include "pi2/rewrite.hpp"

namespace pi2 {

// The two-generator monoid {a, b | (ab)^m a ~ 1}.  Not positive and not
// homogeneous; its classes are infinite, so all searches are bounded.
Presentation example1_presentation(int m);

// The isomorphism onto Z: a -> m, b -> -(m+1).  Invariant under elementary
// transformations because the relator has value zero.
int64_t example1_value(int m, Word const& w);

// Canonical representative a^p b^q with p <= m or q <= m-1.
Word example1_normal_form(int m, Word const& w);

// Replayable witness from w to its canonical representative, built from the
// two-step commutation macro ab ~ ab(ab)^m a ~ ba and block deletion.
Witness example1_normal_form_witness(Presentation const& p, int m, Word const& w);

}  // namespace pi2

#endif  // PI2_EXAMPLE1_HPP_
