#ifndef TANGLES_UNKNOTTING_HPP
#define TANGLES_UNKNOTTING_HPP

#include "tangles/local_move.hpp"

namespace tangles {

// Untying index of a crossing-like class: one plus the sum of (part - 1) over
// the blocks. For every knot, untying via the class costs exactly as much as
// untying via the single-cycle class of this index. Always odd and >= 3.
struct UIndex {
    int value = 0;
};

UIndex u_index(const ArcDecomposition& shape);

enum class UCompare { lower, equal, higher };

// Compare untying cost of two crossing-like classes (valid for every knot).
UCompare u_compare(const ArcDecomposition& a, const ArcDecomposition& b);

// A two-block class that unties in a single application any knot whose
// untying number via `reference` is `u_reference`: parts <1, p+1> with
// p = u_reference * (sum of (part-1) of reference).
ArcDecomposition single_move_partition(int u_reference, const ArcDecomposition& reference);

// The uniform family member: r blocks of n arcs.
ArcDecomposition uniform_shift_partition(int n, int r);

// Equal untying indices across the uniform family: true iff
// b*(a-1) == d*(c-1); both sides must be crossing-like (even products).
// Quantifiers honored as preconditions: a, c >= 1 and b, d >= 2.
bool uniform_shift_u_equal(int a, int b, int c, int d);

} // namespace tangles

#endif
