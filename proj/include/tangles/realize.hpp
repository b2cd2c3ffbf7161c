#ifndef TANGLES_REALIZE_HPP
#define TANGLES_REALIZE_HPP

#include "tangles/move_state.hpp"
#include "tangles/normalize.hpp"
#include "tangles/verify.hpp"

namespace tangles {

// Bounded deterministic search for join runs (negative letters then a join)
// carrying `source` into the class of `target`, one join per arc dropped.
// Runs are restricted to spans whose interior points pair within the span, so
// the braid crossings cancel after the join. The found sequence is verified
// at the diagram level before being returned.
Checked<OpSequence> find_connect_path(const LocalMove& source, const ArcDecomposition& target,
                                      int max_nodes);

// Verified sequence from the standard move of `shape` to the standard
// single-cycle move on target_arcs. Requires leq_to_single_cycle(shape, target_arcs).
OpSequence realize_to_single_cycle(const ArcDecomposition& shape, int target_arcs);

// Verified sequence from the standard single-cycle move on `arcs` to the
// standard move of `shape`. Requires leq_from_single_cycle(arcs, shape).
OpSequence realize_from_single_cycle(int arcs, const ArcDecomposition& shape);

enum class PrimitiveTarget { crossing_change, band_smoothing };

struct PrimitiveReduction {
    PrimitiveTarget target = PrimitiveTarget::band_smoothing;
    OpSequence seq;
};

// Every class reaches one of the two primitive operations: crossing-like
// classes reach the crossing change (ending with the negative-run tail from
// the 3-arc single-cycle move), smoothing-like classes reach the standard
// 2-arc move. The sequence is verified end to end.
PrimitiveReduction reduce_to_primitive(const ArcDecomposition& shape);

// The pair is, after reduction, two one-crossing diagrams with the same
// transversal pairing and opposite crossings.
bool pair_is_crossing_change(const DiagramPair& pair, int budget_moves = -1);

} // namespace tangles

#endif
