#ifndef TANGLES_SIMPLIFY_HPP
#define TANGLES_SIMPLIFY_HPP

#include "tangles/diagram.hpp"

namespace tangles {

struct SimplifyStats {
    bool fully_reduced = false; // reached a crossingless diagram
    int moves_used = 0;
};

// Default move budget for one simplify call.
int default_budget(const TangleDiagram& d);

// Greedy kink/bigon removal to a fixpoint; then bounded breadth-first search
// over triangle slides looking for a diagram where a removal applies, adopting
// any strictly smaller diagram found. Crossing count never increases.
SimplifyStats simplify(TangleDiagram& d, int budget_moves);

// Cheap eager pass only (no triangle search).
int reduce_greedy(TangleDiagram& d);

} // namespace tangles

#endif
