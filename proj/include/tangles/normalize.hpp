#ifndef TANGLES_NORMALIZE_HPP
#define TANGLES_NORMALIZE_HPP

#include "tangles/pair.hpp"

namespace tangles {

struct NormalOutcome {
    LocalMove standard;
    std::vector<BraidLetter> word; // carries the input onto `standard`
};

// Canonical form of a switch move together with a letters-only witness.
// Sorting passes make every component occupy a consecutive label run, a
// rotation plus re-sorting puts a chosen initial point at each block's front,
// walk-sorting passes force the canonical wiring, and a final ordering sweep
// packs blocks in ascending size from label 1. The result is checked to be
// exactly the standard move of the input's decomposition.
NormalOutcome normalize_move(const LocalMove& move);

// Braided input: recover a crossingless move first (budgeted extraction; on
// failure, an all-braiding construction record is unwound instead), then run
// the pipeline. The returned word acts on the pair as given.
Checked<NormalOutcome> normalize_pair(const DiagramPair& pair, int budget_moves = -1);

} // namespace tangles

#endif
