#ifndef TANGLES_ENUMERATE_HPP
#define TANGLES_ENUMERATE_HPP

#include <vector>

#include "tangles/local_move.hpp"

namespace tangles {

// Every switch move on n arcs, exhaustively: unordered pairs of distinct
// non-crossing matchings together with every consistent orientation
// assignment. Deterministic order (matching tables lexicographic, orientation
// choices by cycle). Guarded: n <= guard (intended small).
std::vector<LocalMove> enumerate_switch_moves(int arcs, int guard = 6);

} // namespace tangles

#endif
