#ifndef TANGLES_PARTITIONS_HPP
#define TANGLES_PARTITIONS_HPP

#include <cstdint>
#include <vector>

#include "tangles/local_move.hpp"

namespace tangles {

// All partitions of n as weakly increasing part lists, ordered
// lexicographically ([1,1,...,1] first, [n] last).
std::vector<std::vector<int>> partitions_of(int n);

// Partitions of n that admit a switch move (some part >= 2), same order.
std::vector<ArcDecomposition> switch_classes_of(int n);

// Number of switch-move classes on n arcs: partition count minus one.
// Guarded to keep the count inside int64.
std::int64_t class_count(int n);

} // namespace tangles

#endif
