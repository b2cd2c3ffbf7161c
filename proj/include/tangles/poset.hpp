#ifndef TANGLES_POSET_HPP
#define TANGLES_POSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "tangles/local_move.hpp"
#include "tangles/ops.hpp"

namespace tangles {

// Single-cycle classes <m> order by: [<m>] precedes [<n>] iff n == m (mod 2)
// and n <= m.
bool single_cycle_leq(int m, int n);

// [shape] precedes [<n>] iff n == m-c+1 (mod 2) and n <= m-c+1,
// where m = arcs and c = blocks of shape.
bool leq_to_single_cycle(const ArcDecomposition& shape, int n);

// [<n>] precedes [shape] iff m == n-c+1 (mod 2) and m <= n-c+1.
bool leq_from_single_cycle(int n, const ArcDecomposition& shape);

// Necessary conditions on any order relation: (arcs - blocks) parity is
// conserved and the arc count never grows. True means obstructed.
bool parity_obstruction(const ArcDecomposition& source, const ArcDecomposition& target);

enum class VerdictValue { yes, no, unknown };

struct OrderVerdict {
    VerdictValue value = VerdictValue::unknown;
    std::string criterion;              // rule for yes / obstruction for no
    std::optional<OpSequence> witness;  // engine-verified when present

    bool yes() const { return value == VerdictValue::yes; }
    bool no() const { return value == VerdictValue::no; }
};

// Decision cascade: reflexivity, the two single-cycle criteria (complete on
// their domains), obstructions, a criterion routed through a single-cycle
// class, then bounded witness search. Search failure yields unknown, never no.
OrderVerdict class_leq(const ArcDecomposition& source, const ArcDecomposition& target,
                       int search_budget = 20000);

struct HasseDiagram {
    std::vector<ArcDecomposition> nodes;
    std::vector<std::pair<int, int>> edges;         // transitive reduction, source -> target
    std::vector<std::pair<int, int>> unresolved;    // unknown verdicts
    std::string to_dot() const;
};

HasseDiagram hasse_export(int max_arcs, int search_budget = 20000);

// Uniform family: r parallel blocks of n arcs each. Order within the family.
bool uniform_shift_leq(int n, int r, int s);

// Single-cycle classes bracketing the uniform class with a >= 2 parts of b:
// (a*b + b - 1) precedes it, it precedes (a*b - b + 1).
std::pair<int, int> uniform_shift_bounds(int a, int b);

} // namespace tangles

#endif
