#ifndef TANGLES_PAIR_HPP
#define TANGLES_PAIR_HPP

#include <optional>

#include "tangles/diagram.hpp"
#include "tangles/local_move.hpp"
#include "tangles/move_state.hpp"
#include "tangles/simplify.hpp"

namespace tangles {

// The two diagrams of a move, evolved together. A pair built from a
// crossingless move remembers that origin and the ops applied since; witness
// construction uses the record when plain simplification cannot recover a
// crossingless pair (braiding is not undoable by boundary-fixing moves alone).
class DiagramPair {
public:
    static DiagramPair from_move(const LocalMove& m);
    static DiagramPair from_diagrams(TangleDiagram first, TangleDiagram second);

    const TangleDiagram& first() const { return first_; }
    const TangleDiagram& second() const { return second_; }
    int arcs() const { return first_.arcs(); }
    int points() const { return first_.points(); }
    int crossing_count() const { return first_.crossing_count() + second_.crossing_count(); }

    void braid(const BraidLetter& letter);
    Checked<bool> connect_allowed(int i) const;
    Checked<bool> connect(int i);

    // Reidemeister reduction of both diagrams (no search / with search).
    int reduce_greedy_both();
    bool simplify_both(int budget_moves); // true if both reach crossingless

    // Connectivity shadow: pairings and polarity as they stand now.
    MoveState state() const;
    ArcDecomposition decomposition() const { return state().decomposition(); }

    const std::optional<LocalMove>& origin() const { return origin_; }
    const OpSequence& applied() const { return applied_; }
    bool applied_all_braiding() const;

private:
    DiagramPair(TangleDiagram f, TangleDiagram s)
        : first_(std::move(f)), second_(std::move(s)) {}

    TangleDiagram first_, second_;
    std::optional<LocalMove> origin_;
    OpSequence applied_;
};

// Free-function entry points over the pair type.
DiagramPair apply_braiding(DiagramPair pair, const BraidLetter& letter);
Checked<DiagramPair> apply_connecting(DiagramPair pair, int i);

// Both diagrams reduced to crossingless within the budget, read back as a
// move. A rejection means the reduction failed; a genuinely non-trivial
// diagram and an exhausted budget produce the same rejection.
Checked<LocalMove> extract_trivial_pair(const DiagramPair& pair, int budget_moves = -1);

} // namespace tangles

#endif
