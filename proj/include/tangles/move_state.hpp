#ifndef TANGLES_MOVE_STATE_HPP
#define TANGLES_MOVE_STATE_HPP

#include <string>
#include <vector>

#include "tangles/local_move.hpp"
#include "tangles/ops.hpp"

namespace tangles {

// Endpoint-connectivity shadow of a move: the two strand pairings plus
// polarity, tracked under braiding (label transpositions) and connecting
// (join + relabel). Pairings may temporarily cross mid-word; a state converts
// back to a move only when both are non-crossing again.
struct MoveState {
    std::vector<Label> top, bottom; // 1-based partner tables
    std::vector<char> start;        // polarity flags

    static MoveState of(const LocalMove& m);

    int points() const { return static_cast<int>(top.size()) - 1; }
    int arcs() const { return points() / 2; }

    void swap_labels(int i, int j);
    void apply(const BraidLetter& l);
    Checked<bool> connect_ok(int i) const; // polarity + loop checks
    Checked<bool> apply(const Connect& c);
    Checked<bool> apply_all(const OpSequence& seq);

    // Union cycles, each listed from its minimum label stepping top first.
    std::vector<std::vector<Label>> cycles() const;
    ArcDecomposition decomposition() const;
    int component_count() const;

    Checked<LocalMove> to_move() const;
    std::string key() const; // dedup key for searches

    bool operator==(const MoveState& o) const {
        return top == o.top && bottom == o.bottom && start == o.start;
    }
};

} // namespace tangles

#endif
