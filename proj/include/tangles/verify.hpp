#ifndef TANGLES_VERIFY_HPP
#define TANGLES_VERIFY_HPP

#include "tangles/normalize.hpp"
#include "tangles/pair.hpp"

namespace tangles {

struct VerifyReport {
    bool ok = false;
    std::string diagnostic;
};

// Replays the sequence on the pair at the diagram level (with eager reduction
// between steps), fully simplifies, extracts, and compares against the target:
// exact matchings and polarity by default, class equality when
// up_to_equivalence is set. Invalid intermediate joins fail with a diagnostic.
VerifyReport verify_sequence(const DiagramPair& source, const OpSequence& seq,
                             const LocalMove& target, bool up_to_equivalence = false,
                             int budget_moves = -1);
VerifyReport verify_sequence(const LocalMove& source, const OpSequence& seq,
                             const LocalMove& target, bool up_to_equivalence = false,
                             int budget_moves = -1);

// Replay without a target: the simplified end state, or the first failure.
Checked<DiagramPair> replay_sequence(DiagramPair source, const OpSequence& seq);

} // namespace tangles

#endif
