#include "tangles/verify.hpp"

namespace tangles {

Checked<DiagramPair> replay_sequence(DiagramPair source, const OpSequence& seq) {
    size_t pos = 0;
    for (const auto& item : seq) {
        ++pos;
        if (const auto* b = std::get_if<BraidLetter>(&item)) {
            if (b->index < 1 || b->index > source.points())
                return Rejection{"step " + std::to_string(pos) + ": letter index " +
                                 std::to_string(b->index) + " out of 1..2n"};
            source.braid(*b);
        } else {
            const int i = std::get<Connect>(item).index;
            auto ok = source.connect(i);
            if (!ok.ok()) return Rejection{"step " + std::to_string(pos) + ": " + ok.reason()};
        }
        source.reduce_greedy_both();
    }
    return source;
}

VerifyReport verify_sequence(const DiagramPair& source, const OpSequence& seq,
                             const LocalMove& target, bool up_to_equivalence, int budget_moves) {
    auto replayed = replay_sequence(source, seq);
    if (!replayed.ok()) return {false, replayed.reason()};

    auto& pair = replayed.value();
    if (pair.arcs() != target.arcs())
        return {false, "arc count mismatch: got " + std::to_string(pair.arcs()) + ", want " +
                           std::to_string(target.arcs())};

    auto extracted = extract_trivial_pair(pair, budget_moves);
    if (!extracted.ok()) return {false, extracted.reason()};
    const LocalMove& got = extracted.value();

    if (up_to_equivalence) {
        if (!got.is_switch() || !target.is_switch())
            return {false, "class comparison needs switch moves on both sides"};
        if (arc_decomposition(got) != arc_decomposition(target))
            return {false, "class mismatch: got " + arc_decomposition(got).to_string() + ", want " +
                               arc_decomposition(target).to_string()};
        return {true, ""};
    }
    if (!(got == target)) return {false, "extracted move differs from the target"};
    return {true, ""};
}

VerifyReport verify_sequence(const LocalMove& source, const OpSequence& seq,
                             const LocalMove& target, bool up_to_equivalence, int budget_moves) {
    return verify_sequence(DiagramPair::from_move(source), seq, target, up_to_equivalence,
                           budget_moves);
}

} // namespace tangles
