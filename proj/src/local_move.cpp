#include "tangles/local_move.hpp"

#include <algorithm>
#include <numeric>

namespace tangles {

Checked<LocalMove> LocalMove::validate(int arcs,
                                       const std::vector<LabelPair>& top_pairs,
                                       const std::vector<LabelPair>& bottom_pairs,
                                       const std::vector<Label>& starts) {
    auto top = OrientedMatching::make(arcs, top_pairs, starts);
    if (!top.ok()) return Rejection{"top: " + top.reason()};
    auto bottom = OrientedMatching::make(arcs, bottom_pairs, starts);
    if (!bottom.ok()) return Rejection{"bottom: " + bottom.reason()};
    return LocalMove(std::move(top.value()), std::move(bottom.value()));
}

LocalMove LocalMove::from_matchings(OrientedMatching top, OrientedMatching bottom) {
    if (top.arcs() != bottom.arcs())
        throw domain_error("matchings of different arc counts");
    if (top.start_labels() != bottom.start_labels())
        throw domain_error("initial-set mismatch between the two diagrams");
    return LocalMove(std::move(top), std::move(bottom));
}

std::vector<ComponentTrace> union_components(const LocalMove& move) {
    const int pts = move.points();
    std::vector<char> seen(static_cast<size_t>(pts) + 1, 0);
    std::vector<ComponentTrace> out;

    for (Label seed = 1; seed <= pts; ++seed) {
        if (seen[static_cast<size_t>(seed)]) continue;
        ComponentTrace tr;
        Label cur = seed;
        bool on_top = true; // leave the minimum label along the top strand
        do {
            tr.walk.push_back(cur);
            seen[static_cast<size_t>(cur)] = 1;
            cur = on_top ? move.top().partner(cur) : move.bottom().partner(cur);
            on_top = !on_top;
        } while (cur != seed);

        tr.labels = tr.walk;
        std::sort(tr.labels.begin(), tr.labels.end());
        for (size_t i = 1; i < tr.walk.size(); ++i)
            if (tr.walk[i] != tr.walk[i - 1] + 1) tr.walk_breaks.push_back(static_cast<int>(i) + 1);
        for (size_t i = 1; i < tr.labels.size(); ++i)
            if (tr.labels[i] != tr.labels[i - 1] + 1) tr.label_gaps.push_back(static_cast<int>(i) + 1);
        tr.starts_at_initial = move.top().is_start(tr.walk.front());
        out.push_back(std::move(tr));
    }
    return out;
}

ArcDecomposition ArcDecomposition::of_parts(std::vector<int> parts) {
    if (parts.empty()) throw domain_error("empty arc decomposition");
    for (int p : parts)
        if (p < 1) throw domain_error("arc decomposition part < 1");
    std::sort(parts.begin(), parts.end());
    ArcDecomposition d;
    d.parts_ = std::move(parts);
    return d;
}

int ArcDecomposition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool ArcDecomposition::switch_valid() const {
    return parts_.back() >= 2; // all-ones forces top == bottom
}

std::string ArcDecomposition::to_string() const {
    std::string s = "<";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ">";
}

ArcDecomposition arc_decomposition(const LocalMove& move) {
    std::vector<int> parts;
    for (const auto& c : union_components(move)) parts.push_back(c.half_size());
    return ArcDecomposition::of_parts(std::move(parts));
}

LocalMove standard_move(const ArcDecomposition& shape) {
    if (!shape.switch_valid())
        throw domain_error("all-ones decomposition has no switch move: " + shape.to_string());

    std::vector<LabelPair> top, bottom;
    std::vector<Label> starts;
    int o = 1;
    for (int k : shape.parts()) {
        for (int t = 0; t < k; ++t) top.emplace_back(o + 2 * t, o + 2 * t + 1);
        for (int t = 0; t + 1 < k; ++t) bottom.emplace_back(o + 2 * t + 1, o + 2 * t + 2);
        bottom.emplace_back(o + 2 * k - 1, o);
        for (int t = 0; t < k; ++t) starts.push_back(o + 2 * t);
        o += 2 * k;
    }
    auto mv = LocalMove::validate(shape.total(), top, bottom, starts);
    if (!mv.ok()) throw internal_error("standard layout failed validation: " + mv.reason());
    return mv.value();
}

bool equivalent(const LocalMove& a, const LocalMove& b) {
    if (!a.is_switch() || !b.is_switch())
        throw domain_error("equivalence is defined on proper switch moves");
    return arc_decomposition(a) == arc_decomposition(b);
}

MoveKind move_kind(const ArcDecomposition& shape) {
    if (!shape.switch_valid())
        throw domain_error("parity kind needs a switch-valid decomposition");
    const int diff = shape.total() - shape.block_count();
    return diff % 2 == 0 ? MoveKind::crossing_like : MoveKind::smoothing_like;
}

char move_kind_letter(const ArcDecomposition& shape) {
    return move_kind(shape) == MoveKind::crossing_like ? 'X' : 'O';
}

} // namespace tangles
