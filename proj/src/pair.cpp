#include "tangles/pair.hpp"

namespace tangles {

DiagramPair DiagramPair::from_move(const LocalMove& m) {
    DiagramPair p(TangleDiagram::from_matching(m.top()), TangleDiagram::from_matching(m.bottom()));
    p.origin_ = m;
    return p;
}

DiagramPair DiagramPair::from_diagrams(TangleDiagram first, TangleDiagram second) {
    if (first.arcs() != second.arcs()) throw domain_error("diagram pair with unequal boundaries");
    if (first.start_labels() != second.start_labels())
        throw domain_error("diagram pair with mismatched polarity");
    return DiagramPair(std::move(first), std::move(second));
}

void DiagramPair::braid(const BraidLetter& letter) {
    first_.braid(letter);
    second_.braid(letter);
    applied_.push_back(letter);
}

Checked<bool> DiagramPair::connect_allowed(int i) const {
    auto a = first_.connect_allowed(i);
    if (!a.ok()) return Rejection{"first diagram: " + a.reason()};
    auto b = second_.connect_allowed(i);
    if (!b.ok()) return Rejection{"second diagram: " + b.reason()};
    return true;
}

Checked<bool> DiagramPair::connect(int i) {
    auto ok = connect_allowed(i);
    if (!ok.ok()) return ok;
    first_.connect(i).value();
    second_.connect(i).value();
    applied_.push_back(Connect{i});
    return true;
}

int DiagramPair::reduce_greedy_both() {
    return reduce_greedy(first_) + reduce_greedy(second_);
}

bool DiagramPair::simplify_both(int budget_moves) {
    const auto s1 = simplify(first_, budget_moves);
    const auto s2 = simplify(second_, budget_moves);
    return s1.fully_reduced && s2.fully_reduced;
}

MoveState DiagramPair::state() const {
    MoveState s;
    const int pts = points();
    s.top = first_.strand_pairing();
    s.bottom = second_.strand_pairing();
    s.start.assign(static_cast<size_t>(pts) + 1, 0);
    for (Label j = 1; j <= pts; ++j) s.start[static_cast<size_t>(j)] = first_.is_start(j) ? 1 : 0;
    return s;
}

bool DiagramPair::applied_all_braiding() const {
    for (const auto& item : applied_)
        if (!std::holds_alternative<BraidLetter>(item)) return false;
    return true;
}

DiagramPair apply_braiding(DiagramPair pair, const BraidLetter& letter) {
    pair.braid(letter);
    return pair;
}

Checked<DiagramPair> apply_connecting(DiagramPair pair, int i) {
    auto ok = pair.connect(i);
    if (!ok.ok()) return Rejection{ok.reason()};
    return pair;
}

Checked<LocalMove> extract_trivial_pair(const DiagramPair& pair, int budget_moves) {
    DiagramPair work = pair;
    const int b1 = budget_moves >= 0 ? budget_moves : default_budget(work.first());
    const int b2 = budget_moves >= 0 ? budget_moves : default_budget(work.second());
    TangleDiagram d1 = work.first();
    TangleDiagram d2 = work.second();
    const auto s1 = simplify(d1, b1);
    const auto s2 = simplify(d2, b2);
    if (!s1.fully_reduced || !s2.fully_reduced)
        return Rejection{"reduction failure: a diagram is not trivial or the budget ran out"};
    auto top = d1.to_matching();
    if (!top.ok()) return Rejection{top.reason()};
    auto bottom = d2.to_matching();
    if (!bottom.ok()) return Rejection{bottom.reason()};
    return LocalMove::from_matchings(top.value(), bottom.value());
}

} // namespace tangles
