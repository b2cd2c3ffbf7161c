#include "tangles/move_state.hpp"

#include <algorithm>

namespace tangles {

MoveState MoveState::of(const LocalMove& m) {
    MoveState s;
    const int pts = m.points();
    s.top.assign(static_cast<size_t>(pts) + 1, 0);
    s.bottom.assign(static_cast<size_t>(pts) + 1, 0);
    s.start.assign(static_cast<size_t>(pts) + 1, 0);
    for (Label j = 1; j <= pts; ++j) {
        s.top[static_cast<size_t>(j)] = m.top().partner(j);
        s.bottom[static_cast<size_t>(j)] = m.bottom().partner(j);
        s.start[static_cast<size_t>(j)] = m.top().is_start(j) ? 1 : 0;
    }
    return s;
}

namespace {

void swap_in_table(std::vector<Label>& t, int i, int j) {
    // transpose labels i and j in a partner table
    const Label pi = t[static_cast<size_t>(i)];
    const Label pj = t[static_cast<size_t>(j)];
    if (pi == j) return; // (i,j) is itself a pair
    t[static_cast<size_t>(i)] = pj;
    t[static_cast<size_t>(j)] = pi;
    t[static_cast<size_t>(pi)] = j;
    t[static_cast<size_t>(pj)] = i;
}

} // namespace

void MoveState::swap_labels(int i, int j) {
    swap_in_table(top, i, j);
    swap_in_table(bottom, i, j);
    std::swap(start[static_cast<size_t>(i)], start[static_cast<size_t>(j)]);
}

void MoveState::apply(const BraidLetter& l) {
    const int pts = points();
    if (l.index < 1 || l.index > pts)
        throw domain_error("letter index out of 1..2n: " + std::to_string(l.index));
    swap_labels(l.index, l.index % pts + 1);
}

Checked<bool> MoveState::connect_ok(int i) const {
    const int pts = points();
    if (i < 1 || i > pts) return Rejection{"connect index out of 1..2n"};
    if (arcs() < 2) return Rejection{"connecting a 1-strand boundary closes a loop"};
    const int j = i % pts + 1;
    if (start[static_cast<size_t>(i)] == start[static_cast<size_t>(j)])
        return Rejection{"polarity violation at " + std::to_string(i)};
    if (top[static_cast<size_t>(i)] == j) return Rejection{"closed loop in top at " + std::to_string(i)};
    if (bottom[static_cast<size_t>(i)] == j)
        return Rejection{"closed loop in bottom at " + std::to_string(i)};
    return true;
}

Checked<bool> MoveState::apply(const Connect& c) {
    auto ok = connect_ok(c.index);
    if (!ok.ok()) return ok;
    const int pts = points();
    const int i = c.index;
    const int j = i % pts + 1;

    auto join = [&](std::vector<Label>& t) {
        const Label a = t[static_cast<size_t>(i)];
        const Label b = t[static_cast<size_t>(j)];
        t[static_cast<size_t>(a)] = b;
        t[static_cast<size_t>(b)] = a;
    };
    join(top);
    join(bottom);

    std::vector<int> remap(static_cast<size_t>(pts) + 1, 0);
    if (i <= pts - 1) {
        for (int l = 1; l < i; ++l) remap[static_cast<size_t>(l)] = l;
        for (int l = i + 2; l <= pts; ++l) remap[static_cast<size_t>(l)] = l - 2;
    } else {
        for (int l = 2; l <= pts - 1; ++l) remap[static_cast<size_t>(l)] = l - 1;
    }
    std::vector<Label> nt(static_cast<size_t>(pts) - 1, 0), nb(static_cast<size_t>(pts) - 1, 0);
    std::vector<char> ns(static_cast<size_t>(pts) - 1, 0);
    for (int l = 1; l <= pts; ++l) {
        const int nl = remap[static_cast<size_t>(l)];
        if (nl == 0) continue;
        nt[static_cast<size_t>(nl)] = remap[static_cast<size_t>(top[static_cast<size_t>(l)])];
        nb[static_cast<size_t>(nl)] = remap[static_cast<size_t>(bottom[static_cast<size_t>(l)])];
        ns[static_cast<size_t>(nl)] = start[static_cast<size_t>(l)];
    }
    top = std::move(nt);
    bottom = std::move(nb);
    start = std::move(ns);
    return true;
}

Checked<bool> MoveState::apply_all(const OpSequence& seq) {
    for (const auto& item : seq) {
        if (const auto* b = std::get_if<BraidLetter>(&item)) {
            apply(*b);
        } else {
            auto r = apply(std::get<Connect>(item));
            if (!r.ok()) return r;
        }
    }
    return true;
}

std::vector<std::vector<Label>> MoveState::cycles() const {
    const int pts = points();
    std::vector<char> seen(static_cast<size_t>(pts) + 1, 0);
    std::vector<std::vector<Label>> out;
    for (Label seed = 1; seed <= pts; ++seed) {
        if (seen[static_cast<size_t>(seed)]) continue;
        std::vector<Label> cyc;
        Label cur = seed;
        bool on_top = true;
        do {
            cyc.push_back(cur);
            seen[static_cast<size_t>(cur)] = 1;
            cur = on_top ? top[static_cast<size_t>(cur)] : bottom[static_cast<size_t>(cur)];
            on_top = !on_top;
        } while (cur != seed);
        out.push_back(std::move(cyc));
    }
    return out;
}

ArcDecomposition MoveState::decomposition() const {
    std::vector<int> parts;
    for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()) / 2);
    return ArcDecomposition::of_parts(std::move(parts));
}

int MoveState::component_count() const { return static_cast<int>(cycles().size()); }

Checked<LocalMove> MoveState::to_move() const {
    if (!pairing_noncrossing(top)) return Rejection{"top pairing crosses"};
    if (!pairing_noncrossing(bottom)) return Rejection{"bottom pairing crosses"};
    std::vector<LabelPair> tp, bp;
    std::vector<Label> starts;
    for (Label j = 1; j <= points(); ++j) {
        if (top[static_cast<size_t>(j)] > j) tp.emplace_back(j, top[static_cast<size_t>(j)]);
        if (bottom[static_cast<size_t>(j)] > j) bp.emplace_back(j, bottom[static_cast<size_t>(j)]);
        if (start[static_cast<size_t>(j)]) starts.push_back(j);
    }
    return LocalMove::validate(arcs(), tp, bp, starts);
}

std::string MoveState::key() const {
    std::string k;
    k.reserve(top.size() * 6);
    for (size_t j = 1; j < top.size(); ++j) {
        k += std::to_string(top[j]);
        k += ',';
        k += std::to_string(bottom[j]);
        k += start[j] ? 'i' : 't';
        k += ';';
    }
    return k;
}

} // namespace tangles
