#include "tangles/matching.hpp"

#include <algorithm>
#include <string>

namespace tangles {

Checked<OrientedMatching> OrientedMatching::make(int arcs,
                                                 const std::vector<LabelPair>& pairs,
                                                 const std::vector<Label>& starts) {
    if (arcs <= 0) return Rejection{"arc count must be positive"};
    const int pts = 2 * arcs;
    if (static_cast<int>(pairs.size()) != arcs)
        return Rejection{"expected " + std::to_string(arcs) + " pairs, got " +
                         std::to_string(pairs.size())};

    std::vector<Label> partner(static_cast<size_t>(pts) + 1, 0);
    for (const auto& [a, b] : pairs) {
        if (a < 1 || a > pts || b < 1 || b > pts)
            return Rejection{"label out of range in pair (" + std::to_string(a) + "," +
                             std::to_string(b) + ")"};
        if (a == b) return Rejection{"pair joins a label to itself: " + std::to_string(a)};
        if (partner[static_cast<size_t>(a)] != 0 || partner[static_cast<size_t>(b)] != 0)
            return Rejection{"label matched twice in pair (" + std::to_string(a) + "," +
                             std::to_string(b) + ")"};
        partner[static_cast<size_t>(a)] = b;
        partner[static_cast<size_t>(b)] = a;
    }
    for (Label j = 1; j <= pts; ++j)
        if (partner[static_cast<size_t>(j)] == 0)
            return Rejection{"label " + std::to_string(j) + " unmatched"};

    if (!pairing_noncrossing(partner)) {
        // name one offending pair for the diagnostic
        for (Label a = 1; a <= pts; ++a) {
            const Label b = partner[static_cast<size_t>(a)];
            if (b < a) continue;
            for (Label c = a + 1; c < b; ++c) {
                const Label d = partner[static_cast<size_t>(c)];
                if (d < c) continue;
                if (d > b)
                    return Rejection{"crossing pair: (" + std::to_string(a) + "," +
                                     std::to_string(b) + ") x (" + std::to_string(c) + "," +
                                     std::to_string(d) + ")"};
            }
        }
        return Rejection{"crossing pair"};
    }

    std::vector<char> start(static_cast<size_t>(pts) + 1, 0);
    for (Label j : starts) {
        if (j < 1 || j > pts)
            return Rejection{"start label out of range: " + std::to_string(j)};
        if (start[static_cast<size_t>(j)])
            return Rejection{"start label repeated: " + std::to_string(j)};
        start[static_cast<size_t>(j)] = 1;
    }
    if (static_cast<int>(starts.size()) != arcs)
        return Rejection{"expected " + std::to_string(arcs) + " start labels, got " +
                         std::to_string(starts.size())};
    for (Label j = 1; j <= pts; ++j) {
        const Label p = partner[static_cast<size_t>(j)];
        if (start[static_cast<size_t>(j)] && start[static_cast<size_t>(p)])
            return Rejection{"polarity violation: both ends of (" + std::to_string(j) + "," +
                             std::to_string(p) + ") are initial"};
    }

    OrientedMatching m;
    m.arcs_ = arcs;
    m.partner_ = std::move(partner);
    m.start_ = std::move(start);
    return m;
}

std::vector<LabelPair> OrientedMatching::pairs() const {
    std::vector<LabelPair> out;
    out.reserve(static_cast<size_t>(arcs_));
    for (Label j = 1; j <= points(); ++j) {
        const Label p = partner_[static_cast<size_t>(j)];
        if (j < p) out.emplace_back(j, p);
    }
    return out;
}

std::vector<Label> OrientedMatching::start_labels() const {
    std::vector<Label> out;
    out.reserve(static_cast<size_t>(arcs_));
    for (Label j = 1; j <= points(); ++j)
        if (start_[static_cast<size_t>(j)]) out.push_back(j);
    return out;
}

bool pairing_noncrossing(const std::vector<Label>& partner) {
    const int pts = static_cast<int>(partner.size()) - 1;
    // stack check: scan left to right, partners must nest
    std::vector<Label> stack;
    for (Label j = 1; j <= pts; ++j) {
        const Label p = partner[static_cast<size_t>(j)];
        if (p > j) {
            stack.push_back(j);
        } else {
            if (stack.empty() || stack.back() != p) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}

namespace {

// Interval worklist keeps the matching non-crossing by construction: the
// smallest free label lo pairs with b, splitting [lo,hi] into [lo+1,b-1] and
// [b+1,hi]. Inner interval is processed first so tables come out ordered
// lexicographically by partner of the smallest open label.
void enumerate_intervals(std::vector<Label>& partner,
                         std::vector<std::pair<int, int>> work,
                         std::vector<std::vector<Label>>& out) {
    while (!work.empty() && work.back().first > work.back().second) work.pop_back();
    if (work.empty()) {
        out.push_back(partner);
        return;
    }
    const auto [lo, hi] = work.back();
    work.pop_back();
    for (int b = lo + 1; b <= hi; b += 2) {
        partner[static_cast<size_t>(lo)] = b;
        partner[static_cast<size_t>(b)] = lo;
        auto next = work;
        next.emplace_back(b + 1, hi);
        next.emplace_back(lo + 1, b - 1);
        enumerate_intervals(partner, std::move(next), out);
        partner[static_cast<size_t>(lo)] = 0;
        partner[static_cast<size_t>(b)] = 0;
    }
}

} // namespace

std::vector<std::vector<Label>> noncrossing_partner_tables(int arcs) {
    std::vector<std::vector<Label>> out;
    if (arcs <= 0) return out;
    std::vector<Label> partner(static_cast<size_t>(2 * arcs) + 1, 0);
    enumerate_intervals(partner, {{1, 2 * arcs}}, out);
    return out;
}

} // namespace tangles
