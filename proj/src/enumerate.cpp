#include "tangles/enumerate.hpp"

#include <algorithm>

namespace tangles {

namespace {

// Cycles of the union of two partner tables, each as the cyclically ordered
// label list starting at the cycle's minimum, stepping top first.
std::vector<std::vector<Label>> pairing_cycles(const std::vector<Label>& top,
                                               const std::vector<Label>& bottom) {
    const int pts = static_cast<int>(top.size()) - 1;
    std::vector<char> seen(static_cast<size_t>(pts) + 1, 0);
    std::vector<std::vector<Label>> cycles;
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
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

} // namespace

std::vector<LocalMove> enumerate_switch_moves(int arcs, int guard) {
    if (arcs < 1) throw domain_error("enumerate_switch_moves needs n >= 1");
    if (arcs > guard || guard > 7)
        throw domain_error("enumeration guard exceeded (n <= " + std::to_string(std::min(guard, 7)) +
                           ")");

    const auto tables = noncrossing_partner_tables(arcs);
    std::vector<LocalMove> out;

    for (size_t ti = 0; ti < tables.size(); ++ti) {
        for (size_t bi = ti + 1; bi < tables.size(); ++bi) {
            const auto& top = tables[ti];
            const auto& bottom = tables[bi];
            const auto cycles = pairing_cycles(top, bottom);

            // Orientation freedom: two alternating polarity patterns per cycle.
            const size_t combos = size_t{1} << cycles.size();
            for (size_t mask = 0; mask < combos; ++mask) {
                std::vector<Label> starts;
                for (size_t c = 0; c < cycles.size(); ++c) {
                    const bool min_is_start = (mask >> c & 1) == 0;
                    const auto& cyc = cycles[c];
                    for (size_t i = 0; i < cyc.size(); ++i)
                        if ((i % 2 == 0) == min_is_start) starts.push_back(cyc[i]);
                }
                std::sort(starts.begin(), starts.end());

                std::vector<LabelPair> tp, bp;
                for (Label j = 1; j <= 2 * arcs; ++j) {
                    if (top[static_cast<size_t>(j)] > j) tp.emplace_back(j, top[static_cast<size_t>(j)]);
                    if (bottom[static_cast<size_t>(j)] > j)
                        bp.emplace_back(j, bottom[static_cast<size_t>(j)]);
                }
                auto mv = LocalMove::validate(arcs, tp, bp, starts);
                if (!mv.ok())
                    throw internal_error("enumerated move failed validation: " + mv.reason());
                out.push_back(std::move(mv.value()));
            }
        }
    }
    return out;
}

} // namespace tangles
