#include "tangles/simplify.hpp"

#include <deque>
#include <set>

namespace tangles {

int default_budget(const TangleDiagram& d) { return 10 * d.crossing_count() + 100; }

int reduce_greedy(TangleDiagram& d) {
    int moves = 0;
    while (d.reduce_once()) ++moves;
    return moves;
}

SimplifyStats simplify(TangleDiagram& d, int budget_moves) {
    SimplifyStats stats;
    stats.moves_used += reduce_greedy(d);

    while (!d.crossingless() && stats.moves_used < budget_moves) {
        // search triangle slides for any diagram admitting a removal
        std::set<std::string> visited;
        visited.insert(d.canonical_code());
        std::deque<TangleDiagram> frontier{d};
        bool progressed = false;

        while (!frontier.empty() && stats.moves_used < budget_moves) {
            TangleDiagram cur = std::move(frontier.front());
            frontier.pop_front();
            for (const auto& mv : cur.triangle_moves()) {
                if (stats.moves_used >= budget_moves) break;
                TangleDiagram next = cur;
                next.apply_triangle(mv);
                ++stats.moves_used;
                if (!visited.insert(next.canonical_code()).second) continue;
                if (next.reduce_once()) {
                    ++stats.moves_used;
                    reduce_greedy(next);
                    d = std::move(next);
                    progressed = true;
                    break;
                }
                frontier.push_back(std::move(next));
            }
            if (progressed) break;
        }
        if (!progressed) break;
    }

    stats.fully_reduced = d.crossingless();
    return stats;
}

} // namespace tangles
