#include "tangles/poset.hpp"

#include <algorithm>
#include <set>

#include "tangles/partitions.hpp"
#include "tangles/realize.hpp"

namespace tangles {

bool single_cycle_leq(int m, int n) {
    if (m < 2 || n < 2) throw domain_error("single-cycle order needs indices >= 2");
    return (n - m) % 2 == 0 && n <= m;
}

bool leq_to_single_cycle(const ArcDecomposition& shape, int n) {
    if (!shape.switch_valid()) throw domain_error("order needs a switch-valid class");
    if (n < 2) throw domain_error("single-cycle index must be >= 2");
    const int reach = shape.total() - shape.block_count() + 1;
    return (reach - n) % 2 == 0 && n <= reach;
}

bool leq_from_single_cycle(int n, const ArcDecomposition& shape) {
    if (!shape.switch_valid()) throw domain_error("order needs a switch-valid class");
    if (n < 2) throw domain_error("single-cycle index must be >= 2");
    const int need = shape.total() + shape.block_count() - 1;
    return (n - need) % 2 == 0 && need <= n;
}

bool parity_obstruction(const ArcDecomposition& source, const ArcDecomposition& target) {
    if (!source.switch_valid() || !target.switch_valid())
        throw domain_error("order needs switch-valid classes");
    const int a = source.total() - source.block_count();
    const int b = target.total() - target.block_count();
    return (a - b) % 2 != 0 || target.total() > source.total();
}

namespace {

// Component arithmetic of a join: two components merge (a,b -> a+b-1) or one
// splits (s -> x,y with x+y = s-1). Reachability of the target size multiset
// in exactly source.total()-target.total() joins is necessary for any order
// relation; braiding never changes the multiset.
bool sizes_reachable(const ArcDecomposition& source, const ArcDecomposition& target) {
    const int steps = source.total() - target.total();
    if (steps < 0) return false;
    std::set<std::vector<int>> layer{source.parts()};
    for (int s = 0; s < steps; ++s) {
        std::set<std::vector<int>> next;
        for (const auto& parts : layer) {
            for (size_t i = 0; i < parts.size(); ++i) {
                for (size_t j = i + 1; j < parts.size(); ++j) {
                    auto merged = parts;
                    merged[i] = parts[i] + parts[j] - 1;
                    merged.erase(merged.begin() + static_cast<long>(j));
                    std::sort(merged.begin(), merged.end());
                    next.insert(std::move(merged));
                }
                for (int x = 1; x + 1 <= parts[i] - 1; ++x) {
                    auto split = parts;
                    split[i] = x;
                    split.push_back(parts[i] - 1 - x);
                    std::sort(split.begin(), split.end());
                    next.insert(std::move(split));
                }
            }
        }
        layer = std::move(next);
        if (layer.empty()) return false;
    }
    return layer.count(target.parts()) > 0;
}

} // namespace

OrderVerdict class_leq(const ArcDecomposition& source, const ArcDecomposition& target,
                       int search_budget) {
    if (!source.switch_valid() || !target.switch_valid())
        throw domain_error("order needs switch-valid classes");

    auto witness_or_nothing = [](auto&& build) -> std::optional<OpSequence> {
        // witness construction is bounded; larger inputs keep the criterion-only verdict
        try {
            return build();
        } catch (const domain_error&) {
            return std::nullopt;
        }
    };

    if (source == target) return {VerdictValue::yes, "reflexive", OpSequence{}};

    if (target.block_count() == 1) {
        const int n = target.total();
        if (!leq_to_single_cycle(source, n)) return {VerdictValue::no, "single-cycle target criterion", {}};
        std::optional<OpSequence> w;
        if (source.total() <= 6)
            w = witness_or_nothing([&] { return realize_to_single_cycle(source, n); });
        return {VerdictValue::yes, "single-cycle target criterion", std::move(w)};
    }
    if (source.block_count() == 1) {
        const int n = source.total();
        if (!leq_from_single_cycle(n, target)) return {VerdictValue::no, "single-cycle source criterion", {}};
        std::optional<OpSequence> w;
        if (n <= 6) w = witness_or_nothing([&] { return realize_from_single_cycle(n, target); });
        return {VerdictValue::yes, "single-cycle source criterion", std::move(w)};
    }

    if (parity_obstruction(source, target)) {
        const bool size = target.total() > source.total();
        return {VerdictValue::no, size ? "size obstruction" : "parity obstruction", {}};
    }
    if (source.total() == target.total())
        return {VerdictValue::no, "equal arc count, distinct classes", {}};
    if (!sizes_reachable(source, target))
        return {VerdictValue::no, "component-size evolution obstruction", {}};

    // route through a single-cycle class: source -> <k> -> target
    const int k = source.total() - source.block_count() + 1;
    if (leq_from_single_cycle(k, target)) {
        std::optional<OpSequence> w;
        if (source.total() <= 6) {
            w = witness_or_nothing([&] {
                OpSequence seq = realize_to_single_cycle(source, k);
                const OpSequence tail = realize_from_single_cycle(k, target);
                seq.insert(seq.end(), tail.begin(), tail.end());
                return seq;
            });
        }
        return {VerdictValue::yes, "through a single-cycle class", std::move(w)};
    }

    // bounded direct search; the node budget is the real guard
    if (source.total() - target.total() <= 6) {
        auto found = find_connect_path(standard_move(source), target, search_budget);
        if (found.ok()) return {VerdictValue::yes, "witness search", std::move(found.value())};
    }
    return {VerdictValue::unknown, "outside the decided fragment", {}};
}

HasseDiagram hasse_export(int max_arcs, int search_budget) {
    if (max_arcs < 2) throw domain_error("diagram export needs max arcs >= 2");
    if (max_arcs > 8) throw domain_error("diagram export guard exceeded (max arcs <= 8)");

    HasseDiagram h;
    for (int n = 2; n <= max_arcs; ++n)
        for (const auto& d : switch_classes_of(n)) h.nodes.push_back(d);

    const int count = static_cast<int>(h.nodes.size());
    std::vector<std::vector<bool>> yes(static_cast<size_t>(count),
                                       std::vector<bool>(static_cast<size_t>(count), false));
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            if (i == j) continue;
            const auto v = class_leq(h.nodes[static_cast<size_t>(i)],
                                     h.nodes[static_cast<size_t>(j)], search_budget);
            if (v.yes())
                yes[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
            else if (v.value == VerdictValue::unknown)
                h.unresolved.emplace_back(i, j);
        }

    // transitive reduction over the yes-edges
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            if (!yes[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
            bool redundant = false;
            for (int k = 0; k < count && !redundant; ++k)
                if (k != i && k != j && yes[static_cast<size_t>(i)][static_cast<size_t>(k)] &&
                    yes[static_cast<size_t>(k)][static_cast<size_t>(j)])
                    redundant = true;
            if (!redundant) h.edges.emplace_back(i, j);
        }
    return h;
}

std::string HasseDiagram::to_dot() const {
    std::string out = "digraph move_classes {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const auto& n : nodes) out += "  \"" + n.to_string() + "\";\n";
    for (const auto& [i, j] : edges)
        out += "  \"" + nodes[static_cast<size_t>(i)].to_string() + "\" -> \"" +
               nodes[static_cast<size_t>(j)].to_string() + "\";\n";
    for (const auto& [i, j] : unresolved)
        out += "  // unresolved: \"" + nodes[static_cast<size_t>(i)].to_string() + "\" vs \"" +
               nodes[static_cast<size_t>(j)].to_string() + "\"\n";
    out += "}\n";
    return out;
}

bool uniform_shift_leq(int n, int r, int s) {
    if (n < 2 || r < 1 || s < 1) throw domain_error("uniform family needs n >= 2 and r, s >= 1");
    if (n % 2 == 0) return (r - s) % 2 == 0 && s <= r;
    return s <= r;
}

std::pair<int, int> uniform_shift_bounds(int a, int b) {
    if (a < 2 || b < 1) throw domain_error("uniform bounds need a >= 2, b >= 1");
    return {a * b + b - 1, a * b - b + 1};
}

} // namespace tangles
