#include "tangles/partitions.hpp"

namespace tangles {

namespace {

void extend(int remaining, int min_part, std::vector<int>& acc,
            std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = min_part; p <= remaining; ++p) {
        acc.push_back(p);
        extend(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    if (n < 1) throw domain_error("partitions_of needs n >= 1");
    if (n > 200) throw domain_error("partition guard exceeded (n <= 200)");
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    extend(n, 1, acc, out);
    return out;
}

std::vector<ArcDecomposition> switch_classes_of(int n) {
    std::vector<ArcDecomposition> out;
    for (auto& p : partitions_of(n))
        if (p.back() >= 2) out.push_back(ArcDecomposition::of_parts(std::move(p)));
    return out;
}

std::int64_t class_count(int n) {
    if (n < 2) throw domain_error("class_count needs n >= 2");
    if (n > 200) throw domain_error("class_count guard exceeded (n <= 200)");
    // count partitions with the usual bounded-part recurrence
    std::vector<std::vector<std::int64_t>> memo(
        static_cast<size_t>(n) + 1, std::vector<std::int64_t>(static_cast<size_t>(n) + 1, -1));
    // ways(r, m): partitions of r into parts <= m
    auto ways = [&](auto&& self, int r, int m) -> std::int64_t {
        if (r == 0) return 1;
        if (m == 0) return 0;
        auto& slot = memo[static_cast<size_t>(r)][static_cast<size_t>(m)];
        if (slot >= 0) return slot;
        std::int64_t total = self(self, r, m - 1);
        if (r >= m) total += self(self, r - m, m);
        return slot = total;
    };
    return ways(ways, n, n) - 1;
}

} // namespace tangles
