#include "tangles/unknotting.hpp"

namespace tangles {

UIndex u_index(const ArcDecomposition& shape) {
    if (move_kind(shape) != MoveKind::crossing_like)
        throw domain_error("untying index undefined for " + shape.to_string() +
                           ": the move changes the component count of a knot");
    return UIndex{shape.total() - shape.block_count() + 1};
}

UCompare u_compare(const ArcDecomposition& a, const ArcDecomposition& b) {
    const int na = u_index(a).value;
    const int nb = u_index(b).value;
    if (na == nb) return UCompare::equal;
    return na < nb ? UCompare::lower : UCompare::higher;
}

ArcDecomposition single_move_partition(int u_reference, const ArcDecomposition& reference) {
    if (u_reference < 1) throw domain_error("untying number must be >= 1");
    const int p = u_reference * (u_index(reference).value - 1);
    return ArcDecomposition::of_parts({1, p + 1});
}

ArcDecomposition uniform_shift_partition(int n, int r) {
    if (n < 2 || r < 1) throw domain_error("uniform family needs n >= 2, r >= 1");
    return ArcDecomposition::of_parts(std::vector<int>(static_cast<size_t>(r), n));
}

bool uniform_shift_u_equal(int a, int b, int c, int d) {
    if (a < 1 || c < 1 || b < 2 || d < 2)
        throw domain_error("uniform untying comparison needs a, c >= 1 and b, d >= 2 "
                           "(the arithmetic extends further but is not covered)");
    if (a == 1 || c == 1)
        throw domain_error("all-ones class admits no switch move; untying index undefined");
    // u_index throws on smoothing-like sides; equality of b(a-1) and d(c-1)
    // is equality of the indices b(a-1)+1 and d(c-1)+1
    return u_index(uniform_shift_partition(a, b)).value ==
           u_index(uniform_shift_partition(c, d)).value;
}

} // namespace tangles
