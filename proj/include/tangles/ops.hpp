#ifndef TANGLES_OPS_HPP
#define TANGLES_OPS_HPP

#include <string>
#include <variant>
#include <vector>

#include "tangles/checked.hpp"

namespace tangles {

enum class CrossSign { positive, negative };

inline CrossSign flipped(CrossSign s) {
    return s == CrossSign::positive ? CrossSign::negative : CrossSign::positive;
}

// One annular-collar exchange of boundary labels index, index+1 (index == 2n
// wraps to 1). Positive sign puts the strand riding from index upward on top.
struct BraidLetter {
    int index = 0;
    CrossSign sign = CrossSign::positive;

    bool operator==(const BraidLetter& o) const { return index == o.index && sign == o.sign; }
};

// Joining of boundary labels index, index+1 (cyclically); drops the arc count
// by one and relabels the remaining points.
struct Connect {
    int index = 0;

    bool operator==(const Connect& o) const { return index == o.index; }
};

using OpItem = std::variant<BraidLetter, Connect>;

// Sequences are stored in application order: front() acts first.
using OpSequence = std::vector<OpItem>;

inline OpSequence to_ops(const std::vector<BraidLetter>& word) {
    return OpSequence(word.begin(), word.end());
}

// Letters realizing a rotation of the whole disk by m steps (one step moves
// every label j to j+1). Listed in application order.
std::vector<BraidLetter> rotation_word(int arcs, int m);

// Run of negative letters carrying the endpoint at k1 next to the point after
// kr (cyclically increasing run k1..kr mod 2n), then the join. Application
// order; connects the points originally marked k1 and kr+1.
Checked<OpSequence> connect_sequence(int arcs, int k1, int kr);

// Inverse of a braid-only sequence: reversed order, flipped signs.
std::vector<BraidLetter> inverse_word(const std::vector<BraidLetter>& word);

std::string to_string(const BraidLetter& l);
std::string to_string(const OpItem& item);
std::string to_string(const OpSequence& seq);

} // namespace tangles

#endif
