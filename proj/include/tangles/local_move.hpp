#ifndef TANGLES_LOCAL_MOVE_HPP
#define TANGLES_LOCAL_MOVE_HPP

#include <string>
#include <vector>

#include "tangles/checked.hpp"
#include "tangles/matching.hpp"

namespace tangles {

// A replacement rule given by two crossingless diagrams over the same
// boundary: same arc count, identical orientation data. The rule is a proper
// switch move when the two matchings differ.
class LocalMove {
public:
    static Checked<LocalMove> validate(int arcs,
                                       const std::vector<LabelPair>& top_pairs,
                                       const std::vector<LabelPair>& bottom_pairs,
                                       const std::vector<Label>& starts);
    static LocalMove from_matchings(OrientedMatching top, OrientedMatching bottom);

    const OrientedMatching& top() const { return top_; }
    const OrientedMatching& bottom() const { return bottom_; }

    int arcs() const { return top_.arcs(); }
    int points() const { return top_.points(); }

    // Proper switch move: the two diagrams differ.
    bool is_switch() const { return !top_.same_pairs(bottom_); }

    LocalMove swapped() const { return from_matchings(bottom_, top_); }

    bool operator==(const LocalMove& o) const { return top_ == o.top_ && bottom_ == o.bottom_; }
    bool operator!=(const LocalMove& o) const { return !(*this == o); }

private:
    LocalMove(OrientedMatching top, OrientedMatching bottom)
        : top_(std::move(top)), bottom_(std::move(bottom)) {}

    OrientedMatching top_, bottom_;
};

// One closed component of the glued-up move: the cycle of boundary labels
// reached by alternating top and bottom strands.
struct ComponentTrace {
    std::vector<Label> labels;       // ascending
    std::vector<Label> walk;         // traversal from min label, top strand first
    std::vector<int> walk_breaks;    // positions i (1-based, >=2) with walk[i] != walk[i-1]+1
    std::vector<int> label_gaps;     // positions i with labels[i] != labels[i-1]+1
    bool starts_at_initial = false;  // polarity of walk.front()

    int half_size() const { return static_cast<int>(labels.size()) / 2; }
    bool occupies_run() const { return label_gaps.empty(); }
    bool canonical_wiring() const { return walk_breaks.empty() && starts_at_initial; }
};

std::vector<ComponentTrace> union_components(const LocalMove& move);

// The multiset of component half-sizes, kept weakly increasing. Complete
// invariant of a switch move up to braiding.
class ArcDecomposition {
public:
    static ArcDecomposition of_parts(std::vector<int> parts); // sorts; throws on part < 1
    const std::vector<int>& parts() const { return parts_; }
    int total() const;                    // arc count
    int block_count() const { return static_cast<int>(parts_.size()); }
    bool switch_valid() const;            // some part >= 2
    std::string to_string() const;        // "<1,2,2>"

    bool operator==(const ArcDecomposition& o) const { return parts_ == o.parts_; }
    bool operator!=(const ArcDecomposition& o) const { return !(*this == o); }
    bool operator<(const ArcDecomposition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

ArcDecomposition arc_decomposition(const LocalMove& move);

// Canonical representative of a class: blocks laid out consecutively in
// ascending size, each wired as nested shifts with odd labels initial.
LocalMove standard_move(const ArcDecomposition& shape);

// Class equality (both inputs must be proper switch moves).
bool equivalent(const LocalMove& a, const LocalMove& b);

// Parity family of a class: crossing-change side (even arcs-minus-blocks) or
// band-smoothing side (odd).
enum class MoveKind { crossing_like, smoothing_like };
MoveKind move_kind(const ArcDecomposition& shape);
char move_kind_letter(const ArcDecomposition& shape); // 'X' or 'O'

} // namespace tangles

#endif
