#ifndef TANGLES_MATCHING_HPP
#define TANGLES_MATCHING_HPP

#include <utility>
#include <vector>

#include "tangles/checked.hpp"

namespace tangles {

// Boundary labels run 1..2n counterclockwise around the disk.
using Label = int;
using LabelPair = std::pair<Label, Label>;

// A crossingless n-strand diagram in the disk, i.e. a non-crossing perfect
// matching of the 2n boundary points together with the orientation data:
// exactly one endpoint of every strand is flagged as the strand's start.
class OrientedMatching {
public:
    static Checked<OrientedMatching> make(int arcs,
                                          const std::vector<LabelPair>& pairs,
                                          const std::vector<Label>& starts);

    int arcs() const { return arcs_; }
    int points() const { return 2 * arcs_; }

    Label partner(Label j) const { return partner_[static_cast<size_t>(j)]; }
    bool is_start(Label j) const { return start_[static_cast<size_t>(j)] != 0; }

    std::vector<LabelPair> pairs() const;      // (min,max), sorted
    std::vector<Label> start_labels() const;   // ascending

    bool same_pairs(const OrientedMatching& other) const { return partner_ == other.partner_; }

    bool operator==(const OrientedMatching& other) const {
        return partner_ == other.partner_ && start_ == other.start_;
    }
    bool operator!=(const OrientedMatching& other) const { return !(*this == other); }

private:
    OrientedMatching() = default;

    int arcs_ = 0;
    std::vector<Label> partner_; // 1-based, size 2n+1
    std::vector<char> start_;    // 1-based
};

// Non-crossing test for a 1-based partner table over labels 1..2n.
bool pairing_noncrossing(const std::vector<Label>& partner);

// All non-crossing perfect matchings of 1..2n as partner tables, in a fixed
// lexicographic order (by partner of 1, then recursively).
std::vector<std::vector<Label>> noncrossing_partner_tables(int arcs);

} // namespace tangles

#endif
