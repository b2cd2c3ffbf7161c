#ifndef TANGLES_DIAGRAM_HPP
#define TANGLES_DIAGRAM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tangles/checked.hpp"
#include "tangles/matching.hpp"
#include "tangles/ops.hpp"

namespace tangles {

// Planar diagram of n strands in the disk, kept as a combinatorial map:
// boundary points 1..2n in counterclockwise order, 4-valent crossings with
// counterclockwise port rotation, edges between port/boundary slots. Strands
// run boundary to boundary through opposite crossing ports; closed components
// never arise.
class TangleDiagram {
public:
    struct End {
        bool at_boundary = true;
        int idx = 0;  // boundary label, or crossing id
        int port = 0; // 0..3 for crossings

        bool operator==(const End& o) const {
            return at_boundary == o.at_boundary && idx == o.idx && port == o.port;
        }
    };

    static TangleDiagram from_matching(const OrientedMatching& m);

    int arcs() const { return arcs_; }
    int points() const { return 2 * arcs_; }
    int crossing_count() const { return live_crossings_; }
    bool crossingless() const { return live_crossings_ == 0; }

    bool is_start(Label j) const { return start_[static_cast<size_t>(j)] != 0; }
    std::vector<Label> start_labels() const;

    // Endpoint reached from label j along its strand, and the strand pairing
    // table for the whole boundary (valid with or without crossings).
    Label strand_other_end(Label j) const;
    std::vector<Label> strand_pairing() const;

    // Crossingless diagrams convert back to an oriented matching.
    Checked<OrientedMatching> to_matching() const;

    // Braiding collar at (index, index+1); index == 2n acts across the 2n|1
    // gap. Adds one crossing, transposes the two labels' strand ends and
    // polarity marks.
    void braid(const BraidLetter& letter);

    // Join boundary points i and i+1 (cyclic). Fails on equal polarity or if
    // the two points bound a single strand (a closed component would form).
    Checked<bool> connect(int i);
    Checked<bool> connect_allowed(int i) const;

    // One reducing move if any is available (kink removal first, then a
    // two-crossing cancellation). Returns false at a local minimum.
    bool reduce_once();

    // Triangle slides: non-reducing rewrites used to unlock reductions.
    struct TriangleMove {
        std::array<int, 3> edge;        // side edges, face order
        std::array<int, 3> crossing;    // crossing[k] joins edge[k-1], edge[k]
        int movable = 0;                // which side slides (0..2)
    };
    std::vector<TriangleMove> triangle_moves() const;
    void apply_triangle(const TriangleMove& mv);

    // Over/under pattern of the strand from label j, crossing by crossing.
    std::vector<bool> strand_over_profile(Label j) const;

    // Boundary-respecting isomorphism key; equal codes mean equal diagrams.
    std::string canonical_code() const;

    // Structural invariants (back references, strand count, no closed loops).
    void check_integrity() const;

private:
    struct Edge {
        End a, b;
        bool alive = false;
    };
    struct Crossing {
        std::array<int, 4> edge{-1, -1, -1, -1};
        bool over02 = false; // strand through ports 0-2 is the over strand
        bool alive = false;
    };

    int arcs_ = 0;
    std::vector<int> strand_edge_; // label -> edge id
    std::vector<char> start_;      // label -> polarity
    std::vector<Edge> edges_;
    std::vector<Crossing> crossings_;
    std::vector<int> free_edges_, free_crossings_;
    int live_crossings_ = 0;

    int new_edge(End a, End b);
    int new_crossing(bool over02);
    void kill_edge(int e);
    void kill_crossing(int c);
    void attach(const End& at, int edge_id); // set slot table + edge endpoint
    End& end_of(int e, bool second) { return second ? edges_[static_cast<size_t>(e)].b
                                                    : edges_[static_cast<size_t>(e)].a; }
    const End& other_end(int e, const End& from) const;
    int edge_at(const End& at) const;
    bool over_at(int c, int port) const {
        return (port % 2 == 0) == crossings_[static_cast<size_t>(c)].over02;
    }

    // Fuse strands across dying slots: each pair (x, y) means the edges at x
    // and y continue into each other once the slots' owners are removed.
    void fuse(const std::vector<std::pair<End, End>>& through);

    std::optional<std::pair<int, int>> find_kink() const;          // (crossing, edge)
    void remove_kink(int c, int e);
    struct BigonSite {
        int c1, p1, c2, p2, e, f; // e at (c1,p1)-(c2,p2), f at (c1,p1+1)-(c2,p2-1)
    };
    std::optional<BigonSite> find_bigon() const;
    void remove_bigon(const BigonSite& b);

};

} // namespace tangles

#endif
