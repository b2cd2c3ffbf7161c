#include "tangles/diagram.hpp"

#include <algorithm>
#include <set>

namespace tangles {

namespace {
int cyc_next(int j, int pts) { return j % pts + 1; }
} // namespace

TangleDiagram TangleDiagram::from_matching(const OrientedMatching& m) {
    TangleDiagram d;
    d.arcs_ = m.arcs();
    d.strand_edge_.assign(static_cast<size_t>(d.points()) + 1, -1);
    d.start_.assign(static_cast<size_t>(d.points()) + 1, 0);
    for (Label j = 1; j <= d.points(); ++j) d.start_[static_cast<size_t>(j)] = m.is_start(j) ? 1 : 0;
    for (auto [a, b] : m.pairs()) {
        const int e = d.new_edge(End{true, a, 0}, End{true, b, 0});
        d.strand_edge_[static_cast<size_t>(a)] = e;
        d.strand_edge_[static_cast<size_t>(b)] = e;
    }
    return d;
}

std::vector<Label> TangleDiagram::start_labels() const {
    std::vector<Label> out;
    for (Label j = 1; j <= points(); ++j)
        if (start_[static_cast<size_t>(j)]) out.push_back(j);
    return out;
}

int TangleDiagram::new_edge(End a, End b) {
    int id;
    if (!free_edges_.empty()) {
        id = free_edges_.back();
        free_edges_.pop_back();
    } else {
        id = static_cast<int>(edges_.size());
        edges_.emplace_back();
    }
    edges_[static_cast<size_t>(id)] = Edge{a, b, true};
    // slot tables are the caller's duty via attach() when slots pre-exist;
    // for fresh construction write both references here
    attach(a, id);
    attach(b, id);
    return id;
}

int TangleDiagram::new_crossing(bool over02) {
    int id;
    if (!free_crossings_.empty()) {
        id = free_crossings_.back();
        free_crossings_.pop_back();
    } else {
        id = static_cast<int>(crossings_.size());
        crossings_.emplace_back();
    }
    crossings_[static_cast<size_t>(id)] = Crossing{{-1, -1, -1, -1}, over02, true};
    ++live_crossings_;
    return id;
}

void TangleDiagram::kill_edge(int e) {
    edges_[static_cast<size_t>(e)].alive = false;
    free_edges_.push_back(e);
}

void TangleDiagram::kill_crossing(int c) {
    crossings_[static_cast<size_t>(c)].alive = false;
    free_crossings_.push_back(c);
    --live_crossings_;
}

void TangleDiagram::attach(const End& at, int edge_id) {
    if (at.at_boundary)
        strand_edge_[static_cast<size_t>(at.idx)] = edge_id;
    else
        crossings_[static_cast<size_t>(at.idx)].edge[static_cast<size_t>(at.port)] = edge_id;
}

const TangleDiagram::End& TangleDiagram::other_end(int e, const End& from) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    return ed.a == from ? ed.b : ed.a;
}

int TangleDiagram::edge_at(const End& at) const {
    if (at.at_boundary) return strand_edge_[static_cast<size_t>(at.idx)];
    return crossings_[static_cast<size_t>(at.idx)].edge[static_cast<size_t>(at.port)];
}

Label TangleDiagram::strand_other_end(Label j) const {
    End from{true, j, 0};
    int e = strand_edge_[static_cast<size_t>(j)];
    while (true) {
        const End& far = other_end(e, from);
        if (far.at_boundary) return far.idx;
        const int c = far.idx;
        const int out = (far.port + 2) % 4;
        from = End{false, c, out};
        e = crossings_[static_cast<size_t>(c)].edge[static_cast<size_t>(out)];
    }
}

std::vector<Label> TangleDiagram::strand_pairing() const {
    std::vector<Label> out(static_cast<size_t>(points()) + 1, 0);
    for (Label j = 1; j <= points(); ++j)
        if (out[static_cast<size_t>(j)] == 0) {
            const Label k = strand_other_end(j);
            out[static_cast<size_t>(j)] = k;
            out[static_cast<size_t>(k)] = j;
        }
    return out;
}

Checked<OrientedMatching> TangleDiagram::to_matching() const {
    if (!crossingless()) return Rejection{"diagram still has crossings"};
    std::vector<LabelPair> pairs;
    std::vector<Label> starts;
    for (Label j = 1; j <= points(); ++j) {
        const End from{true, j, 0};
        const End& far = other_end(strand_edge_[static_cast<size_t>(j)], from);
        if (far.idx > j) pairs.emplace_back(j, far.idx);
        if (start_[static_cast<size_t>(j)]) starts.push_back(j);
    }
    return OrientedMatching::make(arcs_, pairs, starts);
}

void TangleDiagram::braid(const BraidLetter& letter) {
    const int pts = points();
    if (letter.index < 1 || letter.index > pts)
        throw domain_error("braid index out of 1..2n: " + std::to_string(letter.index));
    const int i = letter.index;
    const int j = cyc_next(i, pts);

    const int gi = strand_edge_[static_cast<size_t>(i)];
    const int gj = strand_edge_[static_cast<size_t>(j)];
    const int c = new_crossing(letter.sign == CrossSign::negative);

    // move the old strand ends onto the inner ports
    Edge& egi = edges_[static_cast<size_t>(gi)];
    (egi.a == End{true, i, 0} ? egi.a : egi.b) = End{false, c, 3};
    Edge& egj = edges_[static_cast<size_t>(gj)];
    (egj.a == End{true, j, 0} ? egj.a : egj.b) = End{false, c, 2};
    crossings_[static_cast<size_t>(c)].edge[3] = gi;
    crossings_[static_cast<size_t>(c)].edge[2] = gj;

    // fresh collar arcs to the boundary
    const int e0 = new_edge(End{false, c, 0}, End{true, i, 0});
    const int e1 = new_edge(End{false, c, 1}, End{true, j, 0});
    crossings_[static_cast<size_t>(c)].edge[0] = e0;
    crossings_[static_cast<size_t>(c)].edge[1] = e1;
    strand_edge_[static_cast<size_t>(i)] = e0;
    strand_edge_[static_cast<size_t>(j)] = e1;

    std::swap(start_[static_cast<size_t>(i)], start_[static_cast<size_t>(j)]);
}

Checked<bool> TangleDiagram::connect_allowed(int i) const {
    const int pts = points();
    if (i < 1 || i > pts) return Rejection{"connect index out of 1..2n: " + std::to_string(i)};
    const int j = cyc_next(i, pts);
    if (start_[static_cast<size_t>(i)] == start_[static_cast<size_t>(j)])
        return Rejection{"polarity violation: points " + std::to_string(i) + " and " +
                         std::to_string(j) + " have equal polarity"};
    if (strand_other_end(i) == j)
        return Rejection{"closed loop: points " + std::to_string(i) + " and " + std::to_string(j) +
                         " bound one strand"};
    return true;
}

Checked<bool> TangleDiagram::connect(int i) {
    auto ok = connect_allowed(i);
    if (!ok.ok()) return ok;
    const int pts = points();
    const int j = cyc_next(i, pts);

    fuse({{End{true, i, 0}, End{true, j, 0}}});

    // relabel the surviving boundary points
    std::vector<int> remap(static_cast<size_t>(pts) + 1, 0);
    if (i <= pts - 1) {
        for (int l = 1; l < i; ++l) remap[static_cast<size_t>(l)] = l;
        for (int l = i + 2; l <= pts; ++l) remap[static_cast<size_t>(l)] = l - 2;
    } else {
        for (int l = 2; l <= pts - 1; ++l) remap[static_cast<size_t>(l)] = l - 1;
    }

    std::vector<int> new_strand(static_cast<size_t>(pts) - 1, -1);
    std::vector<char> new_start(static_cast<size_t>(pts) - 1, 0);
    for (int l = 1; l <= pts; ++l) {
        const int nl = remap[static_cast<size_t>(l)];
        if (nl == 0) continue;
        new_strand[static_cast<size_t>(nl)] = strand_edge_[static_cast<size_t>(l)];
        new_start[static_cast<size_t>(nl)] = start_[static_cast<size_t>(l)];
    }
    for (auto& e : edges_) {
        if (!e.alive) continue;
        if (e.a.at_boundary) e.a.idx = remap[static_cast<size_t>(e.a.idx)];
        if (e.b.at_boundary) e.b.idx = remap[static_cast<size_t>(e.b.idx)];
    }
    strand_edge_ = std::move(new_strand);
    start_ = std::move(new_start);
    arcs_ -= 1;
    return true;
}

void TangleDiagram::fuse(const std::vector<std::pair<End, End>>& through) {
    auto partner_of = [&](const End& s) -> const End* {
        for (const auto& [a, b] : through) {
            if (a == s) return &b;
            if (b == s) return &a;
        }
        return nullptr;
    };

    std::vector<End> consumed;
    auto is_consumed = [&](const End& s) {
        return std::find(consumed.begin(), consumed.end(), s) != consumed.end();
    };

    for (const auto& [sa, sb] : through) {
        if (is_consumed(sa)) continue;

        // walk outward from each side of the junction to a surviving endpoint
        auto walk = [&](End slot) -> std::pair<End, std::vector<int>> {
            std::vector<int> path;
            End cur = slot;
            while (true) {
                consumed.push_back(cur);
                const int e = edge_at(cur);
                path.push_back(e);
                End far = other_end(e, cur);
                const End* jump = partner_of(far);
                if (jump == nullptr) return {far, path};
                if (is_consumed(far) || is_consumed(*jump))
                    throw internal_error("fuse produced a closed component");
                consumed.push_back(far);
                cur = *jump;
            }
        };

        auto [enda, patha] = walk(sa);
        auto [endb, pathb] = walk(sb);
        for (int e : patha) kill_edge(e);
        for (int e : pathb) kill_edge(e);
        new_edge(enda, endb);
    }
}

std::optional<std::pair<int, int>> TangleDiagram::find_kink() const {
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        const auto& cr = crossings_[static_cast<size_t>(c)];
        if (!cr.alive) continue;
        for (int p = 0; p < 4; ++p) {
            const int e = cr.edge[static_cast<size_t>(p)];
            const End here{false, c, p};
            if (other_end(e, here) == End{false, c, (p + 1) % 4}) return std::make_pair(c, e);
        }
    }
    return std::nullopt;
}

void TangleDiagram::remove_kink(int c, int e) {
    const Edge ed = edges_[static_cast<size_t>(e)];
    const int p = std::min(ed.a.port, ed.b.port);
    const int q = std::max(ed.a.port, ed.b.port);
    // adjacent ports; mind the 3,0 wrap
    const int base = (q == p + 1) ? p : q; // base, base+1 are the loop ports
    const int s1 = (base + 2) % 4;
    const int s2 = (base + 3) % 4;
    kill_edge(e);
    fuse({{End{false, c, s1}, End{false, c, s2}}});
    kill_crossing(c);
}

std::optional<TangleDiagram::BigonSite> TangleDiagram::find_bigon() const {
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if (!ed.alive || ed.a.at_boundary || ed.b.at_boundary) continue;
        if (ed.a.idx == ed.b.idx) continue;
        // the bigon partner sits one port over on both ends, senses opposed;
        // try both rotational sides since end order is arbitrary
        for (int side = 0; side < 2; ++side) {
            const int c1 = side == 0 ? ed.a.idx : ed.b.idx;
            const int p1 = side == 0 ? ed.a.port : ed.b.port;
            const int c2 = side == 0 ? ed.b.idx : ed.a.idx;
            const int p2 = side == 0 ? ed.b.port : ed.a.port;
            const int f = crossings_[static_cast<size_t>(c1)].edge[static_cast<size_t>((p1 + 1) % 4)];
            if (f == e) continue;
            const Edge& fd = edges_[static_cast<size_t>(f)];
            const End want1{false, c1, (p1 + 1) % 4};
            const End want2{false, c2, (p2 + 3) % 4};
            const bool matches = (fd.a == want1 && fd.b == want2) || (fd.b == want1 && fd.a == want2);
            if (!matches) continue;
            if (over_at(c1, p1) != over_at(c2, p2)) continue; // clasp, not removable
            return BigonSite{c1, p1, c2, p2, e, f};
        }
    }
    return std::nullopt;
}

void TangleDiagram::remove_bigon(const BigonSite& b) {
    kill_edge(b.e);
    kill_edge(b.f);
    fuse({{End{false, b.c1, (b.p1 + 2) % 4}, End{false, b.c2, (b.p2 + 2) % 4}},
          {End{false, b.c1, (b.p1 + 3) % 4}, End{false, b.c2, (b.p2 + 1) % 4}}});
    kill_crossing(b.c1);
    kill_crossing(b.c2);
}

bool TangleDiagram::reduce_once() {
    if (auto k = find_kink()) {
        remove_kink(k->first, k->second);
        return true;
    }
    if (auto b = find_bigon()) {
        remove_bigon(*b);
        return true;
    }
    return false;
}

std::vector<TangleDiagram::TriangleMove> TangleDiagram::triangle_moves() const {
    std::vector<TriangleMove> out;
    std::set<std::array<int, 3>> seen; // sorted edge triple

    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if (!ed.alive || ed.a.at_boundary || ed.b.at_boundary) continue;
        for (int dir = 0; dir < 2; ++dir) {
            // trace the face on one side, three steps; the dart must close
            const End start_from = dir == 0 ? ed.a : ed.b;
            std::array<int, 3> edges_cycle{};
            std::array<int, 3> cross_cycle{};
            int cur = e;
            End from = start_from;
            bool good = true;
            for (int step = 0; step < 3; ++step) {
                const End far = other_end(cur, from);
                if (far.at_boundary) {
                    good = false;
                    break;
                }
                edges_cycle[static_cast<size_t>(step)] = cur;
                cross_cycle[static_cast<size_t>(step)] = far.idx;
                const int dep = (far.port + 1) % 4;
                from = End{false, far.idx, dep};
                cur = crossings_[static_cast<size_t>(far.idx)].edge[static_cast<size_t>(dep)];
            }
            if (!good || cur != e || !(from == start_from)) continue;
            if (cross_cycle[0] == cross_cycle[1] || cross_cycle[1] == cross_cycle[2] ||
                cross_cycle[0] == cross_cycle[2])
                continue;
            auto key = edges_cycle;
            std::sort(key.begin(), key.end());
            if (key[0] == key[1] || key[1] == key[2]) continue;
            if (!seen.insert(key).second) continue;

            // movable sides: strand over at both corners or under at both
            for (int side = 0; side < 3; ++side) {
                const int se = edges_cycle[static_cast<size_t>(side)];
                const Edge& sd = edges_[static_cast<size_t>(se)];
                const bool oa = over_at(sd.a.idx, sd.a.port);
                const bool ob = over_at(sd.b.idx, sd.b.port);
                if (oa != ob) continue;
                TriangleMove mv;
                mv.edge = edges_cycle;
                mv.crossing = cross_cycle;
                mv.movable = side;
                out.push_back(mv);
            }
        }
    }
    return out;
}

void TangleDiagram::apply_triangle(const TriangleMove& mv) {
    // relabel so the movable side runs c1 -> c2 with c3 opposite
    const int k = mv.movable;
    const int e12 = mv.edge[static_cast<size_t>(k)];
    const int e23 = mv.edge[static_cast<size_t>((k + 1) % 3)];
    const int e31 = mv.edge[static_cast<size_t>((k + 2) % 3)];
    const int c2 = mv.crossing[static_cast<size_t>(k)];
    const int c3 = mv.crossing[static_cast<size_t>((k + 1) % 3)];
    const int c1 = mv.crossing[static_cast<size_t>((k + 2) % 3)];

    auto port_at = [&](int e, int c) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if (!ed.a.at_boundary && ed.a.idx == c) return ed.a.port;
        if (!ed.b.at_boundary && ed.b.idx == c) return ed.b.port;
        throw internal_error("triangle side not incident to its crossing");
    };

    const int p1 = port_at(e12, c1);
    const int p2 = port_at(e12, c2);
    const int q1 = port_at(e31, c1);
    const int q2 = port_at(e23, c2);
    const int r3 = port_at(e23, c3);
    const int s3 = port_at(e31, c3);
    if ((q1 + 1) % 4 != p1 || (r3 + 1) % 4 != s3 || (p2 + 1) % 4 != q2)
        throw internal_error("triangle port layout unexpected");

    const int ga1 = edge_at(End{false, c1, (q1 + 2) % 4});
    const int ga3 = edge_at(End{false, c3, (s3 + 2) % 4});
    const int gb2 = edge_at(End{false, c2, (q2 + 2) % 4});
    const int gb3 = edge_at(End{false, c3, (r3 + 2) % 4});

    struct Move {
        int edge;
        End from, to;
    };
    const std::vector<Move> moves = {
        {ga1, End{false, c1, (q1 + 2) % 4}, End{false, c3, s3}},
        {e31, End{false, c3, s3}, End{false, c3, (s3 + 2) % 4}},
        {ga3, End{false, c3, (s3 + 2) % 4}, End{false, c1, (q1 + 2) % 4}},
        {gb2, End{false, c2, (q2 + 2) % 4}, End{false, c3, r3}},
        {e23, End{false, c3, r3}, End{false, c3, (r3 + 2) % 4}},
        {gb3, End{false, c3, (r3 + 2) % 4}, End{false, c2, (q2 + 2) % 4}},
    };
    // locate endpoint slots before any writes
    std::vector<End*> slots;
    slots.reserve(moves.size());
    for (const auto& m : moves) {
        Edge& ed = edges_[static_cast<size_t>(m.edge)];
        if (ed.a == m.from)
            slots.push_back(&ed.a);
        else if (ed.b == m.from)
            slots.push_back(&ed.b);
        else
            throw internal_error("triangle endpoint not found");
    }
    for (size_t i = 0; i < moves.size(); ++i) *slots[i] = moves[i].to;
    for (const auto& m : moves) {
        crossings_[static_cast<size_t>(m.to.idx)].edge[static_cast<size_t>(m.to.port)] = m.edge;
    }
}

std::vector<bool> TangleDiagram::strand_over_profile(Label j) const {
    std::vector<bool> out;
    End from{true, j, 0};
    int e = strand_edge_[static_cast<size_t>(j)];
    while (true) {
        const End far = other_end(e, from);
        if (far.at_boundary) return out;
        out.push_back(over_at(far.idx, far.port));
        const int outp = (far.port + 2) % 4;
        from = End{false, far.idx, outp};
        e = crossings_[static_cast<size_t>(far.idx)].edge[static_cast<size_t>(outp)];
    }
}

std::string TangleDiagram::canonical_code() const {
    const auto pairing = strand_pairing();
    std::string code;
    for (Label j = 1; j <= points(); ++j) code += start_[static_cast<size_t>(j)] ? 'i' : 't';
    code += '/';

    std::vector<int> cid(crossings_.size(), -1);
    std::vector<int> frame(crossings_.size(), 0);
    int next_id = 0;
    for (Label j = 1; j <= points(); ++j) {
        if (pairing[static_cast<size_t>(j)] < j) continue;
        code += 's' + std::to_string(j) + ':';
        End from{true, j, 0};
        int e = strand_edge_[static_cast<size_t>(j)];
        while (true) {
            const End far = other_end(e, from);
            if (far.at_boundary) {
                code += '>' + std::to_string(far.idx) + ';';
                break;
            }
            const int c = far.idx;
            if (cid[static_cast<size_t>(c)] < 0) {
                cid[static_cast<size_t>(c)] = next_id++;
                frame[static_cast<size_t>(c)] = far.port;
            }
            code += '(' + std::to_string(cid[static_cast<size_t>(c)]) + ',';
            code += std::to_string((far.port - frame[static_cast<size_t>(c)] + 4) % 4) + ',';
            code += over_at(c, far.port) ? 'o' : 'u';
            code += ')';
            const int out = (far.port + 2) % 4;
            from = End{false, c, out};
            e = crossings_[static_cast<size_t>(c)].edge[static_cast<size_t>(out)];
        }
    }
    return code;
}

void TangleDiagram::check_integrity() const {
    const int pts = points();
    if (static_cast<int>(strand_edge_.size()) != pts + 1 ||
        static_cast<int>(start_.size()) != pts + 1)
        throw internal_error("boundary tables sized wrong");
    int live_edges = 0;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if (!ed.alive) continue;
        ++live_edges;
        for (const End* endp : {&ed.a, &ed.b}) {
            if (endp->at_boundary) {
                if (endp->idx < 1 || endp->idx > pts) throw internal_error("edge end label range");
                if (strand_edge_[static_cast<size_t>(endp->idx)] != e)
                    throw internal_error("boundary slot back-reference broken");
            } else {
                const auto& cr = crossings_[static_cast<size_t>(endp->idx)];
                if (!cr.alive) throw internal_error("edge touches dead crossing");
                if (cr.edge[static_cast<size_t>(endp->port)] != e)
                    throw internal_error("crossing slot back-reference broken");
            }
        }
    }
    int live_cr = 0;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
        const auto& cr = crossings_[static_cast<size_t>(c)];
        if (!cr.alive) continue;
        ++live_cr;
        for (int p = 0; p < 4; ++p) {
            const int e = cr.edge[static_cast<size_t>(p)];
            if (e < 0 || !edges_[static_cast<size_t>(e)].alive)
                throw internal_error("crossing references dead edge");
            const Edge& ed = edges_[static_cast<size_t>(e)];
            const End want{false, c, p};
            if (!(ed.a == want) && !(ed.b == want))
                throw internal_error("crossing slot edge does not return");
        }
    }
    if (live_cr != live_crossings_) throw internal_error("live crossing count drifted");

    // every live edge is on a boundary-to-boundary strand, each exactly once
    std::set<int> seen_edges;
    int strands = 0;
    for (Label j = 1; j <= pts; ++j) {
        End from{true, j, 0};
        int e = strand_edge_[static_cast<size_t>(j)];
        if (strand_other_end(j) < j) continue;
        ++strands;
        while (true) {
            if (!seen_edges.insert(e).second) throw internal_error("edge on two strands");
            const End far = other_end(e, from);
            if (far.at_boundary) break;
            const int out = (far.port + 2) % 4;
            from = End{false, far.idx, out};
            e = crossings_[static_cast<size_t>(far.idx)].edge[static_cast<size_t>(out)];
        }
    }
    if (strands != arcs_) throw internal_error("strand count drifted");
    if (static_cast<int>(seen_edges.size()) != live_edges)
        throw internal_error("closed component detected");
}

} // namespace tangles
