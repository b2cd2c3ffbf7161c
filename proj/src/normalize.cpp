#include "tangles/normalize.hpp"

#include <algorithm>

namespace tangles {

namespace {

struct CompView {
    std::vector<Label> walk;   // cycle from its min label, top strand first
    std::vector<Label> sorted; // ascending labels
    Label min_label() const { return walk.front(); }
};

std::vector<CompView> views(const MoveState& st) {
    std::vector<CompView> out;
    for (auto& cyc : st.cycles()) {
        CompView v;
        v.walk = cyc;
        v.sorted = cyc;
        std::sort(v.sorted.begin(), v.sorted.end());
        out.push_back(std::move(v));
    }
    return out;
}

bool walk_is_run(const std::vector<Label>& walk) {
    for (size_t i = 1; i < walk.size(); ++i)
        if (walk[i] != walk[i - 1] + 1) return false;
    return true;
}

class Pipeline {
public:
    explicit Pipeline(MoveState st) : st_(std::move(st)) {}

    MoveState& state() { return st_; }
    std::vector<BraidLetter> take_word() { return std::move(word_); }

    void run() {
        close_gaps();
        wire_blocks();
        order_blocks();
    }

private:
    MoveState st_;
    std::vector<BraidLetter> word_;
    int steps_ = 0;

    void tick() {
        if (++steps_ > 64 * st_.points() * st_.points() + 4096)
            throw internal_error("normalization failed to settle");
    }

    void emit(const BraidLetter& l) {
        word_.push_back(l);
        st_.apply(l);
    }

    // slide the endpoint at b down next to a (b >= a+2)
    void down_pass(int a, int b) {
        for (int j = b - 1; j >= a + 1; --j) emit({j, CrossSign::positive});
    }

    void rotate_label_to_front(Label q) {
        const int pts = st_.points();
        const int r = ((1 - q) % pts + pts) % pts;
        if (r == 0) return;
        const int m = r <= pts / 2 ? r : r - pts;
        for (const auto& l : rotation_word(st_.arcs(), m)) emit(l);
    }

    // every component onto a consecutive label run
    void close_gaps() {
        while (true) {
            tick();
            bool acted = false;
            for (const auto& v : views(st_)) {
                for (size_t i = 1; i < v.sorted.size(); ++i) {
                    if (v.sorted[i] != v.sorted[i - 1] + 1) {
                        down_pass(v.sorted[i - 1], v.sorted[i]);
                        acted = true;
                        break;
                    }
                }
                if (acted) break;
            }
            if (!acted) return;
        }
    }

    bool canonical_block(const CompView& v) const {
        return walk_is_run(v.walk) && st_.start[static_cast<size_t>(v.min_label())] != 0;
    }

    // each block: initial point at the front, then canonical wiring
    void wire_blocks() {
        while (true) {
            tick();
            const auto comps = views(st_);
            const CompView* target = nullptr;
            for (const auto& v : comps)
                if (!canonical_block(v)) {
                    target = &v;
                    break;
                }
            if (target == nullptr) return;

            if (st_.start[static_cast<size_t>(target->min_label())] == 0) {
                Label q = 0;
                for (Label l : target->sorted)
                    if (st_.start[static_cast<size_t>(l)]) {
                        q = l;
                        break;
                    }
                if (q == 0) throw internal_error("component without initial points");
                rotate_label_to_front(q);
                close_gaps();
                continue;
            }
            // walk-sorting pass inside the block
            for (size_t i = 1; i < target->walk.size(); ++i) {
                if (target->walk[i] != target->walk[i - 1] + 1) {
                    down_pass(target->walk[i - 1], target->walk[i]);
                    break;
                }
            }
        }
    }

    // pack blocks ascending by size from label 1
    void order_blocks() {
        int fixed = 0;
        while (fixed < st_.points()) {
            tick();
            auto comps = views(st_);
            const CompView* chosen = nullptr;
            for (const auto& v : comps) {
                if (v.min_label() <= fixed) continue;
                if (chosen == nullptr || v.walk.size() < chosen->walk.size() ||
                    (v.walk.size() == chosen->walk.size() && v.min_label() < chosen->min_label()))
                    chosen = &v;
            }
            if (chosen == nullptr) throw internal_error("ordering ran out of blocks early");

            if (fixed == 0) {
                rotate_label_to_front(chosen->min_label());
                auto after = views(st_);
                fixed = static_cast<int>(after.front().walk.size());
                continue;
            }

            const int size = static_cast<int>(chosen->walk.size());
            bool first_pass = true;
            while (true) {
                tick();
                const CompView* cur = nullptr;
                auto vs = views(st_);
                if (first_pass) {
                    for (const auto& v : vs)
                        if (v.min_label() == chosen->min_label() &&
                            v.walk.size() == chosen->walk.size())
                            cur = &v;
                    // fall back to the rule if labels moved meanwhile
                    if (cur == nullptr)
                        for (const auto& v : vs)
                            if (v.min_label() > fixed &&
                                (cur == nullptr || v.walk.size() < cur->walk.size() ||
                                 (v.walk.size() == cur->walk.size() &&
                                  v.min_label() < cur->min_label())))
                                cur = &v;
                } else {
                    for (const auto& v : vs)
                        if (v.min_label() == fixed + 1) cur = &v;
                }
                if (cur == nullptr) throw internal_error("ordering lost its block");

                // longest placed prefix fixed+1..fixed+p
                int p = 0;
                while (p < static_cast<int>(cur->sorted.size()) &&
                       cur->sorted[static_cast<size_t>(p)] == fixed + p + 1)
                    ++p;
                if (p == static_cast<int>(cur->sorted.size())) break; // fully placed
                down_pass(fixed + p, cur->sorted[static_cast<size_t>(p)]);
                first_pass = false;
            }
            fixed += size;
        }
    }
};

} // namespace

NormalOutcome normalize_move(const LocalMove& move) {
    if (!move.is_switch()) throw domain_error("normalization needs a proper switch move");
    const auto shape = arc_decomposition(move);

    Pipeline pipe(MoveState::of(move));
    pipe.run();

    auto canon = standard_move(shape);
    if (!(pipe.state() == MoveState::of(canon)))
        throw internal_error("normalization missed the canonical layout for " + shape.to_string());
    return NormalOutcome{std::move(canon), pipe.take_word()};
}

Checked<NormalOutcome> normalize_pair(const DiagramPair& pair, int budget_moves) {
    auto extracted = extract_trivial_pair(pair, budget_moves);
    if (extracted.ok()) {
        if (!extracted.value().is_switch())
            return Rejection{"pair reduces to an identity move; no canonical switch form"};
        return normalize_move(extracted.value());
    }

    if (pair.origin().has_value() && pair.applied_all_braiding()) {
        if (!pair.origin()->is_switch())
            return Rejection{"pair originates from an identity move; no canonical switch form"};
        std::vector<BraidLetter> letters;
        letters.reserve(pair.applied().size());
        for (const auto& item : pair.applied()) letters.push_back(std::get<BraidLetter>(item));

        auto base = normalize_move(*pair.origin());
        std::vector<BraidLetter> word = inverse_word(letters);
        word.insert(word.end(), base.word.begin(), base.word.end());

        MoveState check = pair.state();
        for (const auto& l : word) check.apply(l);
        if (!(check == MoveState::of(base.standard)))
            throw internal_error("unwound witness does not land on the canonical layout");
        return NormalOutcome{std::move(base.standard), std::move(word)};
    }

    return Rejection{extracted.reason()};
}

} // namespace tangles
